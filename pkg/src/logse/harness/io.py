"""CSV schemas shared by the harness and downstream figure tooling.

- snapshot files:    header line `# a b M t epsilon lambda`, then a column
                     title row `x,Re(u),Im(u)` and one row per node
- observables.csv:   t,mass,momentum,E_total,E_kin,E_int[,fp_iters]
- convergence.csv:   scheme,tau,h,norm,error
- epsilon.csv:       scheme,epsilon,norm,error

Floats are written with repr (shortest round-trip), so reruns with the same
config and seed produce bit-identical files.
"""

from __future__ import annotations

import pathlib

import numpy as np

from ..core import ComplexField, ModelParams, make_grid
from ..splitting import Trajectory


def _fmt(x) -> str:
    return repr(float(x))


def snapshot_name(t: float) -> str:
    return f"snapshot_t{_fmt(t)}.csv"


def write_snapshot(path, field: ComplexField, t: float, p: ModelParams) -> None:
    g = field.grid
    lines = [f"# {_fmt(g.a)} {_fmt(g.b)} {g.M} {_fmt(t)} {_fmt(p.eps)} {_fmt(p.lam)}",
             "x,Re(u),Im(u)"]
    for x, v in zip(g.nodes, field.values):
        lines.append(f"{_fmt(x)},{_fmt(v.real)},{_fmt(v.imag)}")
    pathlib.Path(path).write_text("\n".join(lines) + "\n")


def read_snapshot(path) -> tuple[ComplexField, float, ModelParams]:
    text = pathlib.Path(path).read_text().splitlines()
    if not text or not text[0].startswith("#"):
        raise ValueError(f"{path}: missing `# a b M t epsilon lambda` header")
    a, b, m, t, eps, lam = text[0][1:].split()
    grid = make_grid(float(a), float(b), int(m))
    rows = [line.split(",") for line in text[2:] if line]
    if len(rows) != grid.M:
        raise ValueError(f"{path}: {len(rows)} rows for M={grid.M}")
    vals = np.array([float(re) + 1j * float(im) for _, re, im in rows])
    return (ComplexField(grid, vals), float(t),
            ModelParams(float(lam), float(eps)))


def write_observables(path, tr: Trajectory) -> None:
    cols = "t,mass,momentum,E_total,E_kin,E_int"
    if tr.fp_iters is not None:
        cols += ",fp_iters"
    lines = [cols]
    for row in tr.observable_rows():
        cells = [_fmt(v) for v in row[:6]]
        if tr.fp_iters is not None:
            cells.append(str(int(row[6])))
        lines.append(",".join(cells))
    pathlib.Path(path).write_text("\n".join(lines) + "\n")


def write_convergence(path, rows) -> None:
    """rows: iterables of (scheme, tau, h, norm, error); sorted before writing."""
    lines = ["scheme,tau,h,norm,error"]
    for scheme, tau, h, kind, err in sorted(rows, key=lambda r: (r[0], -r[1], r[3])):
        lines.append(f"{scheme},{_fmt(tau)},{_fmt(h)},{kind},{_fmt(err)}")
    pathlib.Path(path).write_text("\n".join(lines) + "\n")


def write_epsilon(path, rows) -> None:
    """rows: iterables of (scheme, epsilon, norm, error)."""
    lines = ["scheme,epsilon,norm,error"]
    for scheme, eps, kind, err in sorted(rows, key=lambda r: (r[0], -r[1], r[3])):
        lines.append(f"{scheme},{_fmt(eps)},{kind},{_fmt(err)}")
    pathlib.Path(path).write_text("\n".join(lines) + "\n")
