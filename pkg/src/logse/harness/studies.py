"""Experiment drivers: convergence ladders, regularization-error studies,
and long-time dynamics runs, with persisted CSV/report outputs."""

from __future__ import annotations

import pathlib
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import kernels
from ..cnfd import CnfdParams, evolve_cnfd
from ..core import (
    ComplexField, ModelParams, energy_log, energy_regularized, error_field,
    mass, norm,
)
from ..errors import NanAbortError
from ..initdata import RNG_ALGORITHM, gaussian_sum, random_hs
from ..reference import exact_gaussian
from ..splitting import SplitScheme, Trajectory, evolve, step
from .config import (
    DIVISIBILITY_TOL, StudyConfig, analytic_reference_available,
)
from .fitting import fit_order
from . import io as hio


@dataclass
class StudyReport:
    kind: str
    fits: dict = field(default_factory=dict)      # (scheme, norm) -> FitResult
    drifts: dict = field(default_factory=dict)    # label -> float
    timings: dict = field(default_factory=dict)   # label -> seconds
    metadata: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    config_text: str = ""
    output_dir: str = ""

    def summary_lines(self) -> list[str]:
        lines = [f"kind: {self.kind}"]
        for key in sorted(self.metadata):
            lines.append(f"{key}: {self.metadata[key]}")
        for (scheme, kind), fit in sorted(self.fits.items()):
            lines.append(
                f"fit scheme={scheme} norm={kind}: order={fit.slope:.4f} "
                f"residual={fit.residual:.3e} n_used={fit.n_used} "
                f"floor_limited={'yes' if fit.floor_limited else 'no'}")
        for label in sorted(self.drifts):
            lines.append(f"drift {label}: {self.drifts[label]:.3e}")
        for label in sorted(self.timings):
            lines.append(f"walltime {label}: {self.timings[label]:.3f} s")
        return lines


def _initial_field(cfg: StudyConfig, grid) -> ComplexField:
    if cfg.initial_kind == "gaussian_sum":
        return gaussian_sum(cfg.initial_spec(), grid)
    return random_hs(cfg.initial_spec(), grid)


def _march(u0, tau: float, T: float, scheme: str, p: ModelParams,
           cfg: StudyConfig, observe_stride=None, snapshot_times=()) -> Trajectory:
    """Advance to T with steps of tau; a non-dividing tau gets a shortened
    final step (splitting schemes only)."""
    n = round(T / tau)
    tail = 0.0
    if n < 1 or abs(n * tau - T) > DIVISIBILITY_TOL * T:
        n = int(T / tau)
        tail = T - n * tau
    stride = observe_stride or max(n, 1)
    if scheme == "CNFD":
        cp = CnfdParams(p, fp_tol=cfg.fp_tol, max_iter=cfg.max_iter)
        tr = evolve_cnfd(u0, tau, n, cp, observe_stride=stride,
                         snapshot_times=snapshot_times)
        if tail > 0.0:
            raise ValueError("CNFD ladders require tau to divide T")
        return tr
    tr = evolve(u0, tau, n, SplitScheme(scheme), p, observe_stride=stride,
                snapshot_times=snapshot_times)
    if tail > 0.0:
        tr.final = step(tr.final, tail, SplitScheme(scheme), p)
    return tr


def _reference_solution(cfg: StudyConfig, grid, u0, p: ModelParams,
                        tau_min: float):
    """Analytic Gaussian when available (and requested), else fine-tau ST1."""
    use_analytic = (cfg.reference_kind == "analytic"
                    or (cfg.reference_kind == "auto"
                        and analytic_reference_available(cfg)))
    if use_analytic:
        gp = cfg.gaussian_terms[0]
        return exact_gaussian(gp, cfg.lam, grid, cfg.T), "analytic"
    tau_ref = tau_min / cfg.tau_ref_factor
    n = round(cfg.T / tau_ref)
    tr = evolve(u0, cfg.T / n, n, SplitScheme.ST1, p, observe_stride=n)
    return tr.final, "fine_splitting"


def _coupled_grid(cfg: StudyConfig, tau: float):
    from ..core import make_grid
    h = tau / cfg.coupled_ratio
    M = round((cfg.grid_b - cfg.grid_a) / h)
    M += M % 2
    return make_grid(cfg.grid_a, cfg.grid_b, M)


def run_convergence(cfg: StudyConfig) -> StudyReport:
    """Evolve each (scheme, tau) to T, measure errors against the reference
    in each requested norm, persist convergence.csv, and fit orders."""
    report = _new_report(cfg)
    outdir = _ensure_outdir(cfg)
    grid = cfg.grid()
    p = cfg.model()
    u0 = _initial_field(cfg, grid)
    tau_min = min(cfg.tau_ladder)
    tails = cfg.tail_steps()
    if tails:
        report.metadata["shortened_final_steps"] = ", ".join(
            f"tau={t:g} tail={tails[t]:g}" for t in sorted(tails, reverse=True))

    shared_ref = None
    if not (cfg.coupled_ratio is not None and cfg.schemes == ["CNFD"]):
        t0 = time.perf_counter()
        shared_ref, ref_kind = _reference_solution(cfg, grid, u0, p, tau_min)
        report.metadata["reference"] = ref_kind
        report.timings["reference"] = time.perf_counter() - t0

    def one_run(item):
        scheme, tau = item
        t0 = time.perf_counter()
        if scheme == "CNFD" and cfg.coupled_ratio is not None:
            # coupled ladders refine the grid with tau, so each rung gets
            # its own initial field and reference
            gj = _coupled_grid(cfg, tau)
            u0j = _initial_field(cfg, gj)
            tr = _march(u0j, tau, cfg.T, scheme, p, cfg)
            ref = shared_ref if (shared_ref is not None and gj == grid) \
                else _rung_reference(cfg, gj, u0j, p, tau)
            h = gj.h
        else:
            tr = _march(u0, tau, cfg.T, scheme, p, cfg)
            ref = shared_ref
            h = grid.h
        e = error_field(tr.final, ref)
        errs = {kind: norm(e, kind) for kind in cfg.norms}
        elapsed = time.perf_counter() - t0
        return scheme, tau, h, errs, elapsed

    items = [(s, t) for s in cfg.schemes for t in cfg.tau_ladder]
    results = _run_items(one_run, items, cfg.workers)

    rows = []
    for scheme, tau, h, errs, elapsed in results:
        report.timings[f"{scheme} tau={tau:g}"] = elapsed
        for kind, err in errs.items():
            rows.append((scheme, tau, h, kind, err))
    report.rows = rows
    hio.write_convergence(outdir / "convergence.csv", rows)

    numerical_ref = report.metadata.get("reference") != "analytic"
    for scheme in cfg.schemes:
        for kind in cfg.norms:
            pts = sorted((r[1], r[4]) for r in rows
                         if r[0] == scheme and r[3] == kind)
            taus = [t for t, _ in pts]
            errs = [e for _, e in pts]
            floor = min(errs) if numerical_ref else 0.0
            report.fits[(scheme, kind)] = fit_order(taus, errs, floor=floor)

    _write_report(report, outdir)
    return report


def _rung_reference(cfg, grid_j, u0_j, p, tau):
    if cfg.reference_kind != "fine_splitting" and analytic_reference_available(cfg):
        return exact_gaussian(cfg.gaussian_terms[0], cfg.lam, grid_j, cfg.T)
    n = round(cfg.T / (tau / cfg.tau_ref_factor))
    return evolve(u0_j, cfg.T / n, n, SplitScheme.ST1, p, observe_stride=n).final


def run_epsilon_study(cfg: StudyConfig) -> StudyReport:
    """Errors of the solution at each epsilon against the epsilon_ref proxy
    for the unregularized limit, plus energy gaps; fits the log-log slope."""
    report = _new_report(cfg)
    outdir = _ensure_outdir(cfg)
    grid = cfg.grid()
    u0 = _initial_field(cfg, grid)
    tau = cfg.epsilon_tau
    scheme = cfg.schemes[0]

    def solve_at(eps):
        return _march(u0, tau, cfg.T, scheme, cfg.model(eps), cfg).final

    t0 = time.perf_counter()
    u_ref = solve_at(cfg.epsilon_ref)
    report.timings["reference"] = time.perf_counter() - t0

    rows = []
    e_log0 = energy_log(u0, cfg.lam)
    for eps in cfg.epsilons:
        t0 = time.perf_counter()
        ue = solve_at(eps)
        report.timings[f"eps={eps:g}"] = time.perf_counter() - t0
        e = error_field(ue, u_ref)
        for kind in cfg.norms:
            rows.append((scheme, eps, kind, norm(e, kind)))
        gap = abs(energy_regularized(u0, cfg.model(eps)) - e_log0)
        report.drifts[f"energy_gap eps={eps:g}"] = gap
    report.rows = rows
    hio.write_epsilon(outdir / "epsilon.csv", rows)

    for kind in cfg.norms:
        pts = sorted((r[1], r[3]) for r in rows if r[2] == kind)
        report.fits[(scheme, kind)] = fit_order([p_[0] for p_ in pts],
                                                [p_[1] for p_ in pts])
    _write_report(report, outdir)
    return report


def run_long_time(cfg: StudyConfig) -> StudyReport:
    """Observable time series plus snapshots; records conservation drift.
    On a NaN abort the partial series and last good snapshot are persisted."""
    report = _new_report(cfg)
    outdir = _ensure_outdir(cfg)
    grid = cfg.grid()
    p = cfg.model()
    u0 = _initial_field(cfg, grid)
    scheme = cfg.schemes[0]
    n = round(cfg.T / cfg.tau)
    if abs(n * cfg.tau - cfg.T) > DIVISIBILITY_TOL * cfg.T:
        report.metadata["effective_T"] = f"{n * cfg.tau:g} ({n} steps of tau)"
    snap_times = cfg.snapshot_times or [0.0, cfg.T]

    t0 = time.perf_counter()
    try:
        if scheme == "CNFD":
            cp = CnfdParams(p, fp_tol=cfg.fp_tol, max_iter=cfg.max_iter)
            tr = evolve_cnfd(u0, cfg.tau, n, cp,
                             observe_stride=cfg.observe_stride,
                             snapshot_times=snap_times)
        else:
            tr = evolve(u0, cfg.tau, n, SplitScheme(scheme), p,
                        observe_stride=cfg.observe_stride,
                        snapshot_times=snap_times)
    except NanAbortError as abort:
        report.metadata["aborted"] = f"NaN at step {abort.step_index}"
        hio.write_snapshot(outdir / hio.snapshot_name(0.0), u0, 0.0, p)
        _write_report(report, outdir)
        raise
    report.timings["run"] = time.perf_counter() - t0

    hio.write_observables(outdir / "observables.csv", tr)
    for t_snap, field_ in tr.snapshots:
        hio.write_snapshot(outdir / hio.snapshot_name(t_snap), field_, t_snap, p)

    report.drifts["mass"] = float(np.max(np.abs(tr.mass - tr.mass[0]))
                                  / tr.mass[0])
    e0 = tr.e_total[0]
    denom = abs(e0) if e0 != 0 else 1.0
    report.drifts["energy"] = float(np.max(np.abs(tr.e_total - e0)) / denom)
    report.metadata["steps"] = n
    _write_report(report, outdir)
    return report


def run_study(cfg: StudyConfig) -> StudyReport:
    runner = {"convergence": run_convergence,
              "epsilon_study": run_epsilon_study,
              "long_time": run_long_time}[cfg.kind]
    return runner(cfg)


def _run_items(fn, items, workers):
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _new_report(cfg: StudyConfig) -> StudyReport:
    return StudyReport(
        kind=cfg.kind,
        config_text=cfg.raw_text,
        output_dir=cfg.output,
        metadata={
            "backend": kernels.backend(),
            "rng": f"{RNG_ALGORITHM}, seed={cfg.seed}",
        },
    )


def _ensure_outdir(cfg: StudyConfig) -> pathlib.Path:
    out = pathlib.Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_report(report: StudyReport, outdir: pathlib.Path) -> None:
    lines = ["logse study report",
             f"generated: {time.strftime('%Y-%m-%dT%H:%M:%S')}"]
    lines += report.summary_lines()
    lines.append("")
    lines.append("[config]")
    lines.append(report.config_text.rstrip())
    (outdir / "report.txt").write_text("\n".join(lines) + "\n")
