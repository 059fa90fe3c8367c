"""Study configuration: INI-style files with [study], [grid], [model],
[initial], [time] and optional [reference] / [epsilon_study] sections.

All physical parameters are dimensionless, in the same units the solver
modules use. See README for the full key reference.
"""

from __future__ import annotations

import configparser
import io as _io
from dataclasses import dataclass, field

from ..core import ConfigurationError, Grid1D, ModelParams, make_grid
from ..initdata import GaussianSumSpec, RoughDataSpec
from ..reference import GaussianParams
from ..splitting import SplitScheme

SCHEME_ALIASES = {
    "LT": "LT", "LTSP": "LT",
    "ST1": "ST1", "STSP": "ST1",
    "ST2": "ST2",
    "CNFD": "CNFD",
}

VALID_KINDS = ("convergence", "epsilon_study", "long_time")
VALID_NORMS = ("L2", "H1", "Linf")
#: tau is considered to divide T when |round(T/tau)*tau - T| <= this * T
DIVISIBILITY_TOL = 1e-6


@dataclass
class StudyConfig:
    kind: str
    schemes: list[str]
    T: float
    norms: list[str]
    output: str
    seed: int
    workers: int
    grid_a: float
    grid_b: float
    grid_M: int
    lam: float
    eps: float
    fp_tol: float
    max_iter: int
    initial_kind: str
    gaussian_terms: tuple
    theta: float
    tau_ladder: list[float] = field(default_factory=list)
    tau: float | None = None
    observe_stride: int = 1
    snapshot_times: list[float] = field(default_factory=list)
    coupled_ratio: float | None = None
    reference_kind: str = "auto"
    tau_ref_factor: float = 100.0
    epsilons: list[float] = field(default_factory=list)
    epsilon_ref: float = 1e-15
    epsilon_tau: float | None = None
    raw_text: str = ""

    def grid(self) -> Grid1D:
        return make_grid(self.grid_a, self.grid_b, self.grid_M)

    def model(self, eps=None) -> ModelParams:
        return ModelParams(self.lam, self.eps if eps is None else eps)

    def initial_spec(self):
        if self.initial_kind == "gaussian_sum":
            return GaussianSumSpec(self.gaussian_terms)
        return RoughDataSpec(self.theta, self.seed)

    def split_schemes(self) -> list[SplitScheme]:
        return [SplitScheme(s) for s in self.schemes if s != "CNFD"]

    def tail_steps(self) -> dict[float, float]:
        """tau -> shortened final step length, for taus not dividing T."""
        out = {}
        for tau in self.tau_ladder or ([self.tau] if self.tau else []):
            n = round(self.T / tau)
            if n < 1 or abs(n * tau - self.T) > DIVISIBILITY_TOL * self.T:
                n_full = int(self.T / tau)
                out[tau] = self.T - n_full * tau
        return out


def _floats(raw: str) -> list[float]:
    return [float(tok) for tok in raw.replace(",", " ").split()]


def _parse_terms(raw: str) -> tuple:
    terms = []
    for chunk in raw.replace("\n", ";").split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split()
        if len(parts) != 4:
            raise ConfigurationError(
                f"gaussian term needs `b a v x0`, got {chunk!r}")
        b0, a0 = complex(parts[0]), complex(parts[1])
        terms.append(GaussianParams(b0, a0, float(parts[2]), float(parts[3])))
    if not terms:
        raise ConfigurationError("initial.terms is empty")
    return tuple(terms)


def parse_config(text: str) -> StudyConfig:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigurationError(f"malformed config: {exc}") from exc

    def need(section, key):
        if not cp.has_option(section, key):
            raise ConfigurationError(f"missing [{section}] {key}")
        return cp.get(section, key)

    kind = need("study", "kind").strip()
    if kind not in VALID_KINDS:
        raise ConfigurationError(
            f"study.kind must be one of {VALID_KINDS}, got {kind!r}")

    schemes = []
    for tok in need("study", "schemes").replace(",", " ").split():
        name = tok.upper()
        if name not in SCHEME_ALIASES:
            raise ConfigurationError(f"unknown scheme {tok!r}")
        schemes.append(SCHEME_ALIASES[name])
    if not schemes:
        raise ConfigurationError("study.schemes is empty")

    norms = []
    for tok in cp.get("study", "norms", fallback="L2").replace(",", " ").split():
        if tok not in VALID_NORMS:
            raise ConfigurationError(f"unknown norm {tok!r}")
        norms.append(tok)

    initial_kind = need("initial", "kind").strip()
    if initial_kind not in ("gaussian_sum", "random_hs"):
        raise ConfigurationError(f"unknown initial kind {initial_kind!r}")

    cfg = StudyConfig(
        kind=kind,
        schemes=schemes,
        T=float(need("study", "T")),
        norms=norms,
        output=cp.get("study", "output", fallback="out"),
        seed=cp.getint("study", "seed", fallback=0),
        workers=cp.getint("study", "workers", fallback=1),
        grid_a=float(need("grid", "a")),
        grid_b=float(need("grid", "b")),
        grid_M=int(need("grid", "M")),
        lam=float(need("model", "lambda")),
        eps=float(need("model", "epsilon")),
        fp_tol=cp.getfloat("model", "fp_tol", fallback=1e-12),
        max_iter=cp.getint("model", "max_iter", fallback=100),
        initial_kind=initial_kind,
        gaussian_terms=_parse_terms(need("initial", "terms"))
        if initial_kind == "gaussian_sum" else (),
        theta=cp.getfloat("initial", "theta", fallback=0.0),
        raw_text=text,
    )

    if cp.has_section("time"):
        if cp.has_option("time", "tau_ladder"):
            cfg.tau_ladder = _floats(cp.get("time", "tau_ladder"))
        if cp.has_option("time", "tau"):
            cfg.tau = cp.getfloat("time", "tau")
        cfg.observe_stride = cp.getint("time", "observe_stride", fallback=1)
        if cp.has_option("time", "snapshot_times"):
            cfg.snapshot_times = _floats(cp.get("time", "snapshot_times"))
        if cp.has_option("time", "coupled_ratio"):
            cfg.coupled_ratio = cp.getfloat("time", "coupled_ratio")

    if cp.has_section("reference"):
        cfg.reference_kind = cp.get("reference", "kind", fallback="auto").strip()
        cfg.tau_ref_factor = cp.getfloat("reference", "tau_ref_factor",
                                         fallback=100.0)

    if cp.has_section("epsilon_study"):
        cfg.epsilons = _floats(cp.get("epsilon_study", "epsilons", fallback=""))
        cfg.epsilon_ref = cp.getfloat("epsilon_study", "epsilon_ref",
                                      fallback=1e-15)
        if cp.has_option("epsilon_study", "tau"):
            cfg.epsilon_tau = cp.getfloat("epsilon_study", "tau")

    validate_config(cfg)
    return cfg


def validate_config(cfg: StudyConfig) -> None:
    if cfg.T <= 0.0:
        raise ConfigurationError(f"T must be positive, got {cfg.T}")
    make_grid(cfg.grid_a, cfg.grid_b, cfg.grid_M)
    ModelParams(cfg.lam, cfg.eps)
    if cfg.workers < 1:
        raise ConfigurationError("workers must be >= 1")
    if cfg.kind == "convergence":
        if len(cfg.tau_ladder) < 3:
            raise ConfigurationError(
                "convergence study needs a tau_ladder with >= 3 entries")
        if any(b >= a for a, b in zip(cfg.tau_ladder, cfg.tau_ladder[1:])):
            raise ConfigurationError("tau_ladder must be strictly decreasing")
        if cfg.tau_ladder[-1] <= 0:
            raise ConfigurationError("tau_ladder entries must be positive")
        if cfg.reference_kind not in ("auto", "analytic", "fine_splitting"):
            raise ConfigurationError(
                f"unknown reference kind {cfg.reference_kind!r}")
        if cfg.reference_kind == "analytic":
            _require_analytic(cfg)
        if cfg.coupled_ratio is not None and cfg.coupled_ratio <= 0:
            raise ConfigurationError("coupled_ratio must be positive")
    elif cfg.kind == "long_time":
        if cfg.tau is None or cfg.tau <= 0.0:
            raise ConfigurationError("long_time study needs [time] tau > 0")
        if round(cfg.T / cfg.tau) < 1:
            raise ConfigurationError("T must cover at least one step")
    elif cfg.kind == "epsilon_study":
        if len(cfg.epsilons) < 2:
            raise ConfigurationError(
                "epsilon study needs [epsilon_study] epsilons with >= 2 entries")
        if cfg.epsilon_tau is None or cfg.epsilon_tau <= 0.0:
            raise ConfigurationError("epsilon study needs [epsilon_study] tau > 0")
        if any(e <= 0 for e in cfg.epsilons) or cfg.epsilon_ref <= 0:
            raise ConfigurationError("epsilons must be positive")


def _require_analytic(cfg: StudyConfig) -> None:
    if cfg.initial_kind != "gaussian_sum" or len(cfg.gaussian_terms) != 1 \
            or cfg.gaussian_terms[0].b0 == 0:
        raise ConfigurationError(
            "analytic reference needs a single nonzero Gaussian term")


def analytic_reference_available(cfg: StudyConfig) -> bool:
    try:
        _require_analytic(cfg)
        return True
    except ConfigurationError:
        return False


def load_config(path) -> StudyConfig:
    with open(path, "r") as fh:
        return parse_config(fh.read())


def config_roundtrip_equal(cfg: StudyConfig) -> bool:
    """Re-parsing the echoed text must reproduce the parsed values."""
    again = parse_config(cfg.raw_text)
    a, b = dict(vars(cfg)), dict(vars(again))
    a.pop("raw_text"), b.pop("raw_text")
    return a == b


def dump_config(cfg: StudyConfig, stream=None) -> str:
    out = stream or _io.StringIO()
    out.write(cfg.raw_text)
    return out.getvalue() if stream is None else ""
