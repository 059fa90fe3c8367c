"""Named experiment presets.

Each preset ships in two variants: the default desk-scaled configuration
(minutes on a laptop) and a paper-faithful one (``paper=True``) with the
full-scale domains, grids and ladders, which can run for hours.
"""

from __future__ import annotations

import math

_PI4 = repr(math.pi ** -0.25)


def _ladder(values) -> str:
    return ", ".join(repr(v) for v in values)


def _dense_ladder():
    # tau = 10^(1-j)/(10+k), j = 1..3, k = 0, 10, ..., 90
    out = []
    for j in (1, 2, 3):
        for k in range(0, 100, 10):
            out.append(10.0 ** (1 - j) / (10 + k))
    return sorted(set(out), reverse=True)


def _sqrt2_ladder(n=11, start=10):
    return [1.0 / round(start * 2 ** (j / 2)) for j in range(n)]


def example1(paper: bool) -> str:
    M = 8192 if paper else 512
    taus = _dense_ladder() if paper else [1 / 40, 1 / 80, 1 / 160, 1 / 320]
    return f"""# moving-Gausson accuracy ladder (Case I, v = 1); analytic reference
[study]
kind = convergence
schemes = LT, ST1
T = 1.0
norms = L2, H1
seed = 0

[grid]
a = -16
b = 16
M = {M}

[model]
lambda = -1.0
epsilon = 1e-15

[initial]
kind = gaussian_sum
terms = {_PI4} 1.0 1.0 0.0

[time]
tau_ladder = {_ladder(taus)}

[reference]
kind = analytic
"""


def example1_cnfd(paper: bool) -> str:
    jmax = 8 if paper else 6
    taus = [2.0 ** -j / 5 for j in range(jmax)]
    return f"""# conservative finite-difference ladder, tau = (2/5) h coupled;
# epsilon large enough for the fixed point at the coarsest rung, so the
# reference is a matched-epsilon fine splitting run per rung
[study]
kind = convergence
schemes = CNFD
T = 1.0
norms = L2, H1
seed = 0

[grid]
a = -16
b = 16
M = 64

[model]
lambda = -1.0
epsilon = 1e-2
max_iter = 400

[initial]
kind = gaussian_sum
terms = {_PI4} 1.0 1.0 0.0

[time]
tau_ladder = {_ladder(taus)}
coupled_ratio = 0.4

[reference]
kind = fine_splitting
tau_ref_factor = 100
"""


def example2_theta(theta: int, paper: bool) -> str:
    M = 2 ** 16 if paper else 2 ** 12
    taus = _dense_ladder() if paper else _sqrt2_ladder()
    return f"""# rough-data accuracy ladder (Case II, theta = {theta});
# numerical reference: fine-tau splitting on the same grid
[study]
kind = convergence
schemes = LT, ST1
T = 1.0
norms = L2, H1
seed = 0

[grid]
a = {-math.pi!r}
b = {math.pi!r}
M = {M}

[model]
lambda = -1.0
epsilon = 1e-15

[initial]
kind = random_hs
theta = {float(theta)!r}

[time]
tau_ladder = {_ladder(taus)}

[reference]
kind = fine_splitting
tau_ref_factor = 100
"""


def _long_time(terms, lam, L, M, T, stride, snaps, tau=1e-3) -> str:
    term_text = "; ".join(terms)
    return f"""[study]
kind = long_time
schemes = ST1
T = {T!r}
seed = 0

[grid]
a = {-L!r}
b = {L!r}
M = {M}

[model]
lambda = {lam!r}
epsilon = 1e-15

[initial]
kind = gaussian_sum
terms = {term_text}

[time]
tau = {tau!r}
observe_stride = {stride}
snapshot_times = {_ladder(snaps)}
"""


def _ex3_case(paper: bool, terms_desk, terms_paper, T_desk, T_paper,
              L_desk=100.0) -> str:
    if paper:
        return "# two-Gausson dynamics (full scale)\n" + _long_time(
            terms_paper, -1.0, 1000.0, 32000, T_paper, 100,
            [T_paper * k / 16 for k in range(17)])
    M = int(L_desk * 2 * 16)
    return "# two-Gausson dynamics (desk scale)\n" + _long_time(
        terms_desk, -1.0, L_desk, M, T_desk, 50,
        [T_desk * k / 16 for k in range(17)])


def example3_case_i(paper):
    t = ["1.0 1.0 0.0 -5.0", "1.0 1.0 0.0 5.0"]
    return _ex3_case(paper, t, t, 20.0, 50.0)


def example3_case_ii(paper):
    t = ["1.0 1.0 0.0 -3.0", "1.0 1.0 0.0 3.0"]
    return _ex3_case(paper, t, t, 30.0, 50.0)


def example3_case_iii(paper):
    desk = ["1.0 1.0 2.0 -15.0", "1.0 1.0 -2.0 15.0"]
    full = ["1.0 1.0 2.0 -30.0", "1.0 1.0 -2.0 30.0"]
    return _ex3_case(paper, desk, full, 10.0, 25.0)


def example3_case_iv(paper):
    desk = ["1.0 1.0 15.0 -30.0", "1.0 1.0 -15.0 30.0"]
    return _ex3_case(paper, desk, desk, 3.0, 8.0)


def example3_case_v(paper):
    desk = ["0.5 1.0 1.0 -40.0", "1.0 1.0 0.0 0.0"]
    return _ex3_case(paper, desk, desk, 30.0, 60.0)


def example3_case_vi(paper):
    desk = ["0.5 1.0 4.0 -40.0", "1.0 1.0 0.0 0.0"]
    return _ex3_case(paper, desk, desk, 12.0, 25.0)


def example3_case_vii(paper):
    desk = ["0.5 1.0 25.0 -50.0", "1.0 1.0 0.0 0.0"]
    full = ["0.5 1.0 25.0 -100.0", "1.0 1.0 0.0 0.0"]
    return _ex3_case(paper, desk, full, 3.0, 6.0, L_desk=150.0)


def example3_case_viii(paper):
    desk = ["0.5 1.2 10.0 -50.0", "1.0 0.8 0.0 30.0"]
    return _ex3_case(paper, desk, desk, 8.0, 16.0, L_desk=150.0)


def _ex4(paper: bool, terms_desk, terms_paper, T_desk, T_paper,
         L_desk=128.0) -> str:
    if paper:
        return "# spreading Gaussians, lambda > 0 (full scale)\n" + _long_time(
            terms_paper, 1.0, 10000.0, 320000, T_paper, 100,
            [T_paper * k / 16 for k in range(17)])
    M = int(L_desk * 2 * 16)
    return "# spreading Gaussians, lambda > 0 (desk scale)\n" + _long_time(
        terms_desk, 1.0, L_desk, M, T_desk, 50,
        [T_desk * k / 16 for k in range(17)])


def example4_case_ix(paper):
    return _ex4(paper, ["1.0 1.0 1.0 0.0"], ["1.0 1.0 10.0 10.0"], 5.0, 20.0)


def example4_case_x(paper):
    desk = ["2.0 1.0 2.0 -20.0", "1.0 1.0 0.0 0.0"]
    full = ["2.0 1.0 10.0 -100.0", "1.0 1.0 0.0 0.0"]
    return _ex4(paper, desk, full, 10.0, 40.0, L_desk=150.0)


def example4_case_xi(paper):
    desk = ["2.0 1.0 4.0 -20.0", "1.0 1.0 0.0 0.0"]
    full = ["2.0 1.0 20.0 -100.0", "1.0 1.0 0.0 0.0"]
    return _ex4(paper, desk, full, 8.0, 30.0, L_desk=150.0)


PRESETS = {
    "example1": (example1, "Case I accuracy ladder, LTSP+STSP vs analytic Gausson"),
    "example1-cnfd": (example1_cnfd, "Case I accuracy ladder, CNFD coupled tau=(2/5)h"),
    **{f"example2-theta{th}": (
        (lambda p, th=th: example2_theta(th, p)),
        f"Case II accuracy ladder at theta={th}")
       for th in (1, 2, 3, 4, 5)},
    "example3-case-i": (example3_case_i, "two static Gaussons, well separated"),
    "example3-case-ii": (example3_case_ii, "two static Gaussons, pendulum interaction"),
    "example3-case-iii": (example3_case_iii, "slow head-on Gausson collision"),
    "example3-case-iv": (example3_case_iv, "fast head-on Gausson collision"),
    "example3-case-v": (example3_case_v, "slow catch-up collision, unequal amplitudes"),
    "example3-case-vi": (example3_case_vi, "moderate catch-up collision"),
    "example3-case-vii": (example3_case_vii, "fast catch-up collision"),
    "example3-case-viii": (example3_case_viii, "breather-producing asymmetric collision"),
    "example4-case-ix": (example4_case_ix, "single spreading Gaussian, lambda > 0"),
    "example4-case-x": (example4_case_x, "two spreading Gaussians, slow overtake"),
    "example4-case-xi": (example4_case_xi, "two spreading Gaussians, fast overtake"),
}


def preset_text(name: str, paper: bool = False) -> str:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; run `logse presets` for the list")
    return PRESETS[name][0](paper)


def preset_lines() -> list[str]:
    width = max(len(n) for n in PRESETS)
    return [f"{name:<{width}}  {desc}" for name, (_, desc) in PRESETS.items()]
