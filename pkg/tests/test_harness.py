import math

import numpy as np
import pytest

from logse.core import ComplexField, ConfigurationError, ModelParams, make_grid
from logse.harness.config import (
    load_config, parse_config, analytic_reference_available,
)
from logse.harness.fitting import fit_order
from logse.harness import io as hio
from logse.harness.presets import PRESETS, preset_text
from logse.harness.studies import run_study

PI4 = repr(math.pi ** -0.25)


def conv_config(outdir, extra=""):
    return f"""
[study]
kind = convergence
schemes = LTSP, ST1
T = 1.0
norms = L2, Linf
output = {outdir}
seed = 3

[grid]
a = -16
b = 16
M = 128

[model]
lambda = -1.0
epsilon = 1e-15

[initial]
kind = gaussian_sum
terms = {PI4} 1.0 1.0 0.0

[time]
tau_ladder = 0.05, 0.025, 0.0125
{extra}
"""


class TestFitOrder:
    def test_linear(self):
        taus = [0.1, 0.05, 0.025, 0.0125]
        fit = fit_order(taus, [3.0 * t for t in taus])
        assert fit.slope == pytest.approx(1.0, abs=1e-12)
        assert fit.residual == pytest.approx(0.0, abs=1e-12)

    def test_quadratic(self):
        taus = [0.1, 0.05, 0.025, 0.0125]
        fit = fit_order(taus, [0.7 * t * t for t in taus])
        assert fit.slope == pytest.approx(2.0, abs=1e-12)

    def test_constant(self):
        fit = fit_order([0.1, 0.05, 0.025], [1e-9] * 3)
        assert fit.slope == 0.0
        assert fit.residual == 0.0

    def test_zero_errors_no_slope(self):
        fit = fit_order([0.1, 0.05, 0.025], [0.0, 0.0, 0.0])
        assert fit.slope == 0.0

    def test_floor_discard(self):
        taus = [0.1, 0.05, 0.025, 0.0125, 0.00625]
        errs = [t for t in taus]
        fit = fit_order(taus, errs, floor=min(errs))
        # points below 10x the floor are dropped; here only 0.1 survives, so
        # the fit widens to the 3 coarsest and is flagged
        assert fit.floor_limited
        assert fit.n_used == 3
        assert fit.slope == pytest.approx(1.0, abs=1e-10)

    def test_rejects_short_ladder(self):
        with pytest.raises(ValueError):
            fit_order([0.1, 0.05], [1.0, 0.5])


class TestConfig:
    def test_parse_and_aliases(self, tmp_path):
        cfg = parse_config(conv_config(tmp_path))
        assert cfg.schemes == ["LT", "ST1"]
        assert cfg.norms == ["L2", "Linf"]
        assert cfg.tau_ladder == [0.05, 0.025, 0.0125]
        assert analytic_reference_available(cfg)

    def test_roundtrip_equality(self, tmp_path):
        from logse.harness.config import config_roundtrip_equal
        cfg = parse_config(conv_config(tmp_path))
        assert config_roundtrip_equal(cfg)

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "study.cfg"
        path.write_text(conv_config(tmp_path))
        cfg = load_config(path)
        assert cfg.kind == "convergence"

    @pytest.mark.parametrize("mutation", [
        ("kind = convergence", "kind = nonsense"),
        ("schemes = LTSP, ST1", "schemes = RK4"),
        ("T = 1.0", "T = -2"),
        ("tau_ladder = 0.05, 0.025, 0.0125", "tau_ladder = 0.025, 0.05, 0.0125"),
        ("tau_ladder = 0.05, 0.025, 0.0125", "tau_ladder = 0.05, 0.025"),
        ("M = 128", "M = 127"),
        ("epsilon = 1e-15", "epsilon = 0"),
    ])
    def test_validation_errors(self, tmp_path, mutation):
        before, after = mutation
        text = conv_config(tmp_path).replace(before, after)
        with pytest.raises(ConfigurationError):
            parse_config(text)

    def test_tail_step_detection(self, tmp_path):
        text = conv_config(tmp_path).replace(
            "tau_ladder = 0.05, 0.025, 0.0125",
            "tau_ladder = 0.05, 0.03, 0.0125")
        cfg = parse_config(text)
        tails = cfg.tail_steps()
        assert list(tails) == [0.03]
        assert tails[0.03] == pytest.approx(1.0 - 33 * 0.03)


class TestSnapshotIO:
    def test_roundtrip(self, tmp_path):
        g = make_grid(-2.0, 2.0, 32)
        rng = np.random.default_rng(0)
        u = ComplexField(g, rng.standard_normal(32) + 1j * rng.standard_normal(32))
        p = ModelParams(-1.0, 1e-15)
        path = tmp_path / hio.snapshot_name(0.5)
        hio.write_snapshot(path, u, 0.5, p)
        v, t, q = hio.read_snapshot(path)
        assert t == 0.5
        assert (q.lam, q.eps) == (p.lam, p.eps)
        assert v.grid == g
        assert np.array_equal(v.values, u.values)

    def test_missing_header_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x,Re(u),Im(u)\n0.0,1.0,0.0\n")
        with pytest.raises(ValueError, match="header"):
            hio.read_snapshot(path)


class TestRunConvergence:
    def test_orders_and_outputs(self, tmp_path):
        cfg = parse_config(conv_config(tmp_path))
        report = run_study(cfg)
        assert (tmp_path / "convergence.csv").exists()
        assert (tmp_path / "report.txt").exists()
        assert report.fits[("LT", "L2")].slope == pytest.approx(1.0, abs=0.15)
        assert report.fits[("ST1", "L2")].slope == pytest.approx(2.0, abs=0.2)
        assert report.metadata["reference"] == "analytic"

    def test_deterministic_reruns(self, tmp_path):
        outa, outb = tmp_path / "a", tmp_path / "b"
        run_study(parse_config(conv_config(outa)))
        run_study(parse_config(conv_config(outb)))
        assert (outa / "convergence.csv").read_bytes() == \
            (outb / "convergence.csv").read_bytes()

    def test_workers_same_rows(self, tmp_path):
        outa, outb = tmp_path / "a", tmp_path / "b"
        run_study(parse_config(conv_config(outa)))
        run_study(parse_config(conv_config(outb, extra="").replace(
            "seed = 3", "seed = 3\nworkers = 3")))
        assert (outa / "convergence.csv").read_bytes() == \
            (outb / "convergence.csv").read_bytes()

    def test_monotone_at_fine_tau(self, tmp_path):
        # halving the finest tau never raises the analytic-reference error
        # by more than 5%
        cfg = parse_config(conv_config(tmp_path).replace(
            "tau_ladder = 0.05, 0.025, 0.0125",
            "tau_ladder = 0.05, 0.025, 0.0125, 0.00625"))
        report = run_study(cfg)
        errs = {(r[0], r[1]): r[4] for r in report.rows if r[3] == "L2"}
        for scheme in ("LT", "ST1"):
            assert errs[(scheme, 0.00625)] <= errs[(scheme, 0.0125)] * 1.05


class TestRunEpsilonStudy:
    def test_linear_slope_and_self_zero(self, tmp_path):
        text = f"""
[study]
kind = epsilon_study
schemes = ST1
T = 1.0
norms = L2
output = {tmp_path}
seed = 0

[grid]
a = -16
b = 16
M = 256

[model]
lambda = -1.0
epsilon = 1e-15

[initial]
kind = gaussian_sum
terms = {PI4} 1.0 1.0 0.0

[epsilon_study]
epsilons = 1e-2, 1e-3, 1e-4, 1e-15
epsilon_ref = 1e-15
tau = 2e-3
"""
        report = run_study(parse_config(text))
        errs = {r[1]: r[3] for r in report.rows}
        assert errs[1e-15] == 0.0  # self-comparison
        fit = report.fits[("ST1", "L2")]
        assert fit.slope == pytest.approx(1.0, abs=0.3)
        assert (tmp_path / "epsilon.csv").exists()
        # regularized energy converges to the unregularized one ~ O(eps)
        gaps = {k: v for k, v in report.drifts.items() if "energy_gap" in k}
        assert gaps["energy_gap eps=0.01"] > gaps["energy_gap eps=0.0001"]


class TestRunLongTime:
    def test_outputs_and_drift(self, tmp_path):
        text = f"""
[study]
kind = long_time
schemes = ST1
T = 0.5
output = {tmp_path}
seed = 0

[grid]
a = -16
b = 16
M = 256

[model]
lambda = -1.0
epsilon = 1e-15

[initial]
kind = gaussian_sum
terms = {PI4} 1.0 0.0 0.0

[time]
tau = 1e-3
observe_stride = 50
snapshot_times = 0.0, 0.25, 0.5
"""
        report = run_study(parse_config(text))
        assert (tmp_path / "observables.csv").exists()
        snaps = sorted(tmp_path.glob("snapshot_t*.csv"))
        assert len(snaps) == 3
        assert report.drifts["mass"] < 1e-12
        assert report.drifts["energy"] < 1e-6
        header = (tmp_path / "observables.csv").read_text().splitlines()[0]
        assert header == "t,mass,momentum,E_total,E_kin,E_int"


class TestRunLongTimeCnfd:
    def test_fp_iters_column(self, tmp_path):
        text = f"""
[study]
kind = long_time
schemes = CNFD
T = 0.05
output = {tmp_path}
seed = 0

[grid]
a = -16
b = 16
M = 64

[model]
lambda = -1.0
epsilon = 1e-4

[initial]
kind = gaussian_sum
terms = {PI4} 1.0 0.0 0.0

[time]
tau = 1e-2
observe_stride = 1
"""
        run_study(parse_config(text))
        lines = (tmp_path / "observables.csv").read_text().splitlines()
        assert lines[0] == "t,mass,momentum,E_total,E_kin,E_int,fp_iters"
        assert all(int(line.split(",")[-1]) >= 1 for line in lines[2:])


class TestPresets:
    def test_all_parse(self, tmp_path):
        for name in PRESETS:
            cfg = parse_config(preset_text(name))
            cfg.output = str(tmp_path / name)
            assert cfg.kind in ("convergence", "epsilon_study", "long_time")

    def test_paper_variants_parse(self):
        for name in PRESETS:
            parse_config(preset_text(name, paper=True))

    def test_unknown_preset(self):
        with pytest.raises(KeyError):
            preset_text("example99")


class TestCli:
    def test_validate_and_presets(self, capsys):
        from logse.harness.cli import main
        assert main(["presets"]) == 0
        out = capsys.readouterr().out
        assert "example3-case-ii" in out
        assert main(["validate", "preset:example1"]) == 0

    def test_run_writes_outputs(self, tmp_path, capsys):
        from logse.harness.cli import main
        rc = main(["run", "preset:example1", "-o", str(tmp_path / "o")])
        assert rc == 0
        assert (tmp_path / "o" / "convergence.csv").exists()

    def test_bad_config_exit_code(self, tmp_path):
        from logse.harness.cli import main
        bad = tmp_path / "bad.cfg"
        bad.write_text("[study]\nkind = bogus\n")
        assert main(["validate", str(bad)]) == 2

    def test_write_preset(self, tmp_path):
        from logse.harness.cli import main
        target = tmp_path / "e1.cfg"
        assert main(["presets", "--write", "example1", "-o", str(target)]) == 0
        assert "tau_ladder" in target.read_text()
