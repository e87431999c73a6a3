import math

import numpy as np
import pytest

from lrdcor.dcov import PairedSample
from lrdcor.montecarlo import (KINDS, TABLES, ExperimentResult, Scenario, binomial_se,
                               reference_rate, rejection_rate, reproduce_table,
                               simulate_scenario, table_config)
from lrdcor.reference_rates import (GAMMAS, HURSTS, PARAMS, REFERENCE_RATES, SAMPLE_SIZES,
                                    SUSPECT_CELLS)
from lrdcor.subsampling import SubsamplingConfig


class TestScenario:
    @pytest.mark.parametrize("kind,param", [("cubic", 0.0), ("linear", 1.5),
                                            ("parabolic", 2.0), ("wavy", 4.5)])
    def test_invalid(self, kind, param):
        with pytest.raises(ValueError):
            Scenario(kind, param, 0.7, 100)

    def test_invalid_hurst(self):
        with pytest.raises(ValueError):
            Scenario("linear", 0.0, 1.0, 100)

    @pytest.mark.parametrize("kind", KINDS)
    def test_simulate(self, kind):
        sc = Scenario(kind, 0.5, 0.7, 64)
        s = simulate_scenario(sc, 3)
        assert isinstance(s, PairedSample) and s.n == 64
        again = simulate_scenario(sc, 3)
        np.testing.assert_array_equal(s.x, again.x)
        np.testing.assert_array_equal(s.y, again.y)
        bound = math.sqrt(2.0) if kind == "rectangular" else 1.0
        assert np.all(np.abs(s.x) <= bound)

    def test_zero_parameters(self):
        # X is the same uniform-marginal FGN in every non-linear kind, and a
        # zero rotation leaves both coordinates untouched
        par = simulate_scenario(Scenario("parabolic", 0.0, 0.6, 50), 1)
        rect = simulate_scenario(Scenario("rectangular", 0.0, 0.6, 50), 1)
        np.testing.assert_array_equal(par.x, rect.x)
        assert abs(np.corrcoef(rect.x, rect.y)[0, 1]) < 0.9
        one = simulate_scenario(Scenario("linear", 1.0, 0.6, 50), 1)
        np.testing.assert_array_equal(one.x, one.y)

    def test_parabolic_is_uncorrelated_but_dependent(self):
        s = simulate_scenario(Scenario("parabolic", 1.0, 0.6, 100_000), 5)
        assert abs(np.corrcoef(s.x, s.y)[0, 1]) < 0.02
        assert np.corrcoef(s.x ** 2, s.y)[0, 1] > 0.2

    @pytest.mark.parametrize("kind,param", [("linear", 0.5), ("parabolic", 1.0)])
    def test_variance(self, kind, param):
        # variance 1/3; the standard error is inflated by long memory, so use
        # the spread over replications
        reps = [simulate_scenario(Scenario(kind, param, 0.6, 2000), i) for i in range(40)]
        for coord in ("x", "y"):
            v = np.array([np.var(getattr(s, coord)) for s in reps])
            se = v.std(ddof=1) / math.sqrt(len(v))
            assert abs(v.mean() - 1 / 3) < 3 * se + 0.01


class TestRejectionRate:
    def test_thread_determinism(self):
        sc = Scenario("wavy", 2.0, 0.7, 120)
        cfg = SubsamplingConfig.default(120)
        serial = rejection_rate(sc, cfg, 24, master_seed=9, keep_p_values=True)
        threaded = rejection_rate(sc, cfg, 24, master_seed=9, threads=4, keep_p_values=True)
        assert serial.rejections == threaded.rejections
        np.testing.assert_array_equal(serial.p_values, threaded.p_values)
        other = rejection_rate(sc, cfg, 24, master_seed=10, keep_p_values=True)
        assert not np.array_equal(serial.p_values, other.p_values)

    def test_single_replication(self):
        sc = Scenario("linear", 0.3, 0.8, 100)
        res = rejection_rate(sc, SubsamplingConfig.default(100), 1, 0)
        assert res.rejection_rate in (0.0, 1.0)

    def test_result_fields(self):
        sc = Scenario("linear", 0.0, 0.6, 100)
        res = rejection_rate(sc, SubsamplingConfig.default(100), 10, 4)
        assert isinstance(res, ExperimentResult)
        assert res.rejection_rate == res.rejections / 10
        assert res.abs_diff is None and res.p_values is None
        d = res.to_dict()
        assert d["replications"] == 10 and d["master_seed"] == 4 and d["block_len"] == 10

    @pytest.mark.parametrize("kw", [dict(replications=0), dict(replications=2.5),
                                    dict(replications=5, threads=0)])
    def test_invalid(self, kw):
        kw.setdefault("threads", 1)
        with pytest.raises(ValueError):
            rejection_rate(Scenario("linear", 0.0, 0.6, 100), SubsamplingConfig.default(100),
                           master_seed=0, **kw)

    def test_too_short(self):
        with pytest.raises(ValueError):
            rejection_rate(Scenario("linear", 0.0, 0.6, 20), SubsamplingConfig(15, 10), 2, 0)

    @pytest.mark.slow
    def test_monotone_in_r(self):
        cfg = table_config(1, 300, 0.6)
        rates = [rejection_rate(Scenario("linear", r, 0.6, 300), cfg, 500, 0).rejection_rate
                 for r in (0.0, 0.25, 0.5)]
        assert rates[0] < rates[1] < rates[2]

    def test_binomial_se(self):
        assert binomial_se(0.5, 500) == pytest.approx(math.sqrt(0.25 / 500))
        assert binomial_se(0.0, 10) == 0.0


class TestTables:
    def test_reference_grid(self):
        assert set(TABLES) == set(range(1, 9))
        assert len(REFERENCE_RATES) == 8 * len(GAMMAS) * len(SAMPLE_SIZES) * len(HURSTS) * 3
        assert all(len(PARAMS[t]) == 3 for t in TABLES)
        assert all(0.0 <= v <= 1.0 for k, v in REFERENCE_RATES.items()
                   if k not in SUSPECT_CELLS)

    def test_reference_values(self):
        assert reference_rate(1, 0.5, 1000, 0.6, 0.0) == 0.073
        assert reference_rate(1, 0.5, 300, 0.6, 0.0) == 0.089
        assert reference_rate(7, 0.5, 500, 0.6, 1.0) == 0.932
        assert reference_rate(8, 0.5, 500, 0.6, 3.0) == 0.019
        assert reference_rate(4, 0.5, 500, 0.7, 1.0) == 0.385
        assert reference_rate(1, 0.5, 300, 0.65, 0.0) is None

    def test_suspect_cell_excluded(self):
        assert REFERENCE_RATES[(5, 0.4, 1000, 0.9, 2.0)] == 89.0
        assert reference_rate(5, 0.4, 1000, 0.9, 2.0) is None

    def test_table_config(self):
        assert table_config(1, 300, 0.6).statistic == "dcov_sqrt_n"
        assert table_config(2, 300, 0.6).statistic == "pearson_abs_cov"
        assert table_config(7, 300, 0.9).statistic == "dcov_n_pow_D"
        cfg = table_config(8, 1000, 0.8, gamma=0.4)
        assert (cfg.statistic, cfg.block_len, cfg.lag) == ("pearson_cov_n_pow_D", 15, 100)
        with pytest.raises(ValueError):
            table_config(9, 300, 0.6)

    def test_reproduce_table_cell(self):
        seen = []
        res = reproduce_table(1, replications=20, sizes=(1000,), hursts=(0.6,),
                              params=(0.0,), progress=seen.append)
        assert len(res) == 1 and seen == res
        cell = res[0]
        assert cell.reference == 0.073
        assert cell.abs_diff == pytest.approx(abs(cell.rejection_rate - 0.073))
        assert (cell.scenario.n, cell.scenario.hurst, cell.scenario.param) == (1000, 0.6, 0.0)

    def test_reproduce_table_grid(self):
        res = reproduce_table(7, replications=1, sizes=(300,), hursts=(0.6, 0.9))
        assert [(r.scenario.hurst, r.scenario.param) for r in res] == \
            [(h, v) for h in (0.6, 0.9) for v in PARAMS[7]]
        assert all(r.rejection_rate in (0.0, 1.0) for r in res)
        with pytest.raises(ValueError):
            reproduce_table(0)
