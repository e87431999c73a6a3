import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lrdcor.fgn import (EIGEN_TOL, EmbeddingError, HurstSpec, TimeSeries,
                        circulant_eigenvalues, child_seeds, derive_seed,
                        fgn_autocov, generate_correlated_pair, generate_fgn,
                        sample_fgn)


def lag1_autocov_known_mean(paths):
    # the mean is known to be 0, so no centring (sample-mean centring is
    # badly biased for strong long memory)
    return float(np.mean(paths[:, :-1] * paths[:, 1:]))


class TestHurstSpec:
    def test_lrd_param(self):
        assert HurstSpec(0.7, 10).lrd_param == pytest.approx(0.6)
        assert HurstSpec(0.7, 10).is_lrd
        assert not HurstSpec(0.5, 10).is_lrd

    @pytest.mark.parametrize("h", [0.0, 1.0, -0.1, 1.2])
    def test_bad_hurst(self, h):
        with pytest.raises(ValueError):
            HurstSpec(h, 10)

    @pytest.mark.parametrize("n", [0, 1, 2.5])
    def test_bad_length(self, n):
        with pytest.raises(ValueError):
            HurstSpec(0.7, n)

    def test_timeseries_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            TimeSeries([1.0, np.nan])


class TestAutocov:
    def test_examples(self):
        assert fgn_autocov(0, 0.7) == 1.0
        assert fgn_autocov(3, 0.5) == 0.0
        assert fgn_autocov(1, 0.9) == pytest.approx(0.5 * (2 ** 1.8 - 2), abs=1e-12)
        assert fgn_autocov(1, 0.9) == pytest.approx(0.741101, abs=1e-6)

    def test_vectorised_and_symmetric(self):
        k = np.arange(-5, 6)
        r = fgn_autocov(k, 0.8)
        np.testing.assert_allclose(r, r[::-1])
        assert isinstance(fgn_autocov(2, 0.8), float)

    def test_power_law_asymptote(self):
        # rho(k) ~ H(2H-1) k^{2H-2}
        h, k = 0.8, 10_000.0
        assert fgn_autocov(k, h) == pytest.approx(h * (2 * h - 1) * k ** (2 * h - 2), rel=1e-4)

    @pytest.mark.parametrize("h", [0.6, 0.7, 0.8, 0.9])
    def test_partial_sum_growth(self, h):
        # sum_{|k|<=K} rho(k) = (K+1)^{2H} - K^{2H} exactly, which grows like K^{2H-1}
        def partial(kk):
            k = np.arange(1, kk + 1)
            return 1.0 + 2.0 * fgn_autocov(k, h).sum()
        for kk in (1_000, 10_000):
            assert partial(kk) == pytest.approx((kk + 1) ** (2 * h) - kk ** (2 * h), rel=1e-9)
        assert partial(2_000) / partial(1_000) == pytest.approx(2 ** (2 * h - 1), rel=0.2)
        assert partial(10_000) / partial(1_000) == pytest.approx(10 ** (2 * h - 1), rel=0.2)


class TestEmbedding:
    @given(st.floats(0.01, 0.99), st.sampled_from([2, 3, 17, 64, 1000]))
    @settings(max_examples=60, deadline=None)
    def test_eigenvalues_nonnegative(self, h, n):
        assert circulant_eigenvalues(n, h).min() >= -EIGEN_TOL

    def test_eigenvalues_copy(self):
        a = circulant_eigenvalues(32, 0.7)
        a[:] = -1.0
        assert circulant_eigenvalues(32, 0.7).min() >= -EIGEN_TOL

    def test_embedding_error_is_raised(self, monkeypatch):
        import lrdcor.fgn as fgn

        bad = np.full(8, -1.0)
        monkeypatch.setattr(fgn, "_embedding_eigenvalues", lambda n, h: bad)
        with pytest.raises(EmbeddingError):
            sample_fgn(4, 0.7, np.random.default_rng(0))


class TestGeneration:
    def test_determinism(self):
        spec = HurstSpec(0.7, 64)
        a = generate_fgn(spec, 42).values
        b = generate_fgn(spec, 42).values
        assert a.tobytes() == b.tobytes()
        assert not np.array_equal(a, generate_fgn(spec, 43).values)

    def test_shapes(self):
        rng = np.random.default_rng(0)
        assert sample_fgn(10, 0.6, rng).shape == (10,)
        assert sample_fgn(10, 0.6, rng, size=3).shape == (3, 10)

    def test_covariance_matrix(self):
        # entrywise within 4/sqrt(R) of the Toeplitz target
        n, reps, h = 32, 8000, 0.75
        paths = sample_fgn(n, h, np.random.default_rng(1), size=reps)
        emp = paths.T @ paths / reps
        lags = np.abs(np.subtract.outer(np.arange(n), np.arange(n)))
        target = fgn_autocov(lags, h)
        assert np.max(np.abs(emp - target)) < 4 / math.sqrt(reps)

    @pytest.mark.parametrize("h,target", [(0.9, 0.5 * (2 ** 1.8 - 2)), (0.5, 0.0)])
    def test_lag1_autocov(self, h, target):
        paths = sample_fgn(2048, h, np.random.default_rng(7), size=2000)
        assert lag1_autocov_known_mean(paths) == pytest.approx(target, abs=0.01)


class TestSeeds:
    def test_derive_seed_matches_spawn(self):
        spawned = np.random.SeedSequence(99).spawn(5)[3]
        a = np.random.default_rng(derive_seed(99, 3)).random(4)
        b = np.random.default_rng(spawned).random(4)
        np.testing.assert_array_equal(a, b)

    def test_child_seeds_stateless(self):
        ss = np.random.SeedSequence(5)
        first = [c.generate_state(2).tolist() for c in child_seeds(ss, 2)]
        second = [c.generate_state(2).tolist() for c in child_seeds(ss, 2)]
        assert first == second
        assert first[0] != first[1]

    def test_derive_seed_negative(self):
        with pytest.raises(ValueError):
            derive_seed(1, -1)


class TestCorrelatedPair:
    def test_r_one_is_copy(self):
        z, zt = generate_correlated_pair(HurstSpec(0.7, 100), 1.0, 3)
        np.testing.assert_array_equal(z.values, zt.values)

    def test_bad_r(self):
        with pytest.raises(ValueError):
            generate_correlated_pair(HurstSpec(0.7, 100), 1.5, 3)

    @pytest.mark.parametrize("r,tol", [(0.0, 0.03), (0.5, 0.02)])
    def test_cross_correlation(self, r, tol):
        # Corr(Z_i, Z~_i) does not depend on i, so pool all indices
        spec = HurstSpec(0.6, 1024)
        zs, zts = [], []
        for i in range(2000):
            z, zt = generate_correlated_pair(spec, r, derive_seed(11, i))
            zs.append(z.values)
            zts.append(zt.values)
        corr = np.corrcoef(np.ravel(zs), np.ravel(zts))[0, 1]
        assert corr == pytest.approx(r, abs=tol)

    def test_cross_covariance_lagged(self):
        # Cov(Z_i, Z~_j) = r rho(|i-j|)
        spec, r = HurstSpec(0.8, 16), 0.5
        zs, zts = [], []
        for i in range(6000):
            z, zt = generate_correlated_pair(spec, r, derive_seed(12, i))
            zs.append(z.values)
            zts.append(zt.values)
        zs, zts = np.array(zs), np.array(zts)
        emp = zs.T @ zts / len(zs)
        lags = np.abs(np.subtract.outer(np.arange(16), np.arange(16)))
        assert np.max(np.abs(emp - r * fgn_autocov(lags, 0.8))) < 4 / math.sqrt(len(zs))
