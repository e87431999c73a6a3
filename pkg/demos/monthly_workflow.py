"""
Monthly data workflow
=====================

Seasonal decomposition of the shipped synthetic discharge series followed by
pairwise independence tests on the residuals.
"""

import numpy as np

from lrdcor.pipeline import FIXTURE_NAMES, load_fixture, pairwise_tests, small_trend_decompose

series = [load_fixture(name) for name in FIXTURE_NAMES]
for s in series:
    print(f"{s.name:7s} n={len(s)} from {s.start[0]}-{s.start[1]:02d} "
          f"mean {s.values.mean():10.1f}")

# yearly means, averaged seasonal deviations and what is left over
dec = small_trend_decompose(series[1])
print("amazon trend by year:", np.round(dec.trend, 0))
print(f"seasonal profile sums to {dec.seasonal.sum():.1e} (rounding only)")

# the test runs on residuals with l = floor(sqrt(96)) = 9
reports = pairwise_tests(series)
for i in range(3):
    for j in range(i + 1, 3):
        rep = reports[i][j]
        print(f"{FIXTURE_NAMES[i]:7s} vs {FIXTURE_NAMES[j]:7s} T_n={rep.statistic:.3f} "
              f"threshold={rep.threshold:.3f} reject={rep.reject}")
