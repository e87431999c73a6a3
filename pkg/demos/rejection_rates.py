"""
Monte Carlo rejection rates
===========================

A few cells of the published rejection-rate tables at desk scale, with the
reference values side by side.
"""

from lrdcor.montecarlo import binomial_se, reproduce_table

# linear dependence, distance covariance statistic, n = 300, H = 0.6
for table in (1, 2):
    for res in reproduce_table(table, replications=200, sizes=(300,), hursts=(0.6,)):
        se = binomial_se(res.rejection_rate, res.replications)
        print(f"table {table} r={res.scenario.param:<4} rate {res.rejection_rate:.3f} "
              f"+- {se:.3f}  published {res.reference}")

# a rotated square: dependent, yet uncorrelated for v = 3
for table in (7, 8):
    (res,) = reproduce_table(table, replications=200, sizes=(500,), hursts=(0.6,),
                             params=(3.0,))
    print(f"table {table} v=3 rate {res.rejection_rate:.3f}  published {res.reference}")
