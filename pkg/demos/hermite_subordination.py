"""
Hermite expansions of Gaussian transforms
=========================================

Hermite coefficients, ranks and the transforms that build the simulation
scenarios.
"""

import numpy as np

from lrdcor.subordination import (hermite_expansion, hermite_rank, subordinated_autocov,
                                  transform_parabolic, transform_uniform)

# the uniform-marginal transform 2 Phi(x) - 1 is odd, so only odd orders appear
exp = hermite_expansion(transform_uniform, qmax=9)
print("coefficients J_q:", np.round(exp.coefficients, 5))
print("Hermite rank:", exp.rank)
print("variance left after order 9:", exp.unexplained_variance())

# a centred square has rank 2, a cubic still has rank 1
print("rank of x^2 - 1:", hermite_rank(lambda x: x ** 2 - 1))
print("rank of x^3:", hermite_rank(lambda x: x ** 3))

# the autocovariance of G(xi) follows from the Gaussian one term by term
exp = hermite_expansion(transform_uniform, qmax=40)
for rho in (0.2, 0.5, 0.9):
    closed = 2 / np.pi * np.arcsin(rho / 2)
    print(f"rho={rho}: series {subordinated_autocov(exp, rho):.6f}  closed form {closed:.6f}")

# the parabolic transform keeps variance 1/3 and is uncorrelated with X
x = transform_uniform(np.random.default_rng(0).standard_normal(200_000))
y = transform_parabolic(x, 1.0, seed=4)
print("var(Y):", round(y.var(), 4), " corr(X, Y):", round(np.corrcoef(x, y)[0, 1], 4),
      " corr(X^2, Y):", round(np.corrcoef(x ** 2, y)[0, 1], 4))
