"""
Limit-theory quantities
=======================

Covariance parameters of the complex Gaussian limit, the variance of the
scaled sample covariance and the reduction-principle residual.
"""

from lrdcor.asymptotics import (c_param, complex_gaussian_moments, gamma_param, iid_autocov,
                                reduction_profile, sigma_sq_cov)
from lrdcor.fgn import fgn_autocov


def fgn(h):
    return lambda k: fgn_autocov(k, h)


# for white noise only the k = 0 term survives
print("Gamma(1,1), iid:", gamma_param(1, 1, iid_autocov, iid_autocov))

# with long memory the series converges slowly; its tail is extrapolated
for h in (0.6, 0.7):
    g = gamma_param(1, 1, fgn(h), fgn(h))
    c = c_param(1, 1, fgn(h), fgn(h))
    re, im = complex_gaussian_moments(g, c)
    print(f"H={h}: Gamma {g:.5f}  C {c:.5f}  Var Re {re:.5f}  Var Im {im:.5f}")

# sum of rho_X rho_Y; finite while D_X + D_Y > 1
print("sigma^2 at H=0.6:", sigma_sq_cov(fgn(0.6), fgn(0.6)))

# n^{D/2} times the residual of the linear reduction should shrink with n
medians, decreasing = reduction_profile(0.9, sizes=(256, 1024, 4096), reps=20)
print("scaled medians:", [round(m, 4) for m in medians], "decreasing:", decreasing)
