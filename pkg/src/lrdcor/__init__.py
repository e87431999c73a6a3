"""
Independence testing for long-range dependent time series with the
empirical distance covariance and block subsampling.
"""

__version__ = "0.1.0"

from .fgn import (EmbeddingError, HurstSpec, TimeSeries, derive_seed, fgn_autocov,
                  generate_correlated_pair, generate_fgn)
from .subordination import (HermiteExpansion, hermite_coefficient, hermite_expansion,
                            hermite_poly, hermite_rank, subordinated_autocov,
                            transform_parabolic, transform_rotation, transform_uniform,
                            transform_wavy)
from .dcov import (DcovEstimate, PairedSample, dcorr, dcov_squared_ecf_grid,
                   dcov_squared_fast, dcov_squared_pairwise, pearson_r, test_stat_cov,
                   test_stat_dcov)
from .asymptotics import (QuadratureGrid, c_param, ecf, gamma_param, joint_ecf,
                          reduction_residual, sigma_sq_cov, weighted_l2_norm_sq)
from .subsampling import (SubsamplingConfig, SubsamplingDistribution, TestReport,
                          block_statistics, check_blocklength_condition, empirical_cdf,
                          independence_test, quantile)
from .montecarlo import (ExperimentResult, Scenario, rejection_rate, reproduce_table,
                         simulate_scenario)
from .pipeline import (MonthlySeries, ingest_csv, pairwise_tests,
                       small_trend_decompose)
