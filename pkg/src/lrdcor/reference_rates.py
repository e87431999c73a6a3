"""
Published rejection rates for the eight simulation tables.

Keys are ``(table_id, gamma, n, hurst, param)``; ``param`` is the cross
correlation r for tables 1-2 and the dependence strength v otherwise. Rates
were estimated from 5000 replications at level 0.05 with ``d = n / 10``.
"""

#: cells whose published value is not a rate; excluded from comparisons
SUSPECT_CELLS = frozenset({(5, 0.4, 1000, 0.9, 2.0)})

PARAMS = {1: (0.0, 0.25, 0.5), 2: (0.0, 0.25, 0.5), 3: (0.5, 1.0, 1.5), 4: (0.5, 0.75, 1.0), 5: (2.0, 3.0, 4.0), 6: (2.0, 3.0, 4.0), 7: (1.0, 2.0, 3.0), 8: (1.0, 2.0, 3.0)}

HURSTS = (0.6, 0.7, 0.8, 0.9)
GAMMAS = (0.4, 0.5, 0.6)
SAMPLE_SIZES = (100, 300, 500, 1000)

REFERENCE_RATES = {(1, 0.4, 100, 0.6, 0.0): 0.131,
 (1, 0.4, 100, 0.6, 0.25): 0.713,
 (1, 0.4, 100, 0.6, 0.5): 0.999,
 (1, 0.4, 100, 0.7, 0.0): 0.175,
 (1, 0.4, 100, 0.7, 0.25): 0.745,
 (1, 0.4, 100, 0.7, 0.5): 0.997,
 (1, 0.4, 100, 0.8, 0.0): 0.099,
 (1, 0.4, 100, 0.8, 0.25): 0.492,
 (1, 0.4, 100, 0.8, 0.5): 0.971,
 (1, 0.4, 100, 0.9, 0.0): 0.024,
 (1, 0.4, 100, 0.9, 0.25): 0.117,
 (1, 0.4, 100, 0.9, 0.5): 0.558,
 (1, 0.4, 300, 0.6, 0.0): 0.095,
 (1, 0.4, 300, 0.6, 0.25): 0.984,
 (1, 0.4, 300, 0.6, 0.5): 1.0,
 (1, 0.4, 300, 0.7, 0.0): 0.161,
 (1, 0.4, 300, 0.7, 0.25): 0.977,
 (1, 0.4, 300, 0.7, 0.5): 1.0,
 (1, 0.4, 300, 0.8, 0.0): 0.084,
 (1, 0.4, 300, 0.8, 0.25): 0.824,
 (1, 0.4, 300, 0.8, 0.5): 1.0,
 (1, 0.4, 300, 0.9, 0.0): 0.017,
 (1, 0.4, 300, 0.9, 0.25): 0.205,
 (1, 0.4, 300, 0.9, 0.5): 0.901,
 (1, 0.4, 500, 0.6, 0.0): 0.089,
 (1, 0.4, 500, 0.6, 0.25): 1.0,
 (1, 0.4, 500, 0.6, 0.5): 1.0,
 (1, 0.4, 500, 0.7, 0.0): 0.148,
 (1, 0.4, 500, 0.7, 0.25): 0.998,
 (1, 0.4, 500, 0.7, 0.5): 1.0,
 (1, 0.4, 500, 0.8, 0.0): 0.072,
 (1, 0.4, 500, 0.8, 0.25): 0.939,
 (1, 0.4, 500, 0.8, 0.5): 1.0,
 (1, 0.4, 500, 0.9, 0.0): 0.015,
 (1, 0.4, 500, 0.9, 0.25): 0.292,
 (1, 0.4, 500, 0.9, 0.5): 0.974,
 (1, 0.4, 1000, 0.6, 0.0): 0.081,
 (1, 0.4, 1000, 0.6, 0.25): 1.0,
 (1, 0.4, 1000, 0.6, 0.5): 1.0,
 (1, 0.4, 1000, 0.7, 0.0): 0.131,
 (1, 0.4, 1000, 0.7, 0.25): 1.0,
 (1, 0.4, 1000, 0.7, 0.5): 1.0,
 (1, 0.4, 1000, 0.8, 0.0): 0.065,
 (1, 0.4, 1000, 0.8, 0.25): 0.996,
 (1, 0.4, 1000, 0.8, 0.5): 1.0,
 (1, 0.4, 1000, 0.9, 0.0): 0.012,
 (1, 0.4, 1000, 0.9, 0.25): 0.46,
 (1, 0.4, 1000, 0.9, 0.5): 0.998,
 (1, 0.5, 100, 0.6, 0.0): 0.116,
 (1, 0.5, 100, 0.6, 0.25): 0.689,
 (1, 0.5, 100, 0.6, 0.5): 0.998,
 (1, 0.5, 100, 0.7, 0.0): 0.155,
 (1, 0.5, 100, 0.7, 0.25): 0.706,
 (1, 0.5, 100, 0.7, 0.5): 0.996,
 (1, 0.5, 100, 0.8, 0.0): 0.095,
 (1, 0.5, 100, 0.8, 0.25): 0.474,
 (1, 0.5, 100, 0.8, 0.5): 0.965,
 (1, 0.5, 100, 0.9, 0.0): 0.034,
 (1, 0.5, 100, 0.9, 0.25): 0.145,
 (1, 0.5, 100, 0.9, 0.5): 0.62,
 (1, 0.5, 300, 0.6, 0.0): 0.089,
 (1, 0.5, 300, 0.6, 0.25): 0.979,
 (1, 0.5, 300, 0.6, 0.5): 1.0,
 (1, 0.5, 300, 0.7, 0.0): 0.125,
 (1, 0.5, 300, 0.7, 0.25): 0.969,
 (1, 0.5, 300, 0.7, 0.5): 1.0,
 (1, 0.5, 300, 0.8, 0.0): 0.075,
 (1, 0.5, 300, 0.8, 0.25): 0.807,
 (1, 0.5, 300, 0.8, 0.5): 1.0,
 (1, 0.5, 300, 0.9, 0.0): 0.023,
 (1, 0.5, 300, 0.9, 0.25): 0.262,
 (1, 0.5, 300, 0.9, 0.5): 0.926,
 (1, 0.5, 500, 0.6, 0.0): 0.084,
 (1, 0.5, 500, 0.6, 0.25): 0.999,
 (1, 0.5, 500, 0.6, 0.5): 1.0,
 (1, 0.5, 500, 0.7, 0.0): 0.126,
 (1, 0.5, 500, 0.7, 0.25): 0.998,
 (1, 0.5, 500, 0.7, 0.5): 1.0,
 (1, 0.5, 500, 0.8, 0.0): 0.066,
 (1, 0.5, 500, 0.8, 0.25): 0.931,
 (1, 0.5, 500, 0.8, 0.5): 1.0,
 (1, 0.5, 500, 0.9, 0.0): 0.021,
 (1, 0.5, 500, 0.9, 0.25): 0.337,
 (1, 0.5, 500, 0.9, 0.5): 0.981,
 (1, 0.5, 1000, 0.6, 0.0): 0.073,
 (1, 0.5, 1000, 0.6, 0.25): 1.0,
 (1, 0.5, 1000, 0.6, 0.5): 1.0,
 (1, 0.5, 1000, 0.7, 0.0): 0.112,
 (1, 0.5, 1000, 0.7, 0.25): 1.0,
 (1, 0.5, 1000, 0.7, 0.5): 1.0,
 (1, 0.5, 1000, 0.8, 0.0): 0.062,
 (1, 0.5, 1000, 0.8, 0.25): 0.996,
 (1, 0.5, 1000, 0.8, 0.5): 1.0,
 (1, 0.5, 1000, 0.9, 0.0): 0.018,
 (1, 0.5, 1000, 0.9, 0.25): 0.543,
 (1, 0.5, 1000, 0.9, 0.5): 0.999,
 (1, 0.6, 100, 0.6, 0.0): 0.123,
 (1, 0.6, 100, 0.6, 0.25): 0.683,
 (1, 0.6, 100, 0.6, 0.5): 0.997,
 (1, 0.6, 100, 0.7, 0.0): 0.15,
 (1, 0.6, 100, 0.7, 0.25): 0.679,
 (1, 0.6, 100, 0.7, 0.5): 0.994,
 (1, 0.6, 100, 0.8, 0.0): 0.103,
 (1, 0.6, 100, 0.8, 0.25): 0.478,
 (1, 0.6, 100, 0.8, 0.5): 0.96,
 (1, 0.6, 100, 0.9, 0.0): 0.045,
 (1, 0.6, 100, 0.9, 0.25): 0.18,
 (1, 0.6, 100, 0.9, 0.5): 0.67,
 (1, 0.6, 300, 0.6, 0.0): 0.091,
 (1, 0.6, 300, 0.6, 0.25): 0.973,
 (1, 0.6, 300, 0.6, 0.5): 1.0,
 (1, 0.6, 300, 0.7, 0.0): 0.118,
 (1, 0.6, 300, 0.7, 0.25): 0.958,
 (1, 0.6, 300, 0.7, 0.5): 1.0,
 (1, 0.6, 300, 0.8, 0.0): 0.076,
 (1, 0.6, 300, 0.8, 0.25): 0.794,
 (1, 0.6, 300, 0.8, 0.5): 1.0,
 (1, 0.6, 300, 0.9, 0.0): 0.032,
 (1, 0.6, 300, 0.9, 0.25): 0.324,
 (1, 0.6, 300, 0.9, 0.5): 0.94,
 (1, 0.6, 500, 0.6, 0.0): 0.086,
 (1, 0.6, 500, 0.6, 0.25): 0.999,
 (1, 0.6, 500, 0.6, 0.5): 1.0,
 (1, 0.6, 500, 0.7, 0.0): 0.116,
 (1, 0.6, 500, 0.7, 0.25): 0.995,
 (1, 0.6, 500, 0.7, 0.5): 1.0,
 (1, 0.6, 500, 0.8, 0.0): 0.071,
 (1, 0.6, 500, 0.8, 0.25): 0.927,
 (1, 0.6, 500, 0.8, 0.5): 1.0,
 (1, 0.6, 500, 0.9, 0.0): 0.029,
 (1, 0.6, 500, 0.9, 0.25): 0.42,
 (1, 0.6, 500, 0.9, 0.5): 0.984,
 (1, 0.6, 1000, 0.6, 0.0): 0.074,
 (1, 0.6, 1000, 0.6, 0.25): 1.0,
 (1, 0.6, 1000, 0.6, 0.5): 1.0,
 (1, 0.6, 1000, 0.7, 0.0): 0.097,
 (1, 0.6, 1000, 0.7, 0.25): 1.0,
 (1, 0.6, 1000, 0.7, 0.5): 1.0,
 (1, 0.6, 1000, 0.8, 0.0): 0.062,
 (1, 0.6, 1000, 0.8, 0.25): 0.996,
 (1, 0.6, 1000, 0.8, 0.5): 1.0,
 (1, 0.6, 1000, 0.9, 0.0): 0.03,
 (1, 0.6, 1000, 0.9, 0.25): 0.605,
 (1, 0.6, 1000, 0.9, 0.5): 0.999,
 (2, 0.4, 100, 0.6, 0.0): 0.125,
 (2, 0.4, 100, 0.6, 0.25): 0.77,
 (2, 0.4, 100, 0.6, 0.5): 1.0,
 (2, 0.4, 100, 0.7, 0.0): 0.172,
 (2, 0.4, 100, 0.7, 0.25): 0.772,
 (2, 0.4, 100, 0.7, 0.5): 0.999,
 (2, 0.4, 100, 0.8, 0.0): 0.174,
 (2, 0.4, 100, 0.8, 0.25): 0.646,
 (2, 0.4, 100, 0.8, 0.5): 0.992,
 (2, 0.4, 100, 0.9, 0.0): 0.113,
 (2, 0.4, 100, 0.9, 0.25): 0.354,
 (2, 0.4, 100, 0.9, 0.5): 0.852,
 (2, 0.4, 300, 0.6, 0.0): 0.098,
 (2, 0.4, 300, 0.6, 0.25): 0.991,
 (2, 0.4, 300, 0.6, 0.5): 1.0,
 (2, 0.4, 300, 0.7, 0.0): 0.164,
 (2, 0.4, 300, 0.7, 0.25): 0.985,
 (2, 0.4, 300, 0.7, 0.5): 1.0,
 (2, 0.4, 300, 0.8, 0.0): 0.154,
 (2, 0.4, 300, 0.8, 0.25): 0.91,
 (2, 0.4, 300, 0.8, 0.5): 1.0,
 (2, 0.4, 300, 0.9, 0.0): 0.086,
 (2, 0.4, 300, 0.9, 0.25): 0.527,
 (2, 0.4, 300, 0.9, 0.5): 0.985,
 (2, 0.4, 500, 0.6, 0.0): 0.083,
 (2, 0.4, 500, 0.6, 0.25): 1.0,
 (2, 0.4, 500, 0.6, 0.5): 1.0,
 (2, 0.4, 500, 0.7, 0.0): 0.16,
 (2, 0.4, 500, 0.7, 0.25): 0.999,
 (2, 0.4, 500, 0.7, 0.5): 1.0,
 (2, 0.4, 500, 0.8, 0.0): 0.138,
 (2, 0.4, 500, 0.8, 0.25): 0.973,
 (2, 0.4, 500, 0.8, 0.5): 1.0,
 (2, 0.4, 500, 0.9, 0.0): 0.073,
 (2, 0.4, 500, 0.9, 0.25): 0.613,
 (2, 0.4, 500, 0.9, 0.5): 0.998,
 (2, 0.4, 1000, 0.6, 0.0): 0.085,
 (2, 0.4, 1000, 0.6, 0.25): 1.0,
 (2, 0.4, 1000, 0.6, 0.5): 1.0,
 (2, 0.4, 1000, 0.7, 0.0): 0.139,
 (2, 0.4, 1000, 0.7, 0.25): 1.0,
 (2, 0.4, 1000, 0.7, 0.5): 1.0,
 (2, 0.4, 1000, 0.8, 0.0): 0.139,
 (2, 0.4, 1000, 0.8, 0.25): 0.999,
 (2, 0.4, 1000, 0.8, 0.5): 1.0,
 (2, 0.4, 1000, 0.9, 0.0): 0.064,
 (2, 0.4, 1000, 0.9, 0.25): 0.792,
 (2, 0.4, 1000, 0.9, 0.5): 1.0,
 (2, 0.5, 100, 0.6, 0.0): 0.11,
 (2, 0.5, 100, 0.6, 0.25): 0.748,
 (2, 0.5, 100, 0.6, 0.5): 0.999,
 (2, 0.5, 100, 0.7, 0.0): 0.165,
 (2, 0.5, 100, 0.7, 0.25): 0.74,
 (2, 0.5, 100, 0.7, 0.5): 0.999,
 (2, 0.5, 100, 0.8, 0.0): 0.154,
 (2, 0.5, 100, 0.8, 0.25): 0.595,
 (2, 0.5, 100, 0.8, 0.5): 0.985,
 (2, 0.5, 100, 0.9, 0.0): 0.107,
 (2, 0.5, 100, 0.9, 0.25): 0.338,
 (2, 0.5, 100, 0.9, 0.5): 0.833,
 (2, 0.5, 300, 0.6, 0.0): 0.083,
 (2, 0.5, 300, 0.6, 0.25): 0.986,
 (2, 0.5, 300, 0.6, 0.5): 1.0,
 (2, 0.5, 300, 0.7, 0.0): 0.136,
 (2, 0.5, 300, 0.7, 0.25): 0.976,
 (2, 0.5, 300, 0.7, 0.5): 1.0,
 (2, 0.5, 300, 0.8, 0.0): 0.133,
 (2, 0.5, 300, 0.8, 0.25): 0.885,
 (2, 0.5, 300, 0.8, 0.5): 1.0,
 (2, 0.5, 300, 0.9, 0.0): 0.078,
 (2, 0.5, 300, 0.9, 0.25): 0.491,
 (2, 0.5, 300, 0.9, 0.5): 0.984,
 (2, 0.5, 500, 0.6, 0.0): 0.078,
 (2, 0.5, 500, 0.6, 0.25): 1.0,
 (2, 0.5, 500, 0.6, 0.5): 1.0,
 (2, 0.5, 500, 0.7, 0.0): 0.125,
 (2, 0.5, 500, 0.7, 0.25): 0.999,
 (2, 0.5, 500, 0.7, 0.5): 1.0,
 (2, 0.5, 500, 0.8, 0.0): 0.122,
 (2, 0.5, 500, 0.8, 0.25): 0.961,
 (2, 0.5, 500, 0.8, 0.5): 1.0,
 (2, 0.5, 500, 0.9, 0.0): 0.074,
 (2, 0.5, 500, 0.9, 0.25): 0.594,
 (2, 0.5, 500, 0.9, 0.5): 0.996,
 (2, 0.5, 1000, 0.6, 0.0): 0.069,
 (2, 0.5, 1000, 0.6, 0.25): 1.0,
 (2, 0.5, 1000, 0.6, 0.5): 1.0,
 (2, 0.5, 1000, 0.7, 0.0): 0.124,
 (2, 0.5, 1000, 0.7, 0.25): 1.0,
 (2, 0.5, 1000, 0.7, 0.5): 1.0,
 (2, 0.5, 1000, 0.8, 0.0): 0.109,
 (2, 0.5, 1000, 0.8, 0.25): 0.999,
 (2, 0.5, 1000, 0.8, 0.5): 1.0,
 (2, 0.5, 1000, 0.9, 0.0): 0.068,
 (2, 0.5, 1000, 0.9, 0.25): 0.758,
 (2, 0.5, 1000, 0.9, 0.5): 1.0,
 (2, 0.6, 100, 0.6, 0.0): 0.12,
 (2, 0.6, 100, 0.6, 0.25): 0.73,
 (2, 0.6, 100, 0.6, 0.5): 0.999,
 (2, 0.6, 100, 0.7, 0.0): 0.148,
 (2, 0.6, 100, 0.7, 0.25): 0.72,
 (2, 0.6, 100, 0.7, 0.5): 0.996,
 (2, 0.6, 100, 0.8, 0.0): 0.144,
 (2, 0.6, 100, 0.8, 0.25): 0.574,
 (2, 0.6, 100, 0.8, 0.5): 0.978,
 (2, 0.6, 100, 0.9, 0.0): 0.11,
 (2, 0.6, 100, 0.9, 0.25): 0.339,
 (2, 0.6, 100, 0.9, 0.5): 0.818,
 (2, 0.6, 300, 0.6, 0.0): 0.089,
 (2, 0.6, 300, 0.6, 0.25): 0.983,
 (2, 0.6, 300, 0.6, 0.5): 1.0,
 (2, 0.6, 300, 0.7, 0.0): 0.115,
 (2, 0.6, 300, 0.7, 0.25): 0.971,
 (2, 0.6, 300, 0.7, 0.5): 1.0,
 (2, 0.6, 300, 0.8, 0.0): 0.115,
 (2, 0.6, 300, 0.8, 0.25): 0.858,
 (2, 0.6, 300, 0.8, 0.5): 1.0,
 (2, 0.6, 300, 0.9, 0.0): 0.085,
 (2, 0.6, 300, 0.9, 0.25): 0.497,
 (2, 0.6, 300, 0.9, 0.5): 0.977,
 (2, 0.6, 500, 0.6, 0.0): 0.084,
 (2, 0.6, 500, 0.6, 0.25): 1.0,
 (2, 0.6, 500, 0.6, 0.5): 1.0,
 (2, 0.6, 500, 0.7, 0.0): 0.118,
 (2, 0.6, 500, 0.7, 0.25): 0.996,
 (2, 0.6, 500, 0.7, 0.5): 1.0,
 (2, 0.6, 500, 0.8, 0.0): 0.102,
 (2, 0.6, 500, 0.8, 0.25): 0.954,
 (2, 0.6, 500, 0.8, 0.5): 1.0,
 (2, 0.6, 500, 0.9, 0.0): 0.074,
 (2, 0.6, 500, 0.9, 0.25): 0.587,
 (2, 0.6, 500, 0.9, 0.5): 0.994,
 (2, 0.6, 1000, 0.6, 0.0): 0.072,
 (2, 0.6, 1000, 0.6, 0.25): 1.0,
 (2, 0.6, 1000, 0.6, 0.5): 1.0,
 (2, 0.6, 1000, 0.7, 0.0): 0.101,
 (2, 0.6, 1000, 0.7, 0.25): 1.0,
 (2, 0.6, 1000, 0.7, 0.5): 1.0,
 (2, 0.6, 1000, 0.8, 0.0): 0.095,
 (2, 0.6, 1000, 0.8, 0.25): 0.996,
 (2, 0.6, 1000, 0.8, 0.5): 1.0,
 (2, 0.6, 1000, 0.9, 0.0): 0.065,
 (2, 0.6, 1000, 0.9, 0.25): 0.739,
 (2, 0.6, 1000, 0.9, 0.5): 1.0,
 (3, 0.4, 100, 0.6, 0.5): 0.312,
 (3, 0.4, 100, 0.6, 1.0): 0.916,
 (3, 0.4, 100, 0.6, 1.5): 1.0,
 (3, 0.4, 100, 0.7, 0.5): 0.373,
 (3, 0.4, 100, 0.7, 1.0): 0.944,
 (3, 0.4, 100, 0.7, 1.5): 1.0,
 (3, 0.4, 100, 0.8, 0.5): 0.14,
 (3, 0.4, 100, 0.8, 1.0): 0.698,
 (3, 0.4, 100, 0.8, 1.5): 0.997,
 (3, 0.4, 100, 0.9, 0.5): 0.005,
 (3, 0.4, 100, 0.9, 1.0): 0.174,
 (3, 0.4, 100, 0.9, 1.5): 0.631,
 (3, 0.4, 300, 0.6, 0.5): 0.723,
 (3, 0.4, 300, 0.6, 1.0): 1.0,
 (3, 0.4, 300, 0.6, 1.5): 1.0,
 (3, 0.4, 300, 0.7, 0.5): 0.788,
 (3, 0.4, 300, 0.7, 1.0): 1.0,
 (3, 0.4, 300, 0.7, 1.5): 1.0,
 (3, 0.4, 300, 0.8, 0.5): 0.328,
 (3, 0.4, 300, 0.8, 1.0): 0.997,
 (3, 0.4, 300, 0.8, 1.5): 1.0,
 (3, 0.4, 300, 0.9, 0.5): 0.008,
 (3, 0.4, 300, 0.9, 1.0): 0.414,
 (3, 0.4, 300, 0.9, 1.5): 0.925,
 (3, 0.4, 500, 0.6, 0.5): 0.95,
 (3, 0.4, 500, 0.6, 1.0): 1.0,
 (3, 0.4, 500, 0.6, 1.5): 1.0,
 (3, 0.4, 500, 0.7, 0.5): 0.962,
 (3, 0.4, 500, 0.7, 1.0): 1.0,
 (3, 0.4, 500, 0.7, 1.5): 1.0,
 (3, 0.4, 500, 0.8, 0.5): 0.545,
 (3, 0.4, 500, 0.8, 1.0): 1.0,
 (3, 0.4, 500, 0.8, 1.5): 1.0,
 (3, 0.4, 500, 0.9, 0.5): 0.017,
 (3, 0.4, 500, 0.9, 1.0): 0.572,
 (3, 0.4, 500, 0.9, 1.5): 0.998,
 (3, 0.4, 1000, 0.6, 0.5): 1.0,
 (3, 0.4, 1000, 0.6, 1.0): 1.0,
 (3, 0.4, 1000, 0.6, 1.5): 1.0,
 (3, 0.4, 1000, 0.7, 0.5): 1.0,
 (3, 0.4, 1000, 0.7, 1.0): 1.0,
 (3, 0.4, 1000, 0.7, 1.5): 1.0,
 (3, 0.4, 1000, 0.8, 0.5): 0.927,
 (3, 0.4, 1000, 0.8, 1.0): 1.0,
 (3, 0.4, 1000, 0.8, 1.5): 1.0,
 (3, 0.4, 1000, 0.9, 0.5): 0.056,
 (3, 0.4, 1000, 0.9, 1.0): 0.805,
 (3, 0.4, 1000, 0.9, 1.5): 1.0,
 (3, 0.5, 100, 0.6, 0.5): 0.292,
 (3, 0.5, 100, 0.6, 1.0): 0.897,
 (3, 0.5, 100, 0.6, 1.5): 1.0,
 (3, 0.5, 100, 0.7, 0.5): 0.348,
 (3, 0.5, 100, 0.7, 1.0): 0.917,
 (3, 0.5, 100, 0.7, 1.5): 1.0,
 (3, 0.5, 100, 0.8, 0.5): 0.168,
 (3, 0.5, 100, 0.8, 1.0): 0.724,
 (3, 0.5, 100, 0.8, 1.5): 0.994,
 (3, 0.5, 100, 0.9, 0.5): 0.015,
 (3, 0.5, 100, 0.9, 1.0): 0.285,
 (3, 0.5, 100, 0.9, 1.5): 0.741,
 (3, 0.5, 300, 0.6, 0.5): 0.676,
 (3, 0.5, 300, 0.6, 1.0): 1.0,
 (3, 0.5, 300, 0.6, 1.5): 1.0,
 (3, 0.5, 300, 0.7, 0.5): 0.725,
 (3, 0.5, 300, 0.7, 1.0): 1.0,
 (3, 0.5, 300, 0.7, 1.5): 1.0,
 (3, 0.5, 300, 0.8, 0.5): 0.377,
 (3, 0.5, 300, 0.8, 1.0): 0.996,
 (3, 0.5, 300, 0.8, 1.5): 1.0,
 (3, 0.5, 300, 0.9, 0.5): 0.038,
 (3, 0.5, 300, 0.9, 1.0): 0.563,
 (3, 0.5, 300, 0.9, 1.5): 0.981,
 (3, 0.5, 500, 0.6, 0.5): 0.932,
 (3, 0.5, 500, 0.6, 1.0): 1.0,
 (3, 0.5, 500, 0.6, 1.5): 1.0,
 (3, 0.5, 500, 0.7, 0.5): 0.942,
 (3, 0.5, 500, 0.7, 1.0): 1.0,
 (3, 0.5, 500, 0.7, 1.5): 1.0,
 (3, 0.5, 500, 0.8, 0.5): 0.607,
 (3, 0.5, 500, 0.8, 1.0): 1.0,
 (3, 0.5, 500, 0.8, 1.5): 1.0,
 (3, 0.5, 500, 0.9, 0.5): 0.076,
 (3, 0.5, 500, 0.9, 1.0): 0.749,
 (3, 0.5, 500, 0.9, 1.5): 1.0,
 (3, 0.5, 1000, 0.6, 0.5): 1.0,
 (3, 0.5, 1000, 0.6, 1.0): 1.0,
 (3, 0.5, 1000, 0.6, 1.5): 1.0,
 (3, 0.5, 1000, 0.7, 0.5): 1.0,
 (3, 0.5, 1000, 0.7, 1.0): 1.0,
 (3, 0.5, 1000, 0.7, 1.5): 1.0,
 (3, 0.5, 1000, 0.8, 0.5): 0.95,
 (3, 0.5, 1000, 0.8, 1.0): 1.0,
 (3, 0.5, 1000, 0.8, 1.5): 1.0,
 (3, 0.5, 1000, 0.9, 0.5): 0.193,
 (3, 0.5, 1000, 0.9, 1.0): 0.967,
 (3, 0.5, 1000, 0.9, 1.5): 1.0,
 (3, 0.6, 100, 0.6, 0.5): 0.308,
 (3, 0.6, 100, 0.6, 1.0): 0.879,
 (3, 0.6, 100, 0.6, 1.5): 1.0,
 (3, 0.6, 100, 0.7, 0.5): 0.354,
 (3, 0.6, 100, 0.7, 1.0): 0.903,
 (3, 0.6, 100, 0.7, 1.5): 0.999,
 (3, 0.6, 100, 0.8, 0.5): 0.205,
 (3, 0.6, 100, 0.8, 1.0): 0.758,
 (3, 0.6, 100, 0.8, 1.5): 0.992,
 (3, 0.6, 100, 0.9, 0.5): 0.044,
 (3, 0.6, 100, 0.9, 1.0): 0.396,
 (3, 0.6, 100, 0.9, 1.5): 0.813,
 (3, 0.6, 300, 0.6, 0.5): 0.665,
 (3, 0.6, 300, 0.6, 1.0): 1.0,
 (3, 0.6, 300, 0.6, 1.5): 1.0,
 (3, 0.6, 300, 0.7, 0.5): 0.706,
 (3, 0.6, 300, 0.7, 1.0): 1.0,
 (3, 0.6, 300, 0.7, 1.5): 1.0,
 (3, 0.6, 300, 0.8, 0.5): 0.449,
 (3, 0.6, 300, 0.8, 1.0): 0.996,
 (3, 0.6, 300, 0.8, 1.5): 1.0,
 (3, 0.6, 300, 0.9, 0.5): 0.117,
 (3, 0.6, 300, 0.9, 1.0): 0.722,
 (3, 0.6, 300, 0.9, 1.5): 0.99,
 (3, 0.6, 500, 0.6, 0.5): 0.907,
 (3, 0.6, 500, 0.6, 1.0): 1.0,
 (3, 0.6, 500, 0.6, 1.5): 1.0,
 (3, 0.6, 500, 0.7, 0.5): 0.918,
 (3, 0.6, 500, 0.7, 1.0): 1.0,
 (3, 0.6, 500, 0.7, 1.5): 1.0,
 (3, 0.6, 500, 0.8, 0.5): 0.682,
 (3, 0.6, 500, 0.8, 1.0): 1.0,
 (3, 0.6, 500, 0.8, 1.5): 1.0,
 (3, 0.6, 500, 0.9, 0.5): 0.199,
 (3, 0.6, 500, 0.9, 1.0): 0.906,
 (3, 0.6, 500, 0.9, 1.5): 0.999,
 (3, 0.6, 1000, 0.6, 0.5): 0.998,
 (3, 0.6, 1000, 0.6, 1.0): 1.0,
 (3, 0.6, 1000, 0.6, 1.5): 1.0,
 (3, 0.6, 1000, 0.7, 0.5): 0.999,
 (3, 0.6, 1000, 0.7, 1.0): 1.0,
 (3, 0.6, 1000, 0.7, 1.5): 1.0,
 (3, 0.6, 1000, 0.8, 0.5): 0.961,
 (3, 0.6, 1000, 0.8, 1.0): 1.0,
 (3, 0.6, 1000, 0.8, 1.5): 1.0,
 (3, 0.6, 1000, 0.9, 0.5): 0.387,
 (3, 0.6, 1000, 0.9, 1.0): 0.995,
 (3, 0.6, 1000, 0.9, 1.5): 1.0,
 (4, 0.4, 100, 0.6, 0.5): 0.122,
 (4, 0.4, 100, 0.6, 0.75): 0.148,
 (4, 0.4, 100, 0.6, 1.0): 0.175,
 (4, 0.4, 100, 0.7, 0.5): 0.174,
 (4, 0.4, 100, 0.7, 0.75): 0.242,
 (4, 0.4, 100, 0.7, 1.0): 0.315,
 (4, 0.4, 100, 0.8, 0.5): 0.165,
 (4, 0.4, 100, 0.8, 0.75): 0.289,
 (4, 0.4, 100, 0.8, 1.0): 0.409,
 (4, 0.4, 100, 0.9, 0.5): 0.072,
 (4, 0.4, 100, 0.9, 0.75): 0.193,
 (4, 0.4, 100, 0.9, 1.0): 0.366,
 (4, 0.4, 300, 0.6, 0.5): 0.118,
 (4, 0.4, 300, 0.6, 0.75): 0.136,
 (4, 0.4, 300, 0.6, 1.0): 0.185,
 (4, 0.4, 300, 0.7, 0.5): 0.197,
 (4, 0.4, 300, 0.7, 0.75): 0.281,
 (4, 0.4, 300, 0.7, 1.0): 0.384,
 (4, 0.4, 300, 0.8, 0.5): 0.196,
 (4, 0.4, 300, 0.8, 0.75): 0.358,
 (4, 0.4, 300, 0.8, 1.0): 0.468,
 (4, 0.4, 300, 0.9, 0.5): 0.093,
 (4, 0.4, 300, 0.9, 0.75): 0.308,
 (4, 0.4, 300, 0.9, 1.0): 0.467,
 (4, 0.4, 500, 0.6, 0.5): 0.107,
 (4, 0.4, 500, 0.6, 0.75): 0.138,
 (4, 0.4, 500, 0.6, 1.0): 0.19,
 (4, 0.4, 500, 0.7, 0.5): 0.201,
 (4, 0.4, 500, 0.7, 0.75): 0.301,
 (4, 0.4, 500, 0.7, 1.0): 0.413,
 (4, 0.4, 500, 0.8, 0.5): 0.223,
 (4, 0.4, 500, 0.8, 0.75): 0.4,
 (4, 0.4, 500, 0.8, 1.0): 0.524,
 (4, 0.4, 500, 0.9, 0.5): 0.145,
 (4, 0.4, 500, 0.9, 0.75): 0.372,
 (4, 0.4, 500, 0.9, 1.0): 0.531,
 (4, 0.4, 1000, 0.6, 0.5): 0.102,
 (4, 0.4, 1000, 0.6, 0.75): 0.134,
 (4, 0.4, 1000, 0.6, 1.0): 0.189,
 (4, 0.4, 1000, 0.7, 0.5): 0.218,
 (4, 0.4, 1000, 0.7, 0.75): 0.347,
 (4, 0.4, 1000, 0.7, 1.0): 0.435,
 (4, 0.4, 1000, 0.8, 0.5): 0.266,
 (4, 0.4, 1000, 0.8, 0.75): 0.447,
 (4, 0.4, 1000, 0.8, 1.0): 0.567,
 (4, 0.4, 1000, 0.9, 0.5): 0.207,
 (4, 0.4, 1000, 0.9, 0.75): 0.425,
 (4, 0.4, 1000, 0.9, 1.0): 0.563,
 (4, 0.5, 100, 0.6, 0.5): 0.124,
 (4, 0.5, 100, 0.6, 0.75): 0.147,
 (4, 0.5, 100, 0.6, 1.0): 0.191,
 (4, 0.5, 100, 0.7, 0.5): 0.168,
 (4, 0.5, 100, 0.7, 0.75): 0.231,
 (4, 0.5, 100, 0.7, 1.0): 0.308,
 (4, 0.5, 100, 0.8, 0.5): 0.174,
 (4, 0.5, 100, 0.8, 0.75): 0.288,
 (4, 0.5, 100, 0.8, 1.0): 0.399,
 (4, 0.5, 100, 0.9, 0.5): 0.106,
 (4, 0.5, 100, 0.9, 0.75): 0.243,
 (4, 0.5, 100, 0.9, 1.0): 0.397,
 (4, 0.5, 300, 0.6, 0.5): 0.102,
 (4, 0.5, 300, 0.6, 0.75): 0.133,
 (4, 0.5, 300, 0.6, 1.0): 0.181,
 (4, 0.5, 300, 0.7, 0.5): 0.18,
 (4, 0.5, 300, 0.7, 0.75): 0.265,
 (4, 0.5, 300, 0.7, 1.0): 0.353,
 (4, 0.5, 300, 0.8, 0.5): 0.213,
 (4, 0.5, 300, 0.8, 0.75): 0.363,
 (4, 0.5, 300, 0.8, 1.0): 0.475,
 (4, 0.5, 300, 0.9, 0.5): 0.152,
 (4, 0.5, 300, 0.9, 0.75): 0.37,
 (4, 0.5, 300, 0.9, 1.0): 0.506,
 (4, 0.5, 500, 0.6, 0.5): 0.102,
 (4, 0.5, 500, 0.6, 0.75): 0.132,
 (4, 0.5, 500, 0.6, 1.0): 0.178,
 (4, 0.5, 500, 0.7, 0.5): 0.187,
 (4, 0.5, 500, 0.7, 0.75): 0.282,
 (4, 0.5, 500, 0.7, 1.0): 0.385,
 (4, 0.5, 500, 0.8, 0.5): 0.249,
 (4, 0.5, 500, 0.8, 0.75): 0.408,
 (4, 0.5, 500, 0.8, 1.0): 0.51,
 (4, 0.5, 500, 0.9, 0.5): 0.205,
 (4, 0.5, 500, 0.9, 0.75): 0.424,
 (4, 0.5, 500, 0.9, 1.0): 0.562,
 (4, 0.5, 1000, 0.6, 0.5): 0.094,
 (4, 0.5, 1000, 0.6, 0.75): 0.13,
 (4, 0.5, 1000, 0.6, 1.0): 0.185,
 (4, 0.5, 1000, 0.7, 0.5): 0.211,
 (4, 0.5, 1000, 0.7, 0.75): 0.332,
 (4, 0.5, 1000, 0.7, 1.0): 0.435,
 (4, 0.5, 1000, 0.8, 0.5): 0.289,
 (4, 0.5, 1000, 0.8, 0.75): 0.455,
 (4, 0.5, 1000, 0.8, 1.0): 0.564,
 (4, 0.5, 1000, 0.9, 0.5): 0.286,
 (4, 0.5, 1000, 0.9, 0.75): 0.487,
 (4, 0.5, 1000, 0.9, 1.0): 0.617,
 (4, 0.6, 100, 0.6, 0.5): 0.131,
 (4, 0.6, 100, 0.6, 0.75): 0.157,
 (4, 0.6, 100, 0.6, 1.0): 0.185,
 (4, 0.6, 100, 0.7, 0.5): 0.183,
 (4, 0.6, 100, 0.7, 0.75): 0.232,
 (4, 0.6, 100, 0.7, 1.0): 0.309,
 (4, 0.6, 100, 0.8, 0.5): 0.19,
 (4, 0.6, 100, 0.8, 0.75): 0.307,
 (4, 0.6, 100, 0.8, 1.0): 0.417,
 (4, 0.6, 100, 0.9, 0.5): 0.146,
 (4, 0.6, 100, 0.9, 0.75): 0.297,
 (4, 0.6, 100, 0.9, 1.0): 0.456,
 (4, 0.6, 300, 0.6, 0.5): 0.109,
 (4, 0.6, 300, 0.6, 0.75): 0.141,
 (4, 0.6, 300, 0.6, 1.0): 0.187,
 (4, 0.6, 300, 0.7, 0.5): 0.175,
 (4, 0.6, 300, 0.7, 0.75): 0.267,
 (4, 0.6, 300, 0.7, 1.0): 0.362,
 (4, 0.6, 300, 0.8, 0.5): 0.235,
 (4, 0.6, 300, 0.8, 0.75): 0.383,
 (4, 0.6, 300, 0.8, 1.0): 0.486,
 (4, 0.6, 300, 0.9, 0.5): 0.233,
 (4, 0.6, 300, 0.9, 0.75): 0.435,
 (4, 0.6, 300, 0.9, 1.0): 0.566,
 (4, 0.6, 500, 0.6, 0.5): 0.109,
 (4, 0.6, 500, 0.6, 0.75): 0.136,
 (4, 0.6, 500, 0.6, 1.0): 0.188,
 (4, 0.6, 500, 0.7, 0.5): 0.189,
 (4, 0.6, 500, 0.7, 0.75): 0.282,
 (4, 0.6, 500, 0.7, 1.0): 0.39,
 (4, 0.6, 500, 0.8, 0.5): 0.266,
 (4, 0.6, 500, 0.8, 0.75): 0.425,
 (4, 0.6, 500, 0.8, 1.0): 0.538,
 (4, 0.6, 500, 0.9, 0.5): 0.287,
 (4, 0.6, 500, 0.9, 0.75): 0.488,
 (4, 0.6, 500, 0.9, 1.0): 0.618,
 (4, 0.6, 1000, 0.6, 0.5): 0.104,
 (4, 0.6, 1000, 0.6, 0.75): 0.134,
 (4, 0.6, 1000, 0.6, 1.0): 0.193,
 (4, 0.6, 1000, 0.7, 0.5): 0.209,
 (4, 0.6, 1000, 0.7, 0.75): 0.329,
 (4, 0.6, 1000, 0.7, 1.0): 0.423,
 (4, 0.6, 1000, 0.8, 0.5): 0.312,
 (4, 0.6, 1000, 0.8, 0.75): 0.476,
 (4, 0.6, 1000, 0.8, 1.0): 0.593,
 (4, 0.6, 1000, 0.9, 0.5): 0.376,
 (4, 0.6, 1000, 0.9, 0.75): 0.553,
 (4, 0.6, 1000, 0.9, 1.0): 0.66,
 (5, 0.4, 100, 0.6, 2.0): 0.224,
 (5, 0.4, 100, 0.6, 3.0): 0.494,
 (5, 0.4, 100, 0.6, 4.0): 0.931,
 (5, 0.4, 100, 0.7, 2.0): 0.281,
 (5, 0.4, 100, 0.7, 3.0): 0.573,
 (5, 0.4, 100, 0.7, 4.0): 0.943,
 (5, 0.4, 100, 0.8, 2.0): 0.112,
 (5, 0.4, 100, 0.8, 3.0): 0.305,
 (5, 0.4, 100, 0.8, 4.0): 0.662,
 (5, 0.4, 100, 0.9, 2.0): 0.01,
 (5, 0.4, 100, 0.9, 3.0): 0.096,
 (5, 0.4, 100, 0.9, 4.0): 0.261,
 (5, 0.4, 300, 0.6, 2.0): 0.442,
 (5, 0.4, 300, 0.6, 3.0): 0.964,
 (5, 0.4, 300, 0.6, 4.0): 1.0,
 (5, 0.4, 300, 0.7, 2.0): 0.538,
 (5, 0.4, 300, 0.7, 3.0): 0.97,
 (5, 0.4, 300, 0.7, 4.0): 1.0,
 (5, 0.4, 300, 0.8, 2.0): 0.184,
 (5, 0.4, 300, 0.8, 3.0): 0.598,
 (5, 0.4, 300, 0.8, 4.0): 0.993,
 (5, 0.4, 300, 0.9, 2.0): 0.03,
 (5, 0.4, 300, 0.9, 3.0): 0.158,
 (5, 0.4, 300, 0.9, 4.0): 0.387,
 (5, 0.4, 500, 0.6, 2.0): 0.716,
 (5, 0.4, 500, 0.6, 3.0): 1.0,
 (5, 0.4, 500, 0.6, 4.0): 1.0,
 (5, 0.4, 500, 0.7, 2.0): 0.788,
 (5, 0.4, 500, 0.7, 3.0): 1.0,
 (5, 0.4, 500, 0.7, 4.0): 1.0,
 (5, 0.4, 500, 0.8, 2.0): 0.287,
 (5, 0.4, 500, 0.8, 3.0): 0.83,
 (5, 0.4, 500, 0.8, 4.0): 1.0,
 (5, 0.4, 500, 0.9, 2.0): 0.052,
 (5, 0.4, 500, 0.9, 3.0): 0.224,
 (5, 0.4, 500, 0.9, 4.0): 0.499,
 (5, 0.4, 1000, 0.6, 2.0): 0.992,
 (5, 0.4, 1000, 0.6, 3.0): 1.0,
 (5, 0.4, 1000, 0.6, 4.0): 1.0,
 (5, 0.4, 1000, 0.7, 2.0): 0.996,
 (5, 0.4, 1000, 0.7, 3.0): 1.0,
 (5, 0.4, 1000, 0.7, 4.0): 1.0,
 (5, 0.4, 1000, 0.8, 2.0): 0.544,
 (5, 0.4, 1000, 0.8, 3.0): 0.997,
 (5, 0.4, 1000, 0.8, 4.0): 1.0,
 (5, 0.4, 1000, 0.9, 2.0): 89.0,
 (5, 0.4, 1000, 0.9, 3.0): 0.298,
 (5, 0.4, 1000, 0.9, 4.0): 0.662,
 (5, 0.5, 100, 0.6, 2.0): 0.22,
 (5, 0.5, 100, 0.6, 3.0): 0.478,
 (5, 0.5, 100, 0.6, 4.0): 0.921,
 (5, 0.5, 100, 0.7, 2.0): 0.273,
 (5, 0.5, 100, 0.7, 3.0): 0.543,
 (5, 0.5, 100, 0.7, 4.0): 0.932,
 (5, 0.5, 100, 0.8, 2.0): 0.133,
 (5, 0.5, 100, 0.8, 3.0): 0.337,
 (5, 0.5, 100, 0.8, 4.0): 0.706,
 (5, 0.5, 100, 0.9, 2.0): 0.027,
 (5, 0.5, 100, 0.9, 3.0): 0.14,
 (5, 0.5, 100, 0.9, 4.0): 0.324,
 (5, 0.5, 300, 0.6, 2.0): 0.415,
 (5, 0.5, 300, 0.6, 3.0): 0.941,
 (5, 0.5, 300, 0.6, 4.0): 1.0,
 (5, 0.5, 300, 0.7, 2.0): 0.5,
 (5, 0.5, 300, 0.7, 3.0): 0.953,
 (5, 0.5, 300, 0.7, 4.0): 1.0,
 (5, 0.5, 300, 0.8, 2.0): 0.215,
 (5, 0.5, 300, 0.8, 3.0): 0.645,
 (5, 0.5, 300, 0.8, 4.0): 0.993,
 (5, 0.5, 300, 0.9, 2.0): 0.064,
 (5, 0.5, 300, 0.9, 3.0): 0.225,
 (5, 0.5, 300, 0.9, 4.0): 0.489,
 (5, 0.5, 500, 0.6, 2.0): 0.679,
 (5, 0.5, 500, 0.6, 3.0): 0.999,
 (5, 0.5, 500, 0.6, 4.0): 1.0,
 (5, 0.5, 500, 0.7, 2.0): 0.74,
 (5, 0.5, 500, 0.7, 3.0): 0.999,
 (5, 0.5, 500, 0.7, 4.0): 1.0,
 (5, 0.5, 500, 0.8, 2.0): 0.329,
 (5, 0.5, 500, 0.8, 3.0): 0.865,
 (5, 0.5, 500, 0.8, 4.0): 1.0,
 (5, 0.5, 500, 0.9, 2.0): 0.101,
 (5, 0.5, 500, 0.9, 3.0): 0.294,
 (5, 0.5, 500, 0.9, 4.0): 0.613,
 (5, 0.5, 1000, 0.6, 2.0): 0.984,
 (5, 0.5, 1000, 0.6, 3.0): 1.0,
 (5, 0.5, 1000, 0.6, 4.0): 1.0,
 (5, 0.5, 1000, 0.7, 2.0): 0.988,
 (5, 0.5, 1000, 0.7, 3.0): 1.0,
 (5, 0.5, 1000, 0.7, 4.0): 1.0,
 (5, 0.5, 1000, 0.8, 2.0): 0.618,
 (5, 0.5, 1000, 0.8, 3.0): 0.998,
 (5, 0.5, 1000, 0.8, 4.0): 1.0,
 (5, 0.5, 1000, 0.9, 2.0): 0.158,
 (5, 0.5, 1000, 0.9, 3.0): 0.408,
 (5, 0.5, 1000, 0.9, 4.0): 0.852,
 (5, 0.6, 100, 0.6, 2.0): 0.229,
 (5, 0.6, 100, 0.6, 3.0): 0.487,
 (5, 0.6, 100, 0.6, 4.0): 0.914,
 (5, 0.6, 100, 0.7, 2.0): 0.273,
 (5, 0.6, 100, 0.7, 3.0): 0.541,
 (5, 0.6, 100, 0.7, 4.0): 0.922,
 (5, 0.6, 100, 0.8, 2.0): 0.162,
 (5, 0.6, 100, 0.8, 3.0): 0.377,
 (5, 0.6, 100, 0.8, 4.0): 0.742,
 (5, 0.6, 100, 0.9, 2.0): 0.054,
 (5, 0.6, 100, 0.9, 3.0): 0.188,
 (5, 0.6, 100, 0.9, 4.0): 0.387,
 (5, 0.6, 300, 0.6, 2.0): 0.431,
 (5, 0.6, 300, 0.6, 3.0): 0.919,
 (5, 0.6, 300, 0.6, 4.0): 1.0,
 (5, 0.6, 300, 0.7, 2.0): 0.491,
 (5, 0.6, 300, 0.7, 3.0): 0.931,
 (5, 0.6, 300, 0.7, 4.0): 1.0,
 (5, 0.6, 300, 0.8, 2.0): 0.27,
 (5, 0.6, 300, 0.8, 3.0): 0.702,
 (5, 0.6, 300, 0.8, 4.0): 0.994,
 (5, 0.6, 300, 0.9, 2.0): 0.116,
 (5, 0.6, 300, 0.9, 3.0): 0.305,
 (5, 0.6, 300, 0.9, 4.0): 0.626,
 (5, 0.6, 500, 0.6, 2.0): 0.658,
 (5, 0.6, 500, 0.6, 3.0): 0.995,
 (5, 0.6, 500, 0.6, 4.0): 1.0,
 (5, 0.6, 500, 0.7, 2.0): 0.717,
 (5, 0.6, 500, 0.7, 3.0): 0.996,
 (5, 0.6, 500, 0.7, 4.0): 1.0,
 (5, 0.6, 500, 0.8, 2.0): 0.406,
 (5, 0.6, 500, 0.8, 3.0): 0.899,
 (5, 0.6, 500, 0.8, 4.0): 1.0,
 (5, 0.6, 500, 0.9, 2.0): 0.163,
 (5, 0.6, 500, 0.9, 3.0): 0.389,
 (5, 0.6, 500, 0.9, 4.0): 0.788,
 (5, 0.6, 1000, 0.6, 2.0): 0.969,
 (5, 0.6, 1000, 0.6, 3.0): 1.0,
 (5, 0.6, 1000, 0.6, 4.0): 1.0,
 (5, 0.6, 1000, 0.7, 2.0): 0.971,
 (5, 0.6, 1000, 0.7, 3.0): 1.0,
 (5, 0.6, 1000, 0.7, 4.0): 1.0,
 (5, 0.6, 1000, 0.8, 2.0): 0.712,
 (5, 0.6, 1000, 0.8, 3.0): 0.998,
 (5, 0.6, 1000, 0.8, 4.0): 1.0,
 (5, 0.6, 1000, 0.9, 2.0): 0.25,
 (5, 0.6, 1000, 0.9, 3.0): 0.549,
 (5, 0.6, 1000, 0.9, 4.0): 0.97,
 (6, 0.4, 100, 0.6, 2.0): 0.144,
 (6, 0.4, 100, 0.6, 3.0): 0.186,
 (6, 0.4, 100, 0.6, 4.0): 0.282,
 (6, 0.4, 100, 0.7, 2.0): 0.199,
 (6, 0.4, 100, 0.7, 3.0): 0.29,
 (6, 0.4, 100, 0.7, 4.0): 0.43,
 (6, 0.4, 100, 0.8, 2.0): 0.168,
 (6, 0.4, 100, 0.8, 3.0): 0.315,
 (6, 0.4, 100, 0.8, 4.0): 0.476,
 (6, 0.4, 100, 0.9, 2.0): 0.066,
 (6, 0.4, 100, 0.9, 3.0): 0.183,
 (6, 0.4, 100, 0.9, 4.0): 0.351,
 (6, 0.4, 300, 0.6, 2.0): 0.118,
 (6, 0.4, 300, 0.6, 3.0): 0.188,
 (6, 0.4, 300, 0.6, 4.0): 0.283,
 (6, 0.4, 300, 0.7, 2.0): 0.213,
 (6, 0.4, 300, 0.7, 3.0): 0.328,
 (6, 0.4, 300, 0.7, 4.0): 0.467,
 (6, 0.4, 300, 0.8, 2.0): 0.204,
 (6, 0.4, 300, 0.8, 3.0): 0.383,
 (6, 0.4, 300, 0.8, 4.0): 0.549,
 (6, 0.4, 300, 0.9, 2.0): 0.09,
 (6, 0.4, 300, 0.9, 3.0): 0.252,
 (6, 0.4, 300, 0.9, 4.0): 0.443,
 (6, 0.4, 500, 0.6, 2.0): 0.12,
 (6, 0.4, 500, 0.6, 3.0): 0.176,
 (6, 0.4, 500, 0.6, 4.0): 0.294,
 (6, 0.4, 500, 0.7, 2.0): 0.223,
 (6, 0.4, 500, 0.7, 3.0): 0.362,
 (6, 0.4, 500, 0.7, 4.0): 0.497,
 (6, 0.4, 500, 0.8, 2.0): 0.238,
 (6, 0.4, 500, 0.8, 3.0): 0.424,
 (6, 0.4, 500, 0.8, 4.0): 0.588,
 (6, 0.4, 500, 0.9, 2.0): 0.127,
 (6, 0.4, 500, 0.9, 3.0): 0.306,
 (6, 0.4, 500, 0.9, 4.0): 0.499,
 (6, 0.4, 1000, 0.6, 2.0): 0.128,
 (6, 0.4, 1000, 0.6, 3.0): 0.193,
 (6, 0.4, 1000, 0.6, 4.0): 0.3,
 (6, 0.4, 1000, 0.7, 2.0): 0.244,
 (6, 0.4, 1000, 0.7, 3.0): 0.391,
 (6, 0.4, 1000, 0.7, 4.0): 0.531,
 (6, 0.4, 1000, 0.8, 2.0): 0.287,
 (6, 0.4, 1000, 0.8, 3.0): 0.483,
 (6, 0.4, 1000, 0.8, 4.0): 0.631,
 (6, 0.4, 1000, 0.9, 2.0): 0.167,
 (6, 0.4, 1000, 0.9, 3.0): 0.37,
 (6, 0.4, 1000, 0.9, 4.0): 0.568,
 (6, 0.5, 100, 0.6, 2.0): 0.14,
 (6, 0.5, 100, 0.6, 3.0): 0.184,
 (6, 0.5, 100, 0.6, 4.0): 0.283,
 (6, 0.5, 100, 0.7, 2.0): 0.185,
 (6, 0.5, 100, 0.7, 3.0): 0.273,
 (6, 0.5, 100, 0.7, 4.0): 0.417,
 (6, 0.5, 100, 0.8, 2.0): 0.173,
 (6, 0.5, 100, 0.8, 3.0): 0.319,
 (6, 0.5, 100, 0.8, 4.0): 0.464,
 (6, 0.5, 100, 0.9, 2.0): 0.087,
 (6, 0.5, 100, 0.9, 3.0): 0.213,
 (6, 0.5, 100, 0.9, 4.0): 0.37,
 (6, 0.5, 300, 0.6, 2.0): 0.118,
 (6, 0.5, 300, 0.6, 3.0): 0.181,
 (6, 0.5, 300, 0.6, 4.0): 0.28,
 (6, 0.5, 300, 0.7, 2.0): 0.196,
 (6, 0.5, 300, 0.7, 3.0): 0.309,
 (6, 0.5, 300, 0.7, 4.0): 0.453,
 (6, 0.5, 300, 0.8, 2.0): 0.211,
 (6, 0.5, 300, 0.8, 3.0): 0.385,
 (6, 0.5, 300, 0.8, 4.0): 0.545,
 (6, 0.5, 300, 0.9, 2.0): 0.128,
 (6, 0.5, 300, 0.9, 3.0): 0.3,
 (6, 0.5, 300, 0.9, 4.0): 0.472,
 (6, 0.5, 500, 0.6, 2.0): 0.116,
 (6, 0.5, 500, 0.6, 3.0): 0.175,
 (6, 0.5, 500, 0.6, 4.0): 0.292,
 (6, 0.5, 500, 0.7, 2.0): 0.211,
 (6, 0.5, 500, 0.7, 3.0): 0.347,
 (6, 0.5, 500, 0.7, 4.0): 0.487,
 (6, 0.5, 500, 0.8, 2.0): 0.249,
 (6, 0.5, 500, 0.8, 3.0): 0.429,
 (6, 0.5, 500, 0.8, 4.0): 0.59,
 (6, 0.5, 500, 0.9, 2.0): 0.168,
 (6, 0.5, 500, 0.9, 3.0): 0.35,
 (6, 0.5, 500, 0.9, 4.0): 0.53,
 (6, 0.5, 1000, 0.6, 2.0): 0.126,
 (6, 0.5, 1000, 0.6, 3.0): 0.187,
 (6, 0.5, 1000, 0.6, 4.0): 0.296,
 (6, 0.5, 1000, 0.7, 2.0): 0.229,
 (6, 0.5, 1000, 0.7, 3.0): 0.374,
 (6, 0.5, 1000, 0.7, 4.0): 0.516,
 (6, 0.5, 1000, 0.8, 2.0): 0.297,
 (6, 0.5, 1000, 0.8, 3.0): 0.492,
 (6, 0.5, 1000, 0.8, 4.0): 0.633,
 (6, 0.5, 1000, 0.9, 2.0): 0.228,
 (6, 0.5, 1000, 0.9, 3.0): 0.429,
 (6, 0.5, 1000, 0.9, 4.0): 0.597,
 (6, 0.6, 100, 0.6, 2.0): 0.148,
 (6, 0.6, 100, 0.6, 3.0): 0.188,
 (6, 0.6, 100, 0.6, 4.0): 0.298,
 (6, 0.6, 100, 0.7, 2.0): 0.188,
 (6, 0.6, 100, 0.7, 3.0): 0.276,
 (6, 0.6, 100, 0.7, 4.0): 0.413,
 (6, 0.6, 100, 0.8, 2.0): 0.188,
 (6, 0.6, 100, 0.8, 3.0): 0.33,
 (6, 0.6, 100, 0.8, 4.0): 0.473,
 (6, 0.6, 100, 0.9, 2.0): 0.12,
 (6, 0.6, 100, 0.9, 3.0): 0.251,
 (6, 0.6, 100, 0.9, 4.0): 0.398,
 (6, 0.6, 300, 0.6, 2.0): 0.126,
 (6, 0.6, 300, 0.6, 3.0): 0.192,
 (6, 0.6, 300, 0.6, 4.0): 0.283,
 (6, 0.6, 300, 0.7, 2.0): 0.195,
 (6, 0.6, 300, 0.7, 3.0): 0.312,
 (6, 0.6, 300, 0.7, 4.0): 0.452,
 (6, 0.6, 300, 0.8, 2.0): 0.231,
 (6, 0.6, 300, 0.8, 3.0): 0.396,
 (6, 0.6, 300, 0.8, 4.0): 0.558,
 (6, 0.6, 300, 0.9, 2.0): 0.176,
 (6, 0.6, 300, 0.9, 3.0): 0.348,
 (6, 0.6, 300, 0.9, 4.0): 0.516,
 (6, 0.6, 500, 0.6, 2.0): 0.122,
 (6, 0.6, 500, 0.6, 3.0): 0.179,
 (6, 0.6, 500, 0.6, 4.0): 0.3,
 (6, 0.6, 500, 0.7, 2.0): 0.214,
 (6, 0.6, 500, 0.7, 3.0): 0.343,
 (6, 0.6, 500, 0.7, 4.0): 0.485,
 (6, 0.6, 500, 0.8, 2.0): 0.271,
 (6, 0.6, 500, 0.8, 3.0): 0.447,
 (6, 0.6, 500, 0.8, 4.0): 0.602,
 (6, 0.6, 500, 0.9, 2.0): 0.224,
 (6, 0.6, 500, 0.9, 3.0): 0.408,
 (6, 0.6, 500, 0.9, 4.0): 0.566,
 (6, 0.6, 1000, 0.6, 2.0): 0.128,
 (6, 0.6, 1000, 0.6, 3.0): 0.19,
 (6, 0.6, 1000, 0.6, 4.0): 0.299,
 (6, 0.6, 1000, 0.7, 2.0): 0.224,
 (6, 0.6, 1000, 0.7, 3.0): 0.372,
 (6, 0.6, 1000, 0.7, 4.0): 0.51,
 (6, 0.6, 1000, 0.8, 2.0): 0.325,
 (6, 0.6, 1000, 0.8, 3.0): 0.506,
 (6, 0.6, 1000, 0.8, 4.0): 0.653,
 (6, 0.6, 1000, 0.9, 2.0): 0.302,
 (6, 0.6, 1000, 0.9, 3.0): 0.495,
 (6, 0.6, 1000, 0.9, 4.0): 0.645,
 (7, 0.4, 100, 0.6, 1.0): 0.273,
 (7, 0.4, 100, 0.6, 2.0): 0.448,
 (7, 0.4, 100, 0.6, 3.0): 0.381,
 (7, 0.4, 100, 0.7, 1.0): 0.391,
 (7, 0.4, 100, 0.7, 2.0): 0.62,
 (7, 0.4, 100, 0.7, 3.0): 0.57,
 (7, 0.4, 100, 0.8, 1.0): 0.199,
 (7, 0.4, 100, 0.8, 2.0): 0.364,
 (7, 0.4, 100, 0.8, 3.0): 0.367,
 (7, 0.4, 100, 0.9, 1.0): 0.071,
 (7, 0.4, 100, 0.9, 2.0): 0.14,
 (7, 0.4, 100, 0.9, 3.0): 0.172,
 (7, 0.4, 300, 0.6, 1.0): 0.733,
 (7, 0.4, 300, 0.6, 2.0): 0.99,
 (7, 0.4, 300, 0.6, 3.0): 0.985,
 (7, 0.4, 300, 0.7, 1.0): 0.819,
 (7, 0.4, 300, 0.7, 2.0): 0.995,
 (7, 0.4, 300, 0.7, 3.0): 0.994,
 (7, 0.4, 300, 0.8, 1.0): 0.362,
 (7, 0.4, 300, 0.8, 2.0): 0.744,
 (7, 0.4, 300, 0.8, 3.0): 0.734,
 (7, 0.4, 300, 0.9, 1.0): 0.073,
 (7, 0.4, 300, 0.9, 2.0): 0.199,
 (7, 0.4, 300, 0.9, 3.0): 0.246,
 (7, 0.4, 500, 0.6, 1.0): 0.966,
 (7, 0.4, 500, 0.6, 2.0): 1.0,
 (7, 0.4, 500, 0.6, 3.0): 1.0,
 (7, 0.4, 500, 0.7, 1.0): 0.98,
 (7, 0.4, 500, 0.7, 2.0): 1.0,
 (7, 0.4, 500, 0.7, 3.0): 1.0,
 (7, 0.4, 500, 0.8, 1.0): 0.553,
 (7, 0.4, 500, 0.8, 2.0): 0.952,
 (7, 0.4, 500, 0.8, 3.0): 0.941,
 (7, 0.4, 500, 0.9, 1.0): 0.087,
 (7, 0.4, 500, 0.9, 2.0): 0.271,
 (7, 0.4, 500, 0.9, 3.0): 0.316,
 (7, 0.4, 1000, 0.6, 1.0): 1.0,
 (7, 0.4, 1000, 0.6, 2.0): 1.0,
 (7, 0.4, 1000, 0.6, 3.0): 1.0,
 (7, 0.4, 1000, 0.7, 1.0): 1.0,
 (7, 0.4, 1000, 0.7, 2.0): 1.0,
 (7, 0.4, 1000, 0.7, 3.0): 1.0,
 (7, 0.4, 1000, 0.8, 1.0): 0.929,
 (7, 0.4, 1000, 0.8, 2.0): 1.0,
 (7, 0.4, 1000, 0.8, 3.0): 1.0,
 (7, 0.4, 1000, 0.9, 1.0): 0.114,
 (7, 0.4, 1000, 0.9, 2.0): 0.354,
 (7, 0.4, 1000, 0.9, 3.0): 0.412,
 (7, 0.5, 100, 0.6, 1.0): 0.254,
 (7, 0.5, 100, 0.6, 2.0): 0.425,
 (7, 0.5, 100, 0.6, 3.0): 0.366,
 (7, 0.5, 100, 0.7, 1.0): 0.343,
 (7, 0.5, 100, 0.7, 2.0): 0.551,
 (7, 0.5, 100, 0.7, 3.0): 0.506,
 (7, 0.5, 100, 0.8, 1.0): 0.198,
 (7, 0.5, 100, 0.8, 2.0): 0.348,
 (7, 0.5, 100, 0.8, 3.0): 0.361,
 (7, 0.5, 100, 0.9, 1.0): 0.092,
 (7, 0.5, 100, 0.9, 2.0): 0.186,
 (7, 0.5, 100, 0.9, 3.0): 0.209,
 (7, 0.5, 300, 0.6, 1.0): 0.663,
 (7, 0.5, 300, 0.6, 2.0): 0.972,
 (7, 0.5, 300, 0.6, 3.0): 0.962,
 (7, 0.5, 300, 0.7, 1.0): 0.72,
 (7, 0.5, 300, 0.7, 2.0): 0.977,
 (7, 0.5, 300, 0.7, 3.0): 0.978,
 (7, 0.5, 300, 0.8, 1.0): 0.345,
 (7, 0.5, 300, 0.8, 2.0): 0.714,
 (7, 0.5, 300, 0.8, 3.0): 0.702,
 (7, 0.5, 300, 0.9, 1.0): 0.104,
 (7, 0.5, 300, 0.9, 2.0): 0.25,
 (7, 0.5, 300, 0.9, 3.0): 0.303,
 (7, 0.5, 500, 0.6, 1.0): 0.932,
 (7, 0.5, 500, 0.6, 2.0): 0.999,
 (7, 0.5, 500, 0.6, 3.0): 1.0,
 (7, 0.5, 500, 0.7, 1.0): 0.948,
 (7, 0.5, 500, 0.7, 2.0): 1.0,
 (7, 0.5, 500, 0.7, 3.0): 1.0,
 (7, 0.5, 500, 0.8, 1.0): 0.533,
 (7, 0.5, 500, 0.8, 2.0): 0.934,
 (7, 0.5, 500, 0.8, 3.0): 0.917,
 (7, 0.5, 500, 0.9, 1.0): 0.12,
 (7, 0.5, 500, 0.9, 2.0): 0.33,
 (7, 0.5, 500, 0.9, 3.0): 0.369,
 (7, 0.5, 1000, 0.6, 1.0): 1.0,
 (7, 0.5, 1000, 0.6, 2.0): 1.0,
 (7, 0.5, 1000, 0.6, 3.0): 1.0,
 (7, 0.5, 1000, 0.7, 1.0): 1.0,
 (7, 0.5, 1000, 0.7, 2.0): 1.0,
 (7, 0.5, 1000, 0.7, 3.0): 1.0,
 (7, 0.5, 1000, 0.8, 1.0): 0.893,
 (7, 0.5, 1000, 0.8, 2.0): 1.0,
 (7, 0.5, 1000, 0.8, 3.0): 1.0,
 (7, 0.5, 1000, 0.9, 1.0): 0.169,
 (7, 0.5, 1000, 0.9, 2.0): 0.432,
 (7, 0.5, 1000, 0.9, 3.0): 0.488,
 (7, 0.6, 100, 0.6, 1.0): 0.266,
 (7, 0.6, 100, 0.6, 2.0): 0.437,
 (7, 0.6, 100, 0.6, 3.0): 0.399,
 (7, 0.6, 100, 0.7, 1.0): 0.334,
 (7, 0.6, 100, 0.7, 2.0): 0.53,
 (7, 0.6, 100, 0.7, 3.0): 0.498,
 (7, 0.6, 100, 0.8, 1.0): 0.208,
 (7, 0.6, 100, 0.8, 2.0): 0.368,
 (7, 0.6, 100, 0.8, 3.0): 0.388,
 (7, 0.6, 100, 0.9, 1.0): 0.118,
 (7, 0.6, 100, 0.9, 2.0): 0.228,
 (7, 0.6, 100, 0.9, 3.0): 0.252,
 (7, 0.6, 300, 0.6, 1.0): 0.646,
 (7, 0.6, 300, 0.6, 2.0): 0.946,
 (7, 0.6, 300, 0.6, 3.0): 0.937,
 (7, 0.6, 300, 0.7, 1.0): 0.663,
 (7, 0.6, 300, 0.7, 2.0): 0.942,
 (7, 0.6, 300, 0.7, 3.0): 0.95,
 (7, 0.6, 300, 0.8, 1.0): 0.368,
 (7, 0.6, 300, 0.8, 2.0): 0.709,
 (7, 0.6, 300, 0.8, 3.0): 0.697,
 (7, 0.6, 300, 0.9, 1.0): 0.142,
 (7, 0.6, 300, 0.9, 2.0): 0.317,
 (7, 0.6, 300, 0.9, 3.0): 0.372,
 (7, 0.6, 500, 0.6, 1.0): 0.893,
 (7, 0.6, 500, 0.6, 2.0): 0.998,
 (7, 0.6, 500, 0.6, 3.0): 0.997,
 (7, 0.6, 500, 0.7, 1.0): 0.902,
 (7, 0.6, 500, 0.7, 2.0): 0.997,
 (7, 0.6, 500, 0.7, 3.0): 0.997,
 (7, 0.6, 500, 0.8, 1.0): 0.525,
 (7, 0.6, 500, 0.8, 2.0): 0.906,
 (7, 0.6, 500, 0.8, 3.0): 0.895,
 (7, 0.6, 500, 0.9, 1.0): 0.167,
 (7, 0.6, 500, 0.9, 2.0): 0.406,
 (7, 0.6, 500, 0.9, 3.0): 0.439,
 (7, 0.6, 1000, 0.6, 1.0): 1.0,
 (7, 0.6, 1000, 0.6, 2.0): 1.0,
 (7, 0.6, 1000, 0.6, 3.0): 1.0,
 (7, 0.6, 1000, 0.7, 1.0): 0.998,
 (7, 0.6, 1000, 0.7, 2.0): 1.0,
 (7, 0.6, 1000, 0.7, 3.0): 1.0,
 (7, 0.6, 1000, 0.8, 1.0): 0.852,
 (7, 0.6, 1000, 0.8, 2.0): 0.997,
 (7, 0.6, 1000, 0.8, 3.0): 0.998,
 (7, 0.6, 1000, 0.9, 1.0): 0.227,
 (7, 0.6, 1000, 0.9, 2.0): 0.514,
 (7, 0.6, 1000, 0.9, 3.0): 0.564,
 (8, 0.4, 100, 0.6, 1.0): 0.09,
 (8, 0.4, 100, 0.6, 2.0): 0.059,
 (8, 0.4, 100, 0.6, 3.0): 0.038,
 (8, 0.4, 100, 0.7, 1.0): 0.141,
 (8, 0.4, 100, 0.7, 2.0): 0.093,
 (8, 0.4, 100, 0.7, 3.0): 0.072,
 (8, 0.4, 100, 0.8, 1.0): 0.145,
 (8, 0.4, 100, 0.8, 2.0): 0.124,
 (8, 0.4, 100, 0.8, 3.0): 0.112,
 (8, 0.4, 100, 0.9, 1.0): 0.131,
 (8, 0.4, 100, 0.9, 2.0): 0.15,
 (8, 0.4, 100, 0.9, 3.0): 0.155,
 (8, 0.4, 300, 0.6, 1.0): 0.078,
 (8, 0.4, 300, 0.6, 2.0): 0.037,
 (8, 0.4, 300, 0.6, 3.0): 0.023,
 (8, 0.4, 300, 0.7, 1.0): 0.114,
 (8, 0.4, 300, 0.7, 2.0): 0.07,
 (8, 0.4, 300, 0.7, 3.0): 0.05,
 (8, 0.4, 300, 0.8, 1.0): 0.116,
 (8, 0.4, 300, 0.8, 2.0): 0.097,
 (8, 0.4, 300, 0.8, 3.0): 0.082,
 (8, 0.4, 300, 0.9, 1.0): 0.104,
 (8, 0.4, 300, 0.9, 2.0): 0.126,
 (8, 0.4, 300, 0.9, 3.0): 0.135,
 (8, 0.4, 500, 0.6, 1.0): 0.065,
 (8, 0.4, 500, 0.6, 2.0): 0.034,
 (8, 0.4, 500, 0.6, 3.0): 0.017,
 (8, 0.4, 500, 0.7, 1.0): 0.104,
 (8, 0.4, 500, 0.7, 2.0): 0.061,
 (8, 0.4, 500, 0.7, 3.0): 0.036,
 (8, 0.4, 500, 0.8, 1.0): 0.115,
 (8, 0.4, 500, 0.8, 2.0): 0.089,
 (8, 0.4, 500, 0.8, 3.0): 0.07,
 (8, 0.4, 500, 0.9, 1.0): 0.097,
 (8, 0.4, 500, 0.9, 2.0): 0.124,
 (8, 0.4, 500, 0.9, 3.0): 0.124,
 (8, 0.4, 1000, 0.6, 1.0): 0.058,
 (8, 0.4, 1000, 0.6, 2.0): 0.025,
 (8, 0.4, 1000, 0.6, 3.0): 0.014,
 (8, 0.4, 1000, 0.7, 1.0): 0.091,
 (8, 0.4, 1000, 0.7, 2.0): 0.053,
 (8, 0.4, 1000, 0.7, 3.0): 0.036,
 (8, 0.4, 1000, 0.8, 1.0): 0.101,
 (8, 0.4, 1000, 0.8, 2.0): 0.085,
 (8, 0.4, 1000, 0.8, 3.0): 0.063,
 (8, 0.4, 1000, 0.9, 1.0): 0.092,
 (8, 0.4, 1000, 0.9, 2.0): 0.115,
 (8, 0.4, 1000, 0.9, 3.0): 0.122,
 (8, 0.5, 100, 0.6, 1.0): 0.092,
 (8, 0.5, 100, 0.6, 2.0): 0.063,
 (8, 0.5, 100, 0.6, 3.0): 0.042,
 (8, 0.5, 100, 0.7, 1.0): 0.131,
 (8, 0.5, 100, 0.7, 2.0): 0.091,
 (8, 0.5, 100, 0.7, 3.0): 0.065,
 (8, 0.5, 100, 0.8, 1.0): 0.139,
 (8, 0.5, 100, 0.8, 2.0): 0.122,
 (8, 0.5, 100, 0.8, 3.0): 0.108,
 (8, 0.5, 100, 0.9, 1.0): 0.131,
 (8, 0.5, 100, 0.9, 2.0): 0.153,
 (8, 0.5, 100, 0.9, 3.0): 0.155,
 (8, 0.5, 300, 0.6, 1.0): 0.076,
 (8, 0.5, 300, 0.6, 2.0): 0.038,
 (8, 0.5, 300, 0.6, 3.0): 0.025,
 (8, 0.5, 300, 0.7, 1.0): 0.104,
 (8, 0.5, 300, 0.7, 2.0): 0.059,
 (8, 0.5, 300, 0.7, 3.0): 0.045,
 (8, 0.5, 300, 0.8, 1.0): 0.103,
 (8, 0.5, 300, 0.8, 2.0): 0.089,
 (8, 0.5, 300, 0.8, 3.0): 0.076,
 (8, 0.5, 300, 0.9, 1.0): 0.102,
 (8, 0.5, 300, 0.9, 2.0): 0.123,
 (8, 0.5, 300, 0.9, 3.0): 0.132,
 (8, 0.5, 500, 0.6, 1.0): 0.066,
 (8, 0.5, 500, 0.6, 2.0): 0.034,
 (8, 0.5, 500, 0.6, 3.0): 0.019,
 (8, 0.5, 500, 0.7, 1.0): 0.093,
 (8, 0.5, 500, 0.7, 2.0): 0.053,
 (8, 0.5, 500, 0.7, 3.0): 0.03,
 (8, 0.5, 500, 0.8, 1.0): 0.104,
 (8, 0.5, 500, 0.8, 2.0): 0.078,
 (8, 0.5, 500, 0.8, 3.0): 0.063,
 (8, 0.5, 500, 0.9, 1.0): 0.094,
 (8, 0.5, 500, 0.9, 2.0): 0.122,
 (8, 0.5, 500, 0.9, 3.0): 0.122,
 (8, 0.5, 1000, 0.6, 1.0): 0.055,
 (8, 0.5, 1000, 0.6, 2.0): 0.025,
 (8, 0.5, 1000, 0.6, 3.0): 0.015,
 (8, 0.5, 1000, 0.7, 1.0): 0.077,
 (8, 0.5, 1000, 0.7, 2.0): 0.042,
 (8, 0.5, 1000, 0.7, 3.0): 0.028,
 (8, 0.5, 1000, 0.8, 1.0): 0.09,
 (8, 0.5, 1000, 0.8, 2.0): 0.074,
 (8, 0.5, 1000, 0.8, 3.0): 0.056,
 (8, 0.5, 1000, 0.9, 1.0): 0.09,
 (8, 0.5, 1000, 0.9, 2.0): 0.107,
 (8, 0.5, 1000, 0.9, 3.0): 0.119,
 (8, 0.6, 100, 0.6, 1.0): 0.113,
 (8, 0.6, 100, 0.6, 2.0): 0.079,
 (8, 0.6, 100, 0.6, 3.0): 0.058,
 (8, 0.6, 100, 0.7, 1.0): 0.138,
 (8, 0.6, 100, 0.7, 2.0): 0.102,
 (8, 0.6, 100, 0.7, 3.0): 0.078,
 (8, 0.6, 100, 0.8, 1.0): 0.148,
 (8, 0.6, 100, 0.8, 2.0): 0.131,
 (8, 0.6, 100, 0.8, 3.0): 0.122,
 (8, 0.6, 100, 0.9, 1.0): 0.146,
 (8, 0.6, 100, 0.9, 2.0): 0.166,
 (8, 0.6, 100, 0.9, 3.0): 0.17,
 (8, 0.6, 300, 0.6, 1.0): 0.09,
 (8, 0.6, 300, 0.6, 2.0): 0.052,
 (8, 0.6, 300, 0.6, 3.0): 0.038,
 (8, 0.6, 300, 0.7, 1.0): 0.106,
 (8, 0.6, 300, 0.7, 2.0): 0.071,
 (8, 0.6, 300, 0.7, 3.0): 0.052,
 (8, 0.6, 300, 0.8, 1.0): 0.109,
 (8, 0.6, 300, 0.8, 2.0): 0.092,
 (8, 0.6, 300, 0.8, 3.0): 0.077,
 (8, 0.6, 300, 0.9, 1.0): 0.111,
 (8, 0.6, 300, 0.9, 2.0): 0.131,
 (8, 0.6, 300, 0.9, 3.0): 0.142,
 (8, 0.6, 500, 0.6, 1.0): 0.075,
 (8, 0.6, 500, 0.6, 2.0): 0.042,
 (8, 0.6, 500, 0.6, 3.0): 0.028,
 (8, 0.6, 500, 0.7, 1.0): 0.091,
 (8, 0.6, 500, 0.7, 2.0): 0.055,
 (8, 0.6, 500, 0.7, 3.0): 0.034,
 (8, 0.6, 500, 0.8, 1.0): 0.106,
 (8, 0.6, 500, 0.8, 2.0): 0.084,
 (8, 0.6, 500, 0.8, 3.0): 0.064,
 (8, 0.6, 500, 0.9, 1.0): 0.106,
 (8, 0.6, 500, 0.9, 2.0): 0.128,
 (8, 0.6, 500, 0.9, 3.0): 0.127,
 (8, 0.6, 1000, 0.6, 1.0): 0.06,
 (8, 0.6, 1000, 0.6, 2.0): 0.034,
 (8, 0.6, 1000, 0.6, 3.0): 0.022,
 (8, 0.6, 1000, 0.7, 1.0): 0.075,
 (8, 0.6, 1000, 0.7, 2.0): 0.046,
 (8, 0.6, 1000, 0.7, 3.0): 0.034,
 (8, 0.6, 1000, 0.8, 1.0): 0.092,
 (8, 0.6, 1000, 0.8, 2.0): 0.072,
 (8, 0.6, 1000, 0.8, 3.0): 0.057,
 (8, 0.6, 1000, 0.9, 1.0): 0.098,
 (8, 0.6, 1000, 0.9, 2.0): 0.115,
 (8, 0.6, 1000, 0.9, 3.0): 0.125}
