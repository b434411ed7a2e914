"""Bayesian toolkit for epidemic surveillance with biased testing data.

Debiases targeted test counts against a randomized survey via cut posteriors,
then melds the debiased prevalence into downstream transmission models
(stochastic SIR, space-time regression, renewal equation).
"""

__version__ = "0.1.0"
