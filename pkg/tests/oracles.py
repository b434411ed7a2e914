"""Independent brute-force oracles used to freeze expected values in tests.

Everything here is written for correctness, not speed: exact integer
combinatorics (math.comb, fractions.Fraction) and direct enumeration, with
no code shared with the package under test.
"""
import math
from fractions import Fraction

import numpy as np


def sigmoid(x):
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def hyper_pmf_fraction(u_plus, u_total, infected, popsize):
    """Exact rational hypergeometric pmf."""
    if u_plus > infected or (u_total - u_plus) > (popsize - infected):
        return Fraction(0)
    return Fraction(
        math.comb(infected, u_plus) * math.comb(popsize - infected, u_total - u_plus),
        math.comb(popsize, u_total),
    )


def binom_pmf(k, n, p):
    if k < 0 or k > n:
        return 0.0
    return math.comb(n, k) * p ** k * (1.0 - p) ** (n - k)


def targeted_pmf(n, n_total, infected, popsize, delta, nu):
    """Two-binomial targeted pmf by direct products."""
    p1 = sigmoid(nu + delta)
    p0 = sigmoid(nu)
    return binom_pmf(n, infected, p1) * binom_pmf(n_total - n, popsize - infected, p0)


def survey_posterior_oracle(u_plus, u_total, popsize):
    """Exact-rational flat-prior posterior over the whole lattice."""
    pmfs = [hyper_pmf_fraction(u_plus, u_total, i, popsize) for i in range(popsize + 1)]
    z = sum(pmfs)
    return np.array([float(p / z) for p in pmfs])


def joint_oracle(u_plus, u_total, n, n_total, popsize, delta_grid, nu, kind):
    """Dense normalized joint over the complete lattice x delta grid.

    kind "full": normalize the product of survey and targeted terms jointly.
    kind "cut": survey-only marginal for the count, targeted rows normalized
    per count (flat fallback where a row has no mass).
    """
    lat = range(popsize + 1)
    survey = np.array([float(hyper_pmf_fraction(u_plus, u_total, i, popsize))
                       for i in lat])
    tgt = np.array([[targeted_pmf(n, n_total, i, popsize, d, nu) for d in delta_grid]
                    for i in lat])
    if kind == "full":
        joint = survey[:, None] * tgt
        return joint / joint.sum()
    rows = tgt.sum(axis=1)
    cond = np.full_like(tgt, 1.0 / len(delta_grid))
    ok = rows > 0
    cond[ok] = tgt[ok] / rows[ok, None]
    spost = survey / survey.sum()
    return spost[:, None] * cond
