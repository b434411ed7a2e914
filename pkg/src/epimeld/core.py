"""Core domain types and numerical helpers shared by every inference module.

Types are frozen after construction and validated eagerly so that downstream
code can assume well-formed inputs. Numerical helpers work in log space.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Mapping

import numpy as np
from scipy import special as sp

__all__ = [
    "logit",
    "inverse_logit",
    "logsumexp",
    "InfeasibleError",
    "Geography",
    "TimeIndex",
    "SurveillancePanel",
    "Covariates",
    "GaussianSummary",
    "Grid1D",
]


class InfeasibleError(ValueError):
    """Inputs are well-formed but describe an unanswerable problem
    (e.g. a region with no surveyed week, a scenario violating its own
    constraints)."""


def logit(p):
    """Log-odds ln(p/(1-p)). Raises outside the open interval (0, 1)."""
    arr = np.asarray(p, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise ValueError(f"logit requires 0 < p < 1, got {p!r}")
    out = sp.logit(arr)
    return float(out) if arr.ndim == 0 else out


def inverse_logit(x):
    """Numerically stable sigmoid; maps +/-inf to 1/0."""
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)):
        raise ValueError("inverse_logit got NaN")
    out = sp.expit(arr)
    return float(out) if arr.ndim == 0 else out


def logsumexp(xs, axis=None):
    """Overflow-safe ln(sum(exp(xs))).

    Empty input raises; an all(-inf) slice yields -inf; NaN raises.
    """
    arr = np.asarray(xs, dtype=float)
    if arr.size == 0:
        raise ValueError("logsumexp of an empty collection")
    if np.any(np.isnan(arr)) or np.any(arr == np.inf):
        raise ValueError("logsumexp requires values in [-inf, inf)")
    out = sp.logsumexp(arr, axis=axis)
    return float(out) if axis is None else out


def _as_int(value, name):
    iv = int(value)
    if iv != value:
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return iv


@dataclass(frozen=True)
class Geography:
    """Fine units (LTLAs) nested in coarse regions, with populations and adjacency.

    Parameters
    ----------
    ltla_ids : sequence of str
        Ordered fine-unit identifiers; the adjacency matrix follows this order.
    region_of : mapping ltla -> region
    population : mapping ltla -> int (>= 1)
    adjacency : (n, n) array of {0, 1}
        Symmetric with a zero diagonal.
    """

    ltla_ids: tuple
    region_of: Mapping
    population: Mapping
    adjacency: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "ltla_ids", tuple(self.ltla_ids))
        ids = self.ltla_ids
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate LTLA identifiers")
        if not ids:
            raise ValueError("geography needs at least one LTLA")
        missing = [i for i in ids if i not in self.region_of]
        if missing:
            raise ValueError(f"LTLAs without a region: {missing}")
        pops = {}
        for i in ids:
            if i not in self.population:
                raise ValueError(f"LTLA {i!r} has no population")
            m = _as_int(self.population[i], f"population[{i!r}]")
            if m < 1:
                raise ValueError(f"population of {i!r} must be >= 1, got {m}")
            pops[i] = m
        object.__setattr__(self, "population", pops)
        adj = np.asarray(self.adjacency, dtype=float)
        n = len(ids)
        if adj.shape != (n, n):
            raise ValueError(f"adjacency must be {n}x{n}, got {adj.shape}")
        if not np.all((adj == 0.0) | (adj == 1.0)):
            raise ValueError("adjacency entries must be 0 or 1")
        if np.any(np.diag(adj) != 0.0):
            raise ValueError("adjacency diagonal must be zero")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "_index", {l: k for k, l in enumerate(ids)})

    @property
    def n_ltlas(self):
        return len(self.ltla_ids)

    @property
    def regions(self):
        """Regions in order of first appearance along ltla_ids."""
        seen = []
        for i in self.ltla_ids:
            r = self.region_of[i]
            if r not in seen:
                seen.append(r)
        return tuple(seen)

    def index(self, ltla):
        try:
            return self._index[ltla]
        except KeyError:
            raise KeyError(f"unknown LTLA {ltla!r}") from None

    def ltlas_in(self, region):
        out = tuple(i for i in self.ltla_ids if self.region_of[i] == region)
        if not out:
            raise KeyError(f"unknown region {region!r}")
        return out

    def region_population(self, region):
        return sum(self.population[i] for i in self.ltlas_in(region))

    def n_components(self):
        """Number of connected components of the adjacency graph."""
        from scipy.sparse.csgraph import connected_components

        ncomp, _ = connected_components(self.adjacency, directed=False)
        return int(ncomp)


@dataclass(frozen=True)
class TimeIndex:
    """Ordered days grouped into ordered weeks.

    Interior weeks must contain exactly 7 days; the first and last week may
    be short (reported via ``boundary_weeks``).
    """

    weeks: tuple
    days: tuple
    day_to_week: Mapping

    def __post_init__(self):
        object.__setattr__(self, "weeks", tuple(self.weeks))
        object.__setattr__(self, "days", tuple(self.days))
        if len(set(self.weeks)) != len(self.weeks) or not self.weeks:
            raise ValueError("weeks must be non-empty and unique")
        if len(set(self.days)) != len(self.days) or not self.days:
            raise ValueError("days must be non-empty and unique")
        wk_pos = {w: k for k, w in enumerate(self.weeks)}
        seq = []
        for d in self.days:
            if d not in self.day_to_week:
                raise ValueError(f"day {d!r} has no week")
            w = self.day_to_week[d]
            if w not in wk_pos:
                raise ValueError(f"day {d!r} maps to unknown week {w!r}")
            seq.append(wk_pos[w])
        if sorted(seq) != seq:
            raise ValueError("day-to-week map must be monotone in day order")
        if set(seq) != set(range(len(self.weeks))):
            raise ValueError("every week must contain at least one day")
        counts = np.bincount(seq, minlength=len(self.weeks))
        bad = [
            self.weeks[k]
            for k in range(1, len(self.weeks) - 1)
            if counts[k] != 7
        ]
        if bad:
            raise ValueError(f"interior weeks without exactly 7 days: {bad}")
        boundary = {}
        if counts[0] != 7:
            boundary[self.weeks[0]] = int(counts[0])
        if len(self.weeks) > 1 and counts[-1] != 7:
            boundary[self.weeks[-1]] = int(counts[-1])
        object.__setattr__(self, "boundary_weeks", boundary)

    @classmethod
    def weekly(cls, n_weeks, first_day=1):
        """Regular calendar: weeks 1..n, each with 7 consecutive integer days."""
        if n_weeks < 1:
            raise ValueError("need at least one week")
        days = tuple(range(first_day, first_day + 7 * n_weeks))
        weeks = tuple(range(1, n_weeks + 1))
        d2w = {d: 1 + (d - first_day) // 7 for d in days}
        return cls(weeks=weeks, days=days, day_to_week=d2w)

    @property
    def n_weeks(self):
        return len(self.weeks)

    @property
    def n_days(self):
        return len(self.days)

    def week_of(self, day):
        try:
            return self.day_to_week[day]
        except KeyError:
            raise KeyError(f"unknown day {day!r}") from None

    def days_in(self, week):
        out = tuple(d for d in self.days if self.day_to_week[d] == week)
        if not out:
            raise KeyError(f"unknown week {week!r}")
        return out


def _check_counts(key, pos, tot):
    p, t = _as_int(pos, f"positives[{key}]"), _as_int(tot, f"total[{key}]")
    if not (0 <= p <= t):
        raise ValueError(f"need 0 <= positives <= total at {key}, got ({p}, {t})")
    return p, t


@dataclass(frozen=True)
class SurveillancePanel:
    """Weekly test counts from the two streams.

    randomized : mapping (region, week) -> (positives, total) from the survey
    targeted : mapping (ltla, week) -> (positives, total) from symptomatic testing

    The randomized stream may be missing for any (region, week); targeted
    counts are per fine unit.
    """

    randomized: Mapping
    targeted: Mapping

    def __post_init__(self):
        rnd = {k: _check_counts(k, *v) for k, v in self.randomized.items()}
        tgt = {k: _check_counts(k, *v) for k, v in self.targeted.items()}
        object.__setattr__(self, "randomized", rnd)
        object.__setattr__(self, "targeted", tgt)

    def survey_weeks(self, region):
        """Weeks with a randomized observation for `region` (unordered set)."""
        return {w for (r, w) in self.randomized if r == region}

    def targeted_weeks(self, ltla):
        return {w for (i, w) in self.targeted if i == ltla}

    def region_targeted(self, geography, region, week):
        """Targeted counts aggregated over the region's member LTLAs."""
        n = tot = 0
        found = False
        for i in geography.ltlas_in(region):
            if (i, week) in self.targeted:
                found = True
                a, b = self.targeted[(i, week)]
                n += a
                tot += b
        return (n, tot) if found else None

    def validate_against(self, geography):
        """Cross-checks: units known, totals within population."""
        for (r, w), (_, tot) in self.randomized.items():
            if r not in geography.regions:
                raise ValueError(f"randomized row for unknown region {r!r}")
            if tot > geography.region_population(r):
                raise ValueError(
                    f"survey total {tot} exceeds population of region {r!r}"
                )
        for (i, w), (_, tot) in self.targeted.items():
            if i not in geography.ltla_ids:
                raise ValueError(f"targeted row for unknown LTLA {i!r}")
            if tot > geography.population[i]:
                raise ValueError(f"targeted total {tot} exceeds population of {i!r}")


@dataclass(frozen=True)
class Covariates:
    """Per-LTLA covariates with explicit standardization flags."""

    bame: Mapping
    imd: Mapping
    bame_standardized: bool = False
    imd_standardized: bool = False

    def __post_init__(self):
        for name, m in (("bame", self.bame), ("imd", self.imd)):
            for k, v in m.items():
                if not np.isfinite(v):
                    raise ValueError(f"{name}[{k!r}] is not finite")
        if not self.bame_standardized:
            bad = [k for k, v in self.bame.items() if not 0.0 <= v <= 1.0]
            if bad:
                raise ValueError(f"raw bame proportions outside [0, 1]: {bad}")

    def standardized(self, ltla_ids):
        """Z-score both fields over the given units; flags set on the result."""

        def z(m):
            vals = np.array([m[i] for i in ltla_ids], dtype=float)
            sd = vals.std(ddof=0)
            if sd == 0.0:
                raise ValueError("cannot standardize a constant covariate")
            zz = (vals - vals.mean()) / sd
            return {i: float(v) for i, v in zip(ltla_ids, zz)}

        return Covariates(
            bame=z(self.bame),
            imd=z(self.imd),
            bame_standardized=True,
            imd_standardized=True,
        )


@dataclass(frozen=True)
class GaussianSummary:
    """Moment-matched Gaussian (mean, sd) on some stated scale."""

    mean: float
    sd: float

    def __post_init__(self):
        if not np.isfinite(self.mean):
            raise ValueError(f"mean must be finite, got {self.mean}")
        if not (np.isfinite(self.sd) and self.sd > 0.0):
            raise ValueError(f"sd must be finite and > 0, got {self.sd}")


@dataclass(frozen=True)
class Grid1D:
    """Discrete distribution on an ordered support with log weights."""

    support: np.ndarray
    log_weights: np.ndarray

    def __post_init__(self):
        sup = np.asarray(self.support, dtype=float)
        lw = np.asarray(self.log_weights, dtype=float)
        if sup.ndim != 1 or sup.shape != lw.shape or sup.size == 0:
            raise ValueError("support and log_weights must be equal-length 1-d")
        if np.any(np.diff(sup) <= 0.0):
            raise ValueError("support must be strictly increasing")
        if np.any(np.isnan(lw)) or np.any(lw == np.inf):
            raise ValueError("log weights must be in [-inf, inf)")
        if not np.isfinite(sp.logsumexp(lw)):
            raise ValueError("grid has no probability mass")
        object.__setattr__(self, "support", sup)
        object.__setattr__(self, "log_weights", lw)

    def normalized(self):
        return Grid1D(self.support, self.log_weights - sp.logsumexp(self.log_weights))

    def weights(self):
        lw = self.log_weights - sp.logsumexp(self.log_weights)
        return np.exp(lw)

    def mean(self):
        return float(np.sum(self.weights() * self.support))

    def var(self):
        w = self.weights()
        mu = np.sum(w * self.support)
        return float(np.sum(w * (self.support - mu) ** 2))

    def sd(self):
        return float(np.sqrt(self.var()))

    def quantile(self, q):
        """Smallest support point with CDF >= q (step-function convention)."""
        if not 0.0 <= q <= 1.0:
            raise ValueError(f"quantile level must be in [0, 1], got {q}")
        cdf = np.cumsum(self.weights())
        k = int(np.searchsorted(cdf, q, side="left"))
        return float(self.support[min(k, self.support.size - 1)])

    def replace(self, **kw):
        return dataclasses.replace(self, **kw)
