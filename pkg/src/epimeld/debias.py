"""Debiasing targeted test counts against a randomized survey.

Coarse scale: joint inference for (prevalence count, test-bias log-odds
delta) from a hypergeometric survey likelihood and a two-binomial targeted
likelihood, either as the full Bayesian joint or as the cut posterior that
blocks feedback from the targeted stream into prevalence. The weekly cut
delta moments are smoothed into a longitudinal product-of-experts Gaussian
prior. Fine scale: per-LTLA marginal likelihoods integrate delta out under
that prior with Gauss-Hermite quadrature, and are moment-matched on the
logit scale for downstream models.

All grids over the infected count live on the exact integer lattice; grids
are windowed where the log-density has dropped ~50 nats below the mode and
tails below ~1e-13 total mass may be dropped, both inside the documented
1e-12 truncation allowance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np
import pandas as pd
from scipy.special import betaincinv, gammaln, log_expit, logsumexp as _lse

from .core import GaussianSummary, Grid1D, InfeasibleError, logit

__all__ = [
    "DebiasConfig",
    "SmoothingConfig",
    "JointPosteriorGrid",
    "react_log_lik",
    "targeted_log_lik",
    "nu_hat",
    "survey_posterior",
    "full_posterior",
    "cut_posterior",
    "delta_cut_moments",
    "poe_gaussian",
    "smooth_delta_poe",
    "marginal_likelihood",
    "ltla_posterior",
    "gaussian_summary",
    "run_debias",
    "DebiasResult",
]


@dataclass(frozen=True)
class SmoothingConfig:
    """AR(1) expert for the weekly bias series (stationary, unit variance
    by default) and the flat pseudo-variance used for unobserved weeks."""

    ar1_rho: float = 0.9
    ar1_marginal_var: float = 1.0
    v_flat: float = 100.0

    def __post_init__(self):
        if not -1.0 < self.ar1_rho < 1.0:
            raise ValueError(f"ar1_rho must be in (-1, 1), got {self.ar1_rho}")
        if self.ar1_marginal_var <= 0 or self.v_flat <= 0:
            raise ValueError("variances must be positive")


@dataclass(frozen=True)
class DebiasConfig:
    delta_min: float = -2.0
    delta_max: float = 8.0
    delta_points: int = 501
    gh_points: int = 64
    tail_mass: float = 1e-13     # lattice mass dropped per window trim
    edge_drop: float = 50.0      # required log-density fall-off at window edges
    pi_stride: int = 1           # lattice stride; > 1 only for huge populations
    max_dense_cells: int = 30_000_000
    chunk_rows: int = 8192
    smoothing: SmoothingConfig = field(default_factory=SmoothingConfig)

    def __post_init__(self):
        if self.delta_points < 3 or self.delta_min >= self.delta_max:
            raise ValueError("need a non-degenerate delta grid")
        if self.pi_stride < 1:
            raise ValueError("pi_stride must be >= 1")

    def delta_grid(self):
        return np.linspace(self.delta_min, self.delta_max, self.delta_points)


def _log_comb(n, k):
    """log C(n, k) elementwise; caller guarantees 0 <= k <= n."""
    return gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0)


def _check_counts(pos, tot, popsize, what):
    if not (isinstance(pos, (int, np.integer)) and isinstance(tot, (int, np.integer))):
        raise ValueError(f"{what} counts must be integers")
    if not 0 <= pos <= tot:
        raise ValueError(f"{what}: need 0 <= positives <= total, got ({pos}, {tot})")
    if tot > popsize:
        raise ValueError(f"{what}: total {tot} exceeds population {popsize}")


def react_log_lik(u_plus, u_total, infected, popsize):
    """Hypergeometric log-likelihood of the survey count.

    P(u_plus | infected) for u_total random tests without replacement in a
    population of `popsize` with `infected` positives. Vectorized over
    `infected`; infeasible (infected, count) pairs give -inf.
    """
    _check_counts(u_plus, u_total, popsize, "survey")
    infected = np.asarray(infected)
    if np.any(infected < 0) or np.any(infected > popsize):
        raise ValueError("infected outside [0, population]")
    i = infected.astype(float)
    ok = (i >= u_plus) & (popsize - i >= u_total - u_plus)
    out = np.full(i.shape, -np.inf)
    iv = i[ok]
    out[ok] = (
        _log_comb(iv, u_plus)
        + _log_comb(popsize - iv, u_total - u_plus)
        - _log_comb(float(popsize), u_total)
    )
    return out if infected.ndim else float(out)


def nu_hat(n, n_total, popsize):
    """Plug-in baseline testing log-odds logit((n_total - n)/popsize)."""
    _check_counts(n, n_total, popsize, "targeted")
    negatives = n_total - n
    if negatives <= 0:
        raise ValueError("plug-in nu needs at least one negative targeted test")
    if negatives >= popsize:
        raise ValueError("targeted negatives must be fewer than the population")
    return logit(negatives / popsize)


def _targeted_parts(n, n_total, popsize, pi_lattice, delta, nu):
    """Separable decomposition ll(I, d) = A(I) + B(d) + I * C(d).

    A carries every delta-free term (including supports as -inf), so the
    dense grid is an outer sum plus one outer product. An absent targeted
    stream (n_total == 0) contributes no information: the test volume is
    conditioned on, not modeled, so "no tests" is not an observation.
    """
    i = pi_lattice.astype(float)
    if n_total == 0:
        z = np.zeros(np.shape(delta))
        return np.zeros(i.shape), z, z
    m = n_total - n  # targeted negatives
    lp0, l1p0 = log_expit(nu), log_expit(-nu)
    ok = (i >= n) & (popsize - i >= m)
    A = np.full(i.shape, -np.inf)
    iv = i[ok]
    A[ok] = (
        _log_comb(iv, n)
        + _log_comb(popsize - iv, m)
        + m * lp0
        + (popsize - m) * l1p0
        - iv * l1p0
    )
    lp1, l1p1 = log_expit(nu + delta), log_expit(-nu - delta)
    B = n * lp1 - n * l1p1
    C = l1p1
    return A, B, C


def targeted_log_lik(n, n_total, infected, popsize, delta, nu):
    """Two-binomial targeted log-likelihood.

    n positives among `infected` tested at rate expit(nu + delta), and
    n_total - n positives among the uninfected tested at rate expit(nu).
    Broadcasts over `infected` and `delta`.
    """
    _check_counts(n, n_total, popsize, "targeted")
    infected = np.asarray(infected)
    if np.any(infected < 0) or np.any(infected > popsize):
        raise ValueError("infected outside [0, population]")
    delta_arr = np.asarray(delta, dtype=float)
    if not (np.all(np.isfinite(delta_arr)) and np.isfinite(nu)):
        raise ValueError("delta and nu must be finite")
    scalar = infected.ndim == 0 and delta_arr.ndim == 0
    i, d = np.broadcast_arrays(infected.astype(float), delta_arr)
    A, B, C = _targeted_parts(n, n_total, popsize, i.ravel(), d.ravel(), nu)
    out = (A + B + i.ravel() * C).reshape(i.shape)
    return float(out.ravel()[0]) if scalar else out


def _trim_by_mass(support, lw, tail_mass):
    """Shrink to the smallest contiguous block whose complement mass is
    below tail_mass (half per side). Each tail is accumulated from its own
    end so the thresholds are not lost in cumulative-sum rounding."""
    w = np.exp(lw - _lse(lw))
    left = np.cumsum(w)
    right = np.cumsum(w[::-1])
    lo = int(np.searchsorted(left, tail_mass / 2.0, side="right"))
    hi = support.size - 1 - int(np.searchsorted(right, tail_mass / 2.0, side="right"))
    if lo > hi:
        lo = hi = int(np.argmax(lw))
    return support[lo:hi + 1], lw[lo:hi + 1]


def survey_posterior(u_plus, u_total, popsize, config=None, pi_log_prior=None):
    """Posterior over the infected count from the survey alone.

    Exact integer lattice, windowed: large populations get a Beta-quantile
    pre-window that is widened until both edges are ~40 nats below the mode,
    then trimmed to the configured tail mass.

    Returns a normalized Grid1D; support is int-valued (possibly strided).
    """
    config = config or DebiasConfig()
    _check_counts(u_plus, u_total, popsize, "survey")
    if popsize <= 2_000_000:
        lo, hi = 0, popsize
    else:
        a, b = u_plus + 1.0, u_total - u_plus + 1.0
        qlo = betaincinv(a, b, 1e-15)
        qhi = 1.0 - betaincinv(b, a, 1e-15)
        pad = 0.5 * (qhi - qlo) + 64.0 / popsize
        lo = max(0, int(np.floor((qlo - pad) * popsize)))
        hi = min(popsize, int(np.ceil((qhi + pad) * popsize)))
    while True:
        support = np.arange(lo, hi + 1, config.pi_stride, dtype=np.int64)
        lw = react_log_lik(u_plus, u_total, support, popsize)
        if pi_log_prior is not None:
            lw = lw + pi_log_prior(support)
        mx = lw.max()
        if not np.isfinite(mx):
            raise InfeasibleError("survey likelihood vanishes on its window")
        ok_lo = lo == 0 or lw[0] < mx - 40.0
        ok_hi = hi == popsize or lw[-1] < mx - 40.0
        if ok_lo and ok_hi:
            break
        grow = max(64, (hi - lo) // 2)
        lo = max(0, lo - (0 if ok_lo else grow))
        hi = min(popsize, hi + (0 if ok_hi else grow))
    support, lw = _trim_by_mass(support, lw, config.tail_mass)
    return Grid1D(support.astype(float), lw - _lse(lw))


@dataclass(frozen=True)
class JointPosteriorGrid:
    """Joint distribution of (infected count, delta) on a finite grid.

    log_density is the dense normalized array when it fits in memory
    (see DebiasConfig.max_dense_cells), else None — the marginals are
    always available.
    """

    pi_support: np.ndarray
    delta_support: np.ndarray
    kind: str  # "full" | "cut"
    popsize: int
    pi_log_weights: np.ndarray
    delta_log_weights: np.ndarray
    log_density: Optional[np.ndarray] = None

    def pi_marginal(self):
        return Grid1D(self.pi_support.astype(float), self.pi_log_weights)

    def delta_marginal(self):
        return Grid1D(self.delta_support, self.delta_log_weights)


def _chunked_marginals(row_lw, B, C, support, chunk):
    """Marginals of L[i, j] = row_lw[i] + B[j] + support[i] * C[j].

    Returns (log rowsums, log colsums, global max); avoids materializing L.
    """
    gmax = -np.inf
    for s in range(0, support.size, chunk):
        blk = row_lw[s:s + chunk, None] + B[None, :] + support[s:s + chunk, None] * C[None, :]
        m = blk.max()
        if m > gmax:
            gmax = m
    if not np.isfinite(gmax):
        raise InfeasibleError("joint posterior has no mass on its grid")
    rows = np.empty(support.size)
    cols = np.zeros(B.size)
    for s in range(0, support.size, chunk):
        blk = row_lw[s:s + chunk, None] + B[None, :] + support[s:s + chunk, None] * C[None, :]
        np.exp(blk - gmax, out=blk)
        rows[s:s + chunk] = blk.sum(axis=1)
        cols += blk.sum(axis=0)
    with np.errstate(divide="ignore"):
        return np.log(rows) + gmax, np.log(cols) + gmax, gmax


def full_posterior(u_plus, u_total, n, n_total, popsize, config=None, nu=None):
    """Full-Bayes joint over (infected count, delta): survey and targeted
    streams both inform prevalence. Flat priors on the lattice and on the
    delta box."""
    config = config or DebiasConfig()
    if nu is None:
        nu = 0.0 if n_total == 0 else nu_hat(n, n_total, popsize)
    delta = config.delta_grid()
    sg = survey_posterior(u_plus, u_total, popsize, config)
    lo, hi = int(sg.support[0]), int(sg.support[-1])
    while True:
        support = np.arange(lo, hi + 1, config.pi_stride, dtype=np.int64)
        row = react_log_lik(u_plus, u_total, support, popsize)
        A, B, C = _targeted_parts(n, n_total, popsize, support, delta, nu)
        row = row + A
        pi_lw, d_lw, gmax = _chunked_marginals(row, B, C, support.astype(float),
                                               config.chunk_rows)
        mx = pi_lw.max()
        ok_lo = lo == 0 or pi_lw[0] < mx - config.edge_drop
        ok_hi = hi == popsize or pi_lw[-1] < mx - config.edge_drop
        if (ok_lo and ok_hi) or n_total == 0:
            break  # absent targeted stream: survey window already suffices
        grow = max(64, (hi - lo) // 2)
        lo = max(0, lo - (0 if ok_lo else grow))
        hi = min(popsize, hi + (0 if ok_hi else grow))
    logz = _lse(pi_lw)
    dense = None
    if support.size * delta.size <= config.max_dense_cells:
        dense = (row[:, None] + B[None, :]
                 + support.astype(float)[:, None] * C[None, :]) - logz
    return JointPosteriorGrid(
        pi_support=support, delta_support=delta, kind="full", popsize=int(popsize),
        pi_log_weights=pi_lw - logz, delta_log_weights=d_lw - logz, log_density=dense,
    )


def cut_posterior(u_plus, u_total, n, n_total, popsize, config=None, nu=None):
    """Cut joint: prevalence follows the survey-only posterior; delta follows
    the targeted conditional given each lattice point. Feedback from the
    targeted stream into prevalence is severed.

    Where the targeted likelihood is identically zero along a lattice row
    (count constraints unmet), the conditional falls back to the flat delta
    prior so the row keeps its survey mass.
    """
    config = config or DebiasConfig()
    if nu is None:
        nu = 0.0 if n_total == 0 else nu_hat(n, n_total, popsize)
    delta = config.delta_grid()
    sg = survey_posterior(u_plus, u_total, popsize, config)
    support = sg.support.astype(np.int64)
    sup_f = sg.support
    A, B, C = _targeted_parts(n, n_total, popsize, support, delta, nu)
    # Row-normalize the conditional; the A(I) term cancels, so the row
    # normalizer only involves B + I*C.
    chunk = config.chunk_rows
    rownorm = np.empty(support.size)
    for s in range(0, support.size, chunk):
        blk = B[None, :] + sup_f[s:s + chunk, None] * C[None, :]
        rownorm[s:s + chunk] = _lse(blk, axis=1)
    dead = ~np.isfinite(A)  # rows with no targeted support: flat fallback
    flat_row = np.full(delta.size, -np.log(delta.size))
    row_lw = sg.log_weights - rownorm
    cells = support.size * delta.size
    if cells <= config.max_dense_cells:
        dense = row_lw[:, None] + B[None, :] + sup_f[:, None] * C[None, :]
        if dead.any():
            dense[dead] = sg.log_weights[dead, None] + flat_row[None, :]
        pi_lw = _lse(dense, axis=1)
        d_lw = _lse(dense, axis=0)
        logz = _lse(pi_lw)
        return JointPosteriorGrid(
            pi_support=support, delta_support=delta, kind="cut", popsize=int(popsize),
            pi_log_weights=pi_lw - logz, delta_log_weights=d_lw - logz,
            log_density=dense - logz,
        )
    rows = np.empty(support.size)
    cols = np.zeros(delta.size)
    gmax = sg.log_weights.max()  # rows are normalized, so max density <= this
    for s in range(0, support.size, chunk):
        blk = row_lw[s:s + chunk, None] + B[None, :] + sup_f[s:s + chunk, None] * C[None, :]
        dd = dead[s:s + chunk]
        if dd.any():
            blk[dd] = sg.log_weights[s:s + chunk][dd, None] + flat_row[None, :]
        np.exp(blk - gmax, out=blk)
        rows[s:s + chunk] = blk.sum(axis=1)
        cols += blk.sum(axis=0)
    with np.errstate(divide="ignore"):
        pi_lw, d_lw = np.log(rows) + gmax, np.log(cols) + gmax
    logz = _lse(pi_lw)
    return JointPosteriorGrid(
        pi_support=support, delta_support=delta, kind="cut", popsize=int(popsize),
        pi_log_weights=pi_lw - logz, delta_log_weights=d_lw - logz, log_density=None,
    )


def delta_cut_moments(grid):
    """Moment-matched Gaussian for the delta marginal of a joint grid."""
    marg = grid.delta_marginal()
    sd = marg.sd()
    if not sd > 0.0:
        raise ValueError("degenerate delta marginal (zero variance)")
    return GaussianSummary(mean=marg.mean(), sd=sd)


def poe_gaussian(moments, weeks, config=None):
    """Product-of-experts smoothing of weekly bias moments.

    Combines an AR(1) Gaussian expert over ordered `weeks` with independent
    per-week experts N(mean_w, sd_w^2) for observed weeks and a flat
    N(0, v_flat) expert elsewhere:

        cov = (Sigma^-1 + D^-1)^-1,   mean = cov @ D^-1 mu_hat.

    Returns (mean vector, covariance matrix); covariance is checked PD.
    """
    config = config or SmoothingConfig()
    weeks = list(weeks)
    if not weeks:
        raise ValueError("no weeks to smooth")
    if not any(w in moments for w in weeks):
        raise InfeasibleError("product-of-experts smoothing needs >= 1 observed week")
    k = np.arange(len(weeks))
    sigma = config.ar1_marginal_var * config.ar1_rho ** np.abs(k[:, None] - k[None, :])
    d = np.array([moments[w].sd ** 2 if w in moments else config.v_flat for w in weeks])
    mu_hat = np.array([moments[w].mean if w in moments else 0.0 for w in weeks])
    prec = np.linalg.inv(sigma) + np.diag(1.0 / d)
    try:
        chol = np.linalg.cholesky(prec)
    except np.linalg.LinAlgError:
        raise ValueError("combined expert precision is not positive definite")
    eye = np.eye(len(weeks))
    inv_chol = np.linalg.solve(chol, eye)
    cov = inv_chol.T @ inv_chol
    cov = 0.5 * (cov + cov.T)
    mean = cov @ (mu_hat / d)
    return mean, cov


def smooth_delta_poe(moments, weeks, config=None):
    """Per-week Gaussian bias priors from poe_gaussian marginals."""
    mean, cov = poe_gaussian(moments, weeks, config)
    sds = np.sqrt(np.diag(cov))
    return {w: GaussianSummary(mean=float(m), sd=float(s))
            for w, m, s in zip(weeks, mean, sds)}


def _gh_nodes(bias_prior, gh_points):
    x, w = np.polynomial.hermite.hermgauss(gh_points)
    nodes = bias_prior.mean + np.sqrt(2.0) * bias_prior.sd * x
    logw = np.log(w) - 0.5 * np.log(np.pi)
    return nodes, logw


def _mlik_on(support, n, n_total, popsize, nodes, logw, nu):
    A, B, C = _targeted_parts(n, n_total, popsize, support, nodes, nu)
    blk = B[None, :] + support.astype(float)[:, None] * C[None, :] + logw[None, :]
    return A + _lse(blk, axis=1)


def marginal_likelihood(n, n_total, popsize, bias_prior, config=None, support=None,
                        nu=None):
    """Targeted-stream likelihood with delta integrated out under its
    Gaussian prior (Gauss-Hermite quadrature).

    Returns an unnormalized Grid1D of log-likelihood over the infected-count
    lattice. The window is found by a coarse scan and widened until the
    edges sit edge_drop nats below the peak; pass `support` to skip that.
    """
    config = config or DebiasConfig()
    _check_counts(n, n_total, popsize, "targeted")
    if nu is None:
        nu = nu_hat(n, n_total, popsize)
    nodes, logw = _gh_nodes(bias_prior, config.gh_points)
    if support is not None:
        sup = np.asarray(support, dtype=np.int64)
        return Grid1D(sup.astype(float), _mlik_on(sup, n, n_total, popsize, nodes, logw, nu))
    coarse = np.unique(np.round(np.linspace(0, popsize, 4097)).astype(np.int64))
    ll = _mlik_on(coarse, n, n_total, popsize, nodes, logw, nu)
    mx = ll.max()
    if not np.isfinite(mx):
        raise InfeasibleError("targeted likelihood vanishes everywhere")
    keep = np.nonzero(ll > mx - 60.0)[0]
    step = max(1, int(np.ceil(popsize / 4096)))
    lo = max(0, int(coarse[keep[0]]) - step)
    hi = min(popsize, int(coarse[keep[-1]]) + step)
    while True:
        sup = np.arange(lo, hi + 1, config.pi_stride, dtype=np.int64)
        ll = _mlik_on(sup, n, n_total, popsize, nodes, logw, nu)
        mx = ll.max()
        ok_lo = lo == 0 or ll[0] < mx - config.edge_drop
        ok_hi = hi == popsize or ll[-1] < mx - config.edge_drop
        if ok_lo and ok_hi:
            break
        grow = max(64, (hi - lo) // 2)
        lo = max(0, lo - (0 if ok_lo else grow))
        hi = min(popsize, hi + (0 if ok_hi else grow))
    return Grid1D(sup.astype(float), ll)


def ltla_posterior(n, n_total, popsize, bias_prior, config=None, pi_log_prior=None,
                   nu=None):
    """Normalized fine-scale posterior over the infected count (flat lattice
    prior unless pi_log_prior is given)."""
    mlik = marginal_likelihood(n, n_total, popsize, bias_prior, config, nu=nu)
    lw = mlik.log_weights
    if pi_log_prior is not None:
        lw = lw + pi_log_prior(mlik.support)
    z = _lse(lw)
    if not np.isfinite(z):
        raise InfeasibleError("fine-scale posterior has no mass")
    return Grid1D(mlik.support, lw - z)


def gaussian_summary(grid, popsize):
    """Moment-match a lattice distribution on the logit-prevalence scale.

    The lattice atoms at 0 and popsize map to 1/2 and popsize - 1/2 so the
    log-odds stay finite.
    """
    w = grid.weights()
    i = grid.support.copy()
    i[i == 0] = 0.5
    i[i == popsize] = popsize - 0.5
    x = logit(i / popsize)
    mean = float(np.sum(w * x))
    var = float(np.sum(w * (x - mean) ** 2))
    if not (np.isfinite(var) and var > 0.0):
        raise ValueError("degenerate lattice distribution: zero logit variance")
    return GaussianSummary(mean=mean, sd=float(np.sqrt(var)))


@dataclass
class DebiasResult:
    mode: str
    bias_prior: dict       # (region, week) -> GaussianSummary (post-smoothing)
    moments: dict          # (region, week) -> GaussianSummary (observed weeks)
    prevalence: pd.DataFrame
    interface: pd.DataFrame
    exact: pd.DataFrame


def run_debias(panel, geography, weeks, mode="cut", config=None):
    """Coarse-scale bias inference, smoothing, and fine-scale prevalence for
    every (LTLA, week) with targeted data.

    mode selects the coarse joint ("cut" severs targeted->prevalence
    feedback; "full" keeps it). Weeks must be in analysis order.
    """
    if mode not in ("cut", "full"):
        raise ValueError(f"mode must be 'cut' or 'full', got {mode!r}")
    config = config or DebiasConfig()
    weeks = list(weeks)
    builder = cut_posterior if mode == "cut" else full_posterior
    moments, priors = {}, {}
    for region in geography.regions:
        m_reg = {}
        pop = geography.region_population(region)
        for w in weeks:
            if (region, w) not in panel.randomized:
                continue
            agg = panel.region_targeted(geography, region, w)
            if agg is None:
                continue
            u_plus, u_total = panel.randomized[(region, w)]
            n, n_total = agg
            grid = builder(u_plus, u_total, n, n_total, pop, config)
            m_reg[w] = delta_cut_moments(grid)
        if not m_reg:
            raise InfeasibleError(
                f"region {region!r} has no week with both survey and targeted data"
            )
        moments.update({(region, w): g for w, g in m_reg.items()})
        priors.update({(region, w): g for w, g in
                       smooth_delta_poe(m_reg, weeks, config.smoothing).items()})
    prev_rows, iface_rows, exact_rows = [], [], []
    for ltla in geography.ltla_ids:
        region = geography.region_of[ltla]
        m = geography.population[ltla]
        for w in weeks:
            if (ltla, w) not in panel.targeted:
                continue
            n, n_total = panel.targeted[(ltla, w)]
            prior = priors[(region, w)]
            post = ltla_posterior(n, n_total, m, prior, config)
            med, lo, hi = (post.quantile(0.5) / m, post.quantile(0.025) / m,
                           post.quantile(0.975) / m)
            prev_rows.append((ltla, w, med, lo, hi))
            gs = gaussian_summary(post, m)
            iface_rows.append((ltla, w, gs.mean, gs.sd))
            exact_rows.append((ltla, w, n, n_total, m, prior.mean, prior.sd))
    return DebiasResult(
        mode=mode,
        bias_prior=priors,
        moments=moments,
        prevalence=pd.DataFrame(prev_rows,
                                columns=["ltla", "week", "median", "lo95", "hi95"]),
        interface=pd.DataFrame(iface_rows,
                               columns=["ltla", "week", "logit_mean", "logit_sd"]),
        exact=pd.DataFrame(exact_rows,
                           columns=["ltla", "week", "positives", "total",
                                    "population", "delta_mean", "delta_sd"]),
    )
