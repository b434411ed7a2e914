"""Small MCMC toolbox: seeded streams, adaptive scales, ESS and split-Rhat."""
from __future__ import annotations

import hashlib

import numpy as np

__all__ = ["rng_stream", "AdaptiveScale", "ess", "split_rhat", "summarize_draws"]


def rng_stream(seed, *keys):
    """Independent, platform-stable generator for (seed, keys).

    Keys are hashed so that e.g. rng_stream(7, "sir", ltla) never collides
    with rng_stream(7, "renewal", ltla) regardless of argument types.
    """
    ents = [int(seed) & 0xFFFFFFFFFFFFFFFF]
    for k in keys:
        h = hashlib.sha256(repr(k).encode()).digest()
        ents.append(int.from_bytes(h[:8], "little"))
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(ents)))


class AdaptiveScale:
    """Robbins-Monro step-size adaptation toward a target acceptance rate.

    Adaptation decays as 1/sqrt(updates) and can be frozen for the sampling
    phase so the chain stays Markovian after burn-in.
    """

    def __init__(self, scale=1.0, target=0.44, lo=1e-8, hi=1e8):
        self.scale = float(scale)
        self.target = float(target)
        self.lo, self.hi = lo, hi
        self._n = 0
        self.frozen = False

    def update(self, accepted):
        if self.frozen:
            return
        self._n += 1
        step = 1.0 / np.sqrt(self._n)
        self.scale *= np.exp(step * ((1.0 if accepted else 0.0) - self.target))
        self.scale = min(max(self.scale, self.lo), self.hi)

    def freeze(self):
        self.frozen = True


def _autocov(x):
    n = len(x)
    x = x - x.mean()
    nfft = int(2 ** np.ceil(np.log2(2 * n)))
    f = np.fft.rfft(x, nfft)
    acov = np.fft.irfft(f * np.conj(f), nfft)[:n].real / n
    return acov


def ess(x):
    """Effective sample size via Geyer's initial monotone sequence."""
    x = np.asarray(x, dtype=float)
    n = x.size
    if n < 4 or np.allclose(x, x[0]):
        return float(n)
    acov = _autocov(x)
    if acov[0] <= 0:
        return float(n)
    rho = acov / acov[0]
    # sum adjacent pairs; stop at first negative, enforce monotone decrease
    pair_sums = []
    t = 1
    while t + 1 < n:
        s = rho[t] + rho[t + 1]
        if s < 0:
            break
        pair_sums.append(s)
        t += 2
    mono = np.minimum.accumulate(pair_sums) if pair_sums else []
    tau = 1.0 + 2.0 * float(np.sum(mono))
    return float(min(n, max(1.0, n / max(tau, 1e-12))))


def split_rhat(x):
    """Split-chain potential scale reduction for draws shaped (chains, n)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    m, n = x.shape
    if n < 4:
        return np.inf
    half = n // 2
    splits = np.concatenate([x[:, :half], x[:, half: 2 * half]], axis=0)
    if np.allclose(splits, splits.flat[0]):
        return 1.0
    w = splits.var(axis=1, ddof=1).mean()
    b = half * splits.mean(axis=1).var(ddof=1)
    if w <= 0:
        return np.inf
    var_plus = (half - 1) / half * w + b / half
    return float(np.sqrt(var_plus / w))


def summarize_draws(draws, level=0.95):
    """(median, lo, hi) central interval along the first axis."""
    draws = np.asarray(draws, dtype=float)
    a = (1.0 - level) / 2.0
    qs = np.quantile(draws, [0.5, a, 1.0 - a], axis=0)
    return qs[0], qs[1], qs[2]
