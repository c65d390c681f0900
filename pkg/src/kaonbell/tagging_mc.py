"""Monte Carlo estimate of the leptonic asymmetry via semileptonic tagging.

The Delta-S = Delta-Q rule makes the lepton charge of a semileptonic decay
tag the flavor of the decaying kaon, so in the long-lived state the l+ rate
measures the K0 content |p|^2/N^2 and the l- rate the K0bar content
|q|^2/N^2.  Events are therefore generated directly as Bernoulli tags with
P(l+) = |p|^2/N^2 -- no decay kinematics.  Electron and muon channels are
not distinguished.

The generator is NumPy's seeded PCG64 (a documented, portable algorithm);
runs are bit-for-bit reproducible for a fixed (seed, n_events, mix).  Trials
are drawn sequentially in fixed-size chunks, which keeps memory bounded and
leaves the sample stream independent of chunking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quasispin import MixingParameters

__all__ = ["McConfig", "McResult", "required_events", "sample_kl_tags"]

_CHUNK = 1 << 22


@dataclass(frozen=True)
class McConfig:
    """Sampling request: number of events, RNG seed, mixing weights."""

    n_events: int
    seed: int
    mix: MixingParameters

    def __post_init__(self):
        if not isinstance(self.n_events, int) or self.n_events < 1:
            raise ValueError(f"n_events must be a positive integer, got {self.n_events!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed!r}")


@dataclass(frozen=True)
class McResult:
    """Tag counts and the asymmetry estimate they imply.

    delta_hat = (n_plus - n_minus) / (n_plus + n_minus) and
    std_error = sqrt((1 - delta_hat^2) / n_events).
    """

    n_plus: int
    n_minus: int
    delta_hat: float
    std_error: float
    generator: str = "pcg64"


def sample_kl_tags(cfg: McConfig) -> McResult:
    """Draw ``cfg.n_events`` lepton tags and estimate the asymmetry."""
    p_plus = abs(cfg.mix.p) ** 2 / cfg.mix.norm_sq
    rng = np.random.default_rng(cfg.seed)
    n_plus = 0
    remaining = cfg.n_events
    while remaining > 0:
        k = min(remaining, _CHUNK)
        n_plus += int(np.count_nonzero(rng.random(k) < p_plus))
        remaining -= k
    n_minus = cfg.n_events - n_plus
    delta_hat = (n_plus - n_minus) / cfg.n_events
    std_error = math.sqrt(max(0.0, 1.0 - delta_hat**2) / cfg.n_events)
    return McResult(n_plus, n_minus, delta_hat, std_error)


def required_events(delta: float, n_sigma: float) -> int:
    """Smallest n with delta * sqrt(n) >= n_sigma * sqrt(1 - delta^2).

    Sample-size planning: how many tags make an asymmetry ``delta``
    an ``n_sigma``-significant deviation from zero.
    """
    delta = float(delta)
    if not (math.isfinite(delta) and 0.0 < delta < 1.0):
        raise ValueError(f"delta must lie in (0, 1), got {delta!r}")
    n_sigma = float(n_sigma)
    if not (math.isfinite(n_sigma) and n_sigma >= 0.0):
        raise ValueError(f"n_sigma must be nonnegative, got {n_sigma!r}")

    threshold = n_sigma * math.sqrt(1.0 - delta * delta)

    def satisfied(n: int) -> bool:
        return delta * math.sqrt(n) >= threshold

    n = max(1, math.ceil((threshold / delta) ** 2))
    while n > 1 and satisfied(n - 1):
        n -= 1
    while not satisfied(n):
        n += 1
    return n
