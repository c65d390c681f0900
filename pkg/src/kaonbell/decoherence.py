"""Bounds on the interference-damping parameter zeta from the Bell inequality.

Damping the interference term by (1 - zeta) moves the three probabilities of
the inequality.  In the K_S K_L basis the corrections are (with
eta = |q|/|p|, all independent of the CP phase alpha):

    P_z(K1, K0bar)  = 1/4              - zeta (1 - eta^2) / 8
    P_z(K_S, K0bar) = P(K_S, K0bar)    - zeta (1 - eta^2) / 4
    P_z(K_S, K1)    = P(K_S, K1)       + zeta (1 - eta^2)^2 / (8 eta^2)

In the K0 K0bar basis the first two probabilities are untouched and only

    P_z(K_S, K1)    = P(K_S, K1)       + zeta Re{e^{i alpha} p q*} / (2 N^2).

Requiring the damped inequality to hold at the optimal phase gives a lower
bound on zeta as a function of the leptonic asymmetry delta:

    K_S K_L basis:   ((1 - delta)/delta) (sqrt(1 - delta^2) - 1 + delta)
    K0 K0bar basis:  1 - sqrt((1 - delta)/(1 + delta))

For the measured delta the first bound is close to one (the damping must be
nearly total factorization), the second close to delta.  The exact closed
forms are the authoritative bounds; the order-delta expansions
(1 - 3 delta/2 and delta) are documentation-grade approximations.  A
bisection on the damped inequality margin provides an independent numerical
cross-check of the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .bell import mixing_from_delta, optimal_alpha
from .entangle import Basis
from .quasispin import MixingParameters

__all__ = [
    "Basis",
    "ExperimentComparison",
    "NoRootError",
    "ZetaBoundResult",
    "compare_with_experiment",
    "propagate_delta_uncertainty",
    "zeta_lower_bound_exact",
    "zeta_lower_bound_expansion",
    "zeta_lower_bound_numeric",
    "zeta_probability_triple",
]

_BISECTION_TOL = 1e-12


class NoRootError(ValueError):
    """The damped inequality margin has no sign change on zeta in [0, 1]."""


@dataclass(frozen=True)
class ZetaBoundResult:
    """Lower bound on zeta for a given asymmetry, with all three routes.

    ``uncertainty`` is the half-width obtained by evaluating the exact bound
    at the endpoints delta -/+ sigma (the bounds are monotonic in delta).
    """

    delta_in: float
    exact_bound: float
    expansion_bound: float
    numeric_bound: float
    uncertainty: float
    basis: Basis


@dataclass(frozen=True)
class ExperimentComparison:
    """Distance of a measured zeta below the derived lower bound.

    ``sigmas`` counts the measurement's upward error bars between the
    measured value and the bound (zero when the measurement already
    satisfies the bound); ``compatible`` holds iff sigmas <= 2.
    """

    compatible: bool
    sigmas: float


def _check_open_unit_interval(delta: float) -> float:
    delta = float(delta)
    if not (math.isfinite(delta) and 0.0 < delta < 1.0):
        raise ValueError(f"delta must lie strictly in (0, 1), got {delta!r}")
    return delta


def zeta_probability_triple(
    mix: MixingParameters, alpha: float, zeta: float, basis: Basis
) -> tuple[float, float, float]:
    """The damped probabilities (P_z(K1,K0bar), P_z(K_S,K0bar), P_z(K_S,K1)).

    Closed forms of the module docstring; they match the first-principles
    amplitude computation of ``entangle.joint_probability_zeta``.
    """
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise ValueError(f"alpha must be finite, got {alpha!r}")
    zeta = float(zeta)
    if not (0.0 <= zeta <= 1.0):
        raise ValueError(f"zeta must lie in [0, 1], got {zeta!r}")
    if not isinstance(basis, Basis):
        raise TypeError(f"basis must be a Basis, got {basis!r}")

    n_sq = mix.norm_sq
    w = complex(math.cos(alpha), math.sin(alpha)) * mix.p * mix.q.conjugate()
    p_k1_tag = 0.25
    p_ks_tag = abs(mix.p) ** 2 / (2.0 * n_sq)
    p_ks_k1 = 0.25 - w.real / (2.0 * n_sq)

    if basis is Basis.KS_KL:
        eta_sq = mix.eta**2
        gap = 1.0 - eta_sq
        return (
            p_k1_tag - zeta * gap / 8.0,
            p_ks_tag - zeta * gap / 4.0,
            p_ks_k1 + zeta * gap * gap / (8.0 * eta_sq),
        )
    return (
        p_k1_tag,
        p_ks_tag,
        p_ks_k1 + zeta * w.real / (2.0 * n_sq),
    )


def zeta_lower_bound_exact(delta: float, basis: Basis) -> float:
    """Closed-form lower bound on zeta for asymmetry ``delta`` in (0, 1).

    The derivation presumes the inequality-violating sign, so delta <= 0
    (and delta >= 1) are rejected.
    """
    delta = _check_open_unit_interval(delta)
    if basis is Basis.KS_KL:
        # Equal to ((1-d)/d) (sqrt(1-d^2) - 1 + d); this form avoids the
        # cancellation of sqrt(1-d^2) against 1 at small d.
        s = math.sqrt(1.0 - delta * delta)
        return (1.0 - delta) * (1.0 - delta / (1.0 + s))
    if basis is Basis.K0_K0BAR:
        # Equal to 1 - sqrt((1-d)/(1+d)), rationalized for the same reason.
        r = math.sqrt((1.0 - delta) / (1.0 + delta))
        return (2.0 * delta / (1.0 + delta)) / (1.0 + r)
    raise TypeError(f"basis must be a Basis, got {basis!r}")


def zeta_lower_bound_expansion(delta: float, basis: Basis) -> float:
    """Order-delta approximation of the bound: 1 - 3 delta/2, or delta."""
    delta = _check_open_unit_interval(delta)
    if basis is Basis.KS_KL:
        return 1.0 - 1.5 * delta
    if basis is Basis.K0_K0BAR:
        return delta
    raise TypeError(f"basis must be a Basis, got {basis!r}")


def _bisect_root(margin: Callable[[float], float], lo: float, hi: float) -> float:
    """Smallest zeta where ``margin`` stops being positive, by bisection."""
    m_lo, m_hi = margin(lo), margin(hi)
    if not (m_lo > 0.0 and m_hi <= 0.0):
        raise NoRootError(
            "damped inequality margin does not change sign on [0, 1]; "
            "the asymmetry is outside the violating regime"
        )
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if margin(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= _BISECTION_TOL:
            break
    return 0.5 * (lo + hi)


def zeta_lower_bound_numeric(delta: float, basis: Basis) -> float:
    """Bisection cross-check of :func:`zeta_lower_bound_exact`.

    Builds the damped inequality margin from :func:`zeta_probability_triple`
    at the optimal phase and finds the smallest zeta where the violation
    disappears.  Agrees with the closed form to better than 1e-9.
    """
    delta = _check_open_unit_interval(delta)
    mix = mixing_from_delta(delta)
    alpha = optimal_alpha(mix)

    def margin(zeta: float) -> float:
        p_k1_tag, p_ks_tag, p_ks_k1 = zeta_probability_triple(mix, alpha, zeta, basis)
        return p_ks_tag - p_ks_k1 - p_k1_tag

    return _bisect_root(margin, 0.0, 1.0)


def propagate_delta_uncertainty(
    delta: float, sigma: float, basis: Basis
) -> ZetaBoundResult:
    """Bound at ``delta`` with the uncertainty inherited from delta +/- sigma.

    The exact bound is monotonic in delta, so interval-endpoint evaluation
    gives the propagated half-width directly; both endpoints must stay in
    (0, 1).
    """
    delta = _check_open_unit_interval(delta)
    sigma = float(sigma)
    if not (math.isfinite(sigma) and sigma >= 0.0):
        raise ValueError(f"sigma must be nonnegative, got {sigma!r}")
    if not (0.0 < delta - sigma and delta + sigma < 1.0):
        raise ValueError(
            f"delta +/- sigma must stay inside (0, 1), got {delta!r} +/- {sigma!r}"
        )
    lo = zeta_lower_bound_exact(delta - sigma, basis) if sigma > 0.0 else None
    hi = zeta_lower_bound_exact(delta + sigma, basis) if sigma > 0.0 else None
    uncertainty = 0.0 if sigma == 0.0 else abs(hi - lo) / 2.0
    return ZetaBoundResult(
        delta_in=delta,
        exact_bound=zeta_lower_bound_exact(delta, basis),
        expansion_bound=zeta_lower_bound_expansion(delta, basis),
        numeric_bound=zeta_lower_bound_numeric(delta, basis),
        uncertainty=uncertainty,
        basis=basis,
    )


def compare_with_experiment(
    result: ZetaBoundResult, measured_zeta: float, err_plus: float, err_minus: float
) -> ExperimentComparison:
    """Compare the derived lower bound against a measured zeta.

    The bound excludes the measurement when the measured value lies far
    below it; the distance is expressed in units of the measurement's
    upward error bar ``err_plus`` (``err_minus`` is accepted for
    completeness of the measurement record but a lower bound can only be
    challenged from below).
    """
    measured_zeta = float(measured_zeta)
    err_plus = float(err_plus)
    err_minus = float(err_minus)
    if not (err_plus > 0.0 and err_minus > 0.0):
        raise ValueError("measurement errors must be positive")
    bound = result.exact_bound
    sigmas = (bound - measured_zeta) / err_plus if bound > measured_zeta else 0.0
    return ExperimentComparison(compatible=sigmas <= 2.0, sigmas=sigmas)
