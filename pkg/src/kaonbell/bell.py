"""Uchiyama's Bell inequality at creation time and the mixing bounds it implies.

For the pair state produced at t = 0, local realism requires

    P(K_S, K0bar) <= P(K_S, K1) + P(K1, K0bar),

where K1 is the CP-even eigenstate for transformation phase alpha.  Inserting
the quantum-mechanical probabilities reduces the inequality to

    Re{e^{i alpha} p q*} <= |q|^2,

so its margin depends on the unphysical phase alpha.  Choosing alpha to
compensate the relative phase chi = arg(p q*) makes the left side |p||q| and
yields the convention-free statement |p| <= |q|.  Swapping K0bar for K0 gives
|q| <= |p| the same way; together the two are compatible only with
|p| = |q|, i.e. with strict CP conservation in mixing.  The module works
entirely at creation time: no time parameter appears anywhere.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .entangle import joint_probability, singlet_strangeness
from .quasispin import (
    MixingParameters,
    cp_eigenstates,
    mass_eigenstates,
    strangeness_states,
)

__all__ = [
    "VIOLATION_TOL",
    "BellAssessment",
    "LrtBounds",
    "leptonic_asymmetry",
    "lrt_bound_check",
    "mixing_from_delta",
    "optimal_alpha",
    "reduced_inequality_margin",
    "uchiyama_assessment",
]

# The margin expressions are few-operation: anything above this is a genuine
# sign, not rounding noise.
VIOLATION_TOL = 1e-12


@dataclass(frozen=True)
class BellAssessment:
    """Outcome of one inequality evaluation.

    ``margin = lhs - rhs`` is reported exactly as computed;
    ``violated`` holds iff the margin exceeds :data:`VIOLATION_TOL`.
    """

    lhs: float
    rhs: float
    margin: float
    violated: bool
    alpha_used: float


@dataclass(frozen=True)
class LrtBounds:
    """The two convention-free local-realism bounds and their conjunction.

    ``p_le_q`` is |p| <= |q| (the K0bar form), ``q_le_p`` is |q| <= |p|
    (the K0 form).  Both hold simultaneously only when |p| = |q| within
    tolerance (``equality_required``): local realism is compatible only
    with strict CP conservation in mixing.
    """

    p_le_q: bool
    q_le_p: bool
    equality_required: bool


def uchiyama_assessment(
    mix: MixingParameters, alpha: float, swap_to_K0: bool = False
) -> BellAssessment:
    """Evaluate the inequality from the joint probabilities of the pair state.

    lhs = P(K_S, K0bar), rhs = P(K_S, K1(alpha)) + P(K1(alpha), K0bar);
    with ``swap_to_K0`` the strangeness state K0bar is replaced by K0 on
    both sides.
    """
    pair = singlet_strangeness()
    ks, _ = mass_eigenstates(mix)
    k1, _ = cp_eigenstates(alpha)
    k0, k0bar = strangeness_states()
    tag = k0 if swap_to_K0 else k0bar
    lhs = joint_probability(pair, ks, tag)
    rhs = joint_probability(pair, ks, k1) + joint_probability(pair, k1, tag)
    margin = lhs - rhs
    return BellAssessment(lhs, rhs, margin, margin > VIOLATION_TOL, float(alpha))


def reduced_inequality_margin(mix: MixingParameters, alpha: float) -> float:
    """Re{e^{i alpha} p q*} - |q|^2.

    Equals the :func:`uchiyama_assessment` margin times the positive factor
    2 N^2, so both always have the same sign.
    """
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise ValueError(f"alpha must be finite, got {alpha!r}")
    return (cmath.exp(1j * alpha) * mix.p * mix.q.conjugate()).real - abs(mix.q) ** 2


def optimal_alpha(mix: MixingParameters) -> float:
    """Phase alpha* = -arg(p q*) that maximizes Re{e^{i alpha} p q*}.

    At alpha* the reduced margin becomes |p||q| - |q|^2, so the inequality
    turns into the convention-free |p| <= |q|.
    """
    return -mix.chi


def lrt_bound_check(mix: MixingParameters, tol: float = VIOLATION_TOL) -> LrtBounds:
    """Check both convention-free bounds |p| <= |q| and |q| <= |p|."""
    mod_p, mod_q = abs(mix.p), abs(mix.q)
    p_le_q = mod_p <= mod_q + tol
    q_le_p = mod_q <= mod_p + tol
    return LrtBounds(p_le_q, q_le_p, p_le_q and q_le_p)


def leptonic_asymmetry(mix: MixingParameters) -> float:
    """delta = (|p|^2 - |q|^2) / (|p|^2 + |q|^2).

    This equals the semileptonic decay-rate asymmetry of the long-lived
    state, since the lepton charge tags the flavor content.
    """
    return mix.delta


def mixing_from_delta(delta: float, im_part: float = 0.0) -> MixingParameters:
    """A representative (p, q) with leptonic asymmetry ``delta``.

    The asymmetry is scale- and phase-blind, so a representative is chosen:
    |p|^2 = 1 + delta and |q|^2 = 1 - delta (N^2 = 2, matching the
    CP-conserving limit p = q = 1), with ``im_part`` injected as the
    relative phase, chi = arg(p q*) = im_part exactly.
    """
    delta = float(delta)
    if not (math.isfinite(delta) and abs(delta) < 1.0):
        raise ValueError(f"delta must satisfy |delta| < 1, got {delta!r}")
    im_part = float(im_part)
    if not math.isfinite(im_part):
        raise ValueError(f"im_part must be finite, got {im_part!r}")
    p = complex(math.sqrt(1.0 + delta))
    q = math.sqrt(1.0 - delta) * cmath.exp(-1j * im_part)
    return MixingParameters(p, q)
