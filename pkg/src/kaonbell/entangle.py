"""Antisymmetric two-kaon state at creation time and joint detection probabilities.

The source produces the singlet-like state

    (|K0>_l |K0bar>_r - |K0bar>_l |K0>_r) / sqrt(2),

which can equally be written in the (non-orthogonal) mass basis as
N_SL/sqrt(2) (|K_S>_l |K_L>_r - |K_L>_l |K_S>_r) with N_SL = N^2/(2pq).
Joint probabilities are squared moduli of the two-particle amplitude.

The interference-damped variant multiplies the cross term of the squared
amplitude by (1 - zeta) after decomposing the pair in a chosen one-particle
basis; the physics depends on that basis choice, so it is always explicit.
The overall prefactor of the damped expression is fixed by unit total norm
of the decomposition: it is |c|^2 where c is the antisymmetric decomposition
coefficient, i.e. 1/2 in the orthonormal flavor basis and
|N^2/(2pq)|^2 / 2 in the K_S K_L basis.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from .quasispin import (
    ATOL,
    KaonState,
    MixingParameters,
    inner_product,
    mass_eigenstates,
    strangeness_states,
)

__all__ = [
    "Basis",
    "EntangledPair",
    "ZetaModel",
    "amplitude",
    "decompose",
    "joint_probability",
    "joint_probability_zeta",
    "singlet_mass_basis",
    "singlet_strangeness",
]

_SQRT_HALF = 1.0 / math.sqrt(2.0)


class Basis(Enum):
    """One-particle basis used to decompose the pair for interference damping."""

    KS_KL = "ks-kl"
    K0_K0BAR = "k0-k0bar"


@dataclass(frozen=True)
class ZetaModel:
    """Interference-damping model: basis choice plus parameter zeta in [0, 1].

    zeta = 0 is unmodified quantum mechanics; zeta = 1 removes the
    interference term entirely (spontaneous factorization).
    """

    basis: Basis
    zeta: float

    def __post_init__(self):
        if not isinstance(self.basis, Basis):
            raise TypeError(f"basis must be a Basis, got {self.basis!r}")
        zeta = float(self.zeta)
        if not (0.0 <= zeta <= 1.0):
            raise ValueError(f"zeta must lie in [0, 1], got {zeta!r}")
        object.__setattr__(self, "zeta", zeta)


@dataclass(frozen=True)
class EntangledPair:
    """Two-particle amplitude coeff * (|left_a>|right_a> - |left_b>|right_b>).

    The constructor rescales ``coeff`` so the total norm is exactly one
    (its phase is kept; it never affects probabilities).  A pair whose two
    product terms coincide has zero norm and is rejected.
    """

    left_a: KaonState
    right_a: KaonState
    left_b: KaonState
    right_b: KaonState
    coeff: complex

    def __post_init__(self):
        coeff = complex(self.coeff)
        if coeff == 0:
            raise ValueError("coeff must be nonzero")
        overlap = inner_product(self.left_a, self.left_b) * inner_product(
            self.right_a, self.right_b
        )
        residual = 2.0 - 2.0 * overlap.real
        if not math.isfinite(residual) or residual <= 1e-14:
            raise ValueError("degenerate pair: the two product terms coincide")
        object.__setattr__(self, "coeff", coeff / math.sqrt(abs(coeff) ** 2 * residual))


def singlet_strangeness() -> EntangledPair:
    """The pair state in the flavor basis, (|K0 K0bar> - |K0bar K0>) / sqrt(2)."""
    k0, k0bar = strangeness_states()
    return EntangledPair(k0, k0bar, k0bar, k0, _SQRT_HALF)


def singlet_mass_basis(mix: MixingParameters) -> EntangledPair:
    """The same pair state written in the K_S K_L basis.

    The coefficient N_SL/sqrt(2) with N_SL = N^2/(2pq) makes the total norm
    one; joint probabilities agree with :func:`singlet_strangeness` for every
    measurement pair because the two forms are the same state.
    """
    ks, kl = mass_eigenstates(mix)
    n_sl = mix.norm_sq / (2.0 * mix.p * mix.q)
    return EntangledPair(ks, kl, kl, ks, n_sl * _SQRT_HALF)


def amplitude(pair: EntangledPair, f1: KaonState, f2: KaonState) -> complex:
    """Detection amplitude <f1|_l <f2|_r |pair>."""
    term_a = inner_product(f1, pair.left_a) * inner_product(f2, pair.right_a)
    term_b = inner_product(f1, pair.left_b) * inner_product(f2, pair.right_b)
    return pair.coeff * (term_a - term_b)


def joint_probability(pair: EntangledPair, f1: KaonState, f2: KaonState) -> float:
    """Probability of finding f1 on the left and f2 on the right."""
    return abs(amplitude(pair, f1, f2)) ** 2


def decompose(state: KaonState, b1: KaonState, b2: KaonState) -> tuple[complex, complex]:
    """Coefficients (c1, c2) with state = c1 b1 + c2 b2.

    Solves the 2x2 linear system exactly (Cramer), which is required because
    the basis states need not be orthogonal (K_S and K_L are not when
    |p| != |q|); projection would be wrong there.
    """
    det = b1.a0 * b2.abar - b2.a0 * b1.abar
    if abs(det) < 1e-14:
        raise ValueError("basis states are (nearly) parallel; cannot decompose")
    c1 = (state.a0 * b2.abar - b2.a0 * state.abar) / det
    c2 = (b1.a0 * state.abar - state.a0 * b1.abar) / det
    return c1, c2


def _singlet_in_basis(
    mix: MixingParameters, basis: Basis
) -> tuple[KaonState, KaonState, complex]:
    """Decompose the pair state as c (|b1 b2> - |b2 b1>) in the chosen basis.

    Writing |K0> = x1 b1 + x2 b2 and |K0bar> = y1 b1 + y2 b2, antisymmetry
    collapses the double sum to a single coefficient
    c = (x1 y2 - x2 y1) / sqrt(2).
    """
    if basis is Basis.K0_K0BAR:
        k0, k0bar = strangeness_states()
        return k0, k0bar, complex(_SQRT_HALF)
    b1, b2 = mass_eigenstates(mix)
    k0, k0bar = strangeness_states()
    x1, x2 = decompose(k0, b1, b2)
    y1, y2 = decompose(k0bar, b1, b2)
    return b1, b2, (x1 * y2 - x2 * y1) * _SQRT_HALF


def joint_probability_zeta(
    mix: MixingParameters, model: ZetaModel, f1: KaonState, f2: KaonState
) -> float:
    """Joint probability with the interference term damped by (1 - zeta).

    With the pair written as c (|b1 b2> - |b2 b1>) in ``model.basis`` and
    A = <f1|b1><f2|b2>, B = <f1|b2><f2|b1>, returns

        |c|^2 (|A|^2 + |B|^2 - 2 (1 - zeta) Re(A* B)).

    At zeta = 0 this is :func:`joint_probability`; at zeta = 1 it is the
    interference-free sum.  The damped expression is not guaranteed to be a
    probability for every input: values outside [0, 1] are returned as
    computed (a warning flags them, nothing is clamped).
    """
    b1, b2, coeff = _singlet_in_basis(mix, model.basis)
    term_a = inner_product(f1, b1) * inner_product(f2, b2)
    term_b = inner_product(f1, b2) * inner_product(f2, b1)
    cross = (term_a.conjugate() * term_b).real
    weight = abs(coeff) ** 2
    value = weight * (
        abs(term_a) ** 2 + abs(term_b) ** 2 - 2.0 * (1.0 - model.zeta) * cross
    )
    if value < -ATOL or value > 1.0 + ATOL:
        warnings.warn(
            f"damped joint probability {value!r} lies outside [0, 1]",
            stacklevel=2,
        )
    return value
