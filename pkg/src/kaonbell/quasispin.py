"""Two-level complex-amplitude algebra for a single neutral kaon.

Everything lives in the strangeness (flavor) basis {K0, K0bar}.  The module
provides the CP transformation with a free phase angle alpha, the CP
eigenstates built from it, the short/long-lived mass eigenstates for given
mixing weights (p, q), rephasing of the basis states, and inner products.

Amplitudes are plain Python ``complex`` numbers: modulus via ``abs``, phase
via ``cmath.phase`` (principal branch, (-pi, pi]).  All states are stored
normalized; every operation is a pure function over immutable values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "ATOL",
    "Amplitude",
    "CpTransform",
    "DegenerateMixingError",
    "KaonLabel",
    "KaonState",
    "MixingParameters",
    "cp_eigenstates",
    "inner_product",
    "mass_eigenstates",
    "mixing_from_epsilon",
    "orthogonal_state",
    "rephase",
    "strangeness_states",
]

# Tolerance for algebraic identities: doubles lose only a few digits over
# these few-operation expressions.
ATOL = 1e-12

# Scalar carrier for amplitudes and mixing weights.
Amplitude = complex

_SQRT_HALF = 1.0 / math.sqrt(2.0)


class DegenerateMixingError(ValueError):
    """Raised when a mixing weight vanishes (p = 0 or q = 0)."""


class KaonLabel(Enum):
    K0 = "K0"
    K0BAR = "K0bar"
    K1 = "K1"
    K2 = "K2"
    KS = "KS"
    KL = "KL"
    CUSTOM = "custom"


def _as_finite_complex(value, name: str) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z!r}")
    return z


def _as_finite_float(value, name: str) -> float:
    x = float(value)
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return x


@dataclass(frozen=True)
class KaonState:
    """Normalized two-component state in the strangeness basis.

    ``a0`` is the component on |K0>, ``abar`` the component on |K0bar>.
    The constructor normalizes, so any nonzero pair of amplitudes is
    accepted; a zero vector is rejected.
    """

    a0: complex
    abar: complex
    label: KaonLabel = KaonLabel.CUSTOM

    def __post_init__(self):
        a0 = _as_finite_complex(self.a0, "a0")
        abar = _as_finite_complex(self.abar, "abar")
        norm = math.hypot(abs(a0), abs(abar))
        if norm == 0.0:
            raise ValueError("cannot normalize the zero state")
        object.__setattr__(self, "a0", a0 / norm)
        object.__setattr__(self, "abar", abar / norm)
        if not isinstance(self.label, KaonLabel):
            raise TypeError(f"label must be a KaonLabel, got {self.label!r}")

    @property
    def vector(self) -> np.ndarray:
        """Components as a length-2 complex array (K0 first)."""
        return np.array([self.a0, self.abar], dtype=complex)


@dataclass(frozen=True)
class MixingParameters:
    """Complex mixing weights p, q of the mass eigenstates.

    Derived quantities:

    - ``norm``     N with N^2 = |p|^2 + |q|^2
    - ``delta``    leptonic asymmetry (|p|^2 - |q|^2) / N^2
    - ``eta``      |q| / |p|, so eta^2 = (1 - delta) / (1 + delta)
    - ``chi``      relative phase arg(p q*), principal branch (-pi, pi]
    - ``epsilon``  (p - q) / (p + q), the scale-free CP-violation parameter
      of the convention p = 1 + eps, q = 1 - eps
    """

    p: complex
    q: complex

    def __post_init__(self):
        p = _as_finite_complex(self.p, "p")
        q = _as_finite_complex(self.q, "q")
        if p == 0 or q == 0:
            raise DegenerateMixingError("mixing weights p and q must both be nonzero")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def norm_sq(self) -> float:
        """N^2 = |p|^2 + |q|^2."""
        return abs(self.p) ** 2 + abs(self.q) ** 2

    @property
    def norm(self) -> float:
        """N = sqrt(|p|^2 + |q|^2)."""
        return math.sqrt(self.norm_sq)

    @property
    def delta(self) -> float:
        """Leptonic asymmetry (|p|^2 - |q|^2) / (|p|^2 + |q|^2)."""
        return (abs(self.p) ** 2 - abs(self.q) ** 2) / self.norm_sq

    @property
    def eta(self) -> float:
        """CP-violation measure |q| / |p|."""
        return abs(self.q) / abs(self.p)

    @property
    def chi(self) -> float:
        """Relative phase arg(p q*) in (-pi, pi]; a -pi result maps to +pi."""
        phase = cmath.phase(self.p * self.q.conjugate())
        return math.pi if phase <= -math.pi else phase

    @property
    def epsilon(self) -> complex:
        """(p - q) / (p + q); undefined (raises) when p = -q."""
        denom = self.p + self.q
        if denom == 0:
            raise ValueError("epsilon representation undefined for p = -q")
        return (self.p - self.q) / denom


@dataclass(frozen=True)
class CpTransform:
    """CP transformation with free phase alpha.

    In the strangeness basis it acts as the matrix
    [[0, -e^{-i alpha}], [-e^{i alpha}, 0]], which squares to the identity.
    """

    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _as_finite_float(self.alpha, "alpha"))

    @property
    def matrix(self) -> np.ndarray:
        """2x2 matrix in the {K0, K0bar} basis."""
        phase = cmath.exp(1j * self.alpha)
        return np.array([[0.0, -1.0 / phase], [-phase, 0.0]], dtype=complex)

    def apply(self, state: KaonState) -> KaonState:
        """Apply the transformation to a state (norm is preserved)."""
        phase = cmath.exp(1j * self.alpha)
        return KaonState(-state.abar / phase, -state.a0 * phase)


def strangeness_states() -> tuple[KaonState, KaonState]:
    """The flavor eigenstates (|K0>, |K0bar>)."""
    return (
        KaonState(1.0, 0.0, KaonLabel.K0),
        KaonState(0.0, 1.0, KaonLabel.K0BAR),
    )


def cp_eigenstates(alpha: float) -> tuple[KaonState, KaonState]:
    """CP eigenstates (K1, K2) for the transformation phase ``alpha``.

    K1 = (|K0> - e^{i alpha} |K0bar>) / sqrt(2) has CP eigenvalue +1,
    K2 = (|K0> + e^{i alpha} |K0bar>) / sqrt(2) has CP eigenvalue -1,
    both with respect to ``CpTransform(alpha)``.
    """
    alpha = _as_finite_float(alpha, "alpha")
    phase = cmath.exp(1j * alpha)
    k1 = KaonState(_SQRT_HALF, -phase * _SQRT_HALF, KaonLabel.K1)
    k2 = KaonState(_SQRT_HALF, phase * _SQRT_HALF, KaonLabel.K2)
    return k1, k2


def mass_eigenstates(mix: MixingParameters) -> tuple[KaonState, KaonState]:
    """Short- and long-lived states (K_S, K_L) for mixing weights (p, q).

    K_S = (p |K0> - q |K0bar>) / N and K_L = (p |K0> + q |K0bar>) / N.
    Both are unit norm; they are orthogonal only when |p| = |q|, with
    <K_S|K_L> = (|p|^2 - |q|^2) / N^2 in general.
    """
    inv_n = 1.0 / mix.norm
    ks = KaonState(mix.p * inv_n, -mix.q * inv_n, KaonLabel.KS)
    kl = KaonState(mix.p * inv_n, mix.q * inv_n, KaonLabel.KL)
    return ks, kl


def mixing_from_epsilon(epsilon: complex) -> MixingParameters:
    """Mixing weights p = 1 + eps, q = 1 - eps for a CP-violation parameter.

    eps = 1 or eps = -1 makes one weight vanish and raises
    :class:`DegenerateMixingError`.
    """
    eps = _as_finite_complex(epsilon, "epsilon")
    return MixingParameters(1.0 + eps, 1.0 - eps)


def rephase(state: KaonState, gamma0: float, gammabar: float) -> KaonState:
    """Multiply the K0 component by e^{i gamma0} and the K0bar one by e^{i gammabar}.

    This is the unphysical phase freedom of the basis states; moduli of
    inner products between consistently rephased states are unchanged.
    """
    gamma0 = _as_finite_float(gamma0, "gamma0")
    gammabar = _as_finite_float(gammabar, "gammabar")
    return KaonState(
        state.a0 * cmath.exp(1j * gamma0),
        state.abar * cmath.exp(1j * gammabar),
    )


def inner_product(bra: KaonState, ket: KaonState) -> complex:
    """<bra|ket>, conjugate-linear in the bra and linear in the ket."""
    return bra.a0.conjugate() * ket.a0 + bra.abar.conjugate() * ket.abar


def orthogonal_state(state: KaonState) -> KaonState:
    """The unique (up to phase) state orthogonal to ``state``."""
    return KaonState(-state.abar.conjugate(), state.a0.conjugate())
