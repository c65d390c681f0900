"""Entangled neutral kaons at creation time: Bell tests, CP-violation bounds
and interference-damping bounds.

The package works entirely at t = 0 (no oscillation or decay dynamics):

- :mod:`kaonbell.quasispin`   single-kaon two-level algebra
- :mod:`kaonbell.entangle`    pair state and joint probabilities
- :mod:`kaonbell.bell`        Uchiyama's inequality and the |p| vs |q| bounds
- :mod:`kaonbell.decoherence` bounds on the interference-damping parameter
- :mod:`kaonbell.tagging_mc`  semileptonic-tagging Monte Carlo
- :mod:`kaonbell.cli`         command-line front end
"""

from .bell import (
    BellAssessment,
    LrtBounds,
    leptonic_asymmetry,
    lrt_bound_check,
    mixing_from_delta,
    optimal_alpha,
    reduced_inequality_margin,
    uchiyama_assessment,
)
from .decoherence import (
    ExperimentComparison,
    NoRootError,
    ZetaBoundResult,
    compare_with_experiment,
    propagate_delta_uncertainty,
    zeta_lower_bound_exact,
    zeta_lower_bound_expansion,
    zeta_lower_bound_numeric,
    zeta_probability_triple,
)
from .entangle import (
    Basis,
    EntangledPair,
    ZetaModel,
    joint_probability,
    joint_probability_zeta,
    singlet_mass_basis,
    singlet_strangeness,
)
from .quasispin import (
    CpTransform,
    DegenerateMixingError,
    KaonLabel,
    KaonState,
    MixingParameters,
    cp_eigenstates,
    inner_product,
    mass_eigenstates,
    mixing_from_epsilon,
    rephase,
    strangeness_states,
)
from .tagging_mc import McConfig, McResult, required_events, sample_kl_tags

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BellAssessment",
    "CpTransform",
    "DegenerateMixingError",
    "EntangledPair",
    "ExperimentComparison",
    "KaonLabel",
    "KaonState",
    "LrtBounds",
    "McConfig",
    "McResult",
    "MixingParameters",
    "NoRootError",
    "ZetaBoundResult",
    "ZetaModel",
    "compare_with_experiment",
    "cp_eigenstates",
    "inner_product",
    "joint_probability",
    "joint_probability_zeta",
    "leptonic_asymmetry",
    "lrt_bound_check",
    "mass_eigenstates",
    "mixing_from_delta",
    "mixing_from_epsilon",
    "optimal_alpha",
    "propagate_delta_uncertainty",
    "reduced_inequality_margin",
    "rephase",
    "required_events",
    "sample_kl_tags",
    "singlet_mass_basis",
    "singlet_strangeness",
    "strangeness_states",
    "uchiyama_assessment",
    "zeta_lower_bound_exact",
    "zeta_lower_bound_expansion",
    "zeta_lower_bound_numeric",
    "zeta_probability_triple",
]
