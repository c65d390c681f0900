import numpy as np

from kaonbell import KaonState, MixingParameters


def random_state(rng: np.random.Generator) -> KaonState:
    """A random normalized state (constructor handles the normalization)."""
    re_im = rng.normal(size=4)
    return KaonState(complex(re_im[0], re_im[1]), complex(re_im[2], re_im[3]))


def random_mixing(rng: np.random.Generator) -> MixingParameters:
    """Random weights with moduli well away from zero."""
    mods = rng.uniform(0.3, 3.0, size=2)
    phases = rng.uniform(-np.pi, np.pi, size=2)
    return MixingParameters(
        complex(mods[0] * np.exp(1j * phases[0])),
        complex(mods[1] * np.exp(1j * phases[1])),
    )
