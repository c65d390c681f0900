import cmath
import math

import numpy as np
import pytest

from conftest import random_mixing, random_state
from kaonbell import (
    Basis,
    EntangledPair,
    MixingParameters,
    ZetaModel,
    cp_eigenstates,
    joint_probability,
    joint_probability_zeta,
    mass_eigenstates,
    mixing_from_delta,
    mixing_from_epsilon,
    singlet_mass_basis,
    singlet_strangeness,
    strangeness_states,
)
from kaonbell.entangle import amplitude, decompose
from kaonbell.quasispin import orthogonal_state

ATOL = 1e-12

# Frozen: |p|^2 / (2 N^2) for eps = 0.002 e^{i pi/4}.
P_KS_K0BAR_EPS = 0.25070710395277074

EPS_EXAMPLE = 0.002 * cmath.exp(1j * math.pi / 4)


def qm_triple(mix, alpha):
    """The three closed-form probabilities of the inequality."""
    p_k1 = 0.25
    p_ks = abs(mix.p) ** 2 / (2 * mix.norm_sq)
    p_ks_k1 = abs(mix.p * cmath.exp(1j * alpha) - mix.q) ** 2 / (4 * mix.norm_sq)
    return p_k1, p_ks, p_ks_k1


def test_singlet_strangeness_basics():
    pair = singlet_strangeness()
    k0, k0bar = strangeness_states()
    assert joint_probability(pair, k0, k0) == 0
    assert abs(joint_probability(pair, k0, k0bar) - 0.5) < ATOL
    for alpha in (0.0, 0.7, -2.2, math.pi):
        k1, _ = cp_eigenstates(alpha)
        assert abs(joint_probability(pair, k1, k0bar) - 0.25) < ATOL


def test_mass_basis_form_is_the_same_state():
    rng = np.random.default_rng(3)
    pair_s = singlet_strangeness()
    for _ in range(5):
        mix = random_mixing(rng)
        pair_m = singlet_mass_basis(mix)
        ks, _ = mass_eigenstates(mix)
        assert joint_probability(pair_m, ks, ks) <= 1e-15
        worst = max(
            abs(
                joint_probability(pair_m, f1, f2)
                - joint_probability(pair_s, f1, f2)
            )
            for f1, f2 in ((random_state(rng), random_state(rng)) for _ in range(50))
        )
        assert worst < ATOL


def test_frozen_p_ks_k0bar():
    mix = mixing_from_epsilon(EPS_EXAMPLE)
    ks, _ = mass_eigenstates(mix)
    _, k0bar = strangeness_states()
    assert abs(joint_probability(singlet_mass_basis(mix), ks, k0bar) - P_KS_K0BAR_EPS) < 1e-12


def test_closed_form_probabilities():
    rng = np.random.default_rng(17)
    pair = singlet_strangeness()
    k0, k0bar = strangeness_states()
    for _ in range(50):
        mix = random_mixing(rng)
        alpha = rng.uniform(-math.pi, math.pi)
        ks, _ = mass_eigenstates(mix)
        k1, _ = cp_eigenstates(alpha)
        p_k1, p_ks, p_ks_k1 = qm_triple(mix, alpha)
        assert abs(joint_probability(pair, k1, k0bar) - p_k1) < 1e-10
        assert abs(joint_probability(pair, ks, k0bar) - p_ks) < 1e-10
        assert abs(joint_probability(pair, ks, k1) - p_ks_k1) < 1e-10


def test_antisymmetry_forbids_like_outcomes():
    rng = np.random.default_rng(29)
    pair = singlet_strangeness()
    pair_m = singlet_mass_basis(random_mixing(rng))
    for _ in range(50):
        f = random_state(rng)
        assert joint_probability(pair, f, f) <= 1e-15
        assert joint_probability(pair_m, f, f) <= 1e-15


def test_antisymmetry_of_amplitudes():
    rng = np.random.default_rng(31)
    pair = singlet_strangeness()
    for _ in range(20):
        f1, f2 = random_state(rng), random_state(rng)
        assert abs(amplitude(pair, f2, f1) + amplitude(pair, f1, f2)) < ATOL


def test_completeness_over_product_bases():
    rng = np.random.default_rng(37)
    pair = singlet_strangeness()
    k0, k0bar = strangeness_states()
    total = sum(
        joint_probability(pair, f1, f2)
        for f1 in (k0, k0bar)
        for f2 in (k0, k0bar)
    )
    assert abs(total - 1.0) < ATOL
    for p in (pair, singlet_mass_basis(random_mixing(rng))):
        for _ in range(10):
            f = random_state(rng)
            g = random_state(rng)
            left = (f, orthogonal_state(f))
            right = (g, orthogonal_state(g))
            total = sum(joint_probability(p, a, b) for a in left for b in right)
            assert abs(total - 1.0) < ATOL


def test_decompose_solves_the_linear_system():
    rng = np.random.default_rng(41)
    mix = random_mixing(rng)
    ks, kl = mass_eigenstates(mix)
    f = random_state(rng)
    c1, c2 = decompose(f, ks, kl)
    assert abs(c1 * ks.a0 + c2 * kl.a0 - f.a0) < ATOL
    assert abs(c1 * ks.abar + c2 * kl.abar - f.abar) < ATOL
    with pytest.raises(ValueError):
        decompose(f, ks, ks)


def test_pair_constructor_normalizes_and_rejects_degenerate():
    rng = np.random.default_rng(43)
    states = [random_state(rng) for _ in range(4)]
    pair = EntangledPair(*states, coeff=3.7 - 1.1j)
    f = states[0]
    left = (f, orthogonal_state(f))
    right = (states[1], orthogonal_state(states[1]))
    total = sum(joint_probability(pair, a, b) for a in left for b in right)
    assert abs(total - 1.0) < ATOL
    with pytest.raises(ValueError):
        EntangledPair(states[0], states[1], states[0], states[1], coeff=1.0)
    with pytest.raises(ValueError):
        EntangledPair(*states, coeff=0.0)


def test_zeta_model_validation():
    with pytest.raises(ValueError):
        ZetaModel(Basis.KS_KL, -0.1)
    with pytest.raises(ValueError):
        ZetaModel(Basis.KS_KL, 1.0 + 1e-9)
    with pytest.raises(TypeError):
        ZetaModel("ks-kl", 0.5)


def test_zeta_zero_reduces_to_quantum_mechanics():
    rng = np.random.default_rng(47)
    pair = singlet_strangeness()
    for basis in Basis:
        model = ZetaModel(basis, 0.0)
        for _ in range(25):
            mix = random_mixing(rng)
            f1, f2 = random_state(rng), random_state(rng)
            assert (
                abs(
                    joint_probability_zeta(mix, model, f1, f2)
                    - joint_probability(pair, f1, f2)
                )
                < ATOL
            )


def test_zeta_one_ks_ks_interference_free_sum():
    # without the cross term, P(K_S, K_S) vanishes only for |p| = |q|
    mix = MixingParameters(1.4 * cmath.exp(0.3j), 0.9 * cmath.exp(-1.1j))
    ks, _ = mass_eigenstates(mix)
    model = ZetaModel(Basis.KS_KL, 1.0)
    n_sq = mix.norm_sq
    overlap_sq = ((abs(mix.p) ** 2 - abs(mix.q) ** 2) / n_sq) ** 2
    expected = n_sq**2 / (4 * abs(mix.p) ** 2 * abs(mix.q) ** 2) * overlap_sq
    assert abs(joint_probability_zeta(mix, model, ks, ks) - expected) < ATOL
    balanced = MixingParameters(cmath.exp(0.4j), 1.0)
    ks_b, _ = mass_eigenstates(balanced)
    assert joint_probability_zeta(balanced, ZetaModel(Basis.KS_KL, 1.0), ks_b, ks_b) <= 1e-15


def test_k0_basis_leaves_first_two_probabilities_unchanged():
    rng = np.random.default_rng(53)
    _, k0bar = strangeness_states()
    for _ in range(20):
        mix = random_mixing(rng)
        alpha = rng.uniform(-math.pi, math.pi)
        k1, _ = cp_eigenstates(alpha)
        ks, _ = mass_eigenstates(mix)
        base_k1 = joint_probability_zeta(mix, ZetaModel(Basis.K0_K0BAR, 0.0), k1, k0bar)
        base_ks = joint_probability_zeta(mix, ZetaModel(Basis.K0_K0BAR, 0.0), ks, k0bar)
        for zeta in (0.3, 0.8, 1.0):
            model = ZetaModel(Basis.K0_K0BAR, zeta)
            assert abs(joint_probability_zeta(mix, model, k1, k0bar) - base_k1) < ATOL
            assert abs(joint_probability_zeta(mix, model, ks, k0bar) - base_ks) < ATOL


def test_ksl_zeta_corrections_are_alpha_independent():
    rng = np.random.default_rng(59)
    mix = random_mixing(rng)
    zeta = 0.61
    _, k0bar = strangeness_states()
    ks, _ = mass_eigenstates(mix)
    damped = ZetaModel(Basis.KS_KL, zeta)
    plain = ZetaModel(Basis.KS_KL, 0.0)

    def corrections(alpha):
        k1, _ = cp_eigenstates(alpha)
        return (
            joint_probability_zeta(mix, damped, k1, k0bar)
            - joint_probability_zeta(mix, plain, k1, k0bar),
            joint_probability_zeta(mix, damped, ks, k0bar)
            - joint_probability_zeta(mix, plain, ks, k0bar),
            joint_probability_zeta(mix, damped, ks, k1)
            - joint_probability_zeta(mix, plain, ks, k1),
        )

    reference = corrections(0.0)
    for alpha in rng.uniform(-math.pi, math.pi, size=20):
        got = corrections(float(alpha))
        assert max(abs(a - b) for a, b in zip(got, reference)) < ATOL


def test_damped_values_outside_unit_interval_warn():
    mix = mixing_from_delta(0.998)
    ks, _ = mass_eigenstates(mix)
    k1, _ = cp_eigenstates(0.0)
    with pytest.warns(UserWarning):
        value = joint_probability_zeta(mix, ZetaModel(Basis.KS_KL, 1.0), ks, k1)
    assert value > 1.0  # returned as computed, not clamped
