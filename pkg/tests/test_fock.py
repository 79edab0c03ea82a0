"""Ladder operators, the field operator, and inner products on sparse states."""

import math

import numpy as np
import pytest

from brightdark.errors import DimensionMismatchError
from brightdark.fock import (
    ModePhases,
    StateVector,
    annihilate,
    apply_field,
    create,
    inner_product,
    tensor,
    vacuum,
)

SQRT2 = math.sqrt(2.0)


def ket(modes, occ, amp=1.0, cutoff=None):
    occ = tuple(occ)
    return StateVector(modes, {occ: amp}, cutoff if cutoff is not None else sum(occ))


def test_annihilate_single_quantum():
    out = annihilate(ket(2, (1, 0)), 0)
    assert out.terms == {(0, 0): pytest.approx(1.0)}


def test_annihilate_normalization():
    out = annihilate(ket(2, (2, 0), cutoff=2), 0)
    assert out.amplitude((1, 0)) == pytest.approx(SQRT2)
    assert len(out.terms) == 1


def test_annihilate_vacuum_gives_zero_vector():
    out = annihilate(vacuum(2), 1)
    assert out.is_zero()


def test_annihilate_mode_out_of_range():
    with pytest.raises(IndexError):
        annihilate(ket(2, (1, 0)), 2)
    with pytest.raises(IndexError):
        annihilate(ket(2, (1, 0)), -1)


def test_create_then_annihilate_round_trip():
    state = vacuum(3, cutoff=2)
    up = create(create(state, 1), 1)
    assert up.amplitude((0, 2, 0)) == pytest.approx(SQRT2)
    down = annihilate(up, 1)
    assert down.amplitude((0, 1, 0)) == pytest.approx(2.0)


def test_create_truncates_at_cutoff():
    full = ket(1, (3,), cutoff=3)
    assert create(full, 0).is_zero()


def test_commutation_below_cutoff():
    # [a, a+] acts as identity on every ket strictly below the cutoff.
    cutoff = 4
    for occ in [(0, 0), (1, 0), (2, 1), (1, 2)]:
        state = ket(2, occ, cutoff=cutoff)
        for mode in range(2):
            lhs = annihilate(create(state, mode), mode)
            rhs = create(annihilate(state, mode), mode)
            diff = lhs.amplitude(occ) - rhs.amplitude(occ)
            assert diff == pytest.approx(1.0, abs=1e-12)


def test_field_on_symmetric_pair_reaches_sqrt_m():
    plus = StateVector(2, {(1, 0): 1 / SQRT2, (0, 1): 1 / SQRT2}, 1)
    out = apply_field(plus, ModePhases.zero(2))
    assert out.amplitude((0, 0)) == pytest.approx(SQRT2)
    assert out.norm() == pytest.approx(SQRT2)


def test_field_annihilates_antisymmetric_pair():
    minus = StateVector(2, {(1, 0): 1 / SQRT2, (0, 1): -1 / SQRT2}, 1)
    assert apply_field(minus, ModePhases.zero(2)).is_zero()


def test_field_annihilates_two_photon_dark_combination():
    # (1/sqrt2)[(1/sqrt2)|0,2> - |1,1> + (1/sqrt2)|2,0>]: ladder algebra cancels.
    state = StateVector(
        2,
        {(0, 2): 0.5, (1, 1): -1 / SQRT2, (2, 0): 0.5},
        cutoff=2,
    )
    assert state.norm() == pytest.approx(1.0)
    assert apply_field(state, ModePhases.zero(2)).is_zero()


def test_field_requires_matching_mode_count():
    with pytest.raises(DimensionMismatchError):
        apply_field(ket(2, (1, 0)), ModePhases.zero(3))


def test_field_is_linear():
    rng = np.random.default_rng(7)
    a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
    u = StateVector(2, {(1, 0): 0.3, (0, 1): 0.2 + 0.1j}, 1)
    v = StateVector(2, {(1, 0): -0.5j, (0, 1): 0.8}, 1)
    combo = StateVector(
        2,
        {
            (1, 0): a * u.amplitude((1, 0)) + b * v.amplitude((1, 0)),
            (0, 1): a * u.amplitude((0, 1)) + b * v.amplitude((0, 1)),
        },
        1,
    )
    phases = ModePhases(2, (0.4, 1.9))
    lhs = apply_field(combo, phases)
    fu = apply_field(u, phases)
    fv = apply_field(v, phases)
    expected = a * fu.amplitude((0, 0)) + b * fv.amplitude((0, 0))
    assert lhs.amplitude((0, 0)) == pytest.approx(expected, abs=1e-12)


def test_inner_product_orthonormal_basis():
    assert inner_product(ket(2, (1, 0)), ket(2, (1, 0))) == pytest.approx(1.0)
    assert inner_product(ket(2, (1, 0)), ket(2, (0, 1))) == 0.0


def test_inner_product_conjugate_linear_first_argument():
    a = StateVector(1, {(1,): 2.0j}, 1)
    b = StateVector(1, {(1,): 3.0}, 1)
    assert inner_product(a, b) == pytest.approx(-6.0j)
    assert inner_product(b, a) == pytest.approx(6.0j)


def test_inner_product_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        inner_product(ket(2, (1, 0)), ket(3, (1, 0, 0)))


def test_tensor_concatenates_modes():
    left = StateVector(2, {(1, 0): 0.6, (0, 1): 0.8}, 1)
    right = ket(1, (2,), cutoff=2)
    prod = tensor(left, right)
    assert prod.modes == 3
    assert prod.amplitude((1, 0, 2)) == pytest.approx(0.6)
    assert prod.amplitude((0, 1, 2)) == pytest.approx(0.8)


def test_state_vector_prunes_tiny_amplitudes():
    state = StateVector(2, {(1, 0): 1.0, (0, 1): 1e-16}, 1)
    assert (0, 1) not in state.terms


def test_state_vector_rejects_over_cutoff_terms():
    with pytest.raises(ValueError):
        StateVector(2, {(2, 1): 1.0}, cutoff=2)


def test_mode_phases_reduce_to_standard_interval():
    phases = ModePhases(3, (-0.1, 7.0, 2 * math.pi))
    for theta in phases.theta:
        assert 0.0 <= theta < 2 * math.pi
    assert phases.theta[2] == 0.0


def test_locked_phase_ladder_steps():
    step = 0.5  # power of two: the m*step recurrence is exact in floats
    phases = ModePhases.locked(5, step)
    raw = [m * step for m in range(5)]
    for m in range(1, 5):
        assert raw[m] - raw[m - 1] == step
    np.testing.assert_allclose(phases.theta, raw, atol=0)
