import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src import exceptions
from src.models.quaternion import (
    ONE,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    ComplexRep,
    Quaternion,
    UnitImaginary,
    canonical_rep,
    exp_mu,
    mul,
)
from src.services.numeric.geometry import random_unit_quaternion

component = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, component, component, component, component)
nonzero = quaternions.filter(lambda q: q.modulus() > 1e-3)


def test_basis_table():
    assert UNIT_I * UNIT_J == UNIT_K
    assert UNIT_J * UNIT_I == -UNIT_K
    assert UNIT_J * UNIT_K == UNIT_I
    assert UNIT_K * UNIT_I == UNIT_J
    for unit in (UNIT_I, UNIT_J, UNIT_K):
        assert unit * unit == -ONE


def test_bilinear_expansion():
    assert (ONE + UNIT_I) * (ONE + UNIT_J) == Quaternion(1, 1, 1, 1)


@given(quaternions)
def test_one_is_neutral(q):
    assert mul(q, ONE) == q
    assert mul(ONE, q) == q


@given(nonzero)
def test_inverse(q):
    assert (q * q.inverse()).is_close(ONE, 1e-14 * max(1.0, q.modulus()))


@given(quaternions, quaternions)
def test_modulus_is_multiplicative(a, b):
    assert math.isclose((a * b).modulus(), a.modulus() * b.modulus(), rel_tol=1e-13, abs_tol=1e-13)


@given(quaternions, quaternions)
def test_conjugate_reverses_product(a, b):
    assert (a * b).conj().is_close(b.conj() * a.conj(), 1e-10)


@given(quaternions, quaternions, quaternions)
def test_associativity(a, b, c):
    assert ((a * b) * c).is_close(a * (b * c), 1e-9)


def test_fractions_stay_exact():
    q = Quaternion(Fraction(1, 3), Fraction(1, 2), 0, Fraction(-2, 7))
    product = q * q.inverse()
    assert product == Quaternion(1, 0, 0, 0)
    assert isinstance(product.w, Fraction)


def test_zero_has_no_inverse():
    with pytest.raises(exceptions.SingularMatrix):
        Quaternion().inverse()


def test_from_list_requires_four_components():
    assert Quaternion.from_list([1, 2, 3, 4]).to_list() == [1.0, 2.0, 3.0, 4.0]
    with pytest.raises(exceptions.BadRequest):
        Quaternion.from_list([1, 2, 3])


def test_exp_mu_examples():
    axis = UnitImaginary(1.0, 0.0, 0.0)
    assert exp_mu(axis, 0.0) == ONE
    assert exp_mu(axis, math.pi / 2).is_close(UNIT_I, 1e-15)


@given(
    st.floats(min_value=-math.pi, max_value=math.pi),
    st.floats(min_value=-math.pi, max_value=math.pi),
)
def test_exp_mu_angle_sum(a, b):
    axis = UnitImaginary.normalized(1.0, -2.0, 0.5)
    assert (exp_mu(axis, a) * exp_mu(axis, b)).is_close(exp_mu(axis, a + b), 1e-12)


def test_axis_squares_to_minus_one():
    axis = UnitImaginary.normalized(0.3, 0.4, 1.2).as_quaternion()
    assert (axis * axis).is_close(-ONE, 1e-15)


def test_axis_must_be_unit():
    with pytest.raises(exceptions.BadRequest):
        UnitImaginary(1.0, 1.0, 0.0)
    with pytest.raises(exceptions.ZeroVector):
        UnitImaginary.normalized(0.0, 0.0, 0.0)


def test_canonical_rep_examples():
    assert canonical_rep(UNIT_J) == ComplexRep(0.0, 1.0)
    assert canonical_rep(Quaternion.real(3)) == ComplexRep(3.0, 0.0)


def test_canonical_rep_is_conjugation_invariant():
    rng = np.random.default_rng(7)
    q = Quaternion(0.4, -1.2, 2.0, 0.7)
    expected = canonical_rep(q)
    for _ in range(100):
        u = random_unit_quaternion(rng)
        rep = canonical_rep(u.inverse() * q * u)
        assert rep.re == pytest.approx(expected.re, abs=1e-13)
        assert rep.im == pytest.approx(expected.im, abs=1e-13)
        assert rep.modulus() == pytest.approx(q.modulus(), rel=1e-13)


def test_complex_rep_rejects_lower_half_plane():
    with pytest.raises(exceptions.BadRequest):
        ComplexRep(1.0, -0.5)
