import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src import exceptions
from src.models.geometry import HorosphericalCoords, Isometry, ModelForm, ProjectivePoint
from src.models.qmatrix import QMatrix
from src.models.quaternion import UNIT_I, UNIT_J, UNIT_K, Quaternion, UnitImaginary, exp_mu
from src.models.state import IsometryClass, ModelKind, PointClass
from src.services.numeric import geometry
from src.services.numeric.linalg import spectral_norm
from tests.conftest import parabolic_matrix

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def _elliptic(n: int = 2) -> Isometry:
    angles = [exp_mu(UnitImaginary(1.0, 0.0, 0.0), 0.7), exp_mu(UnitImaginary(0.0, 1.0, 0.0), 1.1)]
    angles += [exp_mu(UnitImaginary(0.0, 0.0, 1.0), 0.2 * k) for k in range(1, n - 1)]
    return geometry.stabilizer(QMatrix.diag(angles), exp_mu(UnitImaginary(0.0, 0.0, 1.0), 0.3))


def _displaced(n: int, r: float, rng: np.random.Generator) -> Isometry:
    return geometry.random_stabilizer(n, rng) @ geometry.dilation(n, r) @ geometry.random_stabilizer(n, rng)


def test_forms_have_signature_n_1():
    for n in (2, 3, 5):
        assert ModelForm.half_space(n).signature() == (n, 1)
        assert ModelForm.ball(n).signature() == (n, 1)
    with pytest.raises(exceptions.BadRequest):
        ModelForm.half_space(1)


def test_pairing_examples():
    form = ModelForm.half_space(2)
    assert geometry.pairing(geometry.origin(2), geometry.origin(2), form) == Quaternion(-2.0, 0.0, 0.0, 0.0)
    assert geometry.pairing(geometry.q_infinity(2), geometry.q_infinity(2), form).modulus() == 0.0


@given(seeds)
def test_pairing_is_conjugate_symmetric(seed):
    rng = np.random.default_rng(seed)
    form = ModelForm.half_space(3)
    Z = geometry.random_quaternion_matrix(4, 1, rng)
    W = geometry.random_quaternion_matrix(4, 1, rng)
    assert geometry.pairing(Z, W, form).is_close(geometry.pairing(W, Z, form).conj(), 1e-13)


def test_point_classes():
    form = ModelForm.half_space(2)
    assert geometry.origin(2).point_class == PointClass.NEGATIVE
    assert geometry.q_infinity(2).point_class == PointClass.NULL
    assert ProjectivePoint.from_entries([0.0, 0.0, 1.0], form).point_class == PointClass.NULL
    assert ProjectivePoint.from_entries([1.0, 0.0, 1.0], form).point_class == PointClass.POSITIVE
    with pytest.raises(exceptions.ZeroVector):
        ProjectivePoint.from_entries([0.0, 0.0, 0.0], form)


def test_distance_examples():
    o = geometry.origin(2)
    assert geometry.distance(o, o) == 0.0
    for r in (1.5, math.e, 10.0):
        assert geometry.distance(o, geometry.dilation(2, r).apply(o)) == pytest.approx(2.0 * math.log(r), abs=1e-12)


def test_distance_to_horospherical_height():
    far = geometry.from_horospherical(HorosphericalCoords(xi=(Quaternion(),), v=Quaternion(), u=2.0 * math.e ** 2))
    assert geometry.distance(geometry.origin(2), far) == pytest.approx(2.0, abs=1e-12)


def test_distance_rejects_boundary_points():
    with pytest.raises(exceptions.NotInterior):
        geometry.distance(geometry.origin(2), geometry.q_infinity(2))


@given(seeds)
def test_distance_is_isometry_invariant(seed):
    rng = np.random.default_rng(seed)
    g = geometry.random_isometry(2, rng, 1.0)
    X = geometry.random_interior_point(2, rng)
    Y = geometry.random_interior_point(2, rng)
    assert geometry.distance(g.apply(X), g.apply(Y)) == pytest.approx(geometry.distance(X, Y), abs=1e-9)


def test_cayley_transform():
    C = geometry.cayley_matrix(3)
    assert (C @ C).allclose(QMatrix.identity(4), 1e-15)
    assert geometry.projectively_equal(geometry.cayley_to_half_space(geometry.ball_origin(3)), geometry.origin(3))
    assert geometry.projectively_equal(geometry.cayley_to_ball(geometry.origin(3)), geometry.ball_origin(3))


@given(seeds)
def test_cayley_transports_pairing(seed):
    rng = np.random.default_rng(seed)
    C = geometry.cayley_matrix(2)
    U = geometry.random_quaternion_matrix(3, 1, rng)
    W = geometry.random_quaternion_matrix(3, 1, rng)
    ball = geometry.pairing(U, W, ModelForm.ball(2))
    half_space = geometry.pairing(C @ U, C @ W, ModelForm.half_space(2))
    assert ball.is_close(half_space, 1e-13)


def test_horospherical_examples():
    h = geometry.to_horospherical(geometry.origin(2))
    assert h.u == pytest.approx(2.0)
    assert h.v.modulus() == 0.0
    assert all(q.modulus() == 0.0 for q in h.xi)
    assert geometry.to_horospherical(QMatrix.column([0.0, 0.0, 1.0])).u == 0.0
    with pytest.raises(exceptions.ChartError):
        geometry.to_horospherical(geometry.q_infinity(2))


@given(seeds)
def test_horospherical_roundtrip(seed):
    X = geometry.random_interior_point(3, np.random.default_rng(seed))
    h = geometry.to_horospherical(X)
    assert h.is_interior
    assert geometry.projectively_equal(geometry.from_horospherical(h), X, 1e-10)


def test_horospherical_v_must_be_imaginary():
    with pytest.raises(exceptions.BadRequest):
        HorosphericalCoords(xi=(Quaternion(),), v=Quaternion(1.0), u=1.0)


def test_isometry_requires_form_preservation():
    with pytest.raises(exceptions.NotAnIsometry):
        Isometry(QMatrix.diag([2.0, 1.0, 1.0]), ModelForm.half_space(2))


def test_isometry_group_operations(rng):
    A = geometry.random_isometry(3, rng, 1.0)
    B = geometry.random_isometry(3, rng, 1.0)
    identity = QMatrix.identity(4)
    assert (A @ A.inverse()).matrix.allclose(identity, 1e-10)
    assert A.power(3).matrix.allclose(A.matrix @ A.matrix @ A.matrix, 1e-10)
    assert A.conjugate_by(B).form_defect() <= 1e-8
    with pytest.raises(exceptions.ShapeMismatch):
        A @ geometry.random_isometry(2, rng, 1.0)


def test_random_isometry(rng):
    first = geometry.random_isometry(3, 42, 1.5)
    second = geometry.random_isometry(3, 42, 1.5)
    assert np.array_equal(first.matrix.data, second.matrix.data)
    assert first.form_defect() <= 1e-9
    assert geometry.fixes_origin(geometry.random_isometry(2, rng, 0.0))
    with pytest.raises(exceptions.BadRequest):
        geometry.random_isometry(1, rng, 1.0)


def test_classification():
    half_space = ModelForm.half_space(2)
    assert geometry.dilation(2, 2.0).class_tag == IsometryClass.LOXODROMIC
    assert _elliptic().class_tag == IsometryClass.ELLIPTIC
    assert _elliptic(3).class_tag == IsometryClass.ELLIPTIC
    assert Isometry(QMatrix.identity(3), half_space).class_tag == IsometryClass.IDENTITY
    assert Isometry(QMatrix.identity(3).scale(-1.0), half_space).class_tag == IsometryClass.IDENTITY
    for a in (UNIT_I, UNIT_J, UNIT_K):
        assert Isometry(parabolic_matrix(a), half_space).class_tag == IsometryClass.PARABOLIC


def test_classification_never_guesses():
    with pytest.raises(exceptions.IndeterminateClassification):
        geometry.classify_isometry(_elliptic(), cond_low=0.5)


def test_stabilizer_fixes_origin_with_unit_norm(rng):
    K = geometry.random_stabilizer(3, rng)
    assert geometry.fixes_origin(K)
    assert spectral_norm(K.matrix) == pytest.approx(1.0, abs=1e-10)
    assert geometry.cayley_transport(K).form.kind == ModelKind.BALL


def test_normalize_to_vertical(rng):
    o = geometry.origin(2)
    A = _displaced(2, 3.0, rng)
    vertical = geometry.normalize_to_vertical(A)
    h = geometry.to_horospherical(vertical.apply(o))
    assert h.v.modulus() <= 1e-10 * h.u
    assert all(q.modulus() <= 1e-10 * h.u for q in h.xi)
    assert geometry.distance(o, vertical.apply(o)) == pytest.approx(geometry.distance(o, A.apply(o)), abs=1e-10)


def test_normalize_keeps_vertical_displacement():
    o = geometry.origin(2)
    D = geometry.dilation(2, 1.7)
    vertical = geometry.normalize_to_vertical(D)
    assert geometry.distance(o, vertical.apply(o)) == pytest.approx(2.0 * math.log(1.7), abs=1e-12)


def test_dilation_decompose(rng):
    vertical = geometry.normalize_to_vertical(_displaced(3, 3.0, rng))
    decomposition = geometry.dilation_decompose(vertical)
    assert decomposition.r == pytest.approx(3.0, rel=1e-9)
    assert decomposition.delta == pytest.approx(2.0 * math.log(3.0), rel=1e-9)
    assert (decomposition.D @ decomposition.R).matrix.allclose(vertical.matrix, 1e-9)
    assert geometry.fixes_origin(decomposition.R)
    assert spectral_norm(decomposition.R.matrix) == pytest.approx(1.0, abs=1e-9)


def test_dilation_decompose_of_dilation():
    decomposition = geometry.dilation_decompose(geometry.dilation(2, 2.5))
    assert decomposition.r == pytest.approx(2.5, rel=1e-12)
    assert decomposition.R.matrix.allclose(QMatrix.identity(3), 1e-12)


def test_dilation_decompose_rejections(rng):
    with pytest.raises(exceptions.FixesOrigin):
        geometry.dilation_decompose(geometry.random_stabilizer(2, rng))
    with pytest.raises(exceptions.NotVertical):
        geometry.dilation_decompose(geometry.dilation(2, 0.5))
    with pytest.raises(exceptions.NotVertical):
        geometry.dilation_decompose(_displaced(2, 3.0, rng))
    with pytest.raises(exceptions.FixesOrigin):
        geometry.normalize_to_vertical(_elliptic())


@given(seeds)
def test_pairing_is_right_linear(seed):
    rng = np.random.default_rng(seed)
    form = ModelForm.half_space(2)
    Z = geometry.random_quaternion_matrix(3, 1, rng)
    W = geometry.random_quaternion_matrix(3, 1, rng)
    q = Quaternion(*rng.standard_normal(4))
    assert geometry.pairing(Z.right_mul(q), W, form).is_close(geometry.pairing(Z, W, form) * q, 1e-12)
    assert geometry.pairing(Z, W.right_mul(q), form).is_close(q.conj() * geometry.pairing(Z, W, form), 1e-12)


@given(seeds)
def test_scaled_lift_keeps_class_and_distance(seed):
    rng = np.random.default_rng(seed)
    X = geometry.random_interior_point(2, rng)
    Y = geometry.random_interior_point(2, rng)
    q = Quaternion(1.3, -0.4, 2.0, 0.7)
    assert X.scaled(q).point_class == PointClass.NEGATIVE
    assert geometry.q_infinity(2).scaled(q).point_class == PointClass.NULL
    assert geometry.distance(X.scaled(q), Y) == pytest.approx(geometry.distance(X, Y), abs=1e-9)


def test_classification_is_conjugation_invariant(rng):
    for A in (geometry.dilation(2, 2.0), _elliptic()):
        G = geometry.random_isometry(2, rng, 1.0)
        assert geometry.classify_isometry(A.conjugate_by(G)) == geometry.classify_isometry(A)

    # для параболических элементов сопряжение точными матрицами: D(2) и diag(j, 1, j)
    half_space = ModelForm.half_space(2)
    P = Isometry(parabolic_matrix(UNIT_I), half_space)
    twist = Isometry(QMatrix.diag([UNIT_J, 1.0, UNIT_J]), half_space)
    for G in (geometry.dilation(2, 2.0), twist):
        assert geometry.classify_isometry(P.conjugate_by(G)) == IsometryClass.PARABOLIC


def test_project_to_group_repairs_rounded_matrix():
    A = geometry.random_isometry(2, 5, 0.5)
    rounded = Isometry(QMatrix(np.round(A.matrix.data, 8)), A.form, 1e-6)
    assert rounded.form_defect() > 1e-10
    projected = geometry.project_to_group(rounded)
    assert projected.form_defect() <= 1e-13
    assert (projected.matrix - rounded.matrix).max_abs() <= 1e-7
    assert geometry.project_to_group(A).matrix.allclose(A.matrix, 1e-12)
