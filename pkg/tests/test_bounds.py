import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src import exceptions
from src.config import Tolerances
from src.models.geometry import Isometry, ModelForm
from src.models.qmatrix import QMatrix
from src.models.quaternion import UnitImaginary, exp_mu
from src.models.state import CertifyOutcome, IsometryClass
from src.services.numeric import bounds, geometry
from src.services.numeric.linalg import spectral_norm

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def _rotation(angles: list[float], n: int = 2) -> Isometry:
    axis = UnitImaginary(1.0, 0.0, 0.0)
    theta = QMatrix.diag([exp_mu(axis, angle) for angle in angles[:n]])
    return geometry.stabilizer(theta, exp_mu(axis, angles[n]))


def _displaced(n: int, delta: float, rng: np.random.Generator) -> Isometry:
    k1 = geometry.random_stabilizer(n, rng)
    k2 = geometry.random_stabilizer(n, rng)
    return k1 @ geometry.dilation(n, math.exp(delta / 2.0)) @ k2


@pytest.mark.parametrize("n", [2, 3, 7])
def test_constants(n):
    constants = bounds.solve_constants(n)
    tau, omega = constants.tau, constants.omega
    assert abs(2 * tau * (1 + tau) ** 2 - 1) <= 1e-12
    assert 0.2971 < tau < 0.2972
    assert 0.3854 < omega < 0.3855
    assert abs(2 * omega * (2 * omega ** 2 + 1) - 1) <= 1e-12
    assert abs(2 * omega ** 2 - tau) <= 1e-14
    assert constants.omega_printed_relation == pytest.approx(0.5 * math.sqrt(tau))
    assert constants.lambda_n == pytest.approx(0.05 / 9 ** (n + 1), rel=1e-13)
    assert constants.lambda_parity_corrected == pytest.approx(0.05 / 18 ** (n + 1), rel=1e-13)


def test_lambda_2():
    assert bounds.lambda_n(2) == pytest.approx(6.8587105624e-05, rel=1e-9)
    with pytest.raises(exceptions.BadRequest):
        bounds.solve_constants(1)


def test_commutator_trivial_cases():
    D = geometry.dilation(2, 2.0).matrix
    E = geometry.dilation(2, 3.0).matrix
    identity = QMatrix.identity(3)
    assert bounds.commutator_defect(D, identity) <= 1e-15
    assert bounds.commutator_defect(D, E) <= 1e-12
    with pytest.raises(exceptions.ShapeMismatch):
        bounds.commutator(D, QMatrix.identity(4))


@given(seeds)
def test_commutator_inequality(seed):
    rng = np.random.default_rng(seed)
    A = geometry.random_isometry(2, rng, 1.0).matrix
    B = geometry.random_isometry(2, rng, 1.0).matrix
    assert bounds.commutator_defect(A, B) <= bounds.commutator_bound(A, B) + 1e-8


def test_zassenhaus_alternative(rng):
    identity = QMatrix.identity(3)
    assert bounds.zassenhaus_alternative(identity, identity) == (0.0, 0.0)
    A = geometry.random_isometry(2, rng, 1.0).matrix
    B = geometry.random_isometry(2, rng, 1.0).matrix
    first, second = bounds.zassenhaus_alternative(A, B)
    a = spectral_norm(A - identity)
    assert first == pytest.approx(max(a, spectral_norm(B - identity)), abs=1e-10)
    assert second == pytest.approx(max(a, bounds.commutator_defect(A, B)), abs=1e-10)


def test_jorgensen_martin(rng):
    D = geometry.dilation(2, math.exp(0.01))
    K = geometry.random_stabilizer(2, rng)
    assert bounds.jorgensen_martin_test(D, D) == pytest.approx(math.exp(0.01) * math.expm1(0.01), rel=1e-9)
    assert bounds.jorgensen_martin_test(D, K) >= bounds.displacement_product(D.matrix)
    with pytest.raises(exceptions.ShapeMismatch):
        bounds.jorgensen_martin_test(D, geometry.dilation(3, 2.0))


def test_dirichlet_examples():
    result = bounds.dirichlet_approximate([0.5], 2)
    assert (result.q, result.p, result.max_error) == (2, [1], 0.0)
    for Q in (2, 5, 9):
        assert bounds.dirichlet_approximate([0.0], Q).q == 1
        assert bounds.dirichlet_approximate([0.0], Q).p == [0]


def test_dirichlet_golden_ratio_against_brute_force():
    theta = 0.6180339887
    result = bounds.dirichlet_approximate([theta], 10)
    assert result.q <= 10
    assert abs(theta - result.p[0] / result.q) <= 1 / (10 * result.q)
    earlier = [q for q in range(1, result.q) if abs(q * theta - round(q * theta)) < 1 / 10]
    assert earlier == []


@given(
    st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=3),
    st.sampled_from([2, 3, 5, 9]),
)
def test_dirichlet_range_and_error(thetas, Q):
    result = bounds.dirichlet_approximate(thetas, Q)
    assert 1 <= result.q <= Q ** len(thetas)
    for theta, p in zip(thetas, result.p):
        assert abs(result.q * theta - p) < 1 / Q


def test_dirichlet_validation():
    with pytest.raises(exceptions.BadRequest):
        bounds.dirichlet_approximate([], 9)
    with pytest.raises(exceptions.BadRequest):
        bounds.dirichlet_approximate([1.5], 9)
    with pytest.raises(exceptions.BadRequest):
        bounds.dirichlet_approximate([0.5], 1)
    with pytest.raises(exceptions.BadRequest):
        bounds.dirichlet_approximate([0.1] * 20, 9)


def test_dirichlet_broken_rounding_is_reported(monkeypatch):
    monkeypatch.setattr(bounds, "nearest_integers", lambda values: np.rint(values) + 1)
    with pytest.raises(exceptions.DirichletSearchExhausted):
        bounds.dirichlet_approximate([0.3, 0.7], 9)


def test_rotation_of_identity():
    certificate = bounds.approximate_rotation(Isometry(QMatrix.identity(3), ModelForm.half_space(2)))
    assert certificate.q == 1
    assert certificate.achieved == pytest.approx(0.0, abs=1e-14)


def test_rotation_uses_half_angles():
    # θ = 1/2: q = 2 приближает θ, но R² = diag(−1, 1, 1) далеко от I
    certificate = bounds.approximate_rotation(_rotation([math.pi / 2, 0.0, 0.0]))
    assert certificate.q == 4
    assert certificate.achieved == pytest.approx(0.0, abs=1e-12)
    assert certificate.within_stated_range


@pytest.mark.parametrize("n", [2, 3])
def test_rotation_sweep(n):
    rng = np.random.default_rng(n)
    for _ in range(25):
        certificate = bounds.approximate_rotation(geometry.random_stabilizer(n, rng), 9)
        assert certificate.achieved <= math.pi / 9 + 1e-9
        assert certificate.q <= certificate.search_limit == 18 ** (n + 1)


def test_rotation_rejects_displacements():
    with pytest.raises(exceptions.DomainRejection):
        bounds.approximate_rotation(geometry.dilation(2, 2.0))


def test_resume_bound():
    assert bounds.resume_bound(1.0, 5, 9) == pytest.approx(math.pi / 9)
    r = math.exp(0.025 / 81)
    q = 81
    assert r ** q <= math.exp(0.025) * (1 + 1e-12)
    assert bounds.resume_bound(r, q, 9) < 0.3845
    with pytest.raises(exceptions.BadRequest):
        bounds.resume_bound(0.5, 1, 9)


def test_main_theorem_margin():
    margin = bounds.main_theorem_margin(2)
    assert 0.3830 < margin.bound < 0.3845
    assert margin.verdict
    assert margin.omega == pytest.approx(bounds.omega())
    assert bounds.main_theorem_margin(10).bound < margin.bound
    assert all(bounds.main_theorem_margin(n).verdict for n in range(2, 51))
    assert not bounds.main_theorem_margin(2, omega_value=0.38).verdict


def test_margin_readings():
    readings = {reading.name: reading for reading in bounds.main_theorem_margin(2).readings}
    assert set(readings) == {"printed", "conservative", "parity_lambda_n", "parity_corrected"}
    assert readings["conservative"].verdict
    assert readings["parity_corrected"].verdict
    assert not readings["parity_lambda_n"].verdict
    assert readings["parity_corrected"].q_max == 18 ** 3


def test_certify_dilation():
    D = geometry.dilation(2, math.exp(0.01))
    report = bounds.certify_displacement(D)
    assert report.outcome == CertifyOutcome.CERTIFIED
    assert report.q == 1
    assert report.r == pytest.approx(math.exp(0.01), rel=1e-12)
    assert report.product < report.omega
    assert report.verdict
    assert report.lemmas_hold()


def test_certify_identity():
    report = bounds.certify_displacement(Isometry(QMatrix.identity(3), ModelForm.half_space(2)))
    assert report.outcome == CertifyOutcome.FIXES_ORIGIN
    assert report.verdict is None


@pytest.mark.parametrize("n", [2, 3])
def test_certify_below_corrected_radius(n):
    rng = np.random.default_rng(100 + n)
    limit = bounds.lambda_parity_corrected(n)
    for _ in range(10):
        report = bounds.certify_displacement(_displaced(n, rng.uniform(0.1, 1.0) * limit, rng))
        assert report.lemmas_hold()
        assert report.product <= report.lemma_bound + 1e-8
        assert report.product < report.omega


def test_certify_below_lambda_n():
    rng = np.random.default_rng(5)
    for _ in range(10):
        report = bounds.certify_displacement(_displaced(2, rng.uniform(0.1, 1.0) * bounds.lambda_n(2), rng))
        assert report.lemmas_hold()
        assert report.norm_A <= report.r + 1e-9


def test_margin_in_high_dimension():
    assert bounds.lambda_n(400) == 0.0
    assert math.isfinite(bounds.log_lambda_n(400))
    margin = bounds.main_theorem_margin(400)
    readings = {reading.name: reading for reading in margin.readings}
    assert margin.verdict
    assert readings["parity_corrected"].verdict
    assert readings["parity_corrected"].q_max == 18 ** 401
    expected = math.exp(0.025) * (math.expm1(0.025) + math.pi / 9)
    assert readings["conservative"].bound == pytest.approx(expected, rel=1e-12)


def test_certify_reports_isometry_class(rng):
    assert bounds.certify_displacement(geometry.dilation(2, 2.0)).isometry_class == IsometryClass.LOXODROMIC
    assert bounds.certify_displacement(geometry.random_stabilizer(2, rng)).isometry_class == IsometryClass.ELLIPTIC


def test_certify_uses_run_tolerances():
    D = geometry.dilation(2, math.exp(0.01))
    report = bounds.certify_displacement(D, tolerances=Tolerances(FIXES_ORIGIN=10.0))
    assert report.outcome == CertifyOutcome.FIXES_ORIGIN
    report = bounds.certify_displacement(D, tolerances=Tolerances(CLASSIFY=1.0))
    assert report.outcome == CertifyOutcome.CERTIFIED
    assert report.isometry_class == IsometryClass.ELLIPTIC


def test_certify_rounded_isometry():
    A = geometry.random_isometry(2, 11, 0.5)
    for decimals in (8, 7):
        rounded = Isometry(QMatrix(np.round(A.matrix.data, decimals)), A.form, 1e-5)
        report = bounds.certify_displacement(rounded)
        assert report.outcome == CertifyOutcome.CERTIFIED
        assert report.r == pytest.approx(bounds.certify_displacement(A).r, rel=1e-6)
