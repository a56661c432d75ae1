import math
import sys

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from src import exceptions
from src.models.schemas import VolumeLowerBound, VolumeResult
from src.services.numeric.bounds import DEFAULT_Q, log_lambda_n

PRINTED_RADIUS_SCALE = 0.0175
SMALL_LOG_ARGUMENT = -20.0
LOG_FLOAT_MAX = math.log(sys.float_info.max)


def log_sigma(n: int) -> float:
    """ln σ_{4n} = 2n·ln π − ln (2n)!"""
    return 2 * n * math.log(math.pi) - float(gammaln(2 * n + 1))


def sigma(n: int) -> float:
    """Объем единичного шара в ℝ^{4n}: π^{2n}/(2n)!"""
    return math.exp(log_sigma(n))


def log_sinh(x: float) -> float:
    if x > 20.0:
        return x - math.log(2.0) + math.log1p(-math.exp(-2.0 * x))
    return math.log(math.sinh(x))


def _log_sinh_of_log(log_x: float) -> float:
    """ln sinh(x) по ln x; при малых x сам x не вычисляется"""
    if log_x < SMALL_LOG_ARGUMENT:
        return log_x + math.log1p(math.exp(2.0 * log_x) / 6.0)
    return log_sinh(math.exp(log_x))


def _log_cosh(x: float) -> float:
    return x - math.log(2.0) + math.log1p(math.exp(-2.0 * x))


def _exp(value: float) -> float:
    return math.exp(value) if value < LOG_FLOAT_MAX else math.inf


def _check(n: int, R: float):
    if n < 1:
        raise exceptions.BadRequest("Требуется n ≥ 1")
    if R < 0 or not math.isfinite(R):
        raise exceptions.BadRequest("Радиус должен быть неотрицательным числом")


def log_ball_volume(n: int, R: float) -> float:
    _check(n, R)
    if R == 0:
        return -math.inf
    return _log_volume_of_log_sinh(n, _log_sinh_of_log(math.log(R) - math.log(2.0)))


def _log_volume_of_log_sinh(n: int, log_s: float) -> float:
    # ln(1 + (2n/(2n+1))·sinh²)
    tail = float(np.logaddexp(0.0, math.log(2 * n / (2 * n + 1)) + 2.0 * log_s))
    return log_sigma(n) + n * math.log(16.0) - math.log(4 * n) + 4 * n * log_s + tail


def ball_volume(n: int, R: float) -> VolumeResult:
    """
    Объем шара радиуса R в H^n_ℍ:
    σ_{4n}·(16ⁿ/4n)·sinh^{4n}(R/2)·(1 + (2n/(2n+1))·sinh²(R/2))

    Вычисляется в логарифмах, поэтому σ_{4n} не переполняется при больших n.
    """
    log_volume = log_ball_volume(n, R)
    return VolumeResult(
        n=n,
        R=R,
        volume=0.0 if R == 0 else _exp(log_volume),
        sigma_4n=sigma(n),
        log_volume=None if R == 0 else log_volume,
    )


def volume_density(n: int, r: float) -> float:
    """σ_{4n}·2^{4n−1}·cosh³(r/2)·sinh^{4n−1}(r/2)"""
    _check(n, r)
    if r == 0:
        return 0.0
    s = r / 2.0
    return _exp(
        log_sigma(n) + (4 * n - 1) * math.log(2.0) + 3.0 * _log_cosh(s) + (4 * n - 1) * log_sinh(s)
    )


def integrate_density(n: int, R: float, *, epsrel: float = 1e-12, limit: int = 200) -> float:
    _check(n, R)
    if R == 0:
        return 0.0
    value, _ = integrate.quad(lambda r: volume_density(n, r), 0.0, R, epsabs=0.0, epsrel=epsrel, limit=limit)
    return value


def _closed_form(n: int, z: complex) -> complex:
    s = np.sinh(z / 2.0)
    return sigma(n) * 16.0 ** n / (4 * n) * s ** (4 * n) * (1.0 + (2 * n / (2 * n + 1)) * s ** 2)


def radial_derivative(n: int, R: float, h: float = 1e-20) -> float:
    """
    dV/dR замкнутой формулы комплексным шагом: Im V(R + ih)/h
    """
    _check(n, R)
    return float(np.imag(_closed_form(n, complex(R, h)))) / h


def manifold_volume_lower_bound(n: int, Q: int = DEFAULT_Q) -> VolumeLowerBound:
    """
    Нижняя оценка объема многообразия в двух прочтениях

    volume_recomputed: объем шара радиуса λ_n/2.
    volume_printed: 2·σ_{4n}·(16ⁿ/4n)·sinh^{4n}(0.0175/Q^{n+1}).

    Все величины считаются от ln λ_n: при n ≥ 8 сами объемы меньше
    наименьшего double и равны 0.0, логарифмы остаются конечными.
    """
    if n < 2:
        raise exceptions.BadRequest("Требуется n ≥ 2")
    log_lam = log_lambda_n(n, Q)
    # sinh(R/2) при R = λ_n/2
    recomputed = _log_volume_of_log_sinh(n, _log_sinh_of_log(log_lam - 2.0 * math.log(2.0)))
    log_printed_argument = math.log(PRINTED_RADIUS_SCALE) - (n + 1) * math.log(Q)
    printed = (
            math.log(2.0) + log_sigma(n) + n * math.log(16.0) - math.log(4 * n)
            + 4 * n * _log_sinh_of_log(log_printed_argument)
    )
    return VolumeLowerBound(
        n=n,
        lambda_n=math.exp(log_lam),
        radius=math.exp(log_lam - math.log(2.0)),
        volume_recomputed=_exp(recomputed),
        volume_printed=_exp(printed),
        log_volume_recomputed=recomputed,
        log_volume_printed=printed,
    )
