"""
변분 에너지 곡면 ε(x, d) = c·x² + b·x^(-ν) 와 x 방향 최적화

c, b 는 Laguerre 계수 a_k 에 대한 이중 감마 합의 비로 주어진다.
분자와 분모는 각각 math.fsum 으로 따로 누적한 뒤 나눈다. 감마 값은
분모 첫 항 Γ((2l+3)/d) 로 나눈 상대값 exp(lnΓ(arg) - lnΓ(ref)) 로 다뤄
작은 d 나 큰 l 에서도 넘치지 않는다.
"""
import math
from typing import Optional, Tuple

import numpy as np
from scipy import special

from config import get_config
from specfun.gamma import log_gamma
from specfun.laguerre import laguerre_coefficients
from utils.error_handling import DegenerateExponentError, DomainError, NoStationaryPointError
from utils.logging_config import get_project_logger
from variational.models import AnsatzParams, DSelection, QuantumState, ReducedEigenvalue, validate_exponent

logger = get_project_logger(__name__)


def compute_s(k: int, m: int, l: int, d: float) -> float:
    """s = (2l+1)(2l+d+1) + (k+m-(k-m)²)d²"""
    return (2 * l + 1) * (2 * l + d + 1) + (k + m - (k - m) ** 2) * d * d


def _check_d(d: float) -> None:
    if not d > 0.0 or math.isinf(d):
        raise DomainError(f"d 는 양의 유한 실수여야 합니다 (d={d})")


def _scaled_gamma_sum(state: QuantumState, d: float, offset: float, with_s: bool = False) -> float:
    """
    Σ_k Σ_m a_k a_m [s] Γ(k+m+offset) / Γ((2l+3)/d)

    Laguerre 상단 지수는 (2l+1)/d.
    """
    poly = laguerre_coefficients(state.n, state.laguerre_alpha_numerator / d)
    reference = log_gamma((2 * state.l + 3) / d)

    terms = []
    for k, a_k in enumerate(poly.coeffs):
        for m, a_m in enumerate(poly.coeffs):
            weight = a_k * a_m
            if with_s:
                weight *= compute_s(k, m, state.l, d)
            terms.append(weight * math.exp(log_gamma(k + m + offset) - reference))
    return math.fsum(terms)


def _normalization_sum(state: QuantumState, d: float) -> float:
    return _scaled_gamma_sum(state, d, (2 * state.l + 3) / d)


def compute_c(state: QuantumState, d: float) -> float:
    """
    운동 + 원심 항의 계수

    c = 2^((2-2d)/d) Σ a_k a_m s Γ(k+m+(2l+1)/d) / Σ a_k a_m Γ(k+m+(2l+3)/d)
    """
    _check_d(d)
    numerator = _scaled_gamma_sum(state, d, (2 * state.l + 1) / d, with_s=True)
    denominator = _normalization_sum(state, d)
    return 2.0 ** ((2.0 - 2.0 * d) / d) * numerator / denominator


def compute_b(state: QuantumState, d: float, nu: float, sign: int = 1) -> float:
    """
    퍼텐셜 항의 계수

    b = sgn · 2^(-ν/d) Σ a_k a_m Γ(k+m+(2l+ν+3)/d) / Σ a_k a_m Γ(k+m+(2l+3)/d)
    """
    _check_d(d)
    if not nu > -2.0:
        raise DomainError(f"ν 는 -2 보다 커야 합니다 (nu={nu})")
    numerator = _scaled_gamma_sum(state, d, (2 * state.l + nu + 3) / d)
    denominator = _normalization_sum(state, d)
    return sign * 2.0 ** (-nu / d) * numerator / denominator


def log_gamma_increment(a: float, shift: float) -> float:
    """
    lnΓ(a+shift) - lnΓ(a)

    |shift| 가 작으면 Σ ψ^(j)(a) shift^(j+1)/(j+1)! (j=0..5) 로 직접 더한다.
    두 lnΓ 값을 빼면 반올림 오차가 shift 크기의 결과에 그대로 남는다.
    """
    if abs(shift) > get_config('variational').get('gamma_shift_taylor', 1e-2):
        return log_gamma(a + shift) - log_gamma(a)
    orders = np.arange(6)
    derivatives = special.polygamma(orders, a)
    return math.fsum(derivatives * shift ** (orders + 1) / special.factorial(orders + 1))


def _scaled_gamma_shift_sum(state: QuantumState, d: float, offset: float, shift: float) -> float:
    """
    Σ_k Σ_m a_k a_m [Γ(k+m+offset+shift) - Γ(k+m+offset)] / Γ((2l+3)/d)

    각 항의 차이를 expm1(log_gamma_increment(arg, shift)) 로 직접 만든다.
    두 교대합을 따로 구해 빼면 작은 shift 에서 상쇄 오차만 남는다.
    """
    poly = laguerre_coefficients(state.n, state.laguerre_alpha_numerator / d)
    reference = log_gamma((2 * state.l + 3) / d)

    terms = []
    for k, a_k in enumerate(poly.coeffs):
        for m, a_m in enumerate(poly.coeffs):
            base = log_gamma(k + m + offset)
            growth = math.expm1(log_gamma_increment(k + m + offset, shift))
            terms.append(a_k * a_m * math.exp(base - reference) * growth)
    return math.fsum(terms)


def log_abs_b(state: QuantumState, d: float, nu: float) -> float:
    """
    ln|b| = -ν·ln2/d + log1p(Δ/Σ)

    Δ 는 분자 합과 분모 합의 차이를 항별로 모은 값. 작은 ν 에서 ln|b|/ν 를
    구해도 교대합의 상쇄 오차가 1/ν 로 커지지 않는다.
    """
    _check_d(d)
    denominator = _normalization_sum(state, d)
    difference = _scaled_gamma_shift_sum(state, d, (2 * state.l + 3) / d, nu / d)
    return -nu * math.log(2.0) / d + math.log1p(difference / denominator)


def _coefficients(d: float, state: QuantumState, nu: float, sign: int) -> Tuple[float, float]:
    return compute_c(state, d), compute_b(state, d, nu, sign)


def epsilon_of(x: float, d: float, state: QuantumState, nu: float, sign: int = 1) -> float:
    """ε(x, d) = c·x² + b·x^(-ν)"""
    if not x > 0.0:
        raise DomainError(f"x 는 양수여야 합니다 (x={x})")
    c, b = _coefficients(d, state, nu, sign)
    return c * x * x + b * x ** (-nu)


def _stationary_x(c: float, b: float, nu: float) -> float:
    if nu == 0.0:
        raise DegenerateExponentError("ν=0 은 상수 퍼텐셜입니다; 로그 퍼텐셜 경로를 사용하세요")
    ratio = b * nu / (2.0 * c)
    if not ratio > 0.0:
        raise NoStationaryPointError(f"b·ν/(2c) = {ratio:.6g} <= 0 이라 정류점이 없습니다")
    return ratio ** (1.0 / (nu + 2.0))


def optimal_x(d: float, state: QuantumState, nu: float, sign: int = 1) -> float:
    """∂ε/∂x = 0 의 해 x = (bν/2c)^(1/(ν+2))"""
    validate_exponent(nu, sign)
    c, b = _coefficients(d, state, nu, sign)
    return _stationary_x(c, b, nu)


def _warn_near_singular(nu: float) -> None:
    threshold = get_config('variational').get('near_singular_nu', -1.99)
    if nu <= threshold:
        logger.warning(f"ν={nu} 는 -2 에 가까워 감마 인자가 0 에 접근합니다")


def epsilon_nl(d: float, state: QuantumState, nu: float, sign: int = 1,
               d_mode: Optional[DSelection] = None) -> ReducedEigenvalue:
    """
    x 에 대해 최적화한 고유값 ε_nl(d)

    정의는 직접형 c·x² + b·x^(-ν) 를 따른다. 닫힌 형태는 epsilon_closed_form 으로 교차 확인한다.
    """
    validate_exponent(nu, sign)
    _warn_near_singular(nu)
    c, b = _coefficients(d, state, nu, sign)
    x = _stationary_x(c, b, nu)
    epsilon = c * x * x + b * x ** (-nu)

    params = AnsatzParams(x=x, d=d, state=state, nu=nu, sign=sign)
    return ReducedEigenvalue(
        epsilon=epsilon,
        params=params,
        d_mode=d_mode if d_mode is not None else DSelection.fixed(d),
    )


def epsilon_closed_form(d: float, state: QuantumState, nu: float, sign: int = 1) -> float:
    """
    (ν+2)(c/ν)^(ν/(ν+2))(b/2)^(2/(ν+2)) 를 크기와 부호로 나눠 계산

    ν<0 이면 두 인자가 음수의 분수 거듭제곱이 되므로 크기만 거듭제곱하고
    정류점에서 c·x² + b·x^(-ν) 가 갖는 부호 sign(ν) 를 다시 붙인다.
    """
    validate_exponent(nu, sign)
    c, b = _coefficients(d, state, nu, sign)
    _stationary_x(c, b, nu)
    magnitude = (nu + 2.0) * abs(c / nu) ** (nu / (nu + 2.0)) * abs(b / 2.0) ** (2.0 / (nu + 2.0))
    return math.copysign(magnitude, nu)


def log_epsilon_closed_form(d: float, state: QuantumState, nu: float) -> float:
    """
    ln ε + (ν/(ν+2))·ln ν  (sign=+1, ν>0)

    = log1p(ν/2) + (ν/(ν+2))(ln c + ln 2) + (2/(ν+2))·ln b

    ln ν 항이 상쇄되어 모든 항이 O(ν) 로 남으므로, 작은 ν 에서
    (ε·ν^(ν/(ν+2)) - 1)/ν 를 expm1 으로 손실 없이 계산할 수 있다.
    """
    if not nu > 0.0:
        raise DomainError(f"로그 극한 경로는 ν>0 에서만 사용합니다 (nu={nu})")
    c = compute_c(state, d)
    power = nu / (nu + 2.0)
    return math.log1p(nu / 2.0) + power * (math.log(c) + math.log(2.0)) + (2.0 / (nu + 2.0)) * log_abs_b(state, d, nu)
