"""
양의 실수에 대한 감마 함수 (Lanczos 근사, g=7, n=9)
"""
import math

from utils.error_handling import DomainError

LANCZOS_G = 7.0
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Γ(x) 가 double 범위를 넘는 경계
GAMMA_OVERFLOW = 171.6

_LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _check_domain(x: float) -> None:
    if not (x > 0.0) or math.isinf(x):
        raise DomainError(f"gamma 는 양의 유한 실수에서만 정의됩니다 (x={x})")


def _lanczos_series(z: float) -> float:
    total = LANCZOS_COEFFICIENTS[0]
    for i, coefficient in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        total += coefficient / (z + i)
    return total


def log_gamma(x: float) -> float:
    """ln Γ(x), x > 0"""
    _check_domain(x)
    if x < 0.5:
        # 반사 공식
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)

    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    return _LOG_SQRT_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_series(z))


def gamma(x: float) -> float:
    """
    Γ(x), x > 0

    Raises:
        DomainError: x <= 0 이거나 결과가 double 범위를 넘을 때
    """
    _check_domain(x)
    if x > GAMMA_OVERFLOW:
        raise DomainError(f"Γ({x}) 는 double 범위를 넘습니다; log_gamma 를 사용하세요")

    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))

    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    # t^(z+1/2) 를 반으로 나눠 곱해야 x ~ 170 에서 중간값이 넘치지 않음
    half_power = math.pow(t, 0.5 * (z + 0.5))
    return math.sqrt(2.0 * math.pi) * half_power * math.exp(-t) * half_power * _lanczos_series(z)


def gamma_ratio(numerator: float, denominator: float) -> float:
    """Γ(numerator) / Γ(denominator), 큰 인자에서도 넘침 없이"""
    return math.exp(log_gamma(numerator) - log_gamma(denominator))
