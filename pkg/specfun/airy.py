"""
Airy 함수 Ai(z) 와 음의 영점

|z| <= AIRY_SERIES_SWITCH 에서는 Maclaurin 급수, 그 밖에서는 점근 전개를
최적 절단으로 사용한다. 6.5 는 겹침 구간 [3, 7] 에서 두 표현의 차이가
가장 작은 지점이다 (양쪽 모두 ~1e-11).
"""
import math

from scipy.optimize import brentq

from config import get_config
from specfun.gamma import gamma
from utils.error_handling import DomainError, SolverError

AIRY_SERIES_SWITCH = get_config('airy').get('series_switch', 6.5)

# Ai(0) = 3^(-2/3)/Γ(2/3),  -Ai'(0) = 3^(-1/3)/Γ(1/3)
AI_ZERO = 3.0 ** (-2.0 / 3.0) / gamma(2.0 / 3.0)
AI_PRIME_ZERO = 3.0 ** (-1.0 / 3.0) / gamma(1.0 / 3.0)

_MAX_TERMS = 400
_TINY = 1e-17


def ai_maclaurin(z: float) -> float:
    """Ai(z) = c1 f(z) - c2 g(z) 멱급수"""
    z3 = z * z * z
    f_term, g_term = 1.0, z
    f_terms, g_terms = [f_term], [g_term]
    for k in range(1, _MAX_TERMS):
        f_term *= z3 / ((3 * k - 1) * (3 * k))
        g_term *= z3 / ((3 * k) * (3 * k + 1))
        f_terms.append(f_term)
        g_terms.append(g_term)
        # 항이 최댓값을 지난 뒤에만 종료 판정
        if 9 * k * k > abs(z3) and abs(f_term) + abs(g_term) < _TINY:
            break
    return AI_ZERO * math.fsum(f_terms) - AI_PRIME_ZERO * math.fsum(g_terms)


def _asymptotic_terms(zeta: float):
    """u_k / ζ^k 를 가장 작은 항까지 생성"""
    u = 1.0
    term = 1.0
    k = 0
    yield k, term
    while k < _MAX_TERMS:
        k += 1
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        next_term = u / zeta ** k
        if next_term >= term or next_term < _TINY:
            return
        term = next_term
        yield k, term


def ai_asymptotic(z: float) -> float:
    """|z| 가 클 때의 점근 전개"""
    if z == 0.0:
        raise DomainError("점근 전개는 z=0 에서 쓸 수 없습니다")

    x = abs(z)
    zeta = 2.0 / 3.0 * x ** 1.5

    if z > 0:
        terms = [(-1) ** k * t for k, t in _asymptotic_terms(zeta)]
        return math.exp(-zeta) / (2.0 * math.sqrt(math.pi) * x ** 0.25) * math.fsum(terms)

    even, odd = [], []
    for k, t in _asymptotic_terms(zeta):
        if k % 2 == 0:
            even.append((-1) ** (k // 2) * t)
        else:
            odd.append((-1) ** ((k - 1) // 2) * t)
    phase = zeta - math.pi / 4.0
    return (math.cos(phase) * math.fsum(even) + math.sin(phase) * math.fsum(odd)) / (
        math.sqrt(math.pi) * x ** 0.25)


def airy_ai(z: float) -> float:
    """Ai(z), |z| <= 20 에서 사용"""
    if abs(z) <= AIRY_SERIES_SWITCH:
        return ai_maclaurin(z)
    return ai_asymptotic(z)


def _zero_guess(k: int) -> float:
    t = 3.0 * math.pi * (4 * k - 1) / 8.0
    return t ** (2.0 / 3.0) * (1.0 + 5.0 / 48.0 * t ** -2 - 5.0 / 36.0 * t ** -4)


def airy_zero(k: int) -> float:
    """
    k 번째 Ai 영점의 크기 |a_k| (Ai(-|a_k|) = 0)

    점근 추정값 주변에서 부호가 바뀌는 구간을 잡고 brentq(이분법 + 보간)로 다듬는다.

    Raises:
        DomainError: k 가 1..10 범위 밖일 때
    """
    airy_config = get_config('airy')
    max_k = airy_config.get('max_zero_index', 10)
    if int(k) != k or not 1 <= k <= max_k:
        raise DomainError(f"k 는 1..{max_k} 범위의 정수여야 합니다 (k={k})")

    guess = _zero_guess(int(k))
    half_width = airy_config.get('bracket_half_width', 0.25)
    lo, hi = guess - half_width, guess + half_width
    f_lo, f_hi = airy_ai(-lo), airy_ai(-hi)
    if f_lo * f_hi > 0:
        raise SolverError(f"Ai 영점 구간 [{lo}, {hi}] 에서 부호 변화가 없습니다 (k={k})")

    return brentq(lambda x: airy_ai(-x), lo, hi, xtol=airy_config.get('zero_xtol', 1e-14), maxiter=200)
