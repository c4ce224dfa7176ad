"""
일반화 Laguerre 다항식 L_n^α(y) 계수와 값
"""
import math
from dataclasses import dataclass
from typing import Tuple

from config import get_config
from specfun.gamma import gamma_ratio
from utils.error_handling import DomainError


@dataclass(frozen=True)
class LaguerrePoly:
    """L_n^α(y) = Σ_j a_j y^j (coeffs[j] = a_j)"""
    n: int
    alpha: float
    coeffs: Tuple[float, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise DomainError(f"계수 개수 {len(self.coeffs)} 가 n+1={self.n + 1} 과 다릅니다")

    def __call__(self, y: float) -> float:
        return laguerre_eval(self, y)


def laguerre_coefficients(n: int, alpha: float) -> LaguerrePoly:
    """
    a_j = (-1)^j Γ(n+α+1) / (Γ(α+j+1) (n-j)! j!),  j = 0..n

    a_0 은 감마 비 Γ(n+α+1)/(Γ(α+1) n!) 로 두고, 이후 계수는
    a_{j+1} = -a_j (n-j) / ((j+1)(α+j+1)) 로 이어 붙인다.

    Raises:
        DomainError: n < 0, n 이 상한(기본 30) 초과, alpha <= -1
    """
    n_max = get_config('variational').get('laguerre_n_max', 30)
    if int(n) != n or n < 0:
        raise DomainError(f"n 은 음이 아닌 정수여야 합니다 (n={n})")
    if n > n_max:
        raise DomainError(f"n={n} 은 상한 {n_max} 를 넘습니다 (교대합의 상쇄 오차)")
    if not alpha > -1.0:
        raise DomainError(f"alpha 는 -1 보다 커야 합니다 (alpha={alpha})")
    n = int(n)

    if n == 0:
        return LaguerrePoly(n=0, alpha=float(alpha), coeffs=(1.0,))

    a0 = gamma_ratio(n + alpha + 1.0, alpha + 1.0) / math.factorial(n)
    coeffs = [a0]
    for j in range(n):
        coeffs.append(-coeffs[j] * (n - j) / ((j + 1) * (alpha + j + 1.0)))

    return LaguerrePoly(n=n, alpha=float(alpha), coeffs=tuple(coeffs))


def laguerre_eval(p: LaguerrePoly, y: float) -> float:
    """Σ_j a_j y^j (Horner)"""
    result = 0.0
    for coefficient in reversed(p.coeffs):
        result = result * y + coefficient
    return result


def laguerre_derivative_eval(p: LaguerrePoly, y: float) -> float:
    """d/dy Σ_j a_j y^j"""
    result = 0.0
    for j in range(p.n, 0, -1):
        result = result * y + j * p.coeffs[j]
    return result
