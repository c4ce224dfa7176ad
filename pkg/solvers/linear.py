"""
선형 퍼텐셜 S 상태: 변분값과 Airy 영점 비교
"""
from dataclasses import dataclass
from typing import List, Optional

from solvers.potentials import PotentialSpec
from solvers.power_law import power_law_eigenvalue
from specfun.airy import airy_zero
from utils.error_handling import DomainError
from variational.models import DSelection, QuantumState

LINEAR_POTENTIAL = PotentialSpec.power_law(1.0, 1.0, 1)
MAX_LINEAR_N = 9


@dataclass(frozen=True)
class LinearRow:
    n: int
    epsilon_variational: float
    epsilon_exact: float


def linear_potential_table(n_max: int, d_mode: Optional[DSelection] = None) -> List[LinearRow]:
    """l=0, n=0..n_max 에 대해 ν=1 변분값과 |a_{n+1}| 를 짝지음"""
    if int(n_max) != n_max or not 0 <= n_max <= MAX_LINEAR_N:
        raise DomainError(f"n_max 는 0..{MAX_LINEAR_N} 범위의 정수여야 합니다 (n_max={n_max})")

    rows = []
    for n in range(int(n_max) + 1):
        result = power_law_eigenvalue(LINEAR_POTENTIAL, QuantumState(n, 0), d_mode)
        rows.append(LinearRow(n=n, epsilon_variational=result.reduced.epsilon, epsilon_exact=airy_zero(n + 1)))
    return rows
