"""
동경 퍼텐셜 정의와 물리 단위 ↔ 축약 단위 변환
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from utils.error_handling import DomainError
from variational.models import ReducedEigenvalue, validate_exponent


class PotentialKind(Enum):
    POWER_LAW = 'power'
    LOGARITHMIC = 'log'


class Convention(Enum):
    PLAIN = 'plain'
    REF11 = 'ref11'   # E 에 2^(-ν/(ν+2)) 를 곱한 비교용 관례


@dataclass(frozen=True)
class PotentialSpec:
    """
    V(r) = sgn·A·r^ν (POWER_LAW) 또는 log r (LOGARITHMIC, 매개변수 없음)
    """
    kind: PotentialKind
    A: Optional[float] = None
    nu: Optional[float] = None
    sign: Optional[int] = None

    def __post_init__(self):
        if self.kind is PotentialKind.LOGARITHMIC:
            if any(v is not None for v in (self.A, self.nu, self.sign)):
                raise DomainError("로그 퍼텐셜은 A, nu, sign 을 갖지 않습니다")
            return

        if self.A is None or not self.A > 0.0 or math.isinf(self.A):
            raise DomainError(f"A 는 양의 유한 실수여야 합니다 (A={self.A})")
        if self.nu is None or self.sign is None:
            raise DomainError("멱함수 퍼텐셜에는 nu 와 sign 이 필요합니다")
        validate_exponent(self.nu, self.sign)

    @classmethod
    def power_law(cls, A: float, nu: float, sign: int = 1) -> 'PotentialSpec':
        return cls(PotentialKind.POWER_LAW, A=float(A), nu=float(nu), sign=int(sign))

    @classmethod
    def logarithmic(cls) -> 'PotentialSpec':
        return cls(PotentialKind.LOGARITHMIC)

    @property
    def is_power_law(self) -> bool:
        return self.kind is PotentialKind.POWER_LAW

    def reduced(self) -> 'PotentialSpec':
        """A=1 로 축약한 문제 (로그 퍼텐셜은 그대로)"""
        if not self.is_power_law:
            return self
        return PotentialSpec.power_law(1.0, self.nu, self.sign)

    def energy_scale(self) -> float:
        """E = ε · A^(2/(ν+2))"""
        if not self.is_power_law:
            return 1.0
        return self.A ** (2.0 / (self.nu + 2.0))

    def convention_factor(self, convention: Convention) -> float:
        if convention is Convention.REF11 and self.is_power_law:
            return 2.0 ** (-self.nu / (self.nu + 2.0))
        return 1.0

    def to_physical_energy(self, epsilon: float, convention: Convention = Convention.PLAIN) -> float:
        return epsilon * self.energy_scale() * self.convention_factor(convention)

    def to_reduced_energy(self, energy: float, convention: Convention = Convention.PLAIN) -> float:
        return energy / (self.energy_scale() * self.convention_factor(convention))

    def value(self, r):
        """V(r), 배열 입력 가능"""
        r = np.asarray(r, dtype=float)
        if self.is_power_law:
            return self.sign * self.A * np.power(r, self.nu)
        return np.log(r)

    def effective(self, r, l: int):
        """V(r) + l(l+1)/r²"""
        r = np.asarray(r, dtype=float)
        return self.value(r) + l * (l + 1) / (r * r)

    def label(self) -> str:
        if not self.is_power_law:
            return "log(r)"
        prefix = '-' if self.sign < 0 else ''
        strength = '' if self.A == 1.0 else f"{self.A:g}*"
        return f"{prefix}{strength}r^{self.nu:g}"


@dataclass(frozen=True)
class PhysicalEigenvalue:
    """물리 단위 고유값 E 와 그 근거가 된 축약 고유값"""
    E: float
    reduced: Optional[ReducedEigenvalue]
    convention: Convention = Convention.PLAIN
