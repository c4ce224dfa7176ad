"""
변분 계산에 쓰이는 값 객체들
"""
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from config import get_config
from utils.error_handling import DomainError


@dataclass(frozen=True)
class QuantumState:
    """동경 양자수 n 과 궤도 각운동량 l"""
    n: int
    l: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"n 은 음이 아닌 정수여야 합니다 (n={self.n})")
        if int(self.l) != self.l or self.l < 0:
            raise DomainError(f"l 은 음이 아닌 정수여야 합니다 (l={self.l})")
        object.__setattr__(self, 'n', int(self.n))
        object.__setattr__(self, 'l', int(self.l))

    @property
    def laguerre_alpha_numerator(self) -> int:
        """Laguerre 상단 지수 (2l+1)/d 의 분자"""
        return 2 * self.l + 1


def validate_exponent(nu: float, sign: int) -> None:
    """ν > -2, sign ∈ {-1,+1}, sign=-1 은 ν<0 에서만"""
    if not nu > -2.0:
        raise DomainError(f"ν 는 -2 보다 커야 합니다 (nu={nu})")
    if sign not in (-1, 1):
        raise DomainError(f"sign 은 -1 또는 +1 이어야 합니다 (sign={sign})")
    if sign == -1 and not nu < 0.0:
        raise DomainError(f"sign=-1 은 ν<0 인 인력 퍼텐셜에서만 허용됩니다 (nu={nu})")


@dataclass(frozen=True)
class AnsatzParams:
    """
    시험 함수 ρ^{l+1} exp(-(xρ)^d) L_n^{(2l+1)/d}(2(xρ)^d) 의 매개변수

    x 는 축척, d 는 모양 지수. state / nu / sign 은 최적화 대상 문제를 기록한다.
    """
    x: float
    d: float
    state: QuantumState
    nu: float
    sign: int = 1

    def __post_init__(self):
        if not self.x > 0.0:
            raise DomainError(f"x 는 양수여야 합니다 (x={self.x})")
        if not self.d > 0.0:
            raise DomainError(f"d 는 양수여야 합니다 (d={self.d})")
        validate_exponent(self.nu, self.sign)


@dataclass(frozen=True)
class CorrectionFit:
    """
    d(ν) = √(ν+2)·(1+t·p)^h,  p = (ν+1)(2-ν)/(a1ν²+a2ν+a3)
    """
    t: float
    a1: float
    a2: float
    a3: float
    h: float

    @classmethod
    def from_config(cls) -> 'CorrectionFit':
        """설정(환경 변수 덮어쓰기 포함)에 있는 상수로 생성"""
        constants = get_config('correction_fit')
        return cls(
            t=constants['t'],
            a1=constants['a1'],
            a2=constants['a2'],
            a3=constants['a3'],
            h=constants['h'],
        )

    def as_dict(self) -> dict:
        return {'t': self.t, 'a1': self.a1, 'a2': self.a2, 'a3': self.a3, 'h': self.h}


class DMode(Enum):
    FITTED = 'fit'
    MINIMIZED = 'minimize'
    FIXED = 'fixed'


_FIXED_PATTERN = re.compile(r'^fixed=(?P<value>[-+0-9.eE]+)$')


@dataclass(frozen=True)
class DSelection:
    """d 선택 방식 (FIXED 일 때만 value 사용)"""
    mode: DMode = DMode.FITTED
    value: Optional[float] = None

    def __post_init__(self):
        if self.mode is DMode.FIXED:
            if self.value is None or not self.value > 0.0:
                raise DomainError(f"FIXED d 값은 양수여야 합니다 (value={self.value})")
        elif self.value is not None:
            raise DomainError(f"{self.mode.name} 모드에는 d 값을 줄 수 없습니다")

    @classmethod
    def fitted(cls) -> 'DSelection':
        return cls(DMode.FITTED)

    @classmethod
    def minimized(cls) -> 'DSelection':
        return cls(DMode.MINIMIZED)

    @classmethod
    def fixed(cls, value: float) -> 'DSelection':
        return cls(DMode.FIXED, float(value))

    @classmethod
    def parse(cls, text: str) -> 'DSelection':
        """'fit' | 'minimize' | 'fixed=<v>'"""
        text = text.strip().lower()
        if text == DMode.FITTED.value:
            return cls.fitted()
        if text == DMode.MINIMIZED.value:
            return cls.minimized()
        match = _FIXED_PATTERN.match(text)
        if match:
            return cls.fixed(float(match.group('value')))
        raise DomainError(f"알 수 없는 d 모드입니다: {text!r} (fit|minimize|fixed=<v>)")

    def label(self) -> str:
        if self.mode is DMode.FIXED:
            return f"fixed={self.value:g}"
        return self.mode.value


@dataclass(frozen=True)
class ReducedEigenvalue:
    """무차원 고유값 ε 과 그 값을 만든 시험 함수 매개변수"""
    epsilon: float
    params: AnsatzParams
    d_mode: DSelection = field(default_factory=DSelection.fitted)

    @property
    def x(self) -> float:
        return self.params.x

    @property
    def d(self) -> float:
        return self.params.d
