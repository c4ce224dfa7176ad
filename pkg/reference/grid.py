"""
동경 격자와 샘플 값 객체, Numerov 기본 격자 선택
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid

from config import get_config
from solvers.potentials import PotentialSpec
from utils.common_functions import count_sign_changes, normalize_unit_l2, trapezoid_norm_squared
from utils.error_handling import DomainError, NumerovGridError
from utils.logging_config import get_project_logger
from variational.models import QuantumState

logger = get_project_logger(__name__)


class GridUnits(Enum):
    REDUCED = 'reduced'     # ρ, 멱함수 퍼텐셜의 A=1 문제
    PHYSICAL = 'physical'   # r, A 를 그대로 사용


class Normalization(Enum):
    UNIT_L2 = 'unit_l2'
    RAW = 'raw'


@dataclass(frozen=True)
class RadialGridSpec:
    """r_i = r_min + i·step, i = 0..steps"""
    r_min: float
    r_max: float
    step: float
    units: GridUnits = GridUnits.REDUCED

    def __post_init__(self):
        if not 0.0 < self.r_min < self.r_max:
            raise DomainError(f"0 < r_min < r_max 이어야 합니다 (r_min={self.r_min}, r_max={self.r_max})")
        if not self.step > 0.0 or self.step > (self.r_max - self.r_min) / 1000.0 * (1.0 + 1e-12):
            raise DomainError(f"step={self.step} 는 (r_max-r_min)/1000 이하의 양수여야 합니다")

    @classmethod
    def from_steps(cls, r_min: float, r_max: float, steps: int,
                   units: GridUnits = GridUnits.REDUCED) -> 'RadialGridSpec':
        return cls(r_min=r_min, r_max=r_max, step=(r_max - r_min) / steps, units=units)

    @property
    def steps(self) -> int:
        return int(round((self.r_max - self.r_min) / self.step))

    def radii(self) -> np.ndarray:
        return self.r_min + self.step * np.arange(self.steps + 1)

    def halved(self) -> 'RadialGridSpec':
        """같은 구간, 절반 간격"""
        return RadialGridSpec(self.r_min, self.r_max, self.step / 2.0, self.units)


@dataclass(frozen=True)
class RadialSamples:
    """격자 위의 (r, g(r)) 샘플"""
    grid: np.ndarray
    values: np.ndarray
    normalization: Normalization
    node_count: int

    def __post_init__(self):
        if len(self.grid) != len(self.values):
            raise DomainError(f"격자({len(self.grid)})와 값({len(self.values)})의 길이가 다릅니다")

    @classmethod
    def from_values(cls, grid, values, normalization: Normalization = Normalization.RAW) -> 'RadialSamples':
        grid = np.asarray(grid, dtype=float)
        values = np.asarray(values, dtype=float)
        if normalization is Normalization.UNIT_L2:
            values = normalize_unit_l2(grid, values)
        return cls(grid=grid, values=values, normalization=normalization,
                   node_count=count_sign_changes(values))

    def normalized(self) -> 'RadialSamples':
        return RadialSamples.from_values(self.grid, self.values, Normalization.UNIT_L2)

    def norm_squared(self) -> float:
        return trapezoid_norm_squared(self.grid, self.values)


def _outer_turning_point(pot: PotentialSpec, l: int, energy: float, r_min: float, r_cap: float) -> float:
    """Q = V_eff - E 가 마지막으로 0 이하인 지점 (없으면 Q 최소 지점)"""
    scan = np.geomspace(max(r_min, 1e-4), r_cap, 4000)
    q = pot.effective(scan, l) - energy
    allowed = np.nonzero(q <= 0.0)[0]
    if allowed.size == 0:
        return float(scan[int(np.argmin(q))])
    return float(scan[min(allowed[-1] + 1, scan.size - 1)])


def _wkb_extent(pot: PotentialSpec, l: int, energy: float, r_turn: float, r_cap: float,
                exponent: float) -> float:
    """전환점 밖에서 ∫√Q dr 가 exponent 에 도달하는 r"""
    r = r_turn
    width = max(1.0, r_turn)
    while r < r_cap:
        segment = np.linspace(r, min(r + width, r_cap), 400)
        q = np.clip(pot.effective(segment, l) - energy, 0.0, None)
        accumulated = cumulative_trapezoid(np.sqrt(q), segment, initial=0.0)
        if accumulated[-1] >= exponent:
            return float(segment[int(np.searchsorted(accumulated, exponent))])
        exponent -= accumulated[-1]
        r = segment[-1]
        width *= 2.0
    return r_cap


def _start_index(l: int, limit: float) -> int:
    """원심 항만으로 h²Q/12 가 상한을 넘는 원점 근처 점들을 건너뛴 첫 인덱스"""
    return max(2, int(math.ceil(math.sqrt(l * (l + 1) / (12.0 * limit)))) + 1)


def _max_numerov_factor(pot: PotentialSpec, l: int, energy: float, radii: np.ndarray, step: float,
                        limit: float) -> float:
    """시작 구간 이후 h²|Q|/12 의 최댓값"""
    q = pot.effective(radii[_start_index(l, limit):], l) - energy
    return float(np.max(np.abs(q))) * step * step / 12.0


def default_grid(pot: PotentialSpec, state: QuantumState, energy_guess: float,
                 units: GridUnits = GridUnits.REDUCED, points: Optional[int] = None) -> RadialGridSpec:
    """
    에너지 추정값에 맞춘 Numerov 격자

    r_max 는 바깥 전환점부터 WKB 감쇠 적분이 설정 지수(기본 20, 꼬리 < 1e-8)에 이를 때까지로 잡고,
    h²|Q|/12 가 허용되는 한 최소 범위(ν >= 0.5 이면 15, ν < 0 이면 40)를 보장한다.
    간격은 h²|Q|/12 가 상한 아래로 내려갈 때까지 절반으로 줄인다.

    Raises:
        NumerovGridError: 간격을 줄여도 Numerov 인자 1 - h²Q/12 가 양수가 되지 않을 때
    """
    numerov_config = get_config('numerov')
    r_min = numerov_config.get('r_min', 1e-6)
    r_cap = numerov_config.get('r_max_cap', 4000.0)
    limit = numerov_config.get('max_numerov_factor', 0.5)
    steps = int(points or numerov_config.get('grid_points', 4000))
    if steps < 1000:
        raise NumerovGridError(f"격자 점 수 {steps} 는 1000 이상이어야 합니다")

    if pot.is_power_law and units is GridUnits.REDUCED:
        pot = pot.reduced()

    r_turn = _outer_turning_point(pot, state.l, energy_guess, r_min, r_cap)
    r_max = _wkb_extent(pot, state.l, energy_guess, r_turn, r_cap,
                        numerov_config.get('tail_decay_exponent', 20.0))
    r_max = min(max(r_max, r_turn * 1.5, 10.0 * r_min + 1.0), r_cap)

    floor = None
    if pot.is_power_law and pot.nu >= 0.5:
        floor = numerov_config.get('r_max_floor_confining', 15.0)
    elif pot.is_power_law and pot.nu < 0.0:
        floor = numerov_config.get('r_max_floor_singular', 40.0)
    if floor is not None and floor > r_max:
        candidate = RadialGridSpec.from_steps(r_min, floor, steps, units)
        # 꼬리의 발산 성장이 double 범위(~e^300) 안에 머무를 때만 최소 범위 적용
        growth_limit = _wkb_extent(pot, state.l, energy_guess, r_turn, r_cap, 300.0)
        if floor <= growth_limit and _max_numerov_factor(
                pot, state.l, energy_guess, candidate.radii(), candidate.step, limit) < limit:
            r_max = floor

    grid = RadialGridSpec.from_steps(r_min, r_max, steps, units)
    max_steps = steps * 64
    while _max_numerov_factor(pot, state.l, energy_guess, grid.radii(), grid.step, limit) >= limit:
        if grid.steps * 2 > max_steps:
            raise NumerovGridError(
                f"h²|Q|/12 < {limit} 를 만족하는 격자를 찾지 못했습니다 ({pot.label()}, l={state.l}, r_max={r_max:.4g})")
        grid = grid.halved()

    # 원점 근처 i >= 2 에서도 1 - h²Q/12 > 0 이어야 나눗셈이 가능 (l <= 6)
    radii = grid.radii()[2:_start_index(state.l, limit) + 1]
    factors = 1.0 - grid.step * grid.step * (pot.effective(radii, state.l) - energy_guess) / 12.0
    if np.any(~(factors > 0.0)):
        raise NumerovGridError(
            f"원점 근처 Numerov 인자가 양수가 아닙니다 (l={state.l}, 최소 {float(np.min(factors)):.3g})")

    logger.debug(f"격자 선택: {pot.label()} {state} E~{energy_guess:.6g} -> "
                 f"r_max={grid.r_max:.4g}, step={grid.step:.3g}, 점 {grid.steps + 1}")
    return grid
