"""
그림 재현용 파동함수 샘플 (변분 대 정확해/수치해)
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd

from config import get_config
from reference.numerov import numerov_eigenvalue, numerov_wavefunction
from reference.grid import default_grid
from solvers.logarithmic import log_eigenvalue, log_wavefunction
from solvers.potentials import PotentialSpec
from solvers.power_law import power_law_eigenvalue
from specfun.airy import airy_ai, airy_zero
from utils.common_functions import align_sign, normalize_unit_l2
from utils.error_handling import DomainError
from utils.logging_config import get_project_logger, log_execution_time
from variational.models import QuantumState
from variational.energy import compute_c
from variational.wavefunction import kinetic_expectation, trial_wavefunction

logger = get_project_logger(__name__)

FIGURE_COLUMNS = ['rho', 'g_variational', 'g_exact_or_numerov']
KINETIC_WARN_RTOL = 5e-2


@dataclass(frozen=True)
class FigureRequest:
    potential: str      # 'power' | 'log'
    n: int
    l: int
    rmax: float
    nu: Optional[float] = None
    points: int = 500

    def __post_init__(self):
        if self.potential not in ('power', 'log'):
            raise DomainError(f"potential 은 power 또는 log 입니다 ({self.potential})")
        if self.potential == 'power' and self.nu is None:
            raise DomainError("power 퍼텐셜에는 nu 가 필요합니다")
        if not self.rmax > 0.0 or self.points < 10:
            raise DomainError(f"rmax > 0, points >= 10 이어야 합니다 (rmax={self.rmax}, points={self.points})")

    @classmethod
    def from_figure(cls, figure: int, points: Optional[int] = None) -> 'FigureRequest':
        cli_config = get_config('cli')
        presets = cli_config.get('figures', {})
        if figure not in presets:
            raise DomainError(f"figure 는 {sorted(presets)} 중 하나입니다 (figure={figure})")
        preset = presets[figure]
        return cls(
            potential=preset['potential'],
            n=preset['n'],
            l=preset['l'],
            rmax=preset['rmax'],
            nu=preset.get('nu'),
            points=points or cli_config.get('wavefunction_points', 500),
        )

    def grid(self) -> np.ndarray:
        return np.linspace(self.rmax / self.points, self.rmax, self.points)


def _numerov_on(pot: PotentialSpec, state: QuantumState, guess: float, grid: np.ndarray) -> np.ndarray:
    """고유값에서의 Numerov 파동함수를 주어진 격자로 선형 보간"""
    numerov_grid = default_grid(pot, state, guess)
    energy = numerov_eigenvalue(pot, state, grid=numerov_grid, guess=guess)
    samples = numerov_wavefunction(pot, state, numerov_grid, energy)
    return np.interp(grid, samples.grid, samples.values, left=0.0, right=0.0)


def _check_kinetic(params, grid: np.ndarray) -> None:
    """격자 위 운동 에너지 적분과 닫힌 형태 c·x² 비교 (격자가 함수를 덮는지)"""
    closed = compute_c(params.state, params.d) * params.x ** 2
    sampled = kinetic_expectation(params, grid)
    deviation = abs(sampled - closed) / abs(closed)
    logger.debug(f"운동 에너지: 격자 {sampled:.6g}, 닫힌 형태 {closed:.6g} (상대 차이 {deviation:.2e})")
    if deviation > KINETIC_WARN_RTOL:
        logger.warning(f"격자가 시험 함수를 충분히 덮지 못합니다: 운동 에너지 상대 차이 {deviation:.2e}")


def _power_figure(request: FigureRequest, state: QuantumState, grid: np.ndarray):
    pot = PotentialSpec.power_law(1.0, request.nu, 1)
    result = power_law_eigenvalue(pot, state)
    params = result.reduced.params
    variational = trial_wavefunction(params, grid).values
    _check_kinetic(params, grid)

    if request.nu == 1.0 and state.l == 0:
        zero = airy_zero(state.n + 1)
        reference = np.array([airy_ai(rho - zero) for rho in grid])
    else:
        reference = _numerov_on(pot, state, result.reduced.epsilon, grid)
    return variational, reference


def _log_figure(state: QuantumState, grid: np.ndarray):
    pot = PotentialSpec.logarithmic()
    variational = log_wavefunction(state, grid).values
    reference = _numerov_on(pot, state, log_eigenvalue(state).E, grid)
    return variational, reference


@log_execution_time(logger)
def build_figure(request: FigureRequest) -> pd.DataFrame:
    """
    rho, g_variational, g_exact_or_numerov 샘플

    두 곡선 모두 내보내는 격자에서 단위 L² 정규화하고 첫 최댓값에서 양수가 되도록 부호를 맞춘다.
    로그 퍼텐셜 그림의 rho 열은 r 이다.
    """
    state = QuantumState(request.n, request.l)
    grid = request.grid()
    if request.potential == 'power':
        variational, reference = _power_figure(request, state, grid)
    else:
        variational, reference = _log_figure(state, grid)

    return pd.DataFrame({
        'rho': grid,
        'g_variational': align_sign(normalize_unit_l2(grid, variational)),
        'g_exact_or_numerov': align_sign(normalize_unit_l2(grid, reference)),
    }, columns=FIGURE_COLUMNS)


def max_deviation(df: pd.DataFrame) -> float:
    """두 곡선의 최대 점별 차이"""
    return float(np.max(np.abs(df['g_variational'] - df['g_exact_or_numerov'])))
