"""
시험 파동함수 g(ρ) = ρ^{l+1} exp(-(xρ)^d) L_n^{(2l+1)/d}(2(xρ)^d) 샘플링
"""
from typing import Sequence

import numpy as np

from reference.grid import Normalization, RadialSamples
from specfun.laguerre import laguerre_coefficients, laguerre_derivative_eval, laguerre_eval
from utils.common_functions import trapezoid_norm_squared
from utils.error_handling import DomainError
from utils.logging_config import get_project_logger
from variational.models import AnsatzParams

logger = get_project_logger(__name__)

GRID_HALVING_RTOL = 1e-4


def trial_values(params: AnsatzParams, rho) -> np.ndarray:
    """정규화하지 않은 g(ρ)"""
    rho = np.asarray(rho, dtype=float)
    state = params.state
    poly = laguerre_coefficients(state.n, state.laguerre_alpha_numerator / params.d)
    scaled = (params.x * rho) ** params.d
    return rho ** (state.l + 1) * np.exp(-scaled) * laguerre_eval(poly, 2.0 * scaled)


def trial_derivative_values(params: AnsatzParams, rho) -> np.ndarray:
    """정규화하지 않은 g'(ρ) (해석적 미분)"""
    rho = np.asarray(rho, dtype=float)
    state = params.state
    poly = laguerre_coefficients(state.n, state.laguerre_alpha_numerator / params.d)
    scaled = (params.x * rho) ** params.d
    envelope = rho ** (state.l + 1) * np.exp(-scaled)
    values = envelope * laguerre_eval(poly, 2.0 * scaled)
    slope = laguerre_derivative_eval(poly, 2.0 * scaled) * 2.0 * params.d * scaled / rho
    return values * (state.l + 1 - params.d * scaled) / rho + envelope * slope


def kinetic_expectation(params: AnsatzParams, rho_grid: Sequence[float]) -> float:
    """
    격자 위 사다리꼴 적분 ∫(g'² + l(l+1)g²/ρ²) / ∫g²

    격자가 충분하면 닫힌 형태의 c·x² 와 같다.
    """
    rho = np.asarray(rho_grid, dtype=float)
    l = params.state.l
    values = trial_values(params, rho)
    slope = trial_derivative_values(params, rho)
    kinetic = trapezoid_norm_squared(rho, slope) + l * (l + 1) * trapezoid_norm_squared(rho, values / rho)
    return kinetic / trapezoid_norm_squared(rho, values)


def trial_wavefunction(params: AnsatzParams, rho_grid: Sequence[float]) -> RadialSamples:
    """
    격자 위에서 ∫|g|²dρ = 1 로 정규화한 시험 함수 샘플 (ρ→0⁺ 에서 g > 0)

    격자 간격을 두 배로 했을 때 정규화 적분이 1e-4 이상 변하면 경고한다.
    """
    rho = np.asarray(rho_grid, dtype=float)
    if rho.size < 2 or np.any(rho <= 0.0):
        raise DomainError("ρ 격자는 두 점 이상의 양수여야 합니다")

    values = trial_values(params, rho)

    if rho.size >= 5:
        fine = trapezoid_norm_squared(rho, values)
        coarse = trapezoid_norm_squared(rho[::2], values[::2])
        if fine > 0.0 and abs(coarse - fine) / fine > GRID_HALVING_RTOL:
            logger.warning(f"격자가 거칩니다: 정규화 적분이 간격 두 배에서 {abs(coarse - fine) / fine:.2e} 만큼 변함")

    return RadialSamples.from_values(rho, values, Normalization.UNIT_L2)
