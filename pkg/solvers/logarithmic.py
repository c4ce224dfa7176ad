"""
로그 퍼텐셜 log r 을 ν→0 극한으로 다루는 경로

log r ≅ (r^ν - 1)/ν = A·r^ν - 1/ν  (A = 1/ν) 로 보고 멱함수 결과를 옮긴다.
E = ε/ν^(2/(ν+2)) - 1/ν 는 1e5 크기의 두 수를 빼므로
(ε·ν^(ν/(ν+2)) - 1)/ν 를 로그형으로 모아 expm1 으로 계산한다.
"""
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from config import get_config
from reference.grid import Normalization, RadialSamples
from solvers.potentials import Convention, PhysicalEigenvalue
from utils.error_handling import DomainError
from utils.logging_config import get_project_logger
from variational.energy import epsilon_nl, log_epsilon_closed_form
from variational.models import DSelection, QuantumState
from variational.shape_exponent import d_fitted
from variational.wavefunction import trial_values

logger = get_project_logger(__name__)


def _resolve_nu(nu_limit: Optional[float]) -> float:
    log_config = get_config('log_potential')
    nu = log_config.get('nu_limit', 1e-5) if nu_limit is None else float(nu_limit)
    nu_max = log_config.get('nu_limit_max', 1e-3)
    if not 0.0 < nu <= nu_max:
        raise DomainError(f"nu_limit 는 (0, {nu_max}] 범위여야 합니다 (nu_limit={nu})")
    return nu


def _resolve_d(nu: float, d_override: Optional[float], recompute_d: bool) -> Tuple[float, DSelection]:
    log_config = get_config('log_potential')
    if d_override is not None:
        return float(d_override), DSelection.fixed(d_override)
    if not recompute_d and nu == log_config.get('nu_limit', 1e-5):
        printed = log_config.get('printed_d', 1.43203)
        return printed, DSelection.fixed(printed)
    return d_fitted(nu), DSelection.fitted()


def log_eigenvalue(state: QuantumState, nu_limit: Optional[float] = None,
                   d_override: Optional[float] = None, recompute_d: bool = False) -> PhysicalEigenvalue:
    """
    로그 퍼텐셜 고유값 E_nl

    d 는 d_override, 기본 nu_limit 에서는 고정값 1.43203, 그 밖에는 d_fitted(nu_limit).
    recompute_d=True 이면 기본 nu_limit 에서도 d_fitted 를 쓴다.

    Raises:
        DomainError: nu_limit 가 (0, 1e-3] 밖일 때
    """
    nu = _resolve_nu(nu_limit)
    d, d_mode = _resolve_d(nu, d_override, recompute_d)

    reduced = epsilon_nl(d, state, nu, 1, d_mode)
    energy = math.expm1(log_epsilon_closed_form(d, state, nu)) / nu

    logger.debug(f"log(r) {state} nu={nu:g} d={d:.6f}: E={energy:.8f}")
    return PhysicalEigenvalue(E=energy, reduced=reduced, convention=Convention.PLAIN)


def log_radial_scale(nu: float) -> float:
    """ρ = r / ν^(1/(ν+2))"""
    return nu ** (1.0 / (nu + 2.0))


def log_wavefunction(state: QuantumState, r_grid: Sequence[float], nu_limit: Optional[float] = None,
                     d_override: Optional[float] = None, recompute_d: bool = False) -> RadialSamples:
    """r 격자 위의 로그 퍼텐셜 시험 함수 (r 기준 단위 L² 정규화)"""
    r = np.asarray(r_grid, dtype=float)
    if r.size < 2 or np.any(r <= 0.0):
        raise DomainError("r 격자는 두 점 이상의 양수여야 합니다")

    nu = _resolve_nu(nu_limit)
    result = log_eigenvalue(state, nu, d_override, recompute_d)
    values = trial_values(result.reduced.params, r / log_radial_scale(nu))
    return RadialSamples.from_values(r, values, Normalization.UNIT_L2)
