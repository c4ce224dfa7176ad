"""
모양 지수 d 선택: 보정 인자 적합식, 직접 최소화, 보정 상수 재적합
"""
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np
from lmfit import Minimizer, Parameters
from scipy.optimize import minimize_scalar

from config import get_config
from utils.error_handling import (
    DomainError, FitConvergenceError, NoMinimumInBracketError, SingularDenominatorError,
)
from utils.logging_config import get_project_logger, ProgressLogger, log_execution_time
from variational.energy import epsilon_nl, log_epsilon_closed_form
from variational.models import CorrectionFit, QuantumState, validate_exponent

logger = get_project_logger(__name__)

GROUND_STATE = QuantumState(n=0, l=0)


def _correction_p(nu, a1: float, a2: float, a3: float):
    return (nu + 1.0) * (2.0 - nu) / (a1 * nu * nu + a2 * nu + a3)


def d_fitted(nu: float, fit: Optional[CorrectionFit] = None) -> float:
    """
    d(ν) = √(ν+2)·(1+t·p)^h

    Raises:
        SingularDenominatorError: a1ν²+a2ν+a3 = 0
        DomainError: ν <= -2 또는 1+t·p <= 0
    """
    fit = fit or CorrectionFit.from_config()
    if not nu > -2.0:
        raise DomainError(f"ν 는 -2 보다 커야 합니다 (nu={nu})")

    quadratic = fit.a1 * nu * nu + fit.a2 * nu + fit.a3
    if quadratic == 0.0:
        raise SingularDenominatorError(f"a1ν²+a2ν+a3 가 ν={nu} 에서 0 입니다")

    base = 1.0 + fit.t * (nu + 1.0) * (2.0 - nu) / quadratic
    if not base > 0.0:
        raise DomainError(f"보정 인자 밑 1+t·p = {base:.6g} 가 양수가 아닙니다 (nu={nu})")
    return math.sqrt(nu + 2.0) * base ** fit.h


def _d_objective(state: QuantumState, nu: float, sign: int):
    small_nu = get_config('variational').get('small_nu_objective', 1e-2)
    if sign == 1 and 0.0 < nu <= small_nu:
        # ε 의 d 의존성이 O(ν) 이므로 같은 최소점을 갖는 (ln ε + 상수)/ν 를 쓴다
        return lambda d: log_epsilon_closed_form(d, state, nu) / nu
    return lambda d: epsilon_nl(d, state, nu, sign).epsilon


def d_minimized(state: QuantumState, nu: float, sign: int = 1,
                d_bracket: Optional[Tuple[float, float]] = None) -> float:
    """
    d ↦ ε_nl(d) 의 최소점 (미분 없는 bounded Brent: 황금분할 + 포물선 보간)

    Raises:
        NoMinimumInBracketError: 최소점이 구간 끝에 붙을 때 (구간 안에서 단조)
    """
    validate_exponent(nu, sign)
    variational_config = get_config('variational')
    lower, upper = d_bracket or variational_config.get('d_bracket', (0.3, 6.0))
    if not 0.0 < lower < upper:
        raise DomainError(f"d 구간이 유효하지 않습니다: [{lower}, {upper}]")
    xatol = variational_config.get('d_xatol', 1e-7)

    result = minimize_scalar(
        _d_objective(state, nu, sign),
        bounds=(lower, upper),
        method='bounded',
        options={'xatol': xatol, 'maxiter': 500},
    )
    if not result.success:
        raise NoMinimumInBracketError(f"d 최소화 실패 (nu={nu}, {state}): {result.message}")

    d_min = float(result.x)
    edge_tolerance = 100.0 * xatol
    if d_min - lower < edge_tolerance or upper - d_min < edge_tolerance:
        raise NoMinimumInBracketError(
            f"ε(d) 가 [{lower}, {upper}] 에서 단조입니다 (nu={nu}, {state}, 끝점 d={d_min:.6g})")

    logger.debug(f"d_min(nu={nu}, n={state.n}, l={state.l}) = {d_min:.8f}")
    return d_min


def ground_state_sign(nu: float) -> int:
    """d(ν) 곡선에서 쓰는 부호: ν>0 척력 증가형, ν<0 인력형"""
    return 1 if nu > 0.0 else -1


def default_fit_grid() -> np.ndarray:
    fit_config = get_config('fit')
    return np.linspace(fit_config['grid_min'], fit_config['grid_max'], fit_config['grid_points'])


@dataclass(frozen=True)
class CorrectionRefit:
    """재적합 결과와 잔차 진단"""
    fit: CorrectionFit
    max_residual: float
    nu_grid: Tuple[float, ...]
    d_min: Tuple[float, ...]
    d_refit: Tuple[float, ...]
    chisqr: float
    nfev: int
    warnings: Tuple[str, ...] = field(default_factory=tuple)


def grid_warnings(grid: np.ndarray) -> Tuple[str, ...]:
    messages = []
    if grid.min() >= -1.0 and grid.max() <= 2.0:
        messages.append("unidentifiable: p 가 ν=-1, 2 에서 0 이라 [-1, 2] 안의 격자로는 상수를 정할 수 없습니다")
    elif grid.min() > -1.5 or grid.max() < 8.0:
        messages.append(f"격자 [{grid.min():g}, {grid.max():g}] 가 [-1.5, 8] 을 덮지 않습니다")
    return tuple(messages)


@log_execution_time(logger)
def refit_correction_constants(nu_grid: Optional[Sequence[float]] = None,
                               initial: Optional[CorrectionFit] = None) -> CorrectionRefit:
    """
    n=0, l=0 최소화 d 곡선에 (t, a1, a2, a3, h) 를 최소제곱 적합

    다섯 상수를 모두 풀면 t 와 h 가 곱 t·h 로만 정해져 h 가 0.31 근처로 흐른다.
    그래서 설정의 'vary' 에 없는 상수(기본: a1, a2, a3)는 초깃값에 고정하고
    나머지는 'bounds' 범위 안에서만 움직인다.

    Raises:
        DomainError: 격자 점이 부족하거나 (-2, 10] 밖에 있을 때
        FitConvergenceError: 최적화가 수렴하지 않을 때
    """
    fit_config = get_config('fit')
    grid = np.asarray(default_fit_grid() if nu_grid is None else nu_grid, dtype=float)
    grid = grid[np.abs(grid) >= fit_config.get('exclude_near_zero', 1e-3)]

    if grid.size < fit_config.get('min_points', 20):
        raise DomainError(f"재적합 격자 점이 {grid.size}개로 부족합니다 (최소 {fit_config.get('min_points', 20)})")
    if np.any(grid <= -2.0) or np.any(grid > 10.0):
        raise DomainError("재적합 격자는 (-2, 10] 안에 있어야 합니다")

    warnings = grid_warnings(grid)
    for message in warnings:
        logger.warning(message)

    progress = ProgressLogger(logger, grid.size, log_interval=5)
    d_min = []
    for nu in grid:
        d_min.append(d_minimized(GROUND_STATE, float(nu), ground_state_sign(float(nu))))
        progress.update(message=f"nu={nu:.4g}")
    progress.complete("d_min 곡선")
    d_min = np.asarray(d_min)

    initial = initial or CorrectionFit.from_config()
    vary = set(fit_config.get('vary', ('t', 'h')))
    bounds = fit_config.get('bounds', {})
    params = Parameters()
    for name, value in initial.as_dict().items():
        lower, upper = bounds.get(name, (-np.inf, np.inf))
        params.add(name, value=value, vary=name in vary, min=lower, max=upper)

    def residual(p, nu, data):
        base = 1.0 + p['t'] * _correction_p(nu, p['a1'], p['a2'], p['a3'])
        model = np.sqrt(nu + 2.0) * np.maximum(base, 1e-12) ** p['h']
        return model - data

    minner = Minimizer(residual, params, fcn_args=(grid, d_min))
    result = minner.minimize(method='leastsq')

    model_residual = residual(result.params, grid, d_min)
    max_residual = float(np.max(np.abs(model_residual)))
    if not result.success:
        raise FitConvergenceError(
            f"보정 상수 적합이 수렴하지 않았습니다: {result.message}",
            diagnostics={
                'chisqr': float(result.chisqr),
                'nfev': int(result.nfev),
                'max_residual': max_residual,
            },
        )

    values = result.params.valuesdict()
    fit = CorrectionFit(t=values['t'], a1=values['a1'], a2=values['a2'], a3=values['a3'], h=values['h'])
    logger.info(f"재적합 완료: t={fit.t:.5g}, h={fit.h:.5g}, 최대 잔차={max_residual:.3g}")

    return CorrectionRefit(
        fit=fit,
        max_residual=max_residual,
        nu_grid=tuple(float(v) for v in grid),
        d_min=tuple(float(v) for v in d_min),
        d_refit=tuple(float(v) for v in d_min + model_residual),
        chisqr=float(result.chisqr),
        nfev=int(result.nfev),
        warnings=warnings,
    )
