"""
Numerov 사격법 기준해

g'' = Q(r)·g,  Q = V(r) + l(l+1)/r² - E 를 원점에서 바깥으로 적분하고
마디 수와 꼬리 발산 방향으로 고유값을 이분 탐색한다.
"""
from typing import Optional, Tuple

import numpy as np

from config import get_config
from reference.grid import GridUnits, Normalization, RadialGridSpec, RadialSamples, default_grid
from solvers.potentials import PotentialSpec
from utils.error_handling import BracketError, DomainError
from utils.logging_config import get_project_logger
from variational.models import QuantumState

logger = get_project_logger(__name__)


def _grid_potential(pot: PotentialSpec, grid: RadialGridSpec) -> PotentialSpec:
    if pot.is_power_law and grid.units is GridUnits.REDUCED:
        return pot.reduced()
    return pot


def _shoot(pot: PotentialSpec, l: int, energy: float, grid: RadialGridSpec) -> Tuple[np.ndarray, int, int]:
    """
    바깥 방향 Numerov 적분

    w = (1 - h²Q/12)·g 로 두면 w_{i+1} = 2w_i - w_{i-1} + h²Q_i g_i.

    Returns:
        (샘플, 마디 수, 유효 마디 수)
    """
    pot = _grid_potential(pot, grid)
    radii = grid.radii()
    h2 = grid.step * grid.step
    q = (pot.effective(radii, l) - energy).tolist()
    f = [1.0 - h2 * qi / 12.0 for qi in q]

    # l=0, ν<-1: Q_0·g_0 ~ r^(ν+1) 은 적분 가능하지만 균일 격자로 표현되지 않음
    if l == 0 and pot.is_power_law and pot.nu < -1.0:
        f[0] = 1.0

    threshold = get_config('numerov').get('rescale_threshold', 1e150)
    values = [radii[0] ** (l + 1), radii[1] ** (l + 1)]
    w_prev = f[0] * values[0]
    w = f[1] * values[1]
    y = values[1]
    nodes = 0

    for i in range(1, len(radii) - 1):
        w_next = 2.0 * w - w_prev + h2 * q[i] * y
        y_next = w_next / f[i + 1]
        if y_next * y < 0.0:
            nodes += 1
        values.append(y_next)

        if abs(y_next) > threshold:
            # 순수 배율 조정은 마디와 고유값 판정에 영향 없음
            scale = 1.0 / abs(y_next)
            values = [v * scale for v in values]
            w_next *= scale
            w *= scale
            y_next *= scale

        w_prev, w, y = w, w_next, y_next

    samples = np.asarray(values)
    effective = nodes + (1 if samples[-1] * (samples[-1] - samples[-2]) < 0.0 else 0)
    return samples, nodes, effective


def numerov_integrate(pot: PotentialSpec, l: int, energy: float, grid: RadialGridSpec) -> RadialSamples:
    """
    g(r_min) = r_min^(l+1), g(r_min+h) = (r_min+h)^(l+1) 에서 출발한 RAW 샘플

    격자 단위가 REDUCED 이면 멱함수 퍼텐셜은 A=1 로 축약하고 energy 는 ε 이다.
    """
    if int(l) != l or l < 0:
        raise DomainError(f"l 은 음이 아닌 정수여야 합니다 (l={l})")
    samples, nodes, _ = _shoot(pot, int(l), energy, grid)
    return RadialSamples(grid=grid.radii(), values=samples, normalization=Normalization.RAW, node_count=nodes)


def effective_node_count(pot: PotentialSpec, l: int, energy: float, grid: RadialGridSpec) -> int:
    """마디 수 + (꼬리가 0 을 향해 감소 중이면 1)"""
    return _shoot(pot, l, energy, grid)[2]


def find_bracket(pot: PotentialSpec, state: QuantumState, grid: RadialGridSpec, guess: float,
                 width: Optional[float] = None, max_expansions: int = 60) -> Tuple[float, float]:
    """
    추정값 주위로 구간을 넓혀 유효 마디 수가 n 을 사이에 두게 함

    Returns:
        (lo, hi): eff(lo) <= n < eff(hi)
    """
    width = width or max(1e-3 * abs(guess), 1e-4)
    lo, hi = guess - width, guess + width
    count_lo = effective_node_count(pot, state.l, lo, grid)
    count_hi = effective_node_count(pot, state.l, hi, grid)

    step = width
    for _ in range(max_expansions):
        if count_lo <= state.n < count_hi:
            return lo, hi
        step *= 2.0
        if count_lo > state.n:
            hi, count_hi = lo, count_lo
            lo -= step
            count_lo = effective_node_count(pot, state.l, lo, grid)
        else:
            lo, count_lo = hi, count_hi
            hi += step
            count_hi = effective_node_count(pot, state.l, hi, grid)

    raise BracketError(
        f"{pot.label()} {state} 의 고유값 구간을 찾지 못했습니다 (guess={guess})",
        node_counts=(count_lo, count_hi),
    )


def numerov_eigenvalue(pot: PotentialSpec, state: QuantumState, grid: Optional[RadialGridSpec] = None,
                       E_bracket: Optional[Tuple[float, float]] = None, tol: Optional[float] = None,
                       guess: Optional[float] = None) -> float:
    """
    마디 수 이분 탐색으로 구한 n 번째 고유값

    eff(E) > n 이면 E 가 고유값보다 크다. |ΔE| <= tol 이 될 때까지 반으로 줄인다.

    Raises:
        BracketError: 구간 양 끝의 유효 마디 수가 n 을 사이에 두지 않을 때
    """
    numerov_config = get_config('numerov')
    tol = tol or numerov_config.get('bisection_tol', 1e-7)
    if E_bracket is None and guess is None:
        raise DomainError("E_bracket 또는 guess 중 하나가 필요합니다")

    if grid is None:
        reference_energy = E_bracket[1] if E_bracket is not None else guess
        grid = default_grid(pot, state, reference_energy)

    if E_bracket is None:
        lo, hi = find_bracket(pot, state, grid, guess)
    else:
        lo, hi = E_bracket
        count_lo = effective_node_count(pot, state.l, lo, grid)
        count_hi = effective_node_count(pot, state.l, hi, grid)
        if not count_lo <= state.n < count_hi:
            raise BracketError(
                f"구간 [{lo}, {hi}] 의 유효 마디 수 ({count_lo}, {count_hi}) 가 n={state.n} 을 사이에 두지 않습니다",
                node_counts=(count_lo, count_hi),
            )

    for _ in range(numerov_config.get('max_bisection_steps', 200)):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if effective_node_count(pot, state.l, mid, grid) > state.n:
            hi = mid
        else:
            lo = mid

    energy = 0.5 * (lo + hi)
    logger.debug(f"Numerov {pot.label()} {state}: E={energy:.9f} (step={grid.step:.3g}, r_max={grid.r_max:.4g})")
    return energy


def trim_divergent_tail(values: np.ndarray) -> np.ndarray:
    """끝에서부터 |g| 가 줄어드는 동안 거슬러 올라가 마지막 감쇠 극소부터 끝까지 0 으로"""
    values = np.array(values, dtype=float)
    magnitude = np.abs(values)
    i = magnitude.size - 1
    while i > 0 and magnitude[i - 1] < magnitude[i]:
        i -= 1
    if i < magnitude.size - 1:
        values[i:] = 0.0
    return values


def numerov_wavefunction(pot: PotentialSpec, state: QuantumState, grid: RadialGridSpec,
                         energy: float) -> RadialSamples:
    """고유값에서의 Numerov 파동함수 (발산 꼬리 제거, 단위 L² 정규화)"""
    raw = numerov_integrate(pot, state.l, energy, grid)
    trimmed = trim_divergent_tail(raw.values)
    return RadialSamples.from_values(raw.grid, trimmed, Normalization.UNIT_L2)
