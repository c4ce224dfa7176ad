"""
동경 파동함수 샘플 처리 공통 함수들
"""
from typing import Sequence

import numpy as np
from scipy.integrate import trapezoid


def trapezoid_norm_squared(grid: Sequence[float], values: Sequence[float]) -> float:
    """사다리꼴 규칙으로 ∫|g|² 계산"""
    values = np.asarray(values, dtype=float)
    return float(trapezoid(values * values, np.asarray(grid, dtype=float)))


def normalize_unit_l2(grid: Sequence[float], values: Sequence[float]) -> np.ndarray:
    """격자 위에서 ∫|g|² = 1 이 되도록 정규화"""
    values = np.asarray(values, dtype=float)
    norm_squared = trapezoid_norm_squared(grid, values)
    if norm_squared <= 0.0 or not np.isfinite(norm_squared):
        raise ValueError(f"정규화할 수 없는 샘플입니다 (∫g² = {norm_squared})")
    return values / np.sqrt(norm_squared)


def count_sign_changes(values: Sequence[float]) -> int:
    """내부의 엄격한 부호 변화 횟수 (0 값은 건너뜀)"""
    signs = np.sign(np.asarray(values, dtype=float))
    signs = signs[signs != 0]
    if signs.size < 2:
        return 0
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def first_maximum_index(values: Sequence[float]) -> int:
    """|g| 의 첫 번째 국소 최댓값 위치"""
    magnitude = np.abs(np.asarray(values, dtype=float))
    for i in range(1, magnitude.size - 1):
        if magnitude[i] >= magnitude[i - 1] and magnitude[i] > magnitude[i + 1]:
            return i
    return int(np.argmax(magnitude))


def align_sign(values: Sequence[float]) -> np.ndarray:
    """첫 번째 최댓값에서 양수가 되도록 부호 정렬"""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        return values
    if values[first_maximum_index(values)] < 0:
        return -values
    return values
