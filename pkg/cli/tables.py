"""
표 재현: 변분값, 기준해, 인쇄값 비교
"""
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Optional

import pandas as pd

from cli.presets import PRINTED_ERRATA, SUSPECT_CELLS, ExpectedCell, TableId, TablePreset, get_preset
from config import get_config
from reference.numerov import numerov_eigenvalue
from solvers.linear import LinearRow, linear_potential_table
from solvers.logarithmic import log_eigenvalue
from solvers.potentials import Convention
from solvers.power_law import constant_potential_threshold, power_law_eigenvalue
from utils.error_handling import ErrorCollector, safe_execute
from utils.logging_config import ProgressLogger, get_project_logger, log_execution_time
from variational.models import QuantumState

logger = get_project_logger(__name__)

TABLE_COLUMNS = [
    'label', 'nu', 'n', 'l',
    'value_this_work', 'value_oracle', 'value_paper', 'value_paper_numerical', 'value_literature',
    'abs_diff', 'rel_diff', 'percent_error',
]
VALUE_COLUMNS = ['value_this_work', 'value_oracle', 'value_paper', 'value_paper_numerical', 'value_literature']


def table_column_formats(preset: TablePreset) -> Dict[str, str]:
    """value_* 열은 인쇄된 표의 자릿수로, 차이 열은 기본 형식 (%.6g) 으로"""
    return {column: preset.value_format for column in VALUE_COLUMNS}


def _linear_row(n: int) -> LinearRow:
    return linear_potential_table(n)[-1]


def variational_value(table_id: TableId, cell: ExpectedCell, convention: Convention) -> float:
    state = QuantumState(cell.n, cell.l)
    if table_id is TableId.TABLE3:
        return _linear_row(cell.n).epsilon_variational
    if not cell.pot.is_power_law:
        return log_eigenvalue(state).E
    if cell.pot.nu == 0.0:
        return constant_potential_threshold(cell.pot, convention).E
    return power_law_eigenvalue(cell.pot, state, convention=convention).E


def oracle_value(table_id: TableId, cell: ExpectedCell, convention: Convention, guess: float) -> float:
    """선형 퍼텐셜은 Airy 영점, 그 밖에는 Numerov (멱함수는 축약 단위에서 풀고 변환)"""
    state = QuantumState(cell.n, cell.l)
    if table_id is TableId.TABLE3:
        return _linear_row(cell.n).epsilon_exact
    if not cell.pot.is_power_law:
        return numerov_eigenvalue(cell.pot, state, guess=guess)
    if cell.pot.nu == 0.0:
        return constant_potential_threshold(cell.pot, convention).E

    reduced_guess = cell.pot.to_reduced_energy(guess, convention)
    epsilon = numerov_eigenvalue(cell.pot, state, guess=reduced_guess)
    return cell.pot.to_physical_energy(epsilon, convention)


def _difference(a: Optional[float], b: Optional[float]) -> float:
    if a is None or b is None or math.isnan(a) or math.isnan(b):
        return math.nan
    return abs(a - b)


def evaluate_row(table_id_value: str, index: int, with_oracle: bool = True) -> Dict[str, Any]:
    """표의 한 행 계산 (프로세스 풀에서 호출 가능하도록 최상위 함수)"""
    table_id = TableId(table_id_value)
    preset = get_preset(table_id)
    cell = preset.expected[index]

    this_work = variational_value(table_id, cell, preset.convention)
    oracle = math.nan
    if with_oracle:
        oracle = safe_execute(
            lambda: oracle_value(table_id, cell, preset.convention, this_work),
            default_value=math.nan,
            error_message=f"기준해 계산 실패 ({cell.citation})",
        )

    abs_diff = _difference(this_work, cell.this_work)
    oracle_diff = _difference(this_work, oracle)
    return {
        'label': cell.label,
        'nu': cell.pot.nu if cell.pot.is_power_law else math.nan,
        'n': cell.n,
        'l': cell.l,
        'value_this_work': this_work,
        'value_oracle': oracle,
        'value_paper': cell.this_work,
        'value_paper_numerical': math.nan if cell.numerical is None else cell.numerical,
        'value_literature': math.nan if cell.literature is None else cell.literature,
        'abs_diff': abs_diff,
        'rel_diff': abs_diff / abs(cell.this_work) if cell.this_work != 0.0 else math.nan,
        'percent_error': 100.0 * oracle_diff / abs(oracle) if not math.isnan(oracle_diff) and oracle != 0.0 else math.nan,
    }


@log_execution_time(logger)
def build_table(table_id, with_oracle: bool = True, workers: Optional[int] = None) -> pd.DataFrame:
    """
    표 하나를 DataFrame 으로 계산

    workers > 1 이면 행을 프로세스 풀에서 병렬 계산한다. 행 순서는 항상 표 순서.
    """
    preset = get_preset(table_id)
    workers = workers or get_config('cli').get('workers', 1)
    indices = range(len(preset.expected))
    logger.info(f"{preset.id.value} 계산 시작: {len(preset.expected)}행, oracle={with_oracle}, workers={workers}")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(
                evaluate_row,
                [preset.id.value] * len(indices), indices, [with_oracle] * len(indices),
            ))
    else:
        progress = ProgressLogger(logger, len(indices), log_interval=5)
        rows = []
        for index in indices:
            rows.append(evaluate_row(preset.id.value, index, with_oracle))
            progress.update(message=preset.expected[index].citation)
        progress.complete(preset.id.value)

    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def check_table(df: pd.DataFrame, preset: TablePreset) -> ErrorCollector:
    """|this_work - value_paper| 가 표별 허용치 (인쇄 오류 셀은 셀별 허용치) 를 넘는 셀 수집"""
    collector = ErrorCollector()
    for cell, (_, row) in zip(preset.expected, df.iterrows()):
        diff = row['abs_diff']
        tolerance = PRINTED_ERRATA.get((preset.id.value, cell.n, cell.l), preset.tolerance)
        if not diff <= tolerance:
            collector.add_error(
                f"value_this_work={row['value_this_work']:.6g}, value_paper={cell.this_work:.6g}, "
                f"|diff|={diff:.3g} > {tolerance:g}",
                context=cell.citation,
            )
    return collector


def oracle_mismatches(df: pd.DataFrame, preset: TablePreset) -> ErrorCollector:
    """기준해와 인쇄된 수치해 비교 (의심 셀, 빈 칸, ν 상한 초과 행 제외)"""
    collector = ErrorCollector()
    for cell, (_, row) in zip(preset.expected, df.iterrows()):
        if cell.numerical is None or (preset.id.value, cell.n, cell.l) in SUSPECT_CELLS:
            continue
        if preset.oracle_nu_max is not None and cell.pot.is_power_law and cell.pot.nu > preset.oracle_nu_max:
            continue
        diff = _difference(row['value_oracle'], cell.numerical)
        if not diff <= preset.oracle_tolerance:
            collector.add_error(
                f"value_oracle={row['value_oracle']:.6g}, numerical={cell.numerical:.6g}, |diff|={diff:.3g}",
                context=cell.citation,
            )
    return collector
