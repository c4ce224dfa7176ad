"""
표 재현용 기준 데이터

각 셀은 출처 표와 함께 인쇄된 값을 그대로 담는다. 빈 칸('-')은 None.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from solvers.potentials import Convention, PotentialSpec


class TableId(Enum):
    TABLE1 = 'TABLE1'
    TABLE2A = 'TABLE2A'
    TABLE2B = 'TABLE2B'
    TABLE3 = 'TABLE3'
    TABLE4 = 'TABLE4'
    TABLE5 = 'TABLE5'

    @classmethod
    def parse(cls, text: str) -> 'TableId':
        return cls(text.strip().upper())


@dataclass(frozen=True)
class ExpectedCell:
    label: str
    pot: PotentialSpec
    n: int
    l: int
    this_work: float
    numerical: Optional[float]
    citation: str
    literature: Optional[float] = None
    percent: Optional[float] = None


@dataclass(frozen=True)
class TablePreset:
    id: TableId
    title: str
    convention: Convention
    tolerance: float            # |this_work - value_paper| 허용치
    oracle_tolerance: float     # |oracle - value_paper_numerical| 허용치 (테스트용)
    oracle_nu_max: Optional[float]
    expected: Tuple[ExpectedCell, ...]
    value_format: str = '%.5f'    # 인쇄된 표와 같은 자릿수 (value_* 열)


LOG = PotentialSpec.logarithmic()


def _power(nu: float, sign: int = 1, A: float = 1.0) -> PotentialSpec:
    return PotentialSpec.power_law(A, nu, sign)


def _table1() -> Tuple[ExpectedCell, ...]:
    rows = [
        ('-r^-1.5', -1.5, -1, -0.29703, -0.29609),
        ('-r^-1.25', -1.25, -1, -0.22027, -0.22029),
        ('-r^-1', -1.0, -1, -0.25, -0.25),
        ('r^0', 0.0, 1, 1.0, 1.0),
        ('r^0.15', 0.15, 1, 1.32798, 1.32795),
        ('r^0.5', 0.5, 1, 1.83352, 1.83339),
        ('r^0.75', 0.75, 1, 2.10829, 2.10814),
        ('r^1.5', 1.5, 1, 2.70816, 2.70809),
        ('r^2', 2.0, 1, 3.0, 3.0),
        ('r^3', 3.0, 1, 3.45110, 3.45056),
        ('r^4', 4.0, 1, 3.80241, 3.79967),
        ('r^5', 5.0, 1, 4.09626, 4.33801),
        ('r^6', 6.0, 1, 4.35243, 4.54690),
        ('r^7', 7.0, 1, 4.58158, 4.71772),
        ('r^8', 8.0, 1, 4.79013, 4.92220),
        ('r^10', 10.0, 1, 5.16092, None),
    ]
    return tuple(
        ExpectedCell(label, _power(nu, sign), 0, 0, this_work, numerical, f"TABLE1 {label}")
        for label, nu, sign, this_work, numerical in rows
    )


def _table2(label: str, A: float, nu: float, cells) -> Tuple[ExpectedCell, ...]:
    pot = _power(nu, -1, A)
    return tuple(
        ExpectedCell(label, pot, n, l, this_work, numerical, f"TABLE2 {label} (n={n}, l={l})")
        for n, l, this_work, numerical in cells
    )


TABLE2A_CELLS = (
    (0, 0, -2.6859, -2.686), (1, 0, -2.2530, -2.253), (2, 0, -2.0440, -2.044),
    (0, 1, -2.3449, -2.345), (1, 1, -2.1006, -2.101), (2, 1, -1.9504, -1.951),
    (0, 2, -2.1562, -2.156), (1, 2, -1.9900, -1.990), (2, 2, -1.8749, -1.875),
    (0, 3, -2.0291, -2.029), (1, 3, -1.9049, -1.905), (2, 3, -1.8124, None),
)

TABLE2B_CELLS = (
    (0, 0, -1.2186, -1.218), (1, 0, -0.4622, -0.462), (2, 0, -0.2648, -0.265),
    (0, 1, -0.5004, -0.500), (1, 1, -0.2806, -0.281), (2, 1, -0.1873, -0.187),
    (0, 2, -0.2947, -0.295), (1, 2, -0.1949, -0.195), (2, 2, -0.1420, -0.142),
    (0, 3, -0.2019, -0.202), (1, 3, -0.1463, -0.146), (2, 3, -0.1128, None),
)

TABLE3_CELLS = (
    (0, 2.33825, 2.33810), (1, 4.08918, 4.08795), (2, 5.52132, 5.52056),
    (3, 6.78614, 6.78671), (4, 7.94189, 7.94413), (5, 9.01859, 9.02265),
)

# (n, l, this work, numerical, other literature, percent)
TABLE4_CELLS = (
    (0, 0, 1.83352, 1.83339, 1.83375, 0.007), (1, 0, 2.55152, 2.55065, 2.55142, 0.03),
    (2, 0, 3.05177, 3.05118, 3.05224, 0.019), (3, 0, 3.45197, 3.45213, 3.45341, 0.005),
    (4, 0, 3.79233, 3.79336, 3.79482, 0.027), (0, 1, 2.30056, 2.30050, 2.30073, 0.003),
    (1, 1, 2.85473, 2.85434, 2.85486, 0.014), (2, 1, 3.28666, 3.28583, 3.28659, 0.025),
    (3, 1, 3.64838, 3.64739, 3.64835, 0.027), (4, 1, 3.96361, 3.96268, 3.96382, 0.023),
    (0, 2, 2.65760, 2.65756, 2.65775, 0.002), (1, 2, 3.12048, 3.12033, 3.12077, 0.005),
    (2, 2, 3.50296, 3.50245, 3.50309, 0.015), (3, 2, 3.83338, 3.83254, 3.83336, 0.022),
    (4, 2, 4.12686, 4.12581, 4.12678, 0.025), (0, 3, 2.95448, 2.95445, 2.95461, 0.001),
    (1, 3, 3.35764, 3.35759, 3.35798, 0.001), (2, 3, 3.70299, 3.70270, 3.70327, 0.008),
    (3, 3, 4.00796, 4.00737, 4.00810, 0.015), (4, 3, 4.28282, 4.28196, 4.28283, 0.020),
    (0, 4, 3.21236, 3.21233, 3.21247, 0.001), (1, 4, 3.57275, 3.57275, 3.57310, 0.000),
    (2, 4, 3.88913, 3.88898, 3.88950, 0.004), (3, 4, 4.17308, 4.17268, 4.17335, 0.010),
    (4, 4, 4.43196, 4.46131, 4.43164, 0.015),
)

# 인쇄된 (4,4) 수치해 4.46131 은 이웃 열과 맞지 않아 기준해 값을 우선한다
SUSPECT_CELLS = {('TABLE4', 4, 4)}

# 인쇄된 변분값이 같은 식의 고정밀 계산과 어긋나는 셀: 셀별 허용치
# (10,0): 식을 그대로 계산하면 3.63955, 인쇄값 3.6411
PRINTED_ERRATA: Dict[Tuple[str, int, int], float] = {('TABLE5', 10, 0): 2e-3}

TABLE5_CELLS = (
    (0, 0, 1.0445, 1.0443), (0, 1, 1.6412, 1.6430), (0, 2, 2.0134, 2.0150), (0, 3, 2.2842, 2.2860),
    (1, 0, 1.8485, 1.8474), (1, 1, 2.1513, 2.1510), (1, 2, 2.3875, 2.3880), (1, 3, 2.5798, 2.5810),
    (2, 0, 2.2903, 2.2897), (2, 1, 2.4917, 2.4910), (2, 2, 2.6629, 2.6630), (2, 3, 2.8106, None),
    (3, 0, 2.5957, 2.5957), (3, 1, 2.7465, 2.7440), (3, 2, 2.8801, 2.8800), (3, 3, 2.9996, 2.9990),
    (3, 4, 3.1071, 3.1070), (4, 0, 2.8293, 2.8299), (4, 1, 2.9498, 2.9480), (4, 2, 3.0592, 3.0600),
    (4, 3, 3.1592, 3.1590), (4, 4, 3.2512, 3.2510), (6, 0, 3.1770, 3.1791), (10, 0, 3.6411, 3.6427),
)


PRESETS = {
    TableId.TABLE1: TablePreset(
        TableId.TABLE1, "ground state of power-law potentials", Convention.PLAIN,
        tolerance=5e-5, oracle_tolerance=2e-3, oracle_nu_max=4.0, expected=_table1(),
    ),
    TableId.TABLE2A: TablePreset(
        TableId.TABLE2A, "-2^1.7 r^-0.2", Convention.REF11,
        tolerance=5e-4, oracle_tolerance=2e-3, oracle_nu_max=None,
        expected=_table2('-2^1.7r^-0.2', 2.0 ** 1.7, -0.2, TABLE2A_CELLS),
        value_format='%.4f',
    ),
    TableId.TABLE2B: TablePreset(
        TableId.TABLE2B, "-2^0.8 r^-0.8", Convention.REF11,
        tolerance=5e-4, oracle_tolerance=2e-3, oracle_nu_max=None,
        expected=_table2('-2^0.8r^-0.8', 2.0 ** 0.8, -0.8, TABLE2B_CELLS),
        value_format='%.4f',
    ),
    TableId.TABLE3: TablePreset(
        TableId.TABLE3, "linear potential S states", Convention.PLAIN,
        tolerance=5e-5, oracle_tolerance=5e-5, oracle_nu_max=None,
        expected=tuple(
            ExpectedCell('r', _power(1.0), n, 0, this_work, numerical, f"TABLE3 (n={n})")
            for n, this_work, numerical in TABLE3_CELLS
        ),
    ),
    TableId.TABLE4: TablePreset(
        TableId.TABLE4, "r^0.5", Convention.PLAIN,
        tolerance=5e-5, oracle_tolerance=2e-3, oracle_nu_max=None,
        expected=tuple(
            ExpectedCell('r^0.5', _power(0.5), n, l, this_work, numerical, f"TABLE4 (n={n}, l={l})",
                         literature=literature, percent=percent)
            for n, l, this_work, numerical, literature, percent in TABLE4_CELLS
        ),
    ),
    TableId.TABLE5: TablePreset(
        TableId.TABLE5, "log(r)", Convention.PLAIN,
        tolerance=5e-4, oracle_tolerance=2e-3, oracle_nu_max=None,
        expected=tuple(
            ExpectedCell('log(r)', LOG, n, l, this_work, numerical, f"TABLE5 (n={n}, l={l})")
            for n, l, this_work, numerical in TABLE5_CELLS
        ),
        value_format='%.4f',
    ),
}


def get_preset(table_id) -> TablePreset:
    if not isinstance(table_id, TableId):
        table_id = TableId.parse(str(table_id))
    return PRESETS[table_id]
