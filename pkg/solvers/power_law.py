"""
멱함수 퍼텐셜 sgn·A·r^ν 의 변분 고유값
"""
from typing import Optional

from solvers.potentials import Convention, PhysicalEigenvalue, PotentialSpec
from utils.error_handling import DegenerateExponentError, DomainError
from utils.logging_config import get_project_logger
from variational.energy import epsilon_nl
from variational.models import CorrectionFit, DMode, DSelection, QuantumState
from variational.shape_exponent import d_fitted, d_minimized

logger = get_project_logger(__name__)


def select_d(d_mode: DSelection, state: QuantumState, nu: float, sign: int,
             fit: Optional[CorrectionFit] = None) -> float:
    """d 선택 방식에 따른 모양 지수"""
    if d_mode.mode is DMode.FIXED:
        return d_mode.value
    if d_mode.mode is DMode.MINIMIZED:
        return d_minimized(state, nu, sign)
    return d_fitted(nu, fit)


def _require_power_law(pot: PotentialSpec) -> None:
    if not pot.is_power_law:
        raise DomainError(f"멱함수 퍼텐셜이 아닙니다: {pot.label()}")


def power_law_eigenvalue(pot: PotentialSpec, state: QuantumState,
                         d_mode: Optional[DSelection] = None,
                         convention: Convention = Convention.PLAIN,
                         fit: Optional[CorrectionFit] = None) -> PhysicalEigenvalue:
    """
    E = ε·A^(2/(ν+2)), REF11 이면 2^(-ν/(ν+2)) 를 더 곱함

    Raises:
        DegenerateExponentError: ν = 0 (constant_potential_threshold 또는 로그 퍼텐셜 경로 사용)
    """
    _require_power_law(pot)
    if pot.nu == 0.0:
        raise DegenerateExponentError("ν=0 은 상수 퍼텐셜입니다; constant_potential_threshold 를 사용하세요")

    d_mode = d_mode or DSelection.fitted()
    d = select_d(d_mode, state, pot.nu, pot.sign, fit)
    reduced = epsilon_nl(d, state, pot.nu, pot.sign, d_mode)
    energy = pot.to_physical_energy(reduced.epsilon, convention)

    logger.debug(f"{pot.label()} {state} d={d:.6f} ({d_mode.label()}): eps={reduced.epsilon:.8g}, E={energy:.8g}")
    return PhysicalEigenvalue(E=energy, reduced=reduced, convention=convention)


def constant_potential_threshold(pot: PotentialSpec,
                                 convention: Convention = Convention.PLAIN) -> PhysicalEigenvalue:
    """
    ν=0 (V = sgn·A 상수): 속박 상태 없이 스펙트럼 바닥이 sgn·A

    x → 0 극한에서 ε(x, d) → sgn 이므로 표에는 이 값이 들어간다. 축약 고유값은 없다.
    """
    _require_power_law(pot)
    if pot.nu != 0.0:
        raise DomainError(f"상수 퍼텐셜 문턱값은 ν=0 에서만 정의됩니다 (nu={pot.nu})")
    return PhysicalEigenvalue(E=pot.sign * pot.A, reduced=None, convention=convention)
