"""
에러 정의 및 처리 관련 유틸리티
"""
import sys
import logging
import functools
from typing import Any, Callable, Optional, Dict, List


class SolverError(Exception):
    """모든 계산 오류의 기본 클래스"""


class DomainError(SolverError, ValueError):
    """정의역을 벗어난 입력 (x <= 0 인 gamma, alpha <= -1, 범위 밖 k 등)"""


class DegenerateExponentError(SolverError):
    """ν = 0 은 상수 퍼텐셜이므로 멱함수 경로로 풀 수 없음"""


class NoStationaryPointError(SolverError):
    """b·ν <= 0 이라 ε(x) 가 x 에 대한 정류점을 갖지 않음"""


class SingularDenominatorError(SolverError):
    """보정 인자 p 의 분모 a1ν²+a2ν+a3 가 0"""


class NoMinimumInBracketError(SolverError):
    """d 구간에서 ε(d) 가 단조여서 내부 최솟값이 없음"""


class FitConvergenceError(SolverError):
    """보정 상수 재적합이 수렴하지 않음"""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class BracketError(SolverError):
    """고유값 구간 양 끝의 마디 수가 n 을 사이에 두지 않음"""

    def __init__(self, message: str, node_counts: Optional[tuple] = None):
        super().__init__(message)
        self.node_counts = node_counts


class NumerovGridError(SolverError):
    """Numerov 격자 설정이 유효하지 않음"""


def handle_solver_error(exit_code: int = 3) -> Callable:
    """
    CLI 명령의 계산 오류 처리 데코레이터

    SolverError 를 잡아 stderr 에 한 줄 메시지를 남기고 exit_code 를 반환한다.
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            try:
                return func(*args, **kwargs)
            except SolverError as e:
                logging.getLogger(func.__module__).error(f"계산 오류 ({func.__name__}): {e}")
                print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
                return exit_code
        return wrapper
    return decorator


def safe_execute(func: Callable, default_value: Any = None,
                log_error: bool = True, error_message: Optional[str] = None) -> Any:
    """
    함수를 안전하게 실행하고 에러 시 기본값 반환

    Args:
        func: 실행할 함수
        default_value: 에러 시 반환할 기본값
        log_error: 에러 로깅 여부
        error_message: 커스텀 에러 메시지

    Returns:
        함수 실행 결과 또는 기본값
    """
    try:
        return func()
    except SolverError as e:
        if log_error:
            message = error_message or f"함수 실행 실패 ({getattr(func, '__name__', 'unknown')})"
            logging.warning(f"{message}: {e}")
        return default_value


class ErrorCollector:
    """에러 수집기 - 표 검증에서 실패한 셀을 모아서 처리"""

    def __init__(self):
        self.errors: List[Dict[str, Any]] = []

    def add_error(self, error: str, context: str = ""):
        """에러 추가"""
        self.errors.append({
            'error': error,
            'context': context,
        })

    def has_errors(self) -> bool:
        """에러 존재 여부"""
        return len(self.errors) > 0

    def first_error(self) -> Optional[Dict[str, Any]]:
        """첫 번째 에러 반환"""
        return self.errors[0] if self.errors else None

    def get_error_summary(self) -> str:
        """에러 요약 반환"""
        if not self.errors:
            return "에러 없음"

        summary = f"총 {len(self.errors)}개의 에러 발생:\n"
        for i, error_info in enumerate(self.errors, 1):
            summary += f"{i}. {error_info['context']}: {error_info['error']}\n"

        return summary
