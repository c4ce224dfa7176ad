#!/usr/bin/env python3
"""
프로젝트 설정 파일
"""
import os
from pathlib import Path
from typing import Dict, Any

# .env 파일 로드
try:
    from dotenv import load_dotenv
    load_dotenv(Path(__file__).parent / '.env')
except ImportError:
    pass

# 프로젝트 루트 경로
PROJECT_ROOT = Path(__file__).parent

# 로그 저장 경로 (LOG_TO_FILE=1 일 때만 사용)
LOGS_PATH = PROJECT_ROOT / "logs"


def _env_float(name: str, default: float) -> float:
    value = os.getenv(name)
    return float(value) if value not in (None, '') else default


# 보정 인자 w=(1+tp)^h 상수 (a2 는 인쇄된 "1..05" 를 1.05 로 읽음)
CORRECTION_FIT_CONFIG = {
    't': _env_float('CORRECTION_T', 0.2075),
    'a1': _env_float('CORRECTION_A1', 0.1381),
    'a2': _env_float('CORRECTION_A2', 1.05),
    'a3': _env_float('CORRECTION_A3', 2.484),
    'h': _env_float('CORRECTION_H', 0.08104),
}

# 변분 계산 설정
VARIATIONAL_CONFIG = {
    'd_bracket': (0.3, 6.0),
    'd_xatol': 1e-7,
    'laguerre_n_max': 30,
    'near_singular_nu': -1.99,
    'closed_form_rtol': 1e-10,
    'gamma_shift_taylor': 1e-2,  # |shift| 이하에서 lnΓ 증분을 polygamma 급수로
    'small_nu_objective': 1e-2,  # 0<ν 이하에서는 로그형 목적함수로 d 최소화
}

# Airy 함수 설정
AIRY_CONFIG = {
    'series_switch': 6.5,   # |z| 이하는 Maclaurin 급수, 초과는 점근 전개
    'max_zero_index': 10,
    'zero_xtol': 1e-14,
    'bracket_half_width': 0.25,
}

# 로그 퍼텐셜 설정
LOG_POTENTIAL_CONFIG = {
    'nu_limit': 1e-5,
    'nu_limit_max': 1e-3,
    'printed_d': 1.43203,
}

# Numerov 기준해 설정
NUMEROV_CONFIG = {
    'r_min': 1e-6,
    'grid_points': 4000,
    'min_grid_points': 1000,
    'tail_decay_exponent': 20.0,
    'bisection_tol': 1e-7,
    'max_bisection_steps': 200,
    'rescale_threshold': 1e150,
    'r_max_floor_confining': 15.0,
    'r_max_floor_singular': 40.0,
    'r_max_cap': 4000.0,
    'max_numerov_factor': 0.5,  # h^2 |Q| / 12 상한
}

# CLI 설정
CLI_CONFIG = {
    'wavefunction_points': 500,
    'significant_digits': 6,
    'workers': int(os.getenv('WORKERS', '1')),
    'figures': {
        2: {'potential': 'power', 'nu': 1.0, 'n': 0, 'l': 0, 'rmax': 8.0},
        3: {'potential': 'power', 'nu': 1.0, 'n': 4, 'l': 0, 'rmax': 14.0},
        4: {'potential': 'log', 'n': 0, 'l': 0, 'rmax': 12.0},
        5: {'potential': 'log', 'n': 4, 'l': 4, 'rmax': 50.0},
    },
}

# d(ν) 재적합 설정
FIT_CONFIG = {
    'grid_min': -1.5,
    'grid_max': 8.0,
    'grid_points': 24,
    'min_points': 20,
    'exclude_near_zero': 1e-3,
    # a1..a3 는 기본 상수에 고정하고 t, h 만 범위 안에서 적합 (t·h 퇴화)
    'vary': ('t', 'h'),
    'bounds': {'t': (0.0, 2.0), 'h': (0.0, 1.0)},
}

# 파일 처리 설정
FILE_CONFIG = {
    'csv_encoding': 'utf-8',
    'line_terminator': '\n',
    'float_format': '%.6g',
}

# 로깅 설정
LOGGING_CONFIG = {
    'level': 'INFO',
    'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    'date_format': '%Y-%m-%d %H:%M:%S',
    'log_to_file': os.getenv('LOG_TO_FILE', '0') == '1',
}

# 환경별 설정 오버라이드
ENVIRONMENT = os.getenv('ENVIRONMENT', 'development')

if ENVIRONMENT == 'production':
    CLI_CONFIG['workers'] = int(os.getenv('WORKERS', str(os.cpu_count() or 1)))
    LOGGING_CONFIG['level'] = 'WARNING'
elif ENVIRONMENT == 'development':
    LOGGING_CONFIG['level'] = os.getenv('LOG_LEVEL', 'INFO')


def get_config(section: str) -> Dict[str, Any]:
    """설정 섹션 반환"""
    configs = {
        'correction_fit': CORRECTION_FIT_CONFIG,
        'variational': VARIATIONAL_CONFIG,
        'airy': AIRY_CONFIG,
        'log_potential': LOG_POTENTIAL_CONFIG,
        'numerov': NUMEROV_CONFIG,
        'cli': CLI_CONFIG,
        'fit': FIT_CONFIG,
        'file': FILE_CONFIG,
        'logging': LOGGING_CONFIG,
    }
    return configs.get(section, {})
