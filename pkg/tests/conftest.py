"""
테스트 공통 설정
"""
import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).parent.parent
sys.path.append(str(PROJECT_ROOT))


@pytest.fixture
def data_dir() -> Path:
    return Path(__file__).parent / 'data'
