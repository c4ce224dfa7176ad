#!/usr/bin/env python3
"""
변분 고유값 계산기 실행 스크립트

사용법:
    python3 run.py eigen --potential power --nu 1 --n 0 --l 0
    python3 run.py table TABLE3 --check
    python3 run.py wavefunction --figure 2
    python3 run.py fit --curve-out output/d_curve.csv
"""
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent))

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
