#!/usr/bin/env python3
"""
명령행 진입점

    eigen         고유값 하나 (JSON lines)
    table         표 재현 CSV/JSON, --check 로 인쇄값 대조
    wavefunction  그림용 파동함수 샘플 CSV
    fit           d(ν) 보정 상수 재적합

종료 코드: 0 성공, 1 --check 실패 또는 저장 실패, 2 잘못된 인자, 3 계산 오류
"""
import argparse
import sys
from typing import Any, Dict, List, Optional

from cli.figures import FigureRequest, build_figure
from cli.fitting import run_fit
from cli.presets import TableId, get_preset
from cli.tables import build_table, check_table, table_column_formats
from reference.numerov import numerov_eigenvalue
from solvers.logarithmic import log_eigenvalue
from solvers.potentials import Convention, PhysicalEigenvalue, PotentialSpec
from solvers.power_law import power_law_eigenvalue
from utils.error_handling import DomainError, handle_solver_error
from utils.file_utils import dataframe_records, write_dataframe_csv, write_json_records
from utils.logging_config import get_project_logger
from variational.models import DSelection, QuantumState

logger = get_project_logger(__name__)


def _d_selection(text: str) -> DSelection:
    try:
        return DSelection.parse(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e))


def _table_id(text: str) -> TableId:
    try:
        return TableId.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"알 수 없는 표입니다: {text} ({', '.join(t.value for t in TableId)})")


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"음이 아닌 정수여야 합니다: {text}")
    return value


def _variational_record(result: PhysicalEigenvalue) -> Dict[str, Any]:
    reduced = result.reduced
    return {
        'method': 'variational',
        'convention': result.convention.value,
        'E': result.E,
        'epsilon': reduced.epsilon if reduced else None,
        'x': reduced.x if reduced else None,
        'd': reduced.d if reduced else None,
    }


def _numerov_record(pot: PotentialSpec, state: QuantumState, convention: Convention, guess: float) -> Dict[str, Any]:
    if pot.is_power_law:
        epsilon = numerov_eigenvalue(pot, state, guess=pot.to_reduced_energy(guess, convention))
        energy = pot.to_physical_energy(epsilon, convention)
    else:
        epsilon = None
        energy = numerov_eigenvalue(pot, state, guess=guess)
    return {'method': 'numerov', 'convention': convention.value, 'E': energy, 'epsilon': epsilon, 'x': None, 'd': None}


@handle_solver_error(exit_code=3)
def cmd_eigen(args: argparse.Namespace, pot: PotentialSpec, state: QuantumState) -> int:
    convention = Convention(args.convention)
    if pot.is_power_law:
        result = power_law_eigenvalue(pot, state, args.d_mode, convention)
    else:
        result = log_eigenvalue(state)

    records = []
    if args.method in ('variational', 'both'):
        records.append(_variational_record(result))
    if args.method in ('numerov', 'both'):
        records.append(_numerov_record(pot, state, result.convention, result.E))

    write_json_records(records)
    return 0


@handle_solver_error(exit_code=3)
def cmd_table(args: argparse.Namespace) -> int:
    preset = get_preset(args.table)
    df = build_table(preset.id, with_oracle=not args.no_oracle, workers=args.workers)

    if args.format == 'json':
        written = write_json_records(dataframe_records(df), args.out)
    else:
        written = write_dataframe_csv(df, args.out, table_column_formats(preset))
    if not written:
        return 1

    if args.check:
        failures = check_table(df, preset)
        if failures.has_errors():
            first = failures.first_error()
            print(f"check failed: {first['context']}: {first['error']}", file=sys.stderr)
            logger.warning(failures.get_error_summary())
            return 1
        logger.info(f"{preset.id.value}: {len(df)}행 모두 허용치 {preset.tolerance:g} 이내")
    return 0


@handle_solver_error(exit_code=3)
def cmd_wavefunction(args: argparse.Namespace, request: FigureRequest) -> int:
    df = build_figure(request)
    return 0 if write_dataframe_csv(df, args.out) else 1


@handle_solver_error(exit_code=3)
def cmd_fit(args: argparse.Namespace) -> int:
    summary, curve = run_fit(args.grid_min, args.grid_max, args.grid_points)
    write_json_records([summary])
    if args.curve_out is not None and not write_dataframe_csv(curve, args.curve_out):
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='run.py',
        description="Laguerre 시험 함수 변분법으로 동경 Schrödinger 방정식 고유값 계산",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    eigen = subparsers.add_parser('eigen', help="고유값 하나 계산")
    eigen.add_argument('--potential', choices=['power', 'log'], default='power')
    eigen.add_argument('--A', type=float, default=1.0, dest='A', help="세기 A > 0 (기본 1)")
    eigen.add_argument('--nu', type=float, default=None, help="지수 ν > -2 (power 에서 필수)")
    eigen.add_argument('--sign', type=int, choices=[-1, 1], default=1)
    eigen.add_argument('--n', type=_non_negative_int, default=0)
    eigen.add_argument('--l', type=_non_negative_int, default=0)
    eigen.add_argument('--d-mode', type=_d_selection, default=DSelection.fitted(), dest='d_mode',
                       help="fit | minimize | fixed=<v> (기본 fit)")
    eigen.add_argument('--convention', choices=[c.value for c in Convention], default=Convention.PLAIN.value)
    eigen.add_argument('--method', choices=['variational', 'numerov', 'both'], default='variational')

    table = subparsers.add_parser('table', help="표 재현")
    table.add_argument('table', type=_table_id, help=', '.join(t.value for t in TableId))
    table.add_argument('--format', choices=['csv', 'json'], default='csv')
    table.add_argument('--check', action='store_true', help="인쇄값과 표별 허용치로 대조")
    table.add_argument('--out', default=None, help="저장 경로 (기본 stdout)")
    table.add_argument('--workers', type=int, default=None, help="행 병렬 계산 프로세스 수")
    table.add_argument('--no-oracle', action='store_true', dest='no_oracle', help="기준해 열 생략")

    wavefunction = subparsers.add_parser('wavefunction', help="그림용 파동함수 샘플")
    wavefunction.add_argument('--figure', type=int, choices=[2, 3, 4, 5], default=None)
    wavefunction.add_argument('--potential', choices=['power', 'log'], default=None)
    wavefunction.add_argument('--nu', type=float, default=None)
    wavefunction.add_argument('--n', type=_non_negative_int, default=0)
    wavefunction.add_argument('--l', type=_non_negative_int, default=0)
    wavefunction.add_argument('--rmax', type=float, default=None)
    wavefunction.add_argument('--points', type=int, default=None)
    wavefunction.add_argument('--out', default=None)

    fit = subparsers.add_parser('fit', help="보정 상수 재적합")
    fit.add_argument('--grid-min', type=float, default=None, dest='grid_min')
    fit.add_argument('--grid-max', type=float, default=None, dest='grid_max')
    fit.add_argument('--grid-points', type=int, default=None, dest='grid_points')
    fit.add_argument('--curve-out', default=None, dest='curve_out', help="(ν, d) 곡선 CSV 경로")

    return parser


def _eigen_inputs(parser: argparse.ArgumentParser, args: argparse.Namespace):
    if args.potential == 'power' and args.nu is None:
        parser.error("--potential power 에는 --nu 가 필요합니다")
    try:
        pot = (PotentialSpec.power_law(args.A, args.nu, args.sign)
               if args.potential == 'power' else PotentialSpec.logarithmic())
        return pot, QuantumState(args.n, args.l)
    except DomainError as e:
        parser.error(str(e))


def _figure_request(parser: argparse.ArgumentParser, args: argparse.Namespace) -> FigureRequest:
    try:
        if args.figure is not None:
            return FigureRequest.from_figure(args.figure, args.points)
        if args.potential is None or args.rmax is None:
            parser.error("--figure 또는 --potential 과 --rmax 가 필요합니다")
        return FigureRequest(potential=args.potential, n=args.n, l=args.l, rmax=args.rmax,
                             nu=args.nu, points=args.points or 500)
    except DomainError as e:
        parser.error(str(e))


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == 'eigen':
            pot, state = _eigen_inputs(parser, args)
            return cmd_eigen(args, pot, state)
        if args.command == 'wavefunction':
            return cmd_wavefunction(args, _figure_request(parser, args))
        if args.command == 'table':
            return cmd_table(args)
        return cmd_fit(args)
    except SystemExit as e:
        # argparse 오류는 2, --help 는 0
        return e.code if isinstance(e.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
