"""
공통 유틸리티 테스트: 샘플 처리, CSV/JSON 출력, 에러 처리
"""
import io
import json

import numpy as np
import pandas as pd
import pytest

from utils.common_functions import align_sign, count_sign_changes, first_maximum_index, normalize_unit_l2
from utils.error_handling import DomainError, ErrorCollector, NoStationaryPointError, handle_solver_error, safe_execute
from utils.file_utils import dataframe_records, dataframe_to_csv_text, read_dataframe_csv, write_dataframe_csv, write_json_records


class TestCommonFunctions:
    def test_sign_changes_skip_zeros(self):
        assert count_sign_changes([1.0, 0.0, -1.0, -2.0, 0.0, 3.0]) == 2
        assert count_sign_changes([0.0, 0.0]) == 0

    def test_first_maximum_and_alignment(self):
        values = np.array([0.0, -1.0, -0.5, 2.0, 0.0])
        assert first_maximum_index(values) == 1
        assert align_sign(values).tolist() == [0.0, 1.0, 0.5, -2.0, 0.0]

    def test_normalize_rejects_zero(self):
        with pytest.raises(ValueError):
            normalize_unit_l2([0.0, 1.0], [0.0, 0.0])


class TestFileUtils:
    def test_csv_missing_value_and_line_endings(self, tmp_path):
        df = pd.DataFrame({'n': [0, 1], 'value': [1.234567891, np.nan]})
        out = tmp_path / 'nested' / 'rows.csv'
        assert write_dataframe_csv(df, out)
        assert out.read_bytes() == b"n,value\n0,1.23457\n1,\n"

    def test_csv_column_formats(self):
        df = pd.DataFrame({'value': [2.338107, np.nan], 'diff': [1.234567891e-5, 0.5]})
        text = dataframe_to_csv_text(df, {'value': '%.4f', 'absent': '%.2f'})
        assert text == "value,diff\n2.3381,1.23457e-05\n,0.5\n"
        assert df['value'].iloc[0] == 2.338107

    def test_csv_stdout(self, capsys):
        write_dataframe_csv(pd.DataFrame({'x': [0.5]}))
        df = read_dataframe_csv(io.StringIO(capsys.readouterr().out))
        assert df['x'].tolist() == [0.5]

    def test_read_missing_file(self, tmp_path):
        assert read_dataframe_csv(tmp_path / 'absent.csv') is None

    def test_json_records_sorted(self, capsys):
        records = dataframe_records(pd.DataFrame({'b': [np.float64(1.5)], 'a': [np.nan]}))
        write_json_records(records)
        line = capsys.readouterr().out
        assert line == '{"a": null, "b": 1.5}\n'
        assert json.loads(line) == {'a': None, 'b': 1.5}


class TestErrorHandling:
    def test_domain_error_is_value_error(self):
        assert issubclass(DomainError, ValueError)

    def test_handle_solver_error(self, capsys):
        @handle_solver_error(exit_code=3)
        def command():
            raise NoStationaryPointError("정류점 없음")

        assert command() == 3
        assert "NoStationaryPointError" in capsys.readouterr().err

    def test_safe_execute(self):
        def failing():
            raise DomainError("범위 밖")

        assert safe_execute(failing, default_value=None, log_error=False) is None
        assert safe_execute(lambda: 2.0) == 2.0

    def test_error_collector(self):
        collector = ErrorCollector()
        assert not collector.has_errors()
        assert collector.first_error() is None
        collector.add_error("차이 1e-3", "TABLE3 (n=0)")
        collector.add_error("차이 2e-3", "TABLE3 (n=1)")
        assert collector.first_error()['context'] == "TABLE3 (n=0)"
        assert "총 2개의 에러" in collector.get_error_summary()
