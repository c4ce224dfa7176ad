"""
파일 처리 관련 공통 유틸리티 함수들
"""
import io
import json
import math
import os
import sys
import logging
from pathlib import Path
from typing import Optional, List, Dict, Any, Union

import numpy as np
import pandas as pd

from config import get_config


def _apply_column_formats(df: pd.DataFrame, column_formats: Dict[str, str]) -> pd.DataFrame:
    formatted = df.copy()
    for column, fmt in column_formats.items():
        if column in formatted.columns:
            formatted[column] = ['' if pd.isna(value) else fmt % value for value in formatted[column]]
    return formatted


def dataframe_to_csv_text(df: pd.DataFrame, column_formats: Optional[Dict[str, str]] = None) -> str:
    """
    DataFrame 을 결정적인 CSV 문자열로 변환

    헤더 1행, 쉼표 구분, '.' 소수점, LF 줄바꿈, 결측값은 빈 칸.
    column_formats 에 있는 열은 그 형식으로, 나머지 실수 열은 float_format 으로 쓴다.
    """
    file_config = get_config('file')
    if column_formats:
        df = _apply_column_formats(df, column_formats)
    buffer = io.StringIO()
    df.to_csv(
        buffer,
        index=False,
        float_format=file_config.get('float_format', '%.6g'),
        lineterminator=file_config.get('line_terminator', '\n'),
        na_rep='',
    )
    return buffer.getvalue()


def write_dataframe_csv(df: pd.DataFrame, file_path: Optional[Union[str, Path]] = None,
                        column_formats: Optional[Dict[str, str]] = None) -> bool:
    """
    DataFrame 을 CSV 로 저장 (file_path 가 None 이면 stdout)

    Args:
        df: 저장할 DataFrame
        file_path: 저장할 파일 경로
        column_formats: 열 이름 → printf 형식 (예: {'value_oracle': '%.5f'})

    Returns:
        성공 여부
    """
    text = dataframe_to_csv_text(df, column_formats)
    if file_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return True

    try:
        path = Path(file_path)
        if path.parent and not path.parent.exists():
            os.makedirs(path.parent, exist_ok=True)
        # newline='' 로 열어야 LF 가 그대로 유지됨
        with open(path, 'w', encoding=get_config('file').get('csv_encoding', 'utf-8'), newline='') as f:
            f.write(text)
        logging.info(f"CSV 파일 저장 성공: {path} ({len(df)}행)")
        return True

    except OSError as e:
        logging.error(f"CSV 파일 저장 실패 ({file_path}): {e}")
        return False


def read_dataframe_csv(source: Union[str, Path, io.StringIO]) -> Optional[pd.DataFrame]:
    """
    CSV 파일(또는 문자열 버퍼)을 DataFrame 으로 읽기

    Returns:
        DataFrame 또는 None (실패 시)
    """
    try:
        if isinstance(source, (str, Path)) and not os.path.exists(source):
            logging.warning(f"파일이 존재하지 않습니다: {source}")
            return None

        return pd.read_csv(source, encoding=get_config('file').get('csv_encoding', 'utf-8'))

    except (OSError, pd.errors.ParserError) as e:
        logging.error(f"CSV 파일 읽기 실패 ({source}): {e}")
        return None


def _plain_value(value: Any) -> Any:
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def dataframe_records(df: pd.DataFrame) -> List[Dict[str, Any]]:
    """DataFrame 을 JSON 직렬화 가능한 레코드 목록으로 (NaN 은 None)"""
    return [{key: _plain_value(value) for key, value in row.items()} for row in df.to_dict(orient="records")]


def json_records_text(records: List[Dict[str, Any]]) -> str:
    """레코드 목록을 한 줄에 하나씩 JSON 객체로 직렬화 (키 정렬)"""
    return ''.join(json.dumps(record, sort_keys=True) + '\n' for record in records)


def write_json_records(records: List[Dict[str, Any]], file_path: Optional[Union[str, Path]] = None) -> bool:
    """JSON lines 저장 (file_path 가 None 이면 stdout)"""
    text = json_records_text(records)
    if file_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return True

    try:
        path = Path(file_path)
        os.makedirs(path.parent, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        logging.info(f"JSON 파일 저장 성공: {path} ({len(records)}건)")
        return True
    except OSError as e:
        logging.error(f"JSON 파일 저장 실패 ({file_path}): {e}")
        return False
