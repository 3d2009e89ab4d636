"""
实验结果输出
CSV 记录文件与 JSON 摘要文件，相同输入产生逐字节相同的输出
"""
import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence, Union

import numpy as np

from ..utils.exceptions import InvalidInputError, OutputWriteError


def format_value(value: Any) -> str:
    """浮点数取最短往返十进制表示"""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def to_json_compatible(value: Any) -> Any:
    """把 numpy 标量和数组转换为 JSON 可序列化的对象，非有限浮点数输出为 null"""
    if isinstance(value, Mapping):
        return {str(key): to_json_compatible(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_compatible(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_json_compatible(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def render_csv(records: Sequence[Mapping[str, Any]]) -> str:
    """
    渲染 CSV 文本

    Raises:
        InvalidInputError: 记录为空或字段不一致
    """
    if not records:
        raise InvalidInputError("没有可输出的记录")
    header: List[str] = list(records[0].keys())
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for index, record in enumerate(records):
        if list(record.keys()) != header:
            raise InvalidInputError(f"第 {index} 条记录的字段与表头不一致")
        writer.writerow([format_value(record[name]) for name in header])
    return buffer.getvalue()


def emit_csv(records: Sequence[Mapping[str, Any]], path: Union[str, Path]) -> Path:
    """
    写出 UTF-8 CSV：表头一行，每条记录一行

    Args:
        records: 记录列表（非空）
        path: 输出路径

    Returns:
        输出路径

    Raises:
        InvalidInputError: 记录为空（此时不创建文件）
        OutputWriteError: 写入失败
    """
    content = render_csv(records)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(content)
    except OSError as e:
        raise OutputWriteError(f"写入 CSV 失败: {e}", str(path))
    return path


def emit_json(document: Dict[str, Any], path: Union[str, Path]) -> Path:
    """写出 JSON 文档（摘要、训练报告等）"""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(to_json_compatible(document), f, indent=2, ensure_ascii=False)
            f.write("\n")
    except OSError as e:
        raise OutputWriteError(f"写入 JSON 失败: {e}", str(path))
    return path
