"""
参数转换器
负责命令行字符串参数与计算层对象之间的转换
"""
import math
import re
from typing import Dict, Tuple, Union

import numpy as np

from ..core.hamiltonian import PARAMETER_NAMES
from ..core.states import CHARGE_BASIS_LABELS, NORM_TOLERANCE, PureState
from ..harness.sweeps import GridAxis
from ..network.indicators import OutputFunctional
from ..utils.logger import get_logger
from ..utils.exceptions import DataParsingError, InvalidInputError, InvalidStateError

_PI_PATTERN = re.compile(r'^([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\*?pi(?:/((?:\d+(?:\.\d*)?|\.\d+)))?$')


class ParameterConverter:
    """参数转换器，负责命令行参数与计算层对象之间的转换"""

    def __init__(self):
        """初始化参数转换器"""
        self.logger = get_logger("parameter_converter")

    def parse_angle(self, text: Union[str, float]) -> float:
        """
        解析角度：弧度数值、"pi" 的倍数（如 "-pi/2"、"3pi/4"）或带 "deg" 后缀的角度

        Raises:
            DataParsingError: 格式无法识别或不是有限值
        """
        if isinstance(text, (int, float)):
            value = float(text)
        else:
            token = text.strip().lower().replace(" ", "")
            match = _PI_PATTERN.match(token)
            try:
                if match:
                    factor = match.group(1)
                    if factor in ("", "+", "-"):
                        factor += "1"
                    value = float(factor) * math.pi / float(match.group(2) or 1.0)
                elif token.endswith("deg"):
                    value = math.radians(float(token[:-3]))
                else:
                    value = float(token)
            except (ValueError, ZeroDivisionError):
                raise DataParsingError(f"无法解析角度: {text!r}")
        if not math.isfinite(value):
            raise DataParsingError(f"角度不是有限值: {text!r}")
        return value

    def parse_state(self, literal: str) -> PureState:
        """
        解析态字面量

        两种写法：
          "re+imj,re+imj,re+imj,re+imj"     四个复振幅（|00>,|01>,|10>,|11>）
          "polar:a00,a01,a10,a11,xi,theta,phi"  幅值与相对相位，角度写法同 parse_angle

        非零向量自动归一化，偏离超过容差时记录警告

        Raises:
            DataParsingError: 字面量格式错误
            InvalidStateError: 零向量
        """
        if not isinstance(literal, str) or not literal.strip():
            raise DataParsingError("态字面量不能为空")
        text = literal.strip()

        if text.lower().startswith("polar:"):
            parts = [part.strip() for part in text[6:].split(",")]
            if len(parts) != 7:
                raise DataParsingError(f"polar 字面量需要7个数值，实际 {len(parts)} 个: {literal!r}")
            try:
                magnitudes = [float(part) for part in parts[:4]]
            except ValueError:
                raise DataParsingError(f"无法解析幅值: {literal!r}")
            xi, theta, phi = (self.parse_angle(part) for part in parts[4:])
            amplitudes = np.array([
                magnitudes[0],
                magnitudes[1] * np.exp(1j * xi),
                magnitudes[2] * np.exp(1j * theta),
                magnitudes[3] * np.exp(1j * phi),
            ])
        else:
            parts = [part.strip().replace(" ", "") for part in text.split(",")]
            if len(parts) != 4:
                raise DataParsingError(f"态字面量需要4个复数，实际 {len(parts)} 个: {literal!r}")
            try:
                amplitudes = np.array([complex(part) for part in parts])
            except ValueError:
                raise DataParsingError(f"无法解析复数振幅: {literal!r}")

        if not np.all(np.isfinite(amplitudes)):
            raise DataParsingError(f"振幅包含非有限值: {literal!r}")
        norm_squared = float(np.vdot(amplitudes, amplitudes).real)
        if norm_squared == 0.0:
            raise InvalidStateError("零向量不是量子态")
        if abs(norm_squared - 1.0) > NORM_TOLERANCE:
            self.logger.warning(f"态未归一化，已自动归一化: Σ|a|² = {norm_squared:.12g}", literal=literal)
        return PureState.from_amplitudes(amplitudes, normalize=True)

    def parse_functional(self, literal: str) -> OutputFunctional:
        """解析输出泛函 "zz2" 或 "proj:N" """
        return OutputFunctional.from_literal(literal)

    def parse_basis_index(self, text: Union[str, int]) -> int:
        """
        解析相位基矢：1/2/3 或 01/10/11

        Raises:
            InvalidInputError: 不是可校正的相位基矢
        """
        token = str(text).strip()
        if token in CHARGE_BASIS_LABELS[1:]:
            return CHARGE_BASIS_LABELS.index(token)
        if token in ("1", "2", "3"):
            return int(token)
        raise InvalidInputError(f"相位基矢必须为 1、2、3 或 01、10、11: {text!r}")

    def parse_harmonics(self, text: Union[str, int]) -> Union[int, Dict[str, int]]:
        """
        解析谐波阶数："1"、"2" 或按函数指定的 "K_A=2,zeta=1"（未列出的函数取1）

        Raises:
            DataParsingError: 格式错误或阶数不是1、2
        """
        token = str(text).strip()
        try:
            if "=" not in token:
                harmonics: Union[int, Dict[str, int]] = int(token)
                orders = [harmonics]
            else:
                harmonics = {}
                for item in token.split(","):
                    name, value = (part.strip() for part in item.split("=", 1))
                    if name not in PARAMETER_NAMES:
                        raise DataParsingError(f"未知的参数函数: {name}，可选 {list(PARAMETER_NAMES)}")
                    harmonics[name] = int(value)
                orders = list(harmonics.values())
        except ValueError:
            raise DataParsingError(f"无法解析谐波阶数: {text!r}")
        if any(order not in (1, 2) for order in orders):
            raise DataParsingError(f"谐波阶数只能为1或2: {text!r}")
        return harmonics

    def parse_grid_axis(self, text: str) -> Tuple[str, GridAxis]:
        """
        解析扫描轴 "name=start:stop:count"，端点写法同 parse_angle

        Raises:
            DataParsingError: 格式错误
        """
        try:
            name, body = (part.strip() for part in text.split("=", 1))
            start, stop, count = body.split(":")
            return name, GridAxis(self.parse_angle(start), self.parse_angle(stop), int(count))
        except ValueError:
            raise DataParsingError(f"无法解析扫描轴: {text!r}（格式 name=start:stop:count）")
