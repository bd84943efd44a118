"""
PDeLP 公共工具模块

提供跨模块共享的工具函数：日志、必然度格式化、子句标识。
"""

import logging
import sys
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, List, Optional, Union

if TYPE_CHECKING:
    from .logic.core import WeightedClause

LOGGER_NAME = "PDeLP"
LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    获取包日志器或其子日志器

    Args:
        name: 子日志器名称（可选）

    Returns:
        logging.Logger: ``PDeLP`` 或 ``PDeLP.<name>``
    """
    root = logging.getLogger(LOGGER_NAME)
    return root.getChild(name) if name else root


def setup_logging(level: Union[int, str] = logging.WARNING) -> logging.Logger:
    """为包日志器安装唯一的 stderr 处理器（仅 CLI 调用）"""
    logger = get_logger()
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logger.setLevel(level)
    for handler in list(logger.handlers):
        if getattr(handler, "_pdelp_handler", False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._pdelp_handler = True  # type: ignore[attr-defined]
    logger.addHandler(handler)
    logger.propagate = False
    return logger


def format_degree(value: Union[Fraction, int, str]) -> str:
    """
    将必然度渲染为最短的精确十进制串

    输入权重都是有限小数，推理只做 min/max，因此结果总能精确表示。
    对无法有限表示的有理数退回 17 位有效数字。

    Args:
        value: 必然度

    Returns:
        str: 如 ``1``、``0.95``、``0.3``
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    digits = 0
    scaled = value
    while scaled.denominator != 1:
        digits += 1
        scaled = value * 10**digits
        if digits > 40:
            return f"{float(value):.17g}"
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled.numerator)).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def clause_label(clause: "WeightedClause") -> Union[int, str]:
    """子句的对外标识：有源码序号用序号，否则用文本"""
    return clause.index if clause.index is not None else str(clause)


def support_labels(support: Iterable["WeightedClause"]) -> List[Union[int, str]]:
    """按源码顺序列出支撑集中子句的标识"""
    return [clause_label(c) for c in sorted(support, key=lambda c: c.sort_key)]


def format_support(support: Iterable["WeightedClause"]) -> str:
    """支撑集的简短文本形式，如 ``{6,7}``"""
    return "{" + ",".join(str(label) for label in support_labels(support)) + "}"
