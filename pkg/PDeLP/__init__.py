"""
PDeLP - 可能性可废止逻辑程序解释器

加权子句程序的解析、GMP 最大推理度、论证构造与辩证树担保分析：
- 精确有理数必然度
- 论证：最小、非矛盾的不确定支撑
- 辩证树：可接受论证线 + U/D 标记 + 剪枝
- 命令行：check / query / tree / prove / args
"""

from .Core import Interpreter
from .config import PDeLPConfig

__version__ = "1.0.0"
__all__ = ["Interpreter", "PDeLPConfig"]
