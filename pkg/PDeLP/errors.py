"""
PDeLP 异常体系

所有异常都派生自 PDeLPError，CLI 按异常类型映射退出码。
"""

from typing import TYPE_CHECKING, Iterable, List

if TYPE_CHECKING:
    from .lang.parser import SourceSpan
    from .logic.core import Literal, WeightedClause
    from .logic.deduction import ContradictionWitness


class PDeLPError(Exception):
    """PDeLP 基础异常"""


# ==================== 语法 ====================


class ParseError(PDeLPError):
    """单个语法错误（带源码位置）"""

    def __init__(self, span: "SourceSpan", message: str):
        self.span = span
        self.message = message
        super().__init__(f"{span.line}:{span.column}: {message}")


class ParseErrorList(PDeLPError):
    """一次解析中收集到的全部语法错误"""

    def __init__(self, errors: Iterable[ParseError]):
        self.errors: List[ParseError] = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))

    def __iter__(self):
        return iter(self.errors)

    def __len__(self) -> int:
        return len(self.errors)


# ==================== 程序校验 ====================


class InvalidWeight(PDeLPError, ValueError):
    """权重不在 (0, 1] 区间内"""

    def __init__(self, weight, reason: str = ""):
        self.weight = weight
        super().__init__(f"非法权重 {weight}" + (f": {reason}" if reason else ""))


class ValidationError(PDeLPError):
    """程序结构问题"""


class ContradictoryCertainKnowledge(ValidationError):
    """Π 本身即可推出某原子及其否定"""

    def __init__(self, witness: "ContradictionWitness"):
        self.witness = witness
        super().__init__(
            f"确定知识矛盾: 原子 {witness.atom} "
            f"(正 {witness.degree_pos}, 负 {witness.degree_neg})"
        )


class ForwardConstraintViolation(ValidationError):
    """规则体中的文字没有任何子句以其为头"""

    def __init__(self, literal: "Literal", clause: "WeightedClause"):
        self.literal = literal
        self.clause = clause
        where = f"子句 {clause.index} " if clause.index is not None else ""
        super().__init__(f"前向推理约束: 文字 {literal} 在{where}{clause} 中无支撑")


# ==================== 资源 ====================


class NodeLimitExceeded(PDeLPError):
    """辩证树节点数超过上限"""

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"辩证树节点数超过上限 {limit}")


class InstanceTooLarge(PDeLPError):
    """暴力枚举的实例规模超限"""

    def __init__(self, limit: int, actual: int, what: str = "子句"):
        self.limit = limit
        self.actual = actual
        super().__init__(f"{what}数量 {actual} 超过上限 {limit}")

