"""
P-DeLP 领域类型

原子、文字、子句、加权子句与程序 (Π, Δ)，以及程序的结构校验。
所有类型构造后不可变，可在并发查询之间直接共享。
"""

import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from ..errors import (
    ContradictoryCertainKnowledge,
    ForwardConstraintViolation,
    InvalidWeight,
    ValidationError,
)

ATOM_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

ZERO = Fraction(0)
ONE = Fraction(1)

DegreeLike = Union[Fraction, int, float, str]


def to_degree(value: DegreeLike) -> Fraction:
    """
    转换为精确有理数必然度

    字符串按十进制精确解析（"0.95" -> 19/20），浮点数取其最短 repr。
    """
    if isinstance(value, bool):
        raise TypeError("必然度不能是布尔值")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"无法转换为必然度: {value!r}")


# ==================== 原子与文字 ====================


@dataclass(frozen=True, order=True)
class Atom:
    """命题原子（模糊命题变量）"""

    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not ATOM_PATTERN.match(self.name):
            raise ValueError(f"非法原子名: {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Literal:
    """文字：原子 q 或其否定 ∼q"""

    atom: Atom
    negated: bool = False

    @classmethod
    def of(cls, text: str) -> "Literal":
        """由 ``q`` / ``~q`` 构造（不经过语法分析器）"""
        text = text.strip()
        if text[:1] in ("~", "∼"):
            return cls(Atom(text[1:].strip()), True)
        return cls(Atom(text))

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    def __str__(self) -> str:
        return f"~{self.atom}" if self.negated else str(self.atom)

    def render(self, unicode: bool = False) -> str:
        if not self.negated:
            return str(self.atom)
        return f"{'∼' if unicode else '~'}{self.atom}"


def complement(literal: Literal) -> Literal:
    """互补文字：翻转否定标记，原子不变"""
    return literal.complement()


# ==================== 子句 ====================


@dataclass(frozen=True)
class Clause:
    """规则 Q ← L1 ∧ … ∧ Ln；规则体为空时为事实"""

    head: Literal
    body: Tuple[Literal, ...] = ()

    def __post_init__(self):
        # 规则体去重，保留首次出现的顺序
        object.__setattr__(self, "body", tuple(dict.fromkeys(self.body)))

    @property
    def is_fact(self) -> bool:
        return not self.body

    def literals(self) -> Tuple[Literal, ...]:
        return (self.head,) + self.body

    def render(self, unicode: bool = False) -> str:
        head = self.head.render(unicode)
        if self.is_fact:
            return head
        arrow, conj = (" ← ", " ∧ ") if unicode else (" <- ", " & ")
        return head + arrow + conj.join(b.render(unicode) for b in self.body)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class WeightedClause:
    """
    加权子句 (φ, α)

    α 是 φ 必然度的下界，取值 (0, 1]。``index`` 为源码中的序号（从 1 开始），
    不参与相等性比较，只用于排序与展示。
    """

    clause: Clause
    weight: Fraction
    index: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        try:
            weight = to_degree(self.weight)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidWeight(self.weight, str(e)) from e
        if weight <= 0:
            raise InvalidWeight(self.weight, "(φ, 0) 不携带任何信息")
        if weight > 1:
            raise InvalidWeight(self.weight, "必然度不能大于 1")
        object.__setattr__(self, "weight", weight)

    @classmethod
    def fact(
        cls, head: Literal, weight: DegreeLike, index: Optional[int] = None
    ) -> "WeightedClause":
        return cls(Clause(head), weight, index)

    @classmethod
    def rule(
        cls,
        head: Literal,
        body: Iterable[Literal],
        weight: DegreeLike,
        index: Optional[int] = None,
    ) -> "WeightedClause":
        return cls(Clause(head, tuple(body)), weight, index)

    @property
    def head(self) -> Literal:
        return self.clause.head

    @property
    def body(self) -> Tuple[Literal, ...]:
        return self.clause.body

    @property
    def is_fact(self) -> bool:
        return self.clause.is_fact

    @property
    def is_certain(self) -> bool:
        return self.weight == ONE

    @property
    def sort_key(self) -> tuple:
        """源码顺序优先；无序号时按规则头名称"""
        if self.index is not None:
            return (0, self.index, "", False, "", self.weight)
        head = self.clause.head
        return (1, sys.maxsize, head.atom.name, head.negated, str(self.clause), self.weight)

    def render(self, unicode: bool = False) -> str:
        from ..utils import format_degree

        return f"({self.clause.render(unicode)}, {format_degree(self.weight)})"

    def __str__(self) -> str:
        return self.render()


def mentioned_atoms(clauses: Iterable[WeightedClause]) -> List[Atom]:
    """子句集中出现过的全部原子（含仅在规则体中出现的），按名称排序"""
    atoms = set()
    for wc in clauses:
        for literal in wc.clause.literals():
            atoms.add(literal.atom)
    return sorted(atoms)


def ordered(clauses: Iterable[WeightedClause]) -> List[WeightedClause]:
    return sorted(clauses, key=lambda c: c.sort_key)


# ==================== 程序 ====================


@dataclass(frozen=True)
class Program:
    """
    P-DeLP 程序 P = (Π, Δ)

    直接构造只检查按权重的划分；非矛盾性与前向推理约束由
    validate_program / Program.build 检查。
    """

    pi: FrozenSet[WeightedClause] = frozenset()
    delta: FrozenSet[WeightedClause] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pi", frozenset(self.pi))
        object.__setattr__(self, "delta", frozenset(self.delta))
        for wc in self.pi:
            if not wc.is_certain:
                raise ValueError(f"Π 只能包含确定子句: {wc}")
        for wc in self.delta:
            if wc.is_certain:
                raise ValueError(f"Δ 只能包含不确定子句: {wc}")

    @classmethod
    def build(
        cls, pi: Iterable[WeightedClause], delta: Iterable[WeightedClause]
    ) -> "Program":
        """校验并构造程序，首个违规直接抛出"""
        result = validate_program(pi, delta)
        if isinstance(result, ValidationReport):
            raise result.violations[0]
        return result

    @classmethod
    def from_clauses(cls, clauses: Iterable[WeightedClause]) -> "Program":
        """按权重划分后校验构造"""
        pi, delta = partition(clauses)
        return cls.build(pi, delta)

    @property
    def clauses(self) -> FrozenSet[WeightedClause]:
        return self.pi | self.delta

    def ordered(self) -> List[WeightedClause]:
        return ordered(self.clauses)

    def by_index(self, index: int) -> WeightedClause:
        for wc in self.clauses:
            if wc.index == index:
                return wc
        raise KeyError(f"程序中没有序号为 {index} 的子句")

    def heads(self) -> FrozenSet[Literal]:
        return frozenset(wc.head for wc in self.clauses)

    def without(self, *clauses: WeightedClause) -> "Program":
        removed = set(clauses)
        return Program(self.pi - removed, self.delta - removed)

    def __len__(self) -> int:
        return len(self.pi) + len(self.delta)


def partition(
    clauses: Iterable[WeightedClause],
) -> Tuple[FrozenSet[WeightedClause], FrozenSet[WeightedClause]]:
    """按权重把子句划分为 (Π, Δ)"""
    clauses = list(clauses)
    pi = frozenset(wc for wc in clauses if wc.is_certain)
    delta = frozenset(wc for wc in clauses if not wc.is_certain)
    return pi, delta


# ==================== 校验 ====================


@dataclass(frozen=True)
class ValidationReport:
    """程序校验失败时返回的违规清单"""

    violations: Tuple[ValidationError, ...]

    @property
    def contradictions(self) -> List[ContradictoryCertainKnowledge]:
        return [v for v in self.violations if isinstance(v, ContradictoryCertainKnowledge)]

    @property
    def unsupported(self) -> List[ForwardConstraintViolation]:
        return [v for v in self.violations if isinstance(v, ForwardConstraintViolation)]

    def __bool__(self) -> bool:
        return False


def validate_program(
    pi: Iterable[WeightedClause], delta: Iterable[WeightedClause]
) -> Union[Program, ValidationReport]:
    """
    校验程序结构

    (a) Π 本身非矛盾；(b) Π ∪ Δ 满足前向推理约束：
    每个规则体文字 L 都有以 L 为头的事实或规则。

    Args:
        pi: 确定子句（α = 1）
        delta: 不确定子句（0 < α < 1）

    Returns:
        合法时返回 Program，否则返回列出全部违规的 ValidationReport

    Raises:
        ValueError: Π/Δ 的权重划分不满足前置条件
    """
    from .deduction import is_contradictory

    program = Program(frozenset(pi), frozenset(delta))
    violations: List[ValidationError] = []

    witness = is_contradictory(program.pi)
    if witness is not None:
        violations.append(ContradictoryCertainKnowledge(witness))

    heads = program.heads()
    for wc in program.ordered():
        for literal in wc.body:
            if literal not in heads:
                violations.append(ForwardConstraintViolation(literal, wc))

    if violations:
        return ValidationReport(tuple(violations))
    return program
