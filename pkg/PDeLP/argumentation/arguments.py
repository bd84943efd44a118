"""
论证构造

论证 ⟨A, Q, α⟩：A ⊆ Δ 是最小的、与 Π 一起非矛盾地以最大度 α 推出 Q 的不确定子句集。

构造方式：在目标的后向闭包上做标签传播。每个文字的标签是若干
(支撑集, 度) 对，只保留不被 (更小支撑, 不低的度) 支配的对；
与 Π 矛盾的支撑直接剪掉（其超集同样矛盾）。传播结束后再按定义
逐一核验候选：最大度、非矛盾、最小性。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from ..logic.core import Literal, Program, WeightedClause
from ..logic.deduction import (
    ProofTree,
    best_proof,
    degree_table,
    is_contradictory,
    max_degree,
)
from ..utils import format_degree, format_support, get_logger

Support = FrozenSet[WeightedClause]
Label = Tuple[Support, Fraction]


@dataclass(frozen=True)
class Argument:
    """论证 ⟨A, Q, α⟩，derivation 为 Π ∪ A 上的最优证明"""

    support: Support
    conclusion: Literal
    degree: Fraction
    derivation: Optional[ProofTree] = field(default=None, compare=False, repr=False)

    @property
    def sort_key(self) -> tuple:
        return (
            tuple(sorted(c.sort_key for c in self.support)),
            self.conclusion.atom.name,
            self.conclusion.negated,
            -self.degree,
        )

    def as_fact(self) -> WeightedClause:
        """(结论, 度) 形式的加权事实"""
        return WeightedClause.fact(self.conclusion, self.degree)

    def is_subargument_of(self, other: "Argument") -> bool:
        return self.support <= other.support

    def label(self) -> str:
        return f"⟨{format_support(self.support)}, {self.conclusion}, {format_degree(self.degree)}⟩"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class DerivationStep:
    """证明树自底向上重放时的一步（INTF / MPA / EAR）"""

    rule: str
    clause: WeightedClause
    conclusion: Literal
    degree: Fraction
    support: Support


def _dominated(label: Label, others: Iterable[Label]) -> bool:
    support, degree = label
    return any(s <= support and d >= degree for s, d in others)


class ArgumentBuilder:
    """
    论证构造器

    按文字缓存标签，作用域为单个程序；同一目标的重复查询直接复用。
    """

    def __init__(self, program: Program, config=None, logger=None):
        self.program = program
        self.config = config
        self.logger = (logger or get_logger()).getChild("Arguments")
        cap = config.get("arguments.support_cap", None) if config else None
        self.support_cap: int = len(program.delta) if cap is None else int(cap)

        self._pi = program.pi
        self._by_head: Dict[Literal, List[WeightedClause]] = {}
        for wc in program.ordered():
            self._by_head.setdefault(wc.head, []).append(wc)

        self._labels: Dict[Literal, List[Label]] = {}
        self._arguments: Dict[Literal, Tuple[Argument, ...]] = {}
        self._subarguments: Dict[Argument, FrozenSet[Argument]] = {}
        self._consistent: Dict[Support, bool] = {}

    # ==================== 辅助 ====================

    def _is_consistent(self, support: Support) -> bool:
        cached = self._consistent.get(support)
        if cached is None:
            cached = is_contradictory(self._pi | support) is None
            self._consistent[support] = cached
        return cached

    def _closure(self, goal: Literal) -> Set[Literal]:
        """目标的后向闭包中尚未计算标签的文字"""
        seen: Set[Literal] = set()
        stack = [goal]
        while stack:
            literal = stack.pop()
            if literal in seen or literal in self._labels:
                continue
            seen.add(literal)
            for wc in self._by_head.get(literal, ()):
                stack.extend(wc.body)
        return seen

    def _propagate(self, goal: Literal) -> None:
        pending = self._closure(goal)
        if not pending:
            return
        labels: Dict[Literal, List[Label]] = {lit: [] for lit in pending}
        rules = [wc for lit in sorted(pending) for wc in self._by_head.get(lit, ())]

        def current(literal: Literal) -> List[Label]:
            if literal in labels:
                return labels[literal]
            return self._labels.get(literal, [])

        rounds = 0
        changed = True
        while changed:
            changed = False
            rounds += 1
            for wc in rules:
                own: Support = frozenset() if wc.is_certain else frozenset([wc])
                for combo in product(*(current(b) for b in wc.body)):
                    support = own.union(*(s for s, _ in combo))
                    if len(support) > self.support_cap:
                        continue
                    degree = min([wc.weight] + [d for _, d in combo])
                    target = labels[wc.head]
                    if _dominated((support, degree), target):
                        continue
                    if not self._is_consistent(support):
                        continue
                    target[:] = [
                        (s, d) for s, d in target if not (support <= s and degree >= d)
                    ]
                    target.append((support, degree))
                    changed = True

        self._labels.update(labels)
        self.logger.debug(
            f"标签传播: 目标 {goal}, {len(pending)} 个文字, {rounds} 轮"
        )

    # ==================== 定义核验 ====================

    def is_argument(self, support: Iterable[WeightedClause], goal: Literal) -> Optional[Fraction]:
        """
        检查 ⟨support, goal, α⟩ 是否为论证

        Returns:
            Optional[Fraction]: 满足定义时返回 α = |goal|_{Π ∪ support}，否则 None
        """
        support = frozenset(support)
        if not support <= self.program.delta:
            raise ValueError(f"支撑集必须是 Δ 的子集: {format_support(support)}")
        clauses = self._pi | support
        alpha = max_degree(clauses, goal)
        if not alpha:
            return None
        if not self._is_consistent(support):
            return None
        for c in support:
            if max_degree(clauses - {c}, goal) >= alpha:
                return None
        return alpha

    # ==================== 枚举 ====================

    def arguments_for(self, goal: Literal) -> Tuple[Argument, ...]:
        """目标的全部论证，按 Argument.sort_key 排序"""
        cached = self._arguments.get(goal)
        if cached is not None:
            return cached

        self._propagate(goal)
        result: List[Argument] = []
        for support, degree in self._labels.get(goal, []):
            alpha = self.is_argument(support, goal)
            if alpha is None or alpha != degree:
                self.logger.debug(
                    f"候选 {format_support(support)} 对 {goal} 未通过核验"
                )
                continue
            proof = best_proof(self._pi | support, goal)
            result.append(Argument(support, goal, alpha, proof))

        arguments = tuple(sorted(result, key=lambda a: a.sort_key))
        self._arguments[goal] = arguments
        self.logger.debug(f"{goal}: {len(arguments)} 个论证")
        return arguments

    def subarguments(self, argument: Argument) -> FrozenSet[Argument]:
        """支撑集为 argument 支撑子集的全部论证（含自身）"""
        cached = self._subarguments.get(argument)
        if cached is not None:
            return cached

        if argument.support == self.program.delta:
            builder = self
        else:
            builder = ArgumentBuilder(
                Program(self._pi, argument.support), self.config, self.logger.parent
            )
            builder._consistent = self._consistent
        found: Set[Argument] = set()
        for literal in sorted(degree_table(self._pi | argument.support)):
            found.update(builder.arguments_for(literal))

        result = frozenset(found)
        self._subarguments[argument] = result
        return result

    def all_arguments(self) -> Tuple[Argument, ...]:
        """程序中所有可推出文字的全部论证"""
        found: List[Argument] = []
        for literal in sorted(degree_table(self.program.clauses)):
            found.extend(self.arguments_for(literal))
        return tuple(sorted(found, key=lambda a: a.sort_key))


# ==================== 推导重放 ====================


def derivation_steps(argument: Argument, program: Program) -> List[DerivationStep]:
    """
    自底向上重放论证的证明树

    事实对应 INTF，不确定规则对应 MPA，确定规则对应 EAR。
    每一步的支撑是该子树用到的不确定子句。
    """
    proof = argument.derivation or best_proof(program.pi | argument.support, argument.conclusion)
    if proof is None:
        return []

    steps: List[DerivationStep] = []

    def replay(node: ProofTree) -> Support:
        support: Support = frozenset()
        for premise in node.premises:
            support |= replay(premise)
        rule = node.rule_used
        if rule.is_fact:
            tag = "INTF"
        elif rule.is_certain:
            tag = "EAR"
        else:
            tag = "MPA"
        if not rule.is_certain:
            support |= {rule}
        steps.append(DerivationStep(tag, rule, node.conclusion, node.degree, support))
        return support

    replay(proof)
    return steps


# ==================== 函数式接口 ====================


def is_argument(
    program: Program, support: Iterable[WeightedClause], goal: Literal
) -> Optional[Fraction]:
    return ArgumentBuilder(program).is_argument(support, goal)


def build_arguments(
    program: Program, goal: Literal, support_cap: Optional[int] = None
) -> FrozenSet[Argument]:
    builder = ArgumentBuilder(program)
    if support_cap is not None:
        builder.support_cap = support_cap
    return frozenset(builder.arguments_for(goal))


def subarguments(argument: Argument, program: Program) -> FrozenSet[Argument]:
    return ArgumentBuilder(program).subarguments(argument)
