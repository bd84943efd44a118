"""
GMP 演算

最大推理度（最小不动点）、最优证明树提取、矛盾检测与依赖关系。
不动点按规则体文字建立索引做半朴素传播：某文字的度提高后，只重算
规则体含该文字的子句。度只取输入权重或 0，因此必然收敛。
"""

from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..utils import format_degree, get_logger
from .core import ZERO, Atom, Literal, WeightedClause, mentioned_atoms

logger = get_logger("Deduction")


@dataclass(frozen=True)
class ProofTree:
    """
    GMP 推导的树形表示

    度 = min(所用规则的权重, 各前提的度)；前提顺序与规则体一致。
    """

    conclusion: Literal
    degree: Fraction
    rule_used: WeightedClause
    premises: Tuple["ProofTree", ...] = ()

    def nodes(self) -> Iterator["ProofTree"]:
        """后序遍历（前提先于结论）"""
        for premise in self.premises:
            yield from premise.nodes()
        yield self

    def clauses(self) -> frozenset:
        return frozenset(node.rule_used for node in self.nodes())

    @property
    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def render(self, indent: str = "  ") -> str:
        """缩进文本形式，每行一个推导步骤"""
        lines: List[str] = []

        def walk(node: "ProofTree", depth: int) -> None:
            rule = node.rule_used
            tag = f"({rule.index}) " if rule.index is not None else ""
            lines.append(
                f"{indent * depth}{node.conclusion} [{format_degree(node.degree)}]"
                f" <= {tag}{rule}"
            )
            for premise in node.premises:
                walk(premise, depth + 1)

        walk(self, 0)
        return "\n".join(lines)


@dataclass(frozen=True)
class ContradictionWitness:
    """某原子同时以正度被肯定和否定"""

    atom: Atom
    degree_pos: Fraction
    degree_neg: Fraction


# ==================== 不动点 ====================


def _body_index(
    clauses: List[WeightedClause],
) -> Dict[Literal, List[WeightedClause]]:
    index: Dict[Literal, List[WeightedClause]] = defaultdict(list)
    for wc in clauses:
        for literal in wc.body:
            index[literal].append(wc)
    return index


def degree_table(clauses: Iterable[WeightedClause]) -> Dict[Literal, Fraction]:
    """
    计算全部文字的最大推理度 |L|_Γ

    Args:
        clauses: 加权子句集合（无需满足前向推理约束）

    Returns:
        Dict[Literal, Fraction]: 只包含度为正的文字
    """
    clauses = list(clauses)
    degrees: Dict[Literal, Fraction] = {}
    watchers = _body_index(clauses)
    queue: deque = deque()

    def raise_to(literal: Literal, value: Fraction) -> None:
        if value > degrees.get(literal, ZERO):
            degrees[literal] = value
            queue.append(literal)

    for wc in clauses:
        if wc.is_fact:
            raise_to(wc.head, wc.weight)

    while queue:
        literal = queue.popleft()
        for wc in watchers.get(literal, ()):
            value = wc.weight
            for premise in wc.body:
                value = min(value, degrees.get(premise, ZERO))
                if not value:
                    break
            if value:
                raise_to(wc.head, value)

    return degrees


def max_degree(clauses: Iterable[WeightedClause], goal: Literal) -> Fraction:
    """最大推理度 |goal|_Γ；无支撑时为 0"""
    return degree_table(clauses).get(goal, ZERO)


# ==================== 证明提取 ====================


def best_proof(
    clauses: Iterable[WeightedClause], goal: Literal
) -> Optional[ProofTree]:
    """
    提取达到最大推理度的证明树

    只保留权重不低于目标度的子句，在其中求证明树节点数最少的推导
    （同一前提在树中出现几次就计几次）；节点数相同时取排序键多重集
    字典序最小者。

    Returns:
        Optional[ProofTree]: 目标不可推出时为 None
    """
    clauses = list(clauses)
    target = max_degree(clauses, goal)
    if not target:
        return None

    usable = [wc for wc in clauses if wc.weight >= target]
    # literal -> (size, sorted clause keys, clause)
    best: Dict[Literal, Tuple[int, tuple, WeightedClause]] = {}

    changed = True
    while changed:
        changed = False
        for wc in usable:
            size = 1
            keys = [wc.sort_key]
            for premise in wc.body:
                entry = best.get(premise)
                if entry is None:
                    break
                size += entry[0]
                keys.extend(entry[1])
            else:
                candidate = (size, tuple(sorted(keys)))
                current = best.get(wc.head)
                if current is None or candidate < current[:2]:
                    best[wc.head] = (candidate[0], candidate[1], wc)
                    changed = True

    def rebuild(literal: Literal) -> ProofTree:
        rule = best[literal][2]
        premises = tuple(rebuild(premise) for premise in rule.body)
        degree = min([rule.weight] + [p.degree for p in premises])
        return ProofTree(literal, degree, rule, premises)

    proof = rebuild(goal)
    logger.debug(f"最优证明: {goal} [{format_degree(target)}], {proof.size} 步")
    return proof


# ==================== 矛盾与依赖 ====================


def is_contradictory(
    clauses: Iterable[WeightedClause],
) -> Optional[ContradictionWitness]:
    """
    检测 Γ ⊢ ⊥

    按名称顺序检查子句中出现过的每个原子，返回第一个正负两面
    度都为正的原子。
    """
    clauses = list(clauses)
    degrees = degree_table(clauses)
    for atom in mentioned_atoms(clauses):
        pos = degrees.get(Literal(atom), ZERO)
        neg = degrees.get(Literal(atom, True), ZERO)
        if pos and neg:
            return ContradictionWitness(atom, pos, neg)
    return None


def depends_on(
    goal: Literal, on: Literal, clauses: Iterable[WeightedClause]
) -> bool:
    """goal 是否经由规则链依赖 on（on 出现在链首规则体中）"""
    by_body = _body_index(list(clauses))
    reached = set()
    frontier = deque([on])
    while frontier:
        literal = frontier.popleft()
        for wc in by_body.get(literal, ()):
            if wc.head not in reached:
                reached.add(wc.head)
                frontier.append(wc.head)
    return goal in reached
