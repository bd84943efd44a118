"""
暴力参照实现（仅供测试）

与推理引擎只共享领域类型，不共享算法：推理度靠逐轮枚举全部可推出的
(文字, 度) 对，论证靠遍历 Δ 的幂集。只适用于小规模实例。
"""

from functools import lru_cache
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from ..errors import InstanceTooLarge
from .core import ZERO, Literal, Program, WeightedClause, mentioned_atoms

MAX_CLAUSES = 12
MAX_DELTA = 10

Pair = Tuple[Literal, Fraction]
OracleArgument = Tuple[FrozenSet[WeightedClause], Literal, Fraction]


def _derivable_pairs(clauses: Iterable[WeightedClause]) -> Set[Pair]:
    """
    逐轮应用 GMP，收集全部可推出的 (文字, 度) 对

    轮数上限为 子句数 × 原子数（至少 1）。
    """
    clauses = list(clauses)
    bound = max(1, len(clauses) * len(mentioned_atoms(clauses)))
    known: Set[Pair] = set()
    for _ in range(bound):
        by_literal: Dict[Literal, Set[Fraction]] = {}
        for literal, degree in known:
            by_literal.setdefault(literal, set()).add(degree)
        fresh: Set[Pair] = set()
        for wc in clauses:
            options = [sorted(by_literal.get(b, ())) for b in wc.body]
            for degrees in product(*options):
                pair = (wc.head, min((wc.weight,) + degrees))
                if pair not in known:
                    fresh.add(pair)
        if not fresh:
            break
        known |= fresh
    return known


def _best(pairs: Set[Pair], goal: Literal) -> Fraction:
    return max((d for literal, d in pairs if literal == goal), default=ZERO)


def _contradictory(pairs: Set[Pair]) -> bool:
    positive = {literal for literal, d in pairs if d > 0}
    return any(literal.complement() in positive for literal in positive)


def oracle_max_degree(clauses: Iterable[WeightedClause], goal: Literal) -> Fraction:
    """
    枚举全部 GMP 推导求最大推理度

    Raises:
        InstanceTooLarge: 子句数超过 12
    """
    clauses = list(clauses)
    if len(clauses) > MAX_CLAUSES:
        raise InstanceTooLarge(MAX_CLAUSES, len(clauses))
    return _best(_derivable_pairs(clauses), goal)


@lru_cache(maxsize=32)
def _subset_table(
    pi: FrozenSet[WeightedClause], delta: Tuple[WeightedClause, ...]
) -> List[Tuple[Set[Pair], bool]]:
    """每个 Δ 子集（位掩码）上的可推出对及其是否矛盾"""
    table = []
    for mask in range(1 << len(delta)):
        chosen = [delta[i] for i in range(len(delta)) if mask >> i & 1]
        pairs = _derivable_pairs(list(pi) + chosen)
        table.append((pairs, _contradictory(pairs)))
    return table


def _sweep(program: Program) -> Tuple[Tuple[WeightedClause, ...], List[Tuple[Set[Pair], bool]]]:
    if len(program.delta) > MAX_DELTA:
        raise InstanceTooLarge(MAX_DELTA, len(program.delta), "Δ 子句")
    delta = tuple(sorted(program.delta, key=lambda c: c.sort_key))
    return delta, _subset_table(program.pi, delta)


def _proper_submasks(mask: int) -> Iterable[int]:
    sub = (mask - 1) & mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def oracle_arguments(
    program: Program, goal: Literal
) -> FrozenSet[Tuple[FrozenSet[WeightedClause], Fraction]]:
    """
    遍历 Δ 的全部子集，按定义筛选论证

    Returns:
        (支撑集, 度) 的集合

    Raises:
        InstanceTooLarge: |Δ| 超过 10
    """
    delta, table = _sweep(program)
    found = set()
    for mask, (pairs, contradictory) in enumerate(table):
        alpha = _best(pairs, goal)
        if not alpha or contradictory:
            continue
        if mask and any(_best(table[sub][0], goal) >= alpha for sub in _proper_submasks(mask)):
            continue
        support = frozenset(delta[i] for i in range(len(delta)) if mask >> i & 1)
        found.add((support, alpha))
    return frozenset(found)


@lru_cache(maxsize=8)
def _all_arguments(program: Program) -> Tuple[OracleArgument, ...]:
    result: List[OracleArgument] = []
    for literal in sorted(program.heads()):
        for support, alpha in oracle_arguments(program, literal):
            result.append((support, literal, alpha))
    return tuple(result)


def oracle_defeaters(
    program: Program,
    support: FrozenSet[WeightedClause],
    conclusion: Literal,
    degree: Fraction,
    scope: str = "complement",
) -> FrozenSet[Tuple[FrozenSet[WeightedClause], Literal, Fraction, str]]:
    """
    暴力枚举目标论证的全部击败者

    scope 为 complement 时攻击者的结论必须是某个子论证结论的补文字；
    closure 时不作限制。

    Returns:
        (攻击者支撑, 攻击者结论, 攻击者度, "proper" | "blocking") 的集合
    """
    everything = _all_arguments(program)
    subs = [(s, q, b) for s, q, b in everything if s <= support]
    complements = {q.complement() for _, q, _ in subs}

    found = set()
    for attacker_support, attacker_conclusion, attacker_degree in everything:
        if scope != "closure" and attacker_conclusion not in complements:
            continue
        attack = WeightedClause.fact(attacker_conclusion, attacker_degree)
        qualifying = []
        for _, q, beta in subs:
            probe = list(program.pi) + [attack, WeightedClause.fact(q, beta)]
            if _contradictory(_derivable_pairs(probe)) and attacker_degree >= beta:
                qualifying.append(beta)
        if qualifying:
            kind = "proper" if any(attacker_degree > beta for beta in qualifying) else "blocking"
            found.add((attacker_support, attacker_conclusion, attacker_degree, kind))
    return frozenset(found)
