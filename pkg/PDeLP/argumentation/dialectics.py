"""
辩证分析

反论证、击败关系、可接受论证线、辩证树的构造与 U/D 标记、
论证的担保（warrant）以及查询回答。
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from ..errors import NodeLimitExceeded
from ..logic.core import ONE, Literal, Program, WeightedClause
from ..logic.deduction import is_contradictory
from ..utils import format_degree, get_logger
from .arguments import Argument, ArgumentBuilder

ClauseSet = FrozenSet[WeightedClause]


class DefeatKind(Enum):
    PROPER = "proper"
    BLOCKING = "blocking"


class Mark(Enum):
    U = "U"
    D = "D"


class Constraint(Enum):
    NON_CONTRADICTION = "non-contradiction"
    CIRCULARITY = "circularity"
    PROGRESSIVENESS = "progressiveness"


class Verdict(Enum):
    YES = "YES"
    NO = "NO"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class DefeatRelation:
    """
    attacker 击败 target，冲突点为 target 的子论证 disagreement

    alternatives 保留所有满足度条件的冲突子论证（按度升序）。
    """

    attacker: Argument
    target: Argument
    disagreement: Argument
    kind: DefeatKind
    alternatives: Tuple[Argument, ...] = field(default=(), compare=False)

    @property
    def is_proper(self) -> bool:
        return self.kind is DefeatKind.PROPER


@dataclass(frozen=True)
class ArgumentationLine:
    """论证线 [A0, A1, ...]，defeats[i] 表示 entries[i+1] 击败 entries[i]"""

    entries: Tuple[Argument, ...]
    defeats: Tuple[DefeatRelation, ...] = ()

    def __post_init__(self):
        if not self.entries:
            raise ValueError("论证线不能为空")
        if len(self.defeats) != len(self.entries) - 1:
            raise ValueError("论证线中相邻论证必须由击败关系连接")

    def extend(self, relation: DefeatRelation) -> "ArgumentationLine":
        return ArgumentationLine(
            self.entries + (relation.attacker,), self.defeats + (relation,)
        )

    @property
    def proponent(self) -> Tuple[Argument, ...]:
        return self.entries[0::2]

    @property
    def opponent(self) -> Tuple[Argument, ...]:
        return self.entries[1::2]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Argument]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> Argument:
        return self.entries[index]


@dataclass(frozen=True)
class LineCheck:
    """可接受性检查结果；失败时给出首个违反的约束及位置"""

    acceptable: bool
    constraint: Optional[Constraint] = None
    index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.acceptable


@dataclass(eq=False)
class DialecticalNode:
    argument: Argument
    line: ArgumentationLine
    defeat: Optional[DefeatRelation] = None
    children: List["DialecticalNode"] = field(default_factory=list)
    mark: Optional[Mark] = None
    # 正方、反方各自累积的 Π ∪ 支撑 ∪ 结论事实
    sides: Tuple[ClauseSet, ClauseSet] = (frozenset(), frozenset())

    @property
    def depth(self) -> int:
        return len(self.line) - 1

    def walk(self) -> Iterator["DialecticalNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(eq=False)
class DialecticalTree:
    root: DialecticalNode
    pruned: bool = False

    @property
    def argument(self) -> Argument:
        return self.root.argument

    @property
    def mark(self) -> Optional[Mark]:
        return self.root.mark

    def nodes(self) -> List[DialecticalNode]:
        return list(self.root.walk())

    def lines(self) -> List[ArgumentationLine]:
        """全部根到叶的论证线"""
        return [node.line for node in self.root.walk() if not node.children]

    def __len__(self) -> int:
        return sum(1 for _ in self.root.walk())


@dataclass(frozen=True)
class Answer:
    goal: Literal
    verdict: Verdict
    degree: Optional[Fraction] = None
    witness: Optional[Argument] = None

    def __str__(self) -> str:
        if self.verdict is Verdict.UNDECIDED:
            return self.verdict.value
        return f"{self.verdict.value} {format_degree(self.degree)}"


def mark_tree(tree: DialecticalTree) -> DialecticalTree:
    """
    AND-OR 标记：叶子为 U；至少有一个 U 子节点的内部节点为 D，否则为 U

    重复调用结果不变。
    """

    def visit(node: DialecticalNode) -> Mark:
        marks = [visit(child) for child in node.children]
        node.mark = Mark.D if Mark.U in marks else Mark.U
        return node.mark

    visit(tree.root)
    return tree


class DialecticalAnalyzer:
    """
    辩证分析器

    对单个程序缓存反论证者与担保结果；树的构造按配置的节点上限、
    剪枝开关与攻击范围进行。
    """

    def __init__(
        self,
        program: Program,
        config=None,
        logger=None,
        builder: Optional[ArgumentBuilder] = None,
    ):
        self.program = program
        self.config = config
        self.logger = (logger or get_logger()).getChild("Dialectics")
        self.builder = builder or ArgumentBuilder(program, config, logger)

        self.node_cap: int = config.node_cap if config else 100000
        self.pruning: bool = config.pruning if config else True
        self.attack_scope: str = config.attack_scope if config else "complement"

        self._pi = program.pi
        self._defeaters: Dict[Argument, Tuple[DefeatRelation, ...]] = {}
        self._warrant: Dict[Tuple[Argument, bool], bool] = {}

    # ==================== 反论证与击败 ====================

    def counterargues(self, a1: Argument, a2: Argument) -> FrozenSet[Argument]:
        """a2 中与 a1 的结论在 Π 下冲突的全部子论证"""
        attack = a1.as_fact()
        return frozenset(
            sub
            for sub in self.builder.subarguments(a2)
            if is_contradictory(self._pi | {attack, sub.as_fact()}) is not None
        )

    def defeat(self, a1: Argument, a2: Argument) -> Optional[DefeatRelation]:
        """
        a1 是否击败 a2

        取度最低的合格冲突子论证；任一合格者严格弱于 a1 即为 Proper，否则 Blocking。
        """
        qualifying = sorted(
            (d for d in self.counterargues(a1, a2) if a1.degree >= d.degree),
            key=lambda d: (d.degree, d.sort_key),
        )
        if not qualifying:
            return None
        weakest = qualifying[0]
        kind = DefeatKind.PROPER if a1.degree > weakest.degree else DefeatKind.BLOCKING
        return DefeatRelation(a1, a2, weakest, kind, tuple(qualifying))

    def _attack_points(self, target: Argument) -> List[Literal]:
        """可能攻击 target 的论证结论"""
        points = set()
        subs = self.builder.subarguments(target)
        if self.attack_scope == "closure":
            heads = sorted(self.program.heads())
            for sub in subs:
                probe = WeightedClause.fact(sub.conclusion, ONE)
                for literal in heads:
                    if is_contradictory(self._pi | {probe, WeightedClause.fact(literal, ONE)}):
                        points.add(literal)
        else:
            points.update(sub.conclusion.complement() for sub in subs)
        return sorted(points)

    def find_defeaters(self, target: Argument) -> Tuple[DefeatRelation, ...]:
        """
        target 的全部击败者

        按 (Proper 优先, 攻击者度降序, 论证排序键) 排列。
        """
        cached = self._defeaters.get(target)
        if cached is not None:
            return cached

        found: Dict[Argument, DefeatRelation] = {}
        for literal in self._attack_points(target):
            for attacker in self.builder.arguments_for(literal):
                if attacker in found:
                    continue
                relation = self.defeat(attacker, target)
                if relation is not None:
                    found[attacker] = relation

        result = tuple(
            sorted(
                found.values(),
                key=lambda r: (not r.is_proper, -r.attacker.degree, r.attacker.sort_key),
            )
        )
        self._defeaters[target] = result
        self.logger.debug(f"{target} 有 {len(result)} 个击败者")
        return result

    # ==================== 论证线 ====================

    def make_line(self, entries) -> ArgumentationLine:
        """由论证序列构造论证线，相邻论证之间必须存在击败关系"""
        entries = tuple(entries)
        defeats = []
        for previous, current in zip(entries, entries[1:]):
            relation = self.defeat(current, previous)
            if relation is None:
                raise ValueError(f"{current} 不击败 {previous}")
            defeats.append(relation)
        return ArgumentationLine(entries, tuple(defeats))

    def _side_clauses(self, argument: Argument) -> ClauseSet:
        return argument.support | {argument.as_fact()}

    def is_acceptable_line(self, line: ArgumentationLine) -> LineCheck:
        """
        依次检查非矛盾、无循环、渐进三条约束

        Returns:
            LineCheck: 失败时给出首个违反的约束与论证下标
        """
        sides = [self._pi, self._pi]
        for i, entry in enumerate(line.entries):
            sides[i % 2] = sides[i % 2] | self._side_clauses(entry)
            if is_contradictory(sides[i % 2]) is not None:
                return LineCheck(False, Constraint.NON_CONTRADICTION, i)

        for j, entry in enumerate(line.entries):
            if any(entry.support <= earlier.support for earlier in line.entries[:j]):
                return LineCheck(False, Constraint.CIRCULARITY, j)

        for k in range(len(line.defeats) - 1):
            if not line.defeats[k].is_proper and not line.defeats[k + 1].is_proper:
                return LineCheck(False, Constraint.PROGRESSIVENESS, k + 2)

        return LineCheck(True)

    def _extension(
        self, node: DialecticalNode, relation: DefeatRelation
    ) -> Optional[Tuple[ClauseSet, ClauseSet]]:
        """以 relation 扩展 node 的论证线仍可接受时，返回新的两方子句集"""
        attacker = relation.attacker
        side = (node.depth + 1) % 2
        merged = node.sides[side] | self._side_clauses(attacker)
        if is_contradictory(merged) is not None:
            return None
        if any(attacker.support <= earlier.support for earlier in node.line.entries):
            return None
        if node.defeat is not None and not node.defeat.is_proper and not relation.is_proper:
            return None
        sides = list(node.sides)
        sides[side] = merged
        return sides[0], sides[1]

    # ==================== 辩证树 ====================

    def build_tree(
        self, root: Argument, pruning: Optional[bool] = None
    ) -> DialecticalTree:
        """
        构造并标记以 root 为根的辩证树

        剪枝时，某节点一旦出现 U 子节点即停止展开其余子节点；根的标记不受影响。

        Raises:
            NodeLimitExceeded: 节点数超过上限
        """
        pruning = self.pruning if pruning is None else pruning
        cap = self.node_cap
        count = 1
        if count > cap:
            raise NodeLimitExceeded(cap)

        top = DialecticalNode(
            root,
            ArgumentationLine((root,)),
            sides=(self._pi | self._side_clauses(root), self._pi),
        )

        def expand(node: DialecticalNode) -> None:
            nonlocal count
            for relation in self.find_defeaters(node.argument):
                sides = self._extension(node, relation)
                if sides is None:
                    continue
                count += 1
                if count > cap:
                    raise NodeLimitExceeded(cap)
                child = DialecticalNode(
                    relation.attacker, node.line.extend(relation), relation, sides=sides
                )
                node.children.append(child)
                expand(child)
                if pruning and child.mark is Mark.U:
                    break
            node.mark = Mark.D if any(c.mark is Mark.U for c in node.children) else Mark.U

        expand(top)
        self.logger.debug(
            f"辩证树 {root}: {count} 个节点, 根标记 {top.mark.value}"
            + (" (剪枝)" if pruning else "")
        )
        return DialecticalTree(top, pruning)

    def is_warranted(self, argument: Argument, pruning: Optional[bool] = None) -> bool:
        pruning = self.pruning if pruning is None else pruning
        key = (argument, pruning)
        if key not in self._warrant:
            self._warrant[key] = self.build_tree(argument, pruning).mark is Mark.U
        return self._warrant[key]

    def warranted(self, goal: Literal, pruning: Optional[bool] = None) -> List[Argument]:
        return [a for a in self.builder.arguments_for(goal) if self.is_warranted(a, pruning)]

    def answer(self, goal: Literal, pruning: Optional[bool] = None) -> Answer:
        """
        回答查询

        目标有被担保的论证则 YES，其补文字有则 NO，否则 UNDECIDED；
        度取被担保论证中的最大度。
        """
        yes = self.warranted(goal, pruning)
        no = self.warranted(goal.complement(), pruning)
        if yes and no:
            self.logger.warning(f"{goal} 与其补文字同时被担保")

        for verdict, pool in ((Verdict.YES, yes), (Verdict.NO, no)):
            if pool:
                witness = min(pool, key=lambda a: (-a.degree, a.sort_key))
                self.logger.info(f"查询 {goal}: {verdict.value} {format_degree(witness.degree)}")
                return Answer(goal, verdict, witness.degree, witness)

        self.logger.info(f"查询 {goal}: UNDECIDED")
        return Answer(goal, Verdict.UNDECIDED)


# ==================== 函数式接口 ====================


def counterargues(a1: Argument, a2: Argument, program: Program) -> FrozenSet[Argument]:
    return DialecticalAnalyzer(program).counterargues(a1, a2)


def defeat(a1: Argument, a2: Argument, program: Program) -> Optional[DefeatRelation]:
    return DialecticalAnalyzer(program).defeat(a1, a2)


def find_defeaters(
    program: Program, target: Argument, config=None
) -> FrozenSet[DefeatRelation]:
    return frozenset(DialecticalAnalyzer(program, config).find_defeaters(target))


def is_acceptable_line(program: Program, line: ArgumentationLine) -> LineCheck:
    return DialecticalAnalyzer(program).is_acceptable_line(line)


def build_tree(
    program: Program, root: Argument, pruning: bool = True, config=None
) -> DialecticalTree:
    return DialecticalAnalyzer(program, config).build_tree(root, pruning)


def is_warranted(program: Program, argument: Argument, config=None) -> bool:
    return DialecticalAnalyzer(program, config).is_warranted(argument)


def answer(program: Program, goal: Literal, config=None) -> Answer:
    return DialecticalAnalyzer(program, config).answer(goal)
