"""论证子系统：论证构造、辩证分析与导出"""

from .arguments import (
    Argument,
    ArgumentBuilder,
    DerivationStep,
    build_arguments,
    derivation_steps,
    is_argument,
    subarguments,
)
from .dialectics import (
    Answer,
    ArgumentationLine,
    Constraint,
    DefeatKind,
    DefeatRelation,
    DialecticalAnalyzer,
    DialecticalNode,
    DialecticalTree,
    LineCheck,
    Mark,
    Verdict,
    answer,
    build_tree,
    counterargues,
    defeat,
    find_defeaters,
    is_acceptable_line,
    is_warranted,
    mark_tree,
)

__all__ = [
    "Argument",
    "ArgumentBuilder",
    "DerivationStep",
    "build_arguments",
    "derivation_steps",
    "is_argument",
    "subarguments",
    "Answer",
    "ArgumentationLine",
    "Constraint",
    "DefeatKind",
    "DefeatRelation",
    "DialecticalAnalyzer",
    "DialecticalNode",
    "DialecticalTree",
    "LineCheck",
    "Mark",
    "Verdict",
    "answer",
    "build_tree",
    "counterargues",
    "defeat",
    "find_defeaters",
    "is_acceptable_line",
    "is_warranted",
    "mark_tree",
]
