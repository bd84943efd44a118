"""
辩证树与论证的导出

JSON 记录（schema "pdelp-tree/1"）与 Graphviz DOT 文本。
输出只依赖树的内容，同样的输入得到逐字节相同的结果。
"""

import json
from typing import Any, Dict, Iterable, List, Optional

from ..logic.core import Literal, Program
from ..utils import format_degree, support_labels
from .arguments import Argument, derivation_steps
from .dialectics import Answer, DefeatRelation, DialecticalNode, DialecticalTree

SCHEMA = "pdelp-tree/1"


def argument_summary(argument: Argument) -> Dict[str, Any]:
    return {
        "conclusion": str(argument.conclusion),
        "degree": format_degree(argument.degree),
        "support": support_labels(argument.support),
    }


def _defeat_record(defeat: Optional[DefeatRelation]) -> Optional[Dict[str, Any]]:
    if defeat is None:
        return None
    return argument_summary(defeat.disagreement)


def node_record(node: DialecticalNode) -> Dict[str, Any]:
    """单个节点及其子树"""
    record = argument_summary(node.argument)
    record.update(
        {
            "defeat": node.defeat.kind.value if node.defeat else None,
            "disagreement": _defeat_record(node.defeat),
            "alternatives": [
                argument_summary(a) for a in (node.defeat.alternatives if node.defeat else ())
            ],
            "mark": node.mark.value if node.mark else None,
            "children": [node_record(child) for child in node.children],
        }
    )
    return record


def tree_record(tree: DialecticalTree) -> Dict[str, Any]:
    return {
        "nodes": len(tree),
        "lines": len(tree.lines()),
        "pruned": tree.pruned,
        "root": node_record(tree.root),
    }


def trees_document(goal: Literal, trees: Iterable[DialecticalTree]) -> Dict[str, Any]:
    return {
        "schema": SCHEMA,
        "goal": str(goal),
        "trees": [tree_record(tree) for tree in trees],
    }


def answer_record(answer: Answer) -> Dict[str, Any]:
    return {
        "goal": str(answer.goal),
        "verdict": answer.verdict.value,
        "degree": format_degree(answer.degree) if answer.degree is not None else None,
        "witness": support_labels(answer.witness.support) if answer.witness else None,
    }


def argument_record(argument: Argument, program: Program) -> Dict[str, Any]:
    """论证及其 INTF/MPA/EAR 推导步骤"""
    record = argument_summary(argument)
    record["steps"] = [
        {
            "rule": step.rule,
            "clause": support_labels([step.clause])[0],
            "conclusion": str(step.conclusion),
            "degree": format_degree(step.degree),
            "support": support_labels(step.support),
        }
        for step in derivation_steps(argument, program)
    ]
    return record


def to_json(document: Any) -> str:
    return json.dumps(document, ensure_ascii=False, indent=2)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(trees: Iterable[DialecticalTree]) -> str:
    """每棵树一个 digraph；节点标签 "结论 [度] U|D"，边标签为击败类型"""
    blocks: List[str] = []
    for number, tree in enumerate(trees, 1):
        lines = [f"digraph tree{number} {{", "  node [shape=box];"]
        ids: Dict[int, str] = {}
        for node in tree.nodes():
            ids[id(node)] = f"n{len(ids)}"
            mark = node.mark.value if node.mark else "?"
            label = f"{node.argument.conclusion} [{format_degree(node.argument.degree)}] {mark}"
            lines.append(f"  {ids[id(node)]} [label={_quote(label)}];")
        for node in tree.nodes():
            for child in node.children:
                lines.append(
                    f"  {ids[id(node)]} -> {ids[id(child)]} [label={_quote(child.defeat.kind.value)}];"
                )
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + ("\n" if blocks else "")
