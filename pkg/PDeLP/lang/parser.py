"""
P-DeLP 文本前端

程序文件语法（规范形式）::

    program := { clause }
    clause  := "(" head [ "<-" body ] "," weight ")" "."
    body    := literal { ("&" | ",") literal }
    literal := [ "~" ] atom

"%" 到行尾为注释。输入同时接受 Unicode 记号 ∼ ← ∧。
每个以 ")." 结尾的片段独立解析，一个子句出错不影响后续子句，
全部错误汇总到 ParseErrorList。
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Tuple

import pyparsing as pp

from ..errors import InvalidWeight, ParseError, ParseErrorList
from ..logic.core import Atom, Literal, Program, WeightedClause, partition
from ..utils import get_logger

logger = get_logger("Parser")

COMMENT = re.compile(r"%[^\n]*")
TERMINATOR = re.compile(r"\)\s*\.")
TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class SourceSpan:
    """源码位置（行、列均从 1 开始）"""

    line: int
    column: int
    length: int = 1

    def __post_init__(self):
        if self.line < 1 or self.column < 1 or self.length < 1:
            raise ValueError(f"非法源码位置: {self}")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class _WeightToken:
    text: str
    loc: int


# ==================== 文法 ====================


def _make_literal(tokens: pp.ParseResults) -> Literal:
    *neg, name = tokens
    return Literal(Atom(name), bool(neg))


NEG = pp.one_of(["~", "∼"]).set_name("'~'")
ATOM = pp.Regex(r"[a-z][A-Za-z0-9_]*").set_name("原子")
ARROW = pp.Suppress(pp.one_of(["<-", "←"]).set_name("'<-'"))
SEP = pp.Suppress(pp.one_of(["&", ",", "∧"]))
LPAR, RPAR, COMMA, DOT = map(pp.Suppress, "(),.")

literal = (pp.Opt(NEG) + ATOM).set_name("文字")
literal.set_parse_action(_make_literal)

body = pp.Group(literal + pp.ZeroOrMore(SEP + literal))
weight = pp.Regex(r"\d+(?:\.\d*)?|\.\d+").set_name("权重")
weight.set_parse_action(lambda s, loc, toks: _WeightToken(toks[0], loc))

clause = (
    LPAR
    + literal("head")
    + pp.Opt(ARROW + body("body"))
    + COMMA
    + weight("weight")
    + RPAR
    + DOT
).parse_with_tabs()

query = (literal + pp.StringEnd()).parse_with_tabs()


# ==================== 位置 ====================


def _span(text: str, loc: int, length: int = 0) -> SourceSpan:
    """把偏移量转换为位于输入内部的 SourceSpan"""
    if text:
        loc = max(0, min(loc, len(text) - 1))
    else:
        loc = 0
    if length < 1:
        match = TOKEN.match(text, loc)
        length = len(match.group()) if match else 1
    length = max(1, min(length, len(text) - loc)) if text else 1
    return SourceSpan(pp.lineno(loc, text), pp.col(loc, text) if text else 1, length)


def _blank_comments(text: str) -> str:
    # 保持偏移量不变
    return COMMENT.sub(lambda m: " " * len(m.group()), text)


# ==================== 解析 ====================


def _parse_clause(
    text: str, chunk: str, offset: int, index: int
) -> WeightedClause:
    try:
        parsed = clause.parse_string(chunk, parse_all=True)
    except pp.ParseException as e:
        raise ParseError(_span(text, offset + e.loc), f"语法错误: {e.msg}") from e

    token: _WeightToken = parsed["weight"]
    where = _span(text, offset + token.loc, len(token.text))
    value = Fraction(token.text)
    if value == 0:
        raise ParseError(where, "权重为 0 的子句不携带任何信息")
    if value > 1:
        raise ParseError(where, f"权重 {token.text} 超出 (0, 1]")

    head = parsed["head"]
    rule_body = list(parsed["body"]) if "body" in parsed else []
    try:
        return WeightedClause.rule(head, rule_body, value, index)
    except InvalidWeight as e:
        raise ParseError(where, str(e)) from e


def parse_clauses(text: str) -> List[WeightedClause]:
    """
    按源码顺序解析全部子句（序号从 1 开始）

    Raises:
        ParseErrorList: 任一子句有语法错误
    """
    clean = _blank_comments(text)
    result: List[WeightedClause] = []
    errors: List[ParseError] = []

    pos = 0
    index = 0
    for match in TERMINATOR.finditer(clean):
        chunk = clean[pos : match.end()]
        if chunk.strip():
            index += 1
            try:
                result.append(_parse_clause(text, chunk, pos, index))
            except ParseError as e:
                errors.append(e)
        pos = match.end()

    tail = clean[pos:]
    if tail.strip():
        start = pos + len(tail) - len(tail.lstrip())
        errors.append(ParseError(_span(text, start), "子句未以 ')' '.' 结束"))

    if errors:
        logger.debug(f"解析失败: {len(errors)} 个语法错误")
        raise ParseErrorList(errors)
    return result


def parse_program(
    text: str,
) -> Tuple[FrozenSet[WeightedClause], FrozenSet[WeightedClause]]:
    """
    解析程序文本

    Returns:
        (Π, Δ): 按权重划分的子句集合，交给 validate_program 校验

    Raises:
        ParseErrorList: 收集到的全部语法错误
    """
    return partition(parse_clauses(text))


def parse_query(text: str) -> Literal:
    """
    解析单个查询文字，如 ``engine_ok`` 或 ``~fuel_ok``

    Raises:
        ParseError: 空输入或非法文字
    """
    if not text.strip():
        raise ParseError(_span(text, 0), "查询为空")
    try:
        return query.parse_string(text)[0]
    except pp.ParseException as e:
        raise ParseError(_span(text, e.loc), f"非法查询: {e.msg}") from e


def serialize_program(program: Program, unicode: bool = False) -> str:
    """
    规范形式输出

    有源码序号的子句按序号排列，其余按规则头名称；每行一个子句。
    """
    lines = [f"{wc.render(unicode)}." for wc in program.ordered()]
    return "".join(line + "\n" for line in lines)
