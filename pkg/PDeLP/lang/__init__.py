"""语言前端：程序与查询的解析、序列化"""

from .parser import (
    SourceSpan,
    parse_clauses,
    parse_program,
    parse_query,
    serialize_program,
)

__all__ = [
    "SourceSpan",
    "parse_clauses",
    "parse_program",
    "parse_query",
    "serialize_program",
]
