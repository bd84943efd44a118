"""
命令行入口

    pdelp check <file>
    pdelp query <file> <goal> [--json] [--no-prune]
    pdelp tree  <file> <goal> [--format dot|json] [--no-prune]
    pdelp prove <file> <goal>
    pdelp args  <file> <goal> [--json]
    pdelp fmt   <file> [--unicode]

标准输出只承载结果，诊断信息一律写到标准错误。
"""

import argparse
import logging
import sys
from enum import IntEnum
from typing import List, Optional, Union

from . import __version__
from .Core import Interpreter
from .argumentation import Verdict
from .argumentation.export import (
    answer_record,
    argument_record,
    to_dot,
    to_json,
    trees_document,
)
from .config import PDeLPConfig
from .errors import NodeLimitExceeded, ParseError, ParseErrorList
from .lang import serialize_program
from .logic import Literal, Program, ValidationReport
from .utils import format_degree, get_logger, setup_logging

logger = get_logger("cli")


class ExitStatus(IntEnum):
    OK = 0
    NO = 1
    UNDECIDED = 2
    INVALID = 3
    PARSE_ERROR = 4
    NODE_LIMIT = 5


VERDICT_STATUS = {
    Verdict.YES: ExitStatus.OK,
    Verdict.NO: ExitStatus.NO,
    Verdict.UNDECIDED: ExitStatus.UNDECIDED,
}


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdelp", description="P-DeLP 解释器：加权可废止逻辑程序的论证与担保分析"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", metavar="FILE", help="TOML 配置文件（[PDeLP] 表）")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="输出更多诊断信息（可重复）"
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    check = commands.add_parser("check", help="校验程序")
    check.add_argument("file")

    query = commands.add_parser("query", help="回答查询")
    query.add_argument("file")
    query.add_argument("goal")
    query.add_argument("--json", action="store_true", help="输出 JSON")
    query.add_argument("--no-prune", action="store_true", help="构造完整辩证树")

    tree = commands.add_parser("tree", help="导出辩证树")
    tree.add_argument("file")
    tree.add_argument("goal")
    tree.add_argument("--format", choices=("json", "dot"), default="json")
    tree.add_argument("--no-prune", action="store_true", help="构造完整辩证树")

    prove = commands.add_parser("prove", help="最大推理度与最优证明")
    prove.add_argument("file")
    prove.add_argument("goal")

    args = commands.add_parser("args", help="列出目标的全部论证")
    args.add_argument("file")
    args.add_argument("goal")
    args.add_argument("--json", action="store_true", help="输出 JSON")

    fmt = commands.add_parser("fmt", help="按规范格式输出程序")
    fmt.add_argument("file")
    fmt.add_argument("--unicode", action="store_true", help="使用 ∼ ← ∧ 符号")

    return parser


# ==================== 加载 ====================


def _load(interpreter: Interpreter, path: str) -> Union[Program, ValidationReport, ExitStatus]:
    try:
        return interpreter.load_file(path)
    except OSError as e:
        _err(f"{path}: {e.strerror or e}")
        return ExitStatus.PARSE_ERROR
    except UnicodeDecodeError as e:
        line = e.object.count(b"\n", 0, e.start) + 1
        column = e.start - e.object.rfind(b"\n", 0, e.start)
        _err(f"{path}:{line}:{column}: 不是合法的 UTF-8 编码")
        return ExitStatus.PARSE_ERROR
    except ParseErrorList as errors:
        for error in errors:
            _err(f"{path}:{error.span.line}:{error.span.column}: {error.message}")
        return ExitStatus.PARSE_ERROR


def _report_invalid(report: ValidationReport, stream) -> None:
    for violation in report.violations:
        print(f"  {violation}", file=stream)


def _load_valid(interpreter: Interpreter, path: str) -> Union[Program, ExitStatus]:
    result = _load(interpreter, path)
    if isinstance(result, ValidationReport):
        _err(f"{path}: 程序未通过校验")
        _report_invalid(result, sys.stderr)
        return ExitStatus.INVALID
    return result


def _goal(text: str) -> Union[Literal, ExitStatus]:
    try:
        return Interpreter.goal(text)
    except ParseError as e:
        _err(f"<goal>:{e.span.line}:{e.span.column}: {e.message}")
        return ExitStatus.PARSE_ERROR


# ==================== 子命令 ====================


def cmd_check(interpreter: Interpreter, options) -> ExitStatus:
    result = _load(interpreter, options.file)
    if isinstance(result, ExitStatus):
        return result
    if isinstance(result, ValidationReport):
        print(f"invalid: {len(result.violations)} violation(s)")
        _report_invalid(result, sys.stdout)
        return ExitStatus.INVALID
    print(f"valid: |Π|={len(result.pi)} |Δ|={len(result.delta)}")
    return ExitStatus.OK


def cmd_query(interpreter: Interpreter, options) -> ExitStatus:
    program = _load_valid(interpreter, options.file)
    if isinstance(program, ExitStatus):
        return program
    goal = _goal(options.goal)
    if isinstance(goal, ExitStatus):
        return goal

    answer = interpreter.answer(goal)
    if options.json:
        print(to_json(answer_record(answer)))
    else:
        print(answer)
    return VERDICT_STATUS[answer.verdict]


def cmd_tree(interpreter: Interpreter, options) -> ExitStatus:
    program = _load_valid(interpreter, options.file)
    if isinstance(program, ExitStatus):
        return program
    goal = _goal(options.goal)
    if isinstance(goal, ExitStatus):
        return goal

    trees = interpreter.trees(goal)
    if not trees:
        _err(f"{goal} 没有任何论证")
        return ExitStatus.UNDECIDED
    if options.format == "dot":
        sys.stdout.write(to_dot(trees))
    else:
        print(to_json(trees_document(goal, trees)))
    return ExitStatus.OK


def cmd_prove(interpreter: Interpreter, options) -> ExitStatus:
    program = _load_valid(interpreter, options.file)
    if isinstance(program, ExitStatus):
        return program
    goal = _goal(options.goal)
    if isinstance(goal, ExitStatus):
        return goal

    degree, proof = interpreter.prove(goal)
    print(f"{goal} {format_degree(degree)}")
    if proof is None:
        return ExitStatus.UNDECIDED
    print(proof.render())
    return ExitStatus.OK


def cmd_args(interpreter: Interpreter, options) -> ExitStatus:
    program = _load_valid(interpreter, options.file)
    if isinstance(program, ExitStatus):
        return program
    goal = _goal(options.goal)
    if isinstance(goal, ExitStatus):
        return goal

    arguments = interpreter.arguments(goal)
    if options.json:
        records = [argument_record(a, program) for a in arguments]
        print(to_json({"goal": str(goal), "arguments": records}))
    else:
        for argument in arguments:
            print(argument.label())
            for step in argument_record(argument, program)["steps"]:
                print(
                    f"  {step['rule']:<4} ({step['clause']}) {step['conclusion']} "
                    f"[{step['degree']}] {_braced(step['support'])}"
                )
    return ExitStatus.OK if arguments else ExitStatus.UNDECIDED


def _braced(labels: List) -> str:
    return "{" + ",".join(str(label) for label in labels) + "}"


def cmd_fmt(interpreter: Interpreter, options) -> ExitStatus:
    program = _load_valid(interpreter, options.file)
    if isinstance(program, ExitStatus):
        return program
    unicode = options.unicode or bool(interpreter.config.get("parser.unicode", False))
    sys.stdout.write(serialize_program(program, unicode=unicode))
    return ExitStatus.OK


COMMANDS = {
    "check": cmd_check,
    "query": cmd_query,
    "tree": cmd_tree,
    "prove": cmd_prove,
    "args": cmd_args,
    "fmt": cmd_fmt,
}


def main(argv: Optional[List[str]] = None) -> int:
    options = build_parser().parse_args(argv)

    try:
        config = PDeLPConfig(options.config)
    except (OSError, ValueError) as e:
        _err(f"{options.config or '配置'}: {e}")
        return ExitStatus.PARSE_ERROR

    if options.verbose >= 2:
        setup_logging(logging.DEBUG)
    elif options.verbose == 1:
        setup_logging(logging.INFO)
    else:
        setup_logging(config.get("logging.level", "WARNING"))

    if getattr(options, "no_prune", False):
        config.set("dialectics.pruning", False)

    interpreter = Interpreter(config)
    try:
        return int(COMMANDS[options.command](interpreter, options))
    except NodeLimitExceeded as e:
        logger.error(f"{e}（可通过 PDELP_NODE_CAP 或配置 dialectics.node_cap 调整）")
        if options.verbose:
            logger.exception("辩证树构造中止")
        return ExitStatus.NODE_LIMIT


if __name__ == "__main__":
    sys.exit(main())
