"""共享夹具：引擎诊断示例程序及其子句、论证查找"""

from pathlib import Path

import pytest

from PDeLP.argumentation import ArgumentBuilder, DialecticalAnalyzer
from PDeLP.lang import parse_program
from PDeLP.logic import Literal, Program
from PDeLP.utils import get_logger

DATA = Path(__file__).parent / "data"
ENGINE_FILE = DATA / "engine.pdelp"


@pytest.fixture(autouse=True)
def _isolate(monkeypatch):
    monkeypatch.delenv("PDELP_CONFIG", raising=False)
    monkeypatch.delenv("PDELP_NODE_CAP", raising=False)
    yield
    logger = get_logger()
    for handler in list(logger.handlers):
        if getattr(handler, "_pdelp_handler", False):
            logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel("NOTSET")


@pytest.fixture(scope="session")
def engine_path() -> Path:
    return ENGINE_FILE


@pytest.fixture(scope="session")
def engine_text() -> str:
    return ENGINE_FILE.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def engine(engine_text) -> Program:
    pi, delta = parse_program(engine_text)
    return Program.build(pi, delta)


@pytest.fixture
def clause(engine):
    """按源码序号取子句"""
    return engine.by_index


@pytest.fixture
def support(engine):
    def make(*indices):
        return frozenset(engine.by_index(i) for i in indices)

    return make


@pytest.fixture
def builder(engine) -> ArgumentBuilder:
    return ArgumentBuilder(engine)


@pytest.fixture
def analyzer(engine, builder) -> DialecticalAnalyzer:
    return DialecticalAnalyzer(engine, builder=builder)


@pytest.fixture
def argument(builder, support):
    """按结论与支撑子句序号查找论证"""

    def find(conclusion, *indices):
        wanted = support(*indices)
        for candidate in builder.arguments_for(Literal.of(conclusion)):
            if candidate.support == wanted:
                return candidate
        raise LookupError(f"没有论证 ⟨{sorted(indices)}, {conclusion}⟩")

    return find
