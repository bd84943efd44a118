"""暴力参照实现与推理引擎的比对"""

from fractions import Fraction

import pytest

from PDeLP.argumentation import ArgumentBuilder, DialecticalAnalyzer
from PDeLP.config import PDeLPConfig
from PDeLP.errors import InstanceTooLarge
from PDeLP.lang import parse_clauses
from PDeLP.logic import Literal, max_degree
from PDeLP.logic.oracle import oracle_arguments, oracle_defeaters, oracle_max_degree


@pytest.fixture
def small(engine):
    """|Δ| = 10 的引擎程序"""
    return engine.without(engine.by_index(12))


def labelled(pairs):
    return {(frozenset(c.index for c in support), degree) for support, degree in pairs}


def test_max_degree_matches_on_contradictory_set():
    clauses = parse_clauses("(p <- q, 0.5). (~p <- q & r, 0.3). (q, 0.2). (r, 1).")
    assert oracle_max_degree(clauses, Literal.of("p")) == Fraction(1, 5)
    assert oracle_max_degree(clauses, Literal.of("~p")) == Fraction(1, 5)


def test_max_degree_matches_engine_prefix(engine):
    clauses = engine.ordered()[:12]
    for literal in engine.heads():
        assert oracle_max_degree(clauses, literal) == max_degree(clauses, literal)


def test_max_degree_guard(engine):
    with pytest.raises(InstanceTooLarge):
        oracle_max_degree(engine.ordered()[:13], Literal.of("engine_ok"))


def test_argument_guard(engine):
    with pytest.raises(InstanceTooLarge):
        oracle_arguments(engine, Literal.of("engine_ok"))


@pytest.mark.parametrize(
    "goal, expected",
    [
        (
            "engine_ok",
            {
                (frozenset({6, 7, 8, 9, 10}), Fraction(3, 10)),
                (frozenset({8, 9, 10, 16}), Fraction(3, 10)),
            },
        ),
        ("fuel_ok", {(frozenset({6, 7}), Fraction(3, 10)), (frozenset({16}), Fraction(9, 10))}),
        ("pump_clog", {(frozenset({6, 13, 14}), Fraction(3, 5))}),
        ("sw1", {(frozenset(), Fraction(1))}),
        ("~oil_ok", set()),
    ],
)
def test_oracle_arguments(small, goal, expected):
    assert labelled(oracle_arguments(small, Literal.of(goal))) == expected


def test_builder_agrees_with_oracle(small):
    builder = ArgumentBuilder(small)
    for literal in small.heads():
        found = {(a.support, a.degree) for a in builder.arguments_for(literal)}
        assert found == oracle_arguments(small, literal)


@pytest.mark.parametrize("scope", ["complement", "closure"])
def test_defeaters_agree_with_oracle(small, scope):
    config = PDeLPConfig()
    config.set("dialectics.attack_scope", scope)
    analyzer = DialecticalAnalyzer(small, config)
    for target in analyzer.builder.all_arguments():
        expected = oracle_defeaters(small, target.support, target.conclusion, target.degree, scope)
        found = {
            (r.attacker.support, r.attacker.conclusion, r.attacker.degree, r.kind.value)
            for r in analyzer.find_defeaters(target)
        }
        assert found == expected


def test_oracle_defeaters_of_engine_ok(small):
    [a1] = [
        support
        for support, _ in oracle_arguments(small, Literal.of("engine_ok"))
        if len(support) == 5
    ]
    found = oracle_defeaters(small, a1, Literal.of("engine_ok"), Fraction(3, 10))
    assert {(tuple(sorted(c.index for c in s)), str(q), kind) for s, q, _, kind in found} == {
        ((11,), "~engine_ok", "proper"),
        ((6, 13, 14), "~fuel_ok", "proper"),
    }
