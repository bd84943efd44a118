"""
基于属性的测试

随机程序上比对推理引擎与暴力参照实现，并检查剪枝、担保互斥、
单调性、序列化往返与推导重放等性质。
"""

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from PDeLP.argumentation import ArgumentBuilder, DialecticalAnalyzer, derivation_steps
from PDeLP.lang import parse_program, serialize_program
from PDeLP.logic import Program, WeightedClause, best_proof, degree_table, max_degree
from PDeLP.logic.oracle import MAX_CLAUSES, oracle_arguments, oracle_max_degree

from .strategies import WEIGHTS, atoms, clause_lists, literals, valid_programs

pytestmark = pytest.mark.property_based

THOROUGH = settings(
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
QUICK = settings(
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)


@THOROUGH
@given(valid_programs())
def test_max_degree_matches_oracle(program):
    clauses = program.ordered()[:MAX_CLAUSES]
    heads = program.heads()
    for literal in heads | {literal.complement() for literal in heads}:
        assert max_degree(clauses, literal) == oracle_max_degree(clauses, literal)


@THOROUGH
@given(valid_programs())
def test_arguments_match_oracle(program):
    builder = ArgumentBuilder(program)
    for literal in program.heads():
        found = {(a.support, a.degree) for a in builder.arguments_for(literal)}
        assert found == oracle_arguments(program, literal)


@THOROUGH
@given(valid_programs())
def test_pruning_preserves_root_mark(program):
    analyzer = DialecticalAnalyzer(program)
    for argument in analyzer.builder.all_arguments():
        full = analyzer.build_tree(argument, pruning=False)
        pruned = analyzer.build_tree(argument, pruning=True)
        assert full.mark is pruned.mark


@THOROUGH
@given(valid_programs())
def test_every_tree_line_is_acceptable(program):
    analyzer = DialecticalAnalyzer(program)
    for argument in analyzer.builder.all_arguments():
        for line in analyzer.build_tree(argument, pruning=False).lines():
            check = analyzer.is_acceptable_line(line)
            assert check, (line, check.constraint, check.index)


@THOROUGH
@given(valid_programs())
def test_subarguments_are_transitive(program):
    builder = ArgumentBuilder(program)
    for argument in builder.all_arguments():
        subs = builder.subarguments(argument)
        assert argument in subs
        for sub in subs:
            assert builder.subarguments(sub) <= subs


@THOROUGH
@given(valid_programs())
def test_goal_and_complement_are_not_both_warranted(program):
    analyzer = DialecticalAnalyzer(program)
    for literal in program.heads():
        assert not (analyzer.warranted(literal) and analyzer.warranted(literal.complement()))


@THOROUGH
@given(clause_lists(), st.data())
def test_adding_clauses_never_lowers_degree(clauses, data):
    pool = atoms(6)
    head = data.draw(literals(pool))
    body = data.draw(st.lists(literals(pool), max_size=2))
    weight = data.draw(st.sampled_from(WEIGHTS))
    before = degree_table(clauses)
    after = degree_table(clauses + [WeightedClause.rule(head, body, weight)])
    for literal, degree in before.items():
        assert after[literal] >= degree


@QUICK
@given(valid_programs())
def test_serialization_round_trip(program):
    text = serialize_program(program)
    pi, delta = parse_program(text)
    assert Program(pi, delta) == program
    assert serialize_program(Program(pi, delta)) == text


@QUICK
@given(clause_lists())
def test_best_proof_is_sound(clauses):
    for literal, degree in degree_table(clauses).items():
        proof = best_proof(clauses, literal)
        assert proof.degree == degree
        for node in proof.nodes():
            assert [p.conclusion for p in node.premises] == list(node.rule_used.body)
            assert node.rule_used in clauses


@QUICK
@given(valid_programs())
def test_derivation_replay_reaches_argument(program):
    for argument in ArgumentBuilder(program).all_arguments():
        steps = derivation_steps(argument, program)
        assert steps[-1].conclusion == argument.conclusion
        assert steps[-1].degree == argument.degree
        assert steps[-1].support == argument.support
