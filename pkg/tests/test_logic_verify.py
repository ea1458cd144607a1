from __future__ import annotations

import math
import random

import pytest

from cogcity.beliefs import parse
from cogcity.beliefs.language import Atom, Constant, Fact, Integer
from cogcity.verify import (
    ConstraintId,
    CycleError,
    FixedTheory,
    ReportStatus,
    background_atoms,
    check_constraints,
    evaluate,
    explain,
    minimal_core,
    verify,
)
from cogcity.verify.evaluator import saturate

from support import (
    brute_force_fixpoint,
    enumerate_minimal_cores,
    random_violating_program,
)

THEORY = FixedTheory()


def atoms(facts: frozenset, predicate: str) -> set:
    return {a for a in facts if a.predicate == predicate}


class TestBackground:
    def test_composition(self):
        background = background_atoms(THEORY.topology)
        assert len(atoms(background, "district")) == 4
        assert len(atoms(background, "adjacent")) == 8  # four edges, both directions
        assert len(atoms(background, "resource")) == 3

    def test_background_is_consistent(self):
        assert check_constraints(background_atoms(THEORY.topology), THEORY) == []


class TestEvaluate:
    def test_single_rule_fires(self):
        program = parse(
            "resource_level(d2, food, 0). needs(D, food, 20) :- resource_level(D, food, 0)."
        )
        facts = evaluate(program, THEORY)
        assert Atom("needs", (Constant("d2"), Constant("food"), Integer(20))) in facts

    def test_empty_program_gives_background(self):
        assert evaluate(parse(""), THEORY) == THEORY.background

    def test_rule_chain_matches_brute_force_oracle(self):
        text = (
            "alert(D) :- urgent(D). "
            "urgent(D) :- low(D). "
            "low(D) :- resource_level(D, food, 0). "
            "resource_level(d2, food, 0)."
        )
        program = parse(text)
        facts = evaluate(program, THEORY)
        assert facts == brute_force_fixpoint(program, THEORY)
        derived = facts - THEORY.background - {s.head for s in program.statements if isinstance(s, Fact)}
        assert {a.predicate for a in derived} == {"low", "urgent", "alert"}
        assert len(derived) == 3

    def test_chain_saturates_quickly(self):
        program = parse(
            "alert(D) :- urgent(D). urgent(D) :- low(D). "
            "low(D) :- resource_level(D, food, 0). resource_level(d2, food, 0)."
        )
        facts = set(THEORY.background) | {s.head for s in program.statements if isinstance(s, Fact)}
        rules = [s for s in program.statements if not isinstance(s, Fact)]
        _, passes = saturate(facts, rules)
        assert passes <= len(rules) + 1

    def test_cyclic_program_rejected(self):
        program = parse("p(X) :- q(X). q(X) :- p(X).")
        with pytest.raises(CycleError):
            evaluate(program, THEORY)

    def test_random_programs_match_brute_force(self):
        rng = random.Random(7)
        for _ in range(25):
            program = parse(random_violating_program(rng, max_statements=8))
            assert evaluate(program, THEORY) == brute_force_fixpoint(program, THEORY)

    def test_monotone_under_added_fact(self):
        base = parse("at(self, d1). needs(D, food, 20) :- resource_level(D, food, 0).")
        extended = parse(
            "at(self, d1). needs(D, food, 20) :- resource_level(D, food, 0). "
            "resource_level(d3, food, 0)."
        )
        assert evaluate(base, THEORY) <= evaluate(extended, THEORY)


def facts_of(text: str) -> frozenset:
    return evaluate(parse(text), THEORY)


class TestConstraints:
    def test_c1_two_locations(self):
        violations = check_constraints(facts_of("at(self, d1). at(self, d2)."), THEORY)
        assert [v.constraint_id for v in violations] == [ConstraintId.C1_UNIQUE_LOCATION]

    def test_no_location_is_fine(self):
        assert check_constraints(facts_of("carrying(food, 10)."), THEORY) == []

    def test_c2_conflicting_values(self):
        violations = check_constraints(facts_of("carrying(food, 10). carrying(food, 20)."), THEORY)
        assert violations[0].constraint_id is ConstraintId.C2_FUNCTIONAL_VALUE

    def test_c2_distinct_keys_ok(self):
        text = "carrying(food, 10). carrying(medicine, 20). health(d2, 50). health(d3, 60)."
        assert check_constraints(facts_of(text), THEORY) == []

    def test_c3_carry_range(self):
        assert check_constraints(facts_of("carrying(food, -5)."), THEORY)[0].constraint_id is ConstraintId.C3_CARRY_RANGE
        assert check_constraints(facts_of("carrying(food, 51)."), THEORY)[0].constraint_id is ConstraintId.C3_CARRY_RANGE
        assert check_constraints(facts_of("carrying(food, 50)."), THEORY) == []

    def test_c4_negative_level(self):
        violations = check_constraints(facts_of("resource_level(d2, food, -1)."), THEORY)
        assert violations[0].constraint_id is ConstraintId.C4_LEVEL_NON_NEGATIVE

    def test_c5_health_range(self):
        violations = check_constraints(facts_of("health(d2, 101)."), THEORY)
        assert violations[0].constraint_id is ConstraintId.C5_HEALTH_RANGE

    def test_c6_non_adjacent_move(self):
        violations = check_constraints(facts_of("at(self, d1). plan_move(d4)."), THEORY)
        assert violations[0].constraint_id is ConstraintId.C6_MOVE_ADJACENT

    def test_c6_adjacent_move_ok(self):
        assert check_constraints(facts_of("at(self, d1). plan_move(d2)."), THEORY) == []

    def test_c7_supply_exceeds_carry(self):
        violations = check_constraints(facts_of("carrying(food, 30). plan_supply(40)."), THEORY)
        assert violations[0].constraint_id is ConstraintId.C7_SUPPLY_FEASIBLE
        assert violations[0].message_template_id == "C7_EXCEEDS_CARRY"

    def test_c7_non_positive_supply(self):
        violations = check_constraints(facts_of("plan_supply(0)."), THEORY)
        assert violations[0].message_template_id == "C7_NON_POSITIVE"

    def test_c8_two_plans(self):
        violations = check_constraints(
            facts_of("at(self, d2). carrying(food, 20). plan_move(d4). plan_supply(5)."), THEORY
        )
        assert ConstraintId.C8_SINGLE_PLAN in {v.constraint_id for v in violations}

    def test_order_is_fixed(self):
        text = "at(self, d1). at(self, d2). carrying(food, -5). health(d3, 200)."
        ids = [v.constraint_id for v in check_constraints(facts_of(text), THEORY)]
        assert ids == sorted(ids, key=lambda c: c.value)


class TestVerify:
    def test_consistent(self):
        report = verify("at(self, d1). carrying(food, 50).", THEORY)
        assert report.status is ReportStatus.CONSISTENT

    def test_inconsistent_minimal_pair(self):
        report = verify("at(self, d1). at(self, d2).", THEORY)
        assert report.status is ReportStatus.INCONSISTENT
        assert report.core.indices == (0, 1)
        assert report.explanation

    def test_malformed_parse(self):
        report = verify("at(self,d1 .", THEORY)
        assert report.status is ReportStatus.MALFORMED
        assert report.malformed_kind == "parse"

    def test_malformed_safety(self):
        report = verify("needs(D, food, N) :- resource_level(D, food, 0).", THEORY)
        assert report.status is ReportStatus.MALFORMED
        assert report.malformed_kind == "safety"

    def test_malformed_cycle(self):
        report = verify("p(X) :- q(X). q(X) :- p(X).", THEORY)
        assert report.status is ReportStatus.MALFORMED
        assert report.malformed_kind == "cycle"

    def test_consistent_iff_no_violations(self):
        rng = random.Random(21)
        for _ in range(40):
            text = random_violating_program(rng)
            report = verify(text, THEORY)
            violations = check_constraints(evaluate(parse(text), THEORY), THEORY)
            assert report.consistent == (not violations)

    def test_derived_fact_count(self):
        report = verify(
            "resource_level(d2, food, 0). needs(D, food, 20) :- resource_level(D, food, 0).",
            THEORY,
        )
        assert report.derived_fact_count == 1

    def test_report_json_roundtrip_shape(self):
        report = verify("at(self, d1). at(self, d2).", THEORY)
        data = report.to_json()
        assert data["status"] == "inconsistent"
        assert data["core"]["indices"] == [0, 1]
        assert data["explanation"]


class TestMinimalCore:
    def test_contradictory_pair(self):
        program = parse("at(self, d1). at(self, d2).")
        core = minimal_core(program, THEORY)
        assert core.indices == (0, 1)

    def test_lone_violating_fact(self):
        program = parse("at(self, d1). carrying(food, -5). health(d2, 50).")
        core = minimal_core(program, THEORY)
        assert core.indices == (1,)
        assert core.statement_texts == ("carrying(food, -5).",)

    def test_requires_inconsistency(self):
        with pytest.raises(ValueError):
            minimal_core(parse("at(self, d1)."), THEORY)

    def test_rule_in_core(self):
        program = parse("at(self, d1). at(self, d4) :- district(d1).")
        core = minimal_core(program, THEORY)
        assert core.indices == (0, 1)

    def test_tie_break_prefers_lowest_indices(self):
        # every pair of the three claims is a minimal core
        program = parse("at(self, d1). at(self, d2). at(self, d3).")
        assert minimal_core(program, THEORY).indices == (0, 1)

    def test_matches_exhaustive_enumeration(self):
        rng = random.Random(99)
        checked = 0
        while checked < 30:
            text = random_violating_program(rng, max_statements=12)
            program = parse(text)
            cores = enumerate_minimal_cores(program, THEORY)
            if not cores:
                continue
            checked += 1
            result = minimal_core(program, THEORY)
            assert result.indices in cores

    def test_call_count_bound(self):
        rng = random.Random(5)
        for _ in range(50):
            program = parse(random_violating_program(rng))
            result = minimal_core(program, THEORY)
            n = len(program.statements)
            k = len(result.indices)
            assert result.consistency_checks <= 2 * k * (math.log2(n) + 2)


class TestExplain:
    def test_c1_template_exact(self):
        program = parse("at(self, d1). at(self, d2).")
        core = minimal_core(program, THEORY)
        first_line = explain(core, THEORY).splitlines()[0]
        assert first_line == (
            "You believe you are in two districts at once: at(self,d1), at(self,d2). "
            "Revise your location belief."
        )

    def test_c6_names_location_target_and_neighbors(self):
        program = parse("at(self, d1). plan_move(d4).")
        core = minimal_core(program, THEORY)
        text = explain(core, THEORY)
        assert "d1" in text and "d4" in text
        assert "d2, d3" in text  # the adjacency list of d1

    def test_deterministic(self):
        program = parse("carrying(food, 30). plan_supply(40).")
        a = explain(minimal_core(program, THEORY), THEORY)
        b = explain(minimal_core(program, THEORY), THEORY)
        assert a == b

    def test_core_statements_quoted_verbatim(self):
        program = parse("at(self, d1).\nat( self , d2 ).")
        core = minimal_core(program, THEORY)
        text = explain(core, THEORY)
        assert "at( self , d2 )." in text
