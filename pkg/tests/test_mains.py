"""Closure scanning: candidate lattices, verdicts with witnesses, and the
deterministic report JSON."""
import json

import pytest

from support import W, nat

from transfinite.arithmetic import add, mul, pow_
from transfinite.budget import EvalBudget
from transfinite.errors import BudgetExceeded, OrdinalDomainError
from transfinite.mains import (
    DEFAULT_LATTICE_SPEC,
    MainVerdict,
    candidate_lattice,
    enumerate_main_numbers,
    is_main_number,
)
from transfinite.ordinal import ONE, ZERO
from transfinite.synthesis import synth

B = EvalBudget()


class TestCandidateLattice:
    def test_default_spec_and_size(self):
        assert DEFAULT_LATTICE_SPEC == (3, 5, 1)
        lattice = candidate_lattice()
        assert len(lattice) == 156
        assert lattice[0] == ZERO
        assert lattice == sorted(lattice)

    def test_contains_the_small_naturals(self):
        lattice = candidate_lattice()
        for k in range(6):
            assert nat(k) in lattice

    def test_deterministic(self):
        assert candidate_lattice() == candidate_lattice()
        assert candidate_lattice(depth=2, coeff=3, terms=2) == candidate_lattice(
            depth=2, coeff=3, terms=2
        )

    def test_bound_filters(self):
        bound = pow_(W, nat(3), B)
        bounded = candidate_lattice(bound=bound)
        assert len(bounded) == 17
        assert max(bounded) == bound
        assert all(x <= bound for x in bounded)

    def test_spec_validation(self):
        for kw in ({"depth": 0}, {"coeff": 0}, {"terms": 0}, {"depth": -1}, {"coeff": 1.5}):
            with pytest.raises(OrdinalDomainError):
                candidate_lattice(**kw)

    def test_runaway_spec_is_capped(self):
        with pytest.raises(BudgetExceeded):
            candidate_lattice(depth=3, coeff=30, terms=3)


class TestIsMainNumber:
    def test_omega_is_additively_main(self):
        verdict = is_main_number(1, W, budget=B)
        assert isinstance(verdict, MainVerdict)
        assert verdict.main
        assert verdict.witness is None

    def test_one_is_additively_main(self):
        assert is_main_number(1, ONE, budget=B).main

    def test_two_is_refuted_by_one_plus_one(self):
        verdict = is_main_number(1, nat(2), budget=B)
        assert not verdict.main
        assert verdict.witness == (ONE, ONE)
        assert verdict.value == nat(2)

    def test_omega_times_two_is_refuted(self):
        verdict = is_main_number(1, mul(W, nat(2)), budget=B)
        assert not verdict.main
        alpha, beta = verdict.witness
        # The witness must re-verify through the operation itself.
        assert synth(1, alpha, beta, B) >= mul(W, nat(2))

    def test_multiplicative_witness(self):
        verdict = is_main_number(2, mul(W, nat(2)), budget=B)
        assert not verdict.main
        assert verdict.witness == (W, nat(2))
        assert verdict.value == mul(W, nat(2))

    def test_omega_power_omega_is_multiplicatively_main(self):
        assert is_main_number(2, pow_(W, W, B), budget=B).main

    def test_candidate_must_be_positive(self):
        with pytest.raises(OrdinalDomainError):
            is_main_number(1, ZERO, budget=B)

    def test_index_validation(self):
        with pytest.raises(OrdinalDomainError):
            is_main_number(0, W, budget=B)


class TestEnumerate:
    def test_additive_mains_below_w5(self):
        report = enumerate_main_numbers(1, pow_(W, nat(5), B), budget=B)
        assert [str(x) for x in report.confirmed_infinite] == [
            "w", "w^2", "w^3", "w^4", "w^5",
        ]
        assert report.all_match

    def test_conjecture_ranks_agree_with_ladder(self):
        # Rank r of the op-i scan should be the level-(i+1) value at w^r.
        report = enumerate_main_numbers(2, pow_(W, pow_(W, nat(2), B), B), budget=B)
        for rank, value in enumerate(report.confirmed_infinite):
            assert value == synth(3, W, pow_(W, nat(rank), B), B)

    def test_unrepresentable_expected_column(self):
        # At op index 3 the rank-1 prediction is tetration at w, which
        # escapes epsilon_0; the row must say so rather than fail.
        report = enumerate_main_numbers(3, pow_(W, W, B), budget=B)
        assert [str(x) for x in report.confirmed_infinite] == ["w"]
        rows = report.json_dict()["conjectured_match"]
        assert rows[0] == {"rank": 0, "expected": "w", "observed": "w", "match": True}
        assert rows[1]["expected"] == "NotRepresentable"
        assert report.all_match

    def test_index_validation(self):
        with pytest.raises(OrdinalDomainError):
            enumerate_main_numbers(0, W, budget=B)


class TestReportJson:
    def test_key_order_and_shape(self):
        doc = enumerate_main_numbers(1, pow_(W, nat(3), B), budget=B).json_dict()
        assert list(doc.keys()) == [
            "op_index", "bound", "lattice_spec", "budget", "candidates_scanned",
            "confirmed", "confirmed_infinite", "refuted", "conjectured_match",
            "all_match", "pairs_skipped", "note",
        ]
        assert doc["op_index"] == 1
        assert doc["bound"] == "w^3"
        assert doc["lattice_spec"] == {"depth": 3, "coeff": 5, "terms": 1}
        assert doc["confirmed"][0] == "1"
        assert doc["pairs_skipped"] == 0

    def test_refutations_carry_witnesses(self):
        doc = enumerate_main_numbers(1, pow_(W, nat(3), B), budget=B).json_dict()
        entry = doc["refuted"][0]
        assert entry == {"candidate": "2", "witness": ["1", "1"], "value": "2"}

    def test_byte_identical_across_runs(self):
        runs = [
            json.dumps(enumerate_main_numbers(1, pow_(W, nat(3), B), budget=B).json_dict())
            for _ in range(3)
        ]
        assert runs[0] == runs[1] == runs[2]

    def test_every_refutation_reverifies(self):
        report = enumerate_main_numbers(1, pow_(W, nat(4), B), budget=B)
        for ref in report.refuted:
            assert ref.alpha < ref.candidate and ref.beta < ref.candidate
            assert synth(1, ref.alpha, ref.beta, B) >= ref.candidate
