"""Closure explorer: which ordinals have initial segments closed under a ladder level.

An ordinal delta is "main" for level i when synth(i, alpha, beta) < delta
for every alpha, beta < delta.  That is undecidable by sampling alone, so
verdicts are asymmetric: a refutation carries a concrete witness pair and
is re-checkable, while a confirmation only says "main on this sample" --
no pair drawn from a fixed, deterministic candidate lattice escaped.

The reports pair the confirmed infinite mains, in order, against the
ladder values synth(i+1, w, w^rank), rank = 0, 1, 2, ...  Ranks are
0-indexed: rank 0 pairs with the smallest infinite main.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .budget import EvalBudget
from .errors import BudgetExceeded, NotRepresentable, OrdinalDomainError
from .ordinal import OMEGA, ZERO, Ordinal, compare, from_natural, omega_power
from .synthesis import Memo, synth

__all__ = [
    "candidate_lattice",
    "is_main_number",
    "enumerate_main_numbers",
    "MainVerdict",
    "Refutation",
    "ConjectureRow",
    "MainNumberReport",
    "DEFAULT_LATTICE_SPEC",
]

DEFAULT_LATTICE_SPEC = (3, 5, 1)

# Hard ceiling on lattice size; generous specs explode combinatorially.
LATTICE_CAP = 200_000


def candidate_lattice(
    depth: int = 3,
    coeff: int = 5,
    terms: int = 1,
    bound: Optional[Ordinal] = None,
) -> List[Ordinal]:
    """All CNF ordinals within the given structural caps, sorted ascending.

    depth caps the nesting height, coeff the value of any coefficient,
    terms the number of compressed terms at each level.  The same caps
    apply inside exponents.  Zero is always included.  With bound given,
    only ordinals <= bound are returned (the caps still shape what is
    generated, so a loose bound does not widen the lattice).
    """
    for name, v in (("depth", depth), ("coeff", coeff), ("terms", terms)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise OrdinalDomainError(f"lattice {name} must be an integer >= 1, got {v!r}")
    pool = {ZERO}
    for _ in range(depth):
        exponents = sorted(pool, key=cmp_to_key(compare), reverse=True)
        grown = set(pool)
        for r in range(1, terms + 1):
            for combo in itertools.combinations(exponents, r):
                # exponents are sorted descending, so combo already is
                for coeffs in itertools.product(range(1, coeff + 1), repeat=r):
                    grown.add(Ordinal(tuple(zip(combo, coeffs))))
                    if len(grown) > LATTICE_CAP:
                        raise BudgetExceeded(
                            f"candidate lattice exceeds {LATTICE_CAP} entries"
                        )
        pool = grown
    ordered = sorted(pool, key=cmp_to_key(compare))
    if bound is not None:
        ordered = [x for x in ordered if x <= bound]
    return ordered


class MainVerdict(NamedTuple):
    candidate: Ordinal
    main: bool                              # True = main-on-sample only
    witness: Optional[Tuple[Ordinal, Ordinal]]
    value: Optional[Ordinal]                # None with a witness: >= epsilon_0
    pairs_skipped: int                      # pairs the budget refused to settle


class Refutation(NamedTuple):
    candidate: Ordinal
    alpha: Ordinal
    beta: Ordinal
    value: Optional[Ordinal]


class ConjectureRow(NamedTuple):
    rank: int
    expected_text: str
    observed: Optional[Ordinal]
    match: Optional[bool]


def is_main_number(
    i: int,
    delta: Ordinal,
    lattice_spec: Tuple[int, int, int] = DEFAULT_LATTICE_SPEC,
    budget: Optional[EvalBudget] = None,
) -> MainVerdict:
    """Closure test for a single candidate against the candidate lattice."""
    _check_index(i)
    if not isinstance(delta, Ordinal) or delta.is_zero:
        raise OrdinalDomainError(f"candidate must be an Ordinal > 0, got {delta!r}")
    depth, coeff, terms = lattice_spec
    entries = candidate_lattice(depth, coeff, terms)
    return _classify(i, delta, entries, budget or EvalBudget(), {})


def _classify(
    i: int,
    delta: Ordinal,
    entries: Sequence[Ordinal],
    budget: EvalBudget,
    memo: Memo,
) -> MainVerdict:
    below = [x for x in entries if x < delta]
    beta_max = below[-1] if below else None
    skipped = 0
    for alpha in below:
        # Probe at the largest beta first: ladder values grow weakly in
        # beta for alpha >= 2, and for alpha <= 1 every value is <= 1,
        # catchable only at delta = 1 where beta_max = 0 is the probe.
        scan_needed = True
        if beta_max is not None:
            try:
                probe = synth(i, alpha, beta_max, budget, memo=memo)
            except NotRepresentable:
                probe = None
            except BudgetExceeded:
                probe = None
                skipped += 1  # probe unsettled: fall back to the full scan
            else:
                scan_needed = probe >= delta
            if probe is None:
                scan_needed = True
        if not scan_needed:
            continue
        for beta in below:
            try:
                value = synth(i, alpha, beta, budget, memo=memo)
            except NotRepresentable:
                # Certainly >= epsilon_0 > delta: a genuine witness.
                return MainVerdict(delta, False, (alpha, beta), None, skipped)
            except BudgetExceeded:
                skipped += 1
                continue
            if value >= delta:
                return MainVerdict(delta, False, (alpha, beta), value, skipped)
    return MainVerdict(delta, True, None, None, skipped)


@dataclass(frozen=True)
class MainNumberReport:
    op_index: int
    bound: Ordinal
    lattice_spec: Tuple[int, int, int]
    budget: EvalBudget
    candidates_scanned: int
    confirmed: Tuple[Ordinal, ...]
    confirmed_infinite: Tuple[Ordinal, ...]
    refuted: Tuple[Refutation, ...]
    conjectured_match: Tuple[ConjectureRow, ...]
    all_match: bool
    pairs_skipped: int

    def json_dict(self) -> dict:
        """Plain-data rendering with a fixed key order, fit for json.dumps."""
        return {
            "op_index": self.op_index,
            "bound": str(self.bound),
            "lattice_spec": {
                "depth": self.lattice_spec[0],
                "coeff": self.lattice_spec[1],
                "terms": self.lattice_spec[2],
            },
            "budget": {
                "max_depth": self.budget.max_depth,
                "max_bits": self.budget.max_bits,
                "sup_samples": self.budget.sup_samples,
            },
            "candidates_scanned": self.candidates_scanned,
            "confirmed": [str(x) for x in self.confirmed],
            "confirmed_infinite": [str(x) for x in self.confirmed_infinite],
            "refuted": [
                {
                    "candidate": str(r.candidate),
                    "witness": [str(r.alpha), str(r.beta)],
                    "value": "NotRepresentable" if r.value is None else str(r.value),
                }
                for r in self.refuted
            ],
            "conjectured_match": [
                {
                    "rank": row.rank,
                    "expected": row.expected_text,
                    "observed": None if row.observed is None else str(row.observed),
                    "match": row.match,
                }
                for row in self.conjectured_match
            ],
            "all_match": self.all_match,
            "pairs_skipped": self.pairs_skipped,
            "note": (
                "confirmed entries are main-on-sample relative to the lattice; "
                "refutations carry re-checkable witnesses"
            ),
        }


def enumerate_main_numbers(
    i: int,
    bound: Ordinal,
    lattice_spec: Tuple[int, int, int] = DEFAULT_LATTICE_SPEC,
    budget: Optional[EvalBudget] = None,
) -> MainNumberReport:
    """Scan lattice candidates <= bound and build the closure report.

    Confirmed infinite mains are ranked in ascending order and compared
    with synth(i+1, w, w^rank); one extra row past the last confirmed
    rank shows the next expected value.
    """
    _check_index(i)
    if not isinstance(bound, Ordinal) or bound.is_zero:
        raise OrdinalDomainError(f"bound must be an Ordinal > 0, got {bound!r}")
    budget = budget or EvalBudget()
    depth, coeff, terms = lattice_spec
    entries = candidate_lattice(depth, coeff, terms, bound=bound)
    candidates = [x for x in entries if not x.is_zero]

    memo: Memo = {}
    confirmed: List[Ordinal] = []
    refuted: List[Refutation] = []
    skipped = 0
    for delta in candidates:
        verdict = _classify(i, delta, entries, budget, memo)
        skipped += verdict.pairs_skipped
        if verdict.main:
            confirmed.append(delta)
        else:
            alpha, beta = verdict.witness
            refuted.append(Refutation(delta, alpha, beta, verdict.value))

    confirmed_infinite = [x for x in confirmed if not x.is_natural]
    rows: List[ConjectureRow] = []
    all_match = True
    for rank in range(len(confirmed_infinite) + 1):
        try:
            expected = synth(i + 1, OMEGA, omega_power(from_natural(rank)), budget, memo=memo)
            expected_text = str(expected)
        except NotRepresentable:
            expected = None
            expected_text = "NotRepresentable"
        except BudgetExceeded:
            expected = None
            expected_text = "BudgetExceeded"
        observed = confirmed_infinite[rank] if rank < len(confirmed_infinite) else None
        if observed is None:
            match: Optional[bool] = None
        else:
            match = expected is not None and expected == observed
            all_match = all_match and match
        rows.append(ConjectureRow(rank, expected_text, observed, match))

    return MainNumberReport(
        op_index=i,
        bound=bound,
        lattice_spec=(depth, coeff, terms),
        budget=budget,
        candidates_scanned=len(candidates),
        confirmed=tuple(confirmed),
        confirmed_infinite=tuple(confirmed_infinite),
        refuted=tuple(refuted),
        conjectured_match=tuple(rows),
        all_match=all_match,
        pairs_skipped=skipped,
    )


def _check_index(i):
    if not isinstance(i, int) or isinstance(i, bool) or i < 1:
        raise OrdinalDomainError(f"operation index must be an integer >= 1, got {i!r}")
