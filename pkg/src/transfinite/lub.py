"""Least-upper-bound inference from finite sample runs.

A supremum over a limit is approximated by evaluating finitely many points
along the limit's fundamental sequence (plus the seed points 0 and 1) and
then recognizing the growth shape of the resulting value sequence.  Five
rules are tried in a fixed order:

  CONSTANT_TAIL      three identical trailing values; the sup is that value
                     joined with the maximum of the earlier samples
  PREFIX_PEEL        the increasing tail shares a literal CNF term prefix;
                     peel it and infer the remainder sequence
  EXPONENT_GROWTH    leading exponents strictly increase; the sup is
                     w ** (inferred lub of those exponents)
  COEFFICIENT_GROWTH fixed leading exponent w^e with strictly increasing
                     leading coefficients; the sup is w^(e+1)
  TOWER_GROWTH       normal-form height strictly increases; the value
                     escapes every w-tower, i.e. is not below epsilon_0

A rule that matches structurally but whose recursive sub-inference finds
no pattern falls through to the next rule.  TOWER_GROWTH raises
NotRepresentable; if nothing fires, NoPatternError carries the samples.

The inferred value is exact whenever the sampled function is weakly
increasing and the sample points are cofinal in the limit, which holds for
the operations in this package on every argument the growth rules accept.
"""

from __future__ import annotations

import enum
from typing import Callable, List, Sequence, Tuple

from .arithmetic import add
from .budget import EvalBudget
from .errors import BudgetExceeded, NoPatternError, NotRepresentable
from .ordinal import (
    ZERO,
    ONE,
    Ordinal,
    _ord,
    cnf_height,
    fundamental_sequence,
    omega_power,
    successor,
)


class LubInference(enum.Enum):
    CONSTANT_TAIL = "constant-tail"
    PREFIX_PEEL = "prefix-peel"
    EXPONENT_GROWTH = "exponent-growth"
    COEFFICIENT_GROWTH = "coefficient-growth"
    TOWER_GROWTH = "tower-growth"


def infer_lub(samples: Sequence[Ordinal]) -> Ordinal:
    value, _ = classify_lub(samples)
    return value


def classify_lub(samples: Sequence[Ordinal]) -> Tuple[Ordinal, LubInference]:
    """Infer the least upper bound of a sample run and name the rule used."""
    samples = list(samples)
    if len(samples) < 3:
        raise NoPatternError(f"need at least 3 samples, got {len(samples)}", samples)

    if samples[-1] == samples[-2] == samples[-3]:
        return max(samples), LubInference.CONSTANT_TAIL

    # Everything else needs a strictly increasing tail to read a trend from.
    run = _increasing_tail(samples)
    if run and run[0].is_zero:
        run = run[1:]
    if len(run) < 3:
        raise NoPatternError("no usable increasing tail in samples", samples)
    value, rule = _infer_increasing(run, samples)
    # Samples before the tail can only matter if one of them is larger;
    # sup(all) = max(sup(tail), max(rest)).
    earlier = samples[: len(samples) - len(run)]
    for s in earlier:
        if s > value:
            value = s
    return value, rule


def _tower_preview(samples: List[Ordinal]) -> bool:
    """Cheap filter for the in-flight tower check.

    A run heading straight for epsilon_0 keeps climbing in both value and
    height with every sample.  Only that sustained shape justifies paying
    for a mid-run classification; anything else waits for the final
    inference over the full run, which stays authoritative.
    """
    last = samples[-4:]
    return _strictly_increasing(last) and all(
        cnf_height(a) < cnf_height(b) for a, b in zip(last, last[1:])
    )


def _increasing_tail(samples: List[Ordinal]) -> List[Ordinal]:
    i = len(samples) - 1
    while i > 0 and samples[i - 1] < samples[i]:
        i -= 1
    return samples[i:]


def _infer_increasing(run: List[Ordinal], trace) -> Tuple[Ordinal, LubInference]:
    """Infer the lub of a strictly increasing run, retrying on suffixes.

    A run whose early entries come from seed stages can hide the trend
    (e.g. [w, w*2, w*2+1, w*2+2, ...] has no shared literal prefix, yet
    its tail peels to w*2 + k).  Dropping leading entries is sound: the
    run is strictly increasing, so any trailing window's lub dominates
    everything dropped.  NotRepresentable propagates immediately.
    """
    for start in range(len(run) - 2):
        try:
            return _lub_of_increasing(run[start:], trace)
        except NoPatternError:
            continue
    raise NoPatternError("samples match no growth rule", trace)


def _lub_of_increasing(run: List[Ordinal], trace) -> Tuple[Ordinal, LubInference]:
    # run: >= 3 strictly increasing nonzero ordinals.

    # PREFIX_PEEL.  The shared prefix must be literal (exponent and
    # coefficient alike); remainders are again strictly increasing.
    prefix = _common_term_prefix(run)
    if prefix:
        remainders = [_ord(s.terms[len(prefix):]) for s in run]
        if remainders and remainders[0].is_zero:
            remainders = remainders[1:]
        if len(remainders) >= 3:
            try:
                sub, _ = _infer_increasing(remainders, trace)
            except NoPatternError:
                sub = None
            if sub is not None:
                return add(_ord(prefix), sub), LubInference.PREFIX_PEEL

    # EXPONENT_GROWTH.
    exps = [s.terms[0][0] for s in run]
    if _strictly_increasing(exps):
        cleaned = exps[1:] if exps[0].is_zero else exps
        if len(cleaned) >= 3:
            try:
                sub, _ = _infer_increasing(cleaned, trace)
            except NoPatternError:
                sub = None
            if sub is not None:
                return omega_power(sub), LubInference.EXPONENT_GROWTH

    # COEFFICIENT_GROWTH.
    first_exp = run[0].terms[0][0]
    if all(s.terms[0][0] == first_exp for s in run):
        coeffs = [s.terms[0][1] for s in run]
        if all(a < b for a, b in zip(coeffs, coeffs[1:])):
            return omega_power(successor(first_exp)), LubInference.COEFFICIENT_GROWTH

    # TOWER_GROWTH.
    heights = [cnf_height(s) for s in run]
    if all(a < b for a, b in zip(heights, heights[1:])):
        raise NotRepresentable(
            "samples climb a w-tower; the supremum is not below epsilon_0", trace
        )

    raise NoPatternError("samples match no growth rule", trace)


def _common_term_prefix(run: List[Ordinal]):
    shortest = min(len(s.terms) for s in run)
    prefix = []
    for i in range(shortest):
        term = run[0].terms[i]
        if all(s.terms[i] == term for s in run[1:]):
            prefix.append(term)
        else:
            break
    # A prefix equal to the whole of the largest sample would leave that
    # remainder empty in a strictly increasing run only for the smallest
    # element, which is handled by the caller stripping one leading zero.
    return tuple(prefix)


def _strictly_increasing(values: List[Ordinal]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def sample_and_infer(
    eval_at: Callable[[Ordinal], Ordinal],
    lam: Ordinal,
    budget: EvalBudget,
) -> Ordinal:
    """Supremum of eval_at over all points below the limit lam.

    Samples eval_at(0), eval_at(1), then eval_at(lam[k]) for
    k < budget.sup_samples.  Two tolerances keep hard cases useful:

      * if a later sample exceeds the budget, the prefix gathered so far
        (at least 3 values) is still inferred from, since further samples
        only refine an already visible trend;
      * once the two seed probes have at least four fundamental-sequence
        values behind them, a check runs after each new sample that only
        acts when it proves the sup escapes epsilon_0, cutting off ever
        larger towers early.  Checking sooner would mistake a benign
        height climb for a tower: the probes 0 and 1 sit far below any
        infinite sample, and the first fundamental-sequence values of a
        nested limit climb once or twice before their height flattens.
        A genuine tower keeps climbing, so waiting costs one sample.
        Successful value inferences always use the full run.

    NotRepresentable from a sample itself is final: the sampled function
    is weakly increasing here, so any sample at or above epsilon_0 pins
    the supremum there too.
    """
    gammas = [ZERO, ONE]
    gammas.extend(fundamental_sequence(lam, k) for k in range(budget.sup_samples))
    samples: List[Ordinal] = []
    for g in gammas:
        try:
            samples.append(eval_at(g))
        except BudgetExceeded:
            if len(samples) >= 3:
                break
            raise
        if len(samples) >= 6 and _tower_preview(samples):
            try:
                classify_lub(samples)
            except NoPatternError:
                pass
            except NotRepresentable:
                raise
    try:
        return infer_lub(samples)
    except NoPatternError as err:
        rendered = ", ".join(str(s) for s in samples)
        raise BudgetExceeded(
            f"no growth rule matched after {len(samples)} samples: [{rendered}]",
            samples,
        ) from err
