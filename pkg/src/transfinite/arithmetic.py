"""Closed-form ordinal addition, multiplication and exponentiation.

These work directly on Cantor normal forms and never unfold a transfinite
recursion; the definitional evaluator in `reference` exists as an
independent second route for exactly these operations.

Convention for a zero base: 0^0 = 1, 0^b = 0 for successor b, and
0^b = 1 for limit b.  The limit case follows from taking suprema of the
successor case values together with 0^0; it is deliberately kept that way
here and mirrored by the definitional evaluator.
"""

from __future__ import annotations

from typing import Optional

from .budget import EvalBudget
from .errors import BudgetExceeded
from .ordinal import (
    ZERO,
    ONE,
    Natural,
    Ordinal,
    _ord,
    compare,
    is_additive_principal,
    is_limit,
    limit_and_finite_parts,
    omega_power,
)


def add(x: Ordinal, y: Ordinal) -> Ordinal:
    """x + y.  The leading term of y absorbs every smaller term of x."""
    if not y:
        return x
    if not x:
        return y
    d = y.terms[0][0]
    keep = []
    merged = None
    for e, c in x.terms:
        cmp = compare(e, d)
        if cmp > 0:
            keep.append((e, c))
        elif cmp == 0:
            merged = c
            break
        else:
            break
    if merged is not None:
        e0, c0 = y.terms[0]
        return _ord(tuple(keep) + ((e0, merged + c0),) + y.terms[1:])
    return _ord(tuple(keep) + y.terms)


def mul(x: Ordinal, y: Ordinal) -> Ordinal:
    """x * y via left distribution over the normal form of y.

    For an infinite unit w^e of y the product collapses to w^(a1 + e)
    where a1 is the degree of x; the finite part of y multiplies the
    leading coefficient only, keeping the lower terms of x.
    """
    if not x or not y:
        return ZERO
    a1, c1 = x.terms[0]
    out = []
    for e, c in y.terms:
        if e.is_zero:
            out.append((a1, c1 * c))
            out.extend(x.terms[1:])
        else:
            out.append((add(a1, e), c))
    return _ord(out)


def pow_(x: Ordinal, y: Ordinal, budget: Optional[EvalBudget] = None) -> Ordinal:
    """x ** y in closed form.

    The optional budget caps the size of natural powers and of repeated
    squaring; without one the computation is unbounded.
    """
    if not y:
        return ONE
    if not x:
        if is_limit(y):
            return ONE
        return ZERO
    if x == ONE:
        return ONE
    lam, m = limit_and_finite_parts(y)
    if x.is_natural:
        n = x.natural_value()
        tail_nat = _nat_pow(n, m, budget)
        if not lam:
            return _ord(((ZERO, tail_nat),)) if tail_nat else ZERO
        # n^(w^e) = w^(w^e') with 1 + e' = e, so n^lam = w^delta below.
        delta = _ord(tuple((_strip_leading_one(e), c) for e, c in lam.terms))
        return _ord(((delta, tail_nat),))
    head = omega_power(mul(x.terms[0][0], lam)) if lam else ONE
    return mul(head, _pow_finite(x, m, budget))


def _strip_leading_one(e: Ordinal) -> Ordinal:
    # The unique e' with 1 + e' = e, for e >= 1.  Infinite e absorb the 1.
    if e.is_natural:
        return _ord(((ZERO, e.natural_value() - 1),)) if e.natural_value() > 1 else ZERO
    return e


def _nat_pow(n: Natural, m: Natural, budget: Optional[EvalBudget]) -> Natural:
    if budget is not None and n > 1:
        # n**m has about m * bits(n) bits; refuse before materializing.
        if m * n.bit_length() > 2 * budget.max_bits:
            raise BudgetExceeded(f"{n}^{m} exceeds the bit budget")
    result = n**m
    if budget is not None and result.bit_length() > budget.max_bits:
        raise BudgetExceeded(f"{n}^{m} exceeds the bit budget")
    return result


def _pow_finite(x: Ordinal, m: Natural, budget: Optional[EvalBudget]) -> Ordinal:
    """x ** m for natural m by repeated squaring (ordinal mul is associative)."""
    if m == 0:
        return ONE
    if is_additive_principal(x):
        # (w^a)^m = w^(a*m); a*m is ordinal mul with a natural on the right.
        nat = _ord(((ZERO, m),))
        return omega_power(mul(x.terms[0][0], nat))
    if budget is not None and m > budget.max_bits:
        # A non-principal base yields on the order of m terms.
        raise BudgetExceeded(f"finite power {m} is too large to expand")
    result = None
    base = x
    while True:
        if m & 1:
            result = base if result is None else mul(result, base)
        m >>= 1
        if not m:
            return result
        base = mul(base, base)
