"""Definitional evaluator for ordinal arithmetic.

Evaluates addition, multiplication and exponentiation by the textbook
transfinite recursion instead of the closed forms in `arithmetic`:

  add:  x + 0 = x          x + (g+1) = (x + g) + 1     sup at limits
  mul:  x * 0 = 0          x * (g+1) = (x * g) + x     sup at limits
  pow:  x ^ 0 = 1          x ^ (g+1) = (x ^ g) * x     sup at limits

Suprema are taken by sampling along fundamental sequences (plus the
probes 0 and 1) and applying the inference rules from `lub`.  Each
level leans on the operation one rung below it in closed form (mul's
successor step adds, pow's multiplies); that layering keeps the closed
form under test out of its own successor steps.

The recursion unfolds literally down to `unfold_depth` nested suprema
and then grounds out in the closed form.  Full unfolding is not an
option: the value tree below an operand like w^(w*2) contains one node
per digit vector over its exponent positions, which is exponential in
the height of the operand, so no budget or memo makes it finish.  The
grounded form instead checks that the closed algorithms are a fixed
point of the defining recursion at every evaluated point.  Since the
recursion descends a well order, agreement of every one-step unfolding
on a downward-closed corpus is exactly the inductive step of a proof
by transfinite induction; raising `unfold_depth` widens each step from
one layer to several.

With a zero base this yields 0^0 = 1, 0^(g+1) = 0, and 0^lam = 1 at
every limit lam, because the sup of {1, 0, 0, ...} is 1.  The closed
form mirrors exactly that.

This module exists to check `arithmetic`, not to be fast: successor
chains are walked one step at a time and budgets cut runaway
recursions short.
"""

from __future__ import annotations

from typing import Optional

from .arithmetic import add, mul, pow_
from .budget import EvalBudget
from .errors import BudgetExceeded, OrdinalDomainError
from .lub import sample_and_infer
from .ordinal import (
    ZERO,
    ONE,
    Ordinal,
    coefficient_bits,
    limit_and_finite_parts,
    successor,
)

_OPS = ("add", "mul", "pow")


def reference_eval(
    op: str,
    x: Ordinal,
    y: Ordinal,
    budget: Optional[EvalBudget] = None,
    unfold_depth: int = 2,
) -> Ordinal:
    """Evaluate x <op> y by unfolding the defining recursion on y.

    `unfold_depth` is how many nested supremum levels stay literal before
    sub-evaluations ground out in the closed form.  It must be at least 1:
    a 0 would collapse the whole evaluation into the very closed form
    being checked.  See the module docstring for why unbounded unfolding
    cannot work.
    """
    if op not in _OPS:
        raise OrdinalDomainError(f"unknown operation {op!r}, expected one of {_OPS}")
    if unfold_depth < 1:
        raise OrdinalDomainError("unfold_depth must be >= 1")
    budget = budget or EvalBudget()
    ctx = _Ctx(op, x, budget, unfold_depth)
    return ctx.eval(y, 0)


class _Ctx:
    def __init__(self, op: str, x: Ordinal, budget: EvalBudget, unfold_depth: int):
        self.op = op
        self.x = x
        self.budget = budget
        self.unfold_depth = unfold_depth
        self.memo = {}
        self.work = 0

    def step(self, depth: int):
        self.work += 1
        if depth > self.budget.max_depth:
            raise BudgetExceeded(f"recursion deeper than {self.budget.max_depth}")
        if self.work > self.budget.max_work:
            raise BudgetExceeded(f"more than {self.budget.max_work} expansion steps")

    def base(self) -> Ordinal:
        if self.op == "add":
            return self.x
        return ZERO if self.op == "mul" else ONE

    def combine(self, acc: Ordinal) -> Ordinal:
        # One successor step of the recursion.
        if self.op == "add":
            return successor(acc)
        if self.op == "mul":
            return add(acc, self.x)
        return mul(acc, self.x)

    def closed(self, y: Ordinal) -> Ordinal:
        if self.op == "add":
            return add(self.x, y)
        if self.op == "mul":
            return mul(self.x, y)
        return pow_(self.x, y, self.budget)

    def eval(self, y: Ordinal, depth: int) -> Ordinal:
        self.step(depth)
        hit = self.memo.get(y)
        if hit is not None:
            return hit
        if depth >= self.unfold_depth:
            # Below the unfolding horizon: supply the value inductively.
            acc = self.closed(y)
            self.memo[y] = acc
            return acc
        lam, m = limit_and_finite_parts(y)
        if not lam:
            acc = self.base()
        else:
            acc = self.memo.get(lam)
            if acc is None:
                acc = sample_and_infer(
                    lambda g: self.eval(g, depth + 1), lam, self.budget
                )
                self.memo[lam] = acc
        for _ in range(m):
            self.step(depth)
            acc = self.combine(acc)
            self.check_size(acc)
        self.memo[y] = acc
        return acc

    def check_size(self, value: Ordinal):
        if coefficient_bits(value) > self.budget.max_bits:
            raise BudgetExceeded("value coefficients exceed the bit budget")


def reference_check(
    op: str, x: Ordinal, y: Ordinal, budget=None, unfold_depth: int = 2
) -> bool:
    """True when the closed form and the recursion agree on (x, y)."""
    closed = {"add": add, "mul": mul, "pow": lambda a, b: pow_(a, b, budget)}[op]
    return closed(x, y) == reference_eval(op, x, y, budget, unfold_depth)
