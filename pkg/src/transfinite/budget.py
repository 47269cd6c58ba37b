"""Evaluation budgets.

Every potentially expensive evaluation takes an EvalBudget.  The budget is
plain immutable data; the evaluators themselves keep the counters.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_BITS = "TRANSFINITE_BUDGET_BITS"

DEFAULT_MAX_DEPTH = 256
DEFAULT_MAX_BITS = 16384
DEFAULT_SUP_SAMPLES = 8

# An evaluator may take many cheap steps at the same recursion depth
# (coefficient folds, tower iterations), so the depth cap alone cannot
# bound total work.  Each unit of max_depth buys this many work steps.
WORK_PER_DEPTH = 256


@dataclass(frozen=True)
class EvalBudget:
    """Caps for one evaluation.

    max_depth    recursion depth cap; also bounds total expansion work
                 at max_depth * WORK_PER_DEPTH steps
    max_bits     bit-length cap for any natural number produced,
                 including coefficients inside a normal form
    sup_samples  how far along a fundamental sequence a supremum is sampled
    """

    max_depth: int = DEFAULT_MAX_DEPTH
    max_bits: int = DEFAULT_MAX_BITS
    sup_samples: int = DEFAULT_SUP_SAMPLES

    def __post_init__(self):
        for name in ("max_depth", "max_bits", "sup_samples"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def max_work(self) -> int:
        return self.max_depth * WORK_PER_DEPTH

    @classmethod
    def from_env(cls, **overrides) -> "EvalBudget":
        """Budget with defaults, the ENV_BITS variable, then explicit overrides.

        Used by the command line tool; library callers normally construct
        EvalBudget directly.
        """
        raw = os.environ.get(ENV_BITS)
        if raw is not None and overrides.get("max_bits") is None:
            try:
                overrides["max_bits"] = int(raw)
            except ValueError:
                raise ValueError(f"{ENV_BITS} must be an integer, got {raw!r}")
        return cls(**{k: v for k, v in overrides.items() if v is not None})
