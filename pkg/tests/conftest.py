import hypothesis.strategies as st
from hypothesis import settings

from transfinite.ordinal import Ordinal, from_natural

settings.register_profile("suite", deadline=None, max_examples=100)
settings.load_profile("suite")


def _build(exp_coeffs):
    # Deduplicate exponents, then sort them into canonical order.
    best = {}
    for exp, coeff in exp_coeffs:
        best[exp] = coeff
    terms = sorted(best.items(), key=lambda t: t[0], reverse=True)
    return Ordinal(terms)


def ordinals(depth: int = 3):
    """Strategy for canonical ordinals with nesting depth <= depth."""
    base = st.integers(min_value=0, max_value=9).map(from_natural)
    coeff = st.integers(min_value=1, max_value=9)

    def extend(children):
        return st.lists(st.tuples(children, coeff), min_size=1, max_size=3).map(_build)

    return st.recursive(base, extend, max_leaves=depth * 3)
