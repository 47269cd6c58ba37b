"""Deterministic corpus builders shared by the test modules.

Everything here is seeded: the same call always yields the same list,
so failures replay and report bytes never drift.
"""
import random
from typing import List, Tuple

from transfinite.arithmetic import add, mul
from transfinite.ordinal import OMEGA, ZERO, Ordinal, compare, from_natural

W = OMEGA


def nat(k: int) -> Ordinal:
    return from_natural(k)


def w_times_plus(a: int, b: int) -> Ordinal:
    """The ordinal w*a + b; covers everything below w^2."""
    return add(mul(W, nat(a)), nat(b))


def rand_below_w_w(rng: random.Random, max_exp: int = 5,
                   max_terms: int = 3, max_coeff: int = 4) -> Ordinal:
    """Random ordinal below w^w: all exponents are naturals."""
    count = rng.randint(0, max_terms)
    exps = rng.sample(range(max_exp + 1), min(count, max_exp + 1))
    terms = [(nat(e), rng.randint(1, max_coeff)) for e in sorted(exps, reverse=True)]
    return Ordinal(terms)


def rand_below_w_w2(rng: random.Random, max_terms: int = 2,
                    max_coeff: int = 3) -> Ordinal:
    """Random ordinal below w^(w^2): exponents have the shape w*a + b."""
    count = rng.randint(0, max_terms)
    pairs = set()
    while len(pairs) < count:
        pairs.add((rng.randint(0, 2), rng.randint(0, 2)))
    terms = [
        (w_times_plus(a, b), rng.randint(1, max_coeff))
        for a, b in sorted(pairs, reverse=True)
    ]
    return Ordinal(terms)


def pair_corpus_below_w_w2(count: int = 1000, seed: int = 20260818) -> List[Tuple[Ordinal, Ordinal]]:
    """The fixed operand-pair corpus used by the agreement suites."""
    rng = random.Random(seed)
    return [(rand_below_w_w2(rng), rand_below_w_w2(rng)) for _ in range(count)]


def ordinal_corpus_below_w_w(count: int = 500, seed: int = 977) -> List[Ordinal]:
    rng = random.Random(seed)
    seen = []
    have = set()
    while len(seen) < count:
        x = rand_below_w_w(rng)
        if x not in have:
            have.add(x)
            seen.append(x)
    return seen


def rand_tree(rng: random.Random, depth: int) -> Ordinal:
    """Random CNF tree with nesting depth up to `depth`."""
    if depth == 0 or rng.random() < 0.3:
        return nat(rng.randint(0, 9))
    count = rng.randint(1, 3)
    exps = []
    while len(exps) < count:
        e = rand_tree(rng, depth - 1)
        if all(compare(e, f) != 0 for f in exps):
            exps.append(e)
    exps.sort(reverse=True)
    return Ordinal([(e, rng.randint(1, 9)) for e in exps])


def tree_corpus(count: int = 10000, depth: int = 3, seed: int = 4242) -> List[Ordinal]:
    rng = random.Random(seed)
    return [rand_tree(rng, depth) for _ in range(count)]
