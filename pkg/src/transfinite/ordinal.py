"""Cantor normal form ordinals below epsilon_0.

An ordinal is a finite sum  w^e1*c1 + ... + w^ek*ck  with ordinal exponents
e1 > e2 > ... > ek and natural coefficients ci >= 1.  The empty sum is 0.
The representation is unique, so structural equality is ordinal equality,
and the usual ordinal order is the lexicographic order on term lists.

Values are immutable and hashable.  Naturals are plain Python ints, which
are already arbitrary precision.
"""

from __future__ import annotations

from typing import Iterable, Tuple

from .errors import OrdinalDomainError

Natural = int

TermList = Tuple[Tuple["Ordinal", int], ...]


class Ordinal:
    """An ordinal below epsilon_0 in Cantor normal form."""

    __slots__ = ("_terms", "_hash", "_height")

    def __init__(self, terms: Iterable[Tuple["Ordinal", int]] = ()):
        terms = tuple(terms)
        prev = None
        for exp, coeff in terms:
            if not isinstance(exp, Ordinal):
                raise OrdinalDomainError(f"exponent must be an Ordinal, got {exp!r}")
            if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff < 1:
                raise OrdinalDomainError(f"coefficient must be a natural >= 1, got {coeff!r}")
            if prev is not None and compare(prev, exp) <= 0:
                raise OrdinalDomainError("exponents must be strictly decreasing")
            prev = exp
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_height", None)

    @property
    def terms(self) -> TermList:
        return self._terms

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_natural(self) -> bool:
        """True for 0 and for single-term w^0*c, i.e. the finite ordinals."""
        if not self._terms:
            return True
        return len(self._terms) == 1 and self._terms[0][0].is_zero

    def natural_value(self) -> Natural:
        if not self._terms:
            return 0
        if self.is_natural:
            return self._terms[0][1]
        raise OrdinalDomainError(f"{self} is not a natural number")

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ordering ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other) -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) < 0

    def __le__(self, other) -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) <= 0

    def __gt__(self, other) -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) > 0

    def __ge__(self, other) -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) >= 0

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self._terms)
            object.__setattr__(self, "_hash", h)
        return h

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        # Canonical text form, round-trippable through notation.parse_ordinal:
        # terms joined by " + ", each "w^E*C" with the shorthands
        # w^0*C -> "C", w^1*C -> "w*C", and "*1" dropped.  A composite
        # exponent (anything other than a natural or w itself) gets
        # parentheses, e.g. "w^(w + 1)".
        if not self._terms:
            return "0"
        out = []
        for exp, coeff in self._terms:
            if exp.is_zero:
                out.append(str(coeff))
                continue
            if exp == ONE:
                base = "w"
            elif exp == OMEGA:
                base = "w^w"
            elif exp.is_natural:
                base = f"w^{exp.natural_value()}"
            else:
                base = f"w^({exp})"
            out.append(base if coeff == 1 else f"{base}*{coeff}")
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"<Ordinal {self}>"


def compare(x: Ordinal, y: Ordinal) -> int:
    """Three-way comparison: -1, 0, or 1.

    CNF order is lexicographic on (exponent, coefficient) term lists, with
    a missing term counting as smaller.
    """
    for (e1, c1), (e2, c2) in zip(x.terms, y.terms):
        c = compare(e1, e2)
        if c != 0:
            return c
        if c1 != c2:
            return -1 if c1 < c2 else 1
    n1, n2 = len(x.terms), len(y.terms)
    if n1 == n2:
        return 0
    return -1 if n1 < n2 else 1


def _ord(terms) -> Ordinal:
    # Internal fast path: caller guarantees a valid term list.
    o = Ordinal.__new__(Ordinal)
    object.__setattr__(o, "_terms", tuple(terms))
    object.__setattr__(o, "_hash", None)
    object.__setattr__(o, "_height", None)
    return o


ZERO = Ordinal()
ONE = _ord(((ZERO, 1),))
OMEGA = _ord(((ONE, 1),))


def from_natural(n: Natural) -> Ordinal:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise OrdinalDomainError(f"expected a natural number, got {n!r}")
    if n == 0:
        return ZERO
    return _ord(((ZERO, n),))


def omega_power(exp: Ordinal) -> Ordinal:
    """w**exp as a single CNF term."""
    return _ord(((exp, 1),))


def is_additive_principal(x: Ordinal) -> bool:
    """True iff x = w^e for some e, i.e. exactly one unit term.

    These are the ordinals that absorb any smaller summand on the left.
    Note 1 = w^0 qualifies but 2 = w^0*2 does not.
    """
    return len(x.terms) == 1 and x.terms[0][1] == 1


def repeated_term_count(x: Ordinal) -> Natural:
    """Number of unit terms when coefficients are expanded to repetition."""
    return sum(c for _, c in x.terms)


def head_tail(x: Ordinal) -> Tuple[Ordinal, Ordinal]:
    """Split off the leading unit term: x = head + tail with head = w^e1.

    Requires at least two unit terms; for 0 or an additive principal the
    split is undefined.
    """
    if x.is_zero or is_additive_principal(x):
        raise OrdinalDomainError(f"head/tail split needs >= 2 unit terms, got {x}")
    (e, c), rest = x.terms[0], x.terms[1:]
    head = omega_power(e)
    tail = _ord(((e, c - 1),) + rest) if c > 1 else _ord(rest)
    return head, tail


def is_successor(x: Ordinal) -> bool:
    return bool(x.terms) and x.terms[-1][0].is_zero


def is_limit(x: Ordinal) -> bool:
    return bool(x.terms) and not x.terms[-1][0].is_zero


def successor(x: Ordinal) -> Ordinal:
    terms = x.terms
    if terms and terms[-1][0].is_zero:
        e, c = terms[-1]
        return _ord(terms[:-1] + ((e, c + 1),))
    return _ord(terms + ((ZERO, 1),))


def predecessor(x: Ordinal) -> Ordinal:
    if not is_successor(x):
        raise OrdinalDomainError(f"{x} has no predecessor")
    e, c = x.terms[-1]
    if c > 1:
        return _ord(x.terms[:-1] + ((e, c - 1),))
    return _ord(x.terms[:-1])


def limit_and_finite_parts(x: Ordinal) -> Tuple[Ordinal, Natural]:
    """Write x = L + m with L zero or a limit and m a natural."""
    if is_successor(x):
        return _ord(x.terms[:-1]), x.terms[-1][1]
    return x, 0


def fundamental_sequence(lam: Ordinal, k: Natural) -> Ordinal:
    """k-th member of the canonical increasing sequence converging to lam.

    For the last CNF term w^g of lam:
      g = g' + 1:   lam[k] = rest + w^g' * k
      g a limit:    lam[k] = rest + w^(g[k])
    where rest is lam with one unit of its last term removed.  Examples:
    w[3] = 3, (w^2)[3] = w*3, (w^w)[2] = w^2.
    """
    if not is_limit(lam):
        raise OrdinalDomainError(f"{lam} is not a limit ordinal")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise OrdinalDomainError(f"sequence index must be a natural, got {k!r}")
    (g, c), lead = lam.terms[-1], lam.terms[:-1]
    rest = lead + ((g, c - 1),) if c > 1 else lead
    if is_successor(g):
        gp = predecessor(g)
        if k == 0:
            return _ord(rest)
        return _ord(rest + ((gp, k),))
    return _ord(rest + ((fundamental_sequence(g, k), 1),))


def cnf_height(x: Ordinal) -> Natural:
    """Nesting depth of the normal form: 0 for 0, else 1 + max over exponents.

    Every ordinal below w^w has height <= 2, below w^w^w height <= 3, and
    so on; unbounded height along an increasing sequence forces the
    supremum up to epsilon_0.
    """
    h = x._height
    if h is None:
        h = 0 if not x.terms else 1 + max(cnf_height(e) for e, _ in x.terms)
        object.__setattr__(x, "_height", h)
    return h


def coefficient_bits(x: Ordinal) -> Natural:
    """Largest bit length among all coefficients anywhere in the form."""
    best = 0
    for e, c in x.terms:
        bits = c.bit_length()
        if bits > best:
            best = bits
        sub = coefficient_bits(e)
        if sub > best:
            best = sub
    return best
