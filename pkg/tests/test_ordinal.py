"""Core data type: canonical form, total order, structural helpers."""
import pytest
import hypothesis.strategies as st
from hypothesis import given

from conftest import ordinals
from support import W, nat, w_times_plus
from transfinite.arithmetic import add, mul, pow_
from transfinite.errors import OrdinalDomainError
from transfinite.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    cnf_height,
    coefficient_bits,
    compare,
    from_natural,
    fundamental_sequence,
    head_tail,
    is_additive_principal,
    is_limit,
    is_successor,
    limit_and_finite_parts,
    omega_power,
    predecessor,
    repeated_term_count,
    successor,
)


class TestConstruction:
    def test_zero_is_empty_sum(self):
        assert Ordinal().is_zero
        assert Ordinal() == ZERO
        assert not ZERO

    def test_rejects_zero_coefficient(self):
        with pytest.raises(OrdinalDomainError):
            Ordinal([(ZERO, 0)])

    def test_rejects_bool_coefficient(self):
        with pytest.raises(OrdinalDomainError):
            Ordinal([(ZERO, True)])

    def test_rejects_non_ordinal_exponent(self):
        with pytest.raises(OrdinalDomainError):
            Ordinal([(1, 1)])

    def test_rejects_unsorted_exponents(self):
        with pytest.raises(OrdinalDomainError):
            Ordinal([(ZERO, 1), (ONE, 1)])

    def test_rejects_repeated_exponents(self):
        with pytest.raises(OrdinalDomainError):
            Ordinal([(ONE, 1), (ONE, 2)])

    def test_from_natural_round_trip(self):
        for k in (0, 1, 2, 17, 10**6):
            x = from_natural(k)
            assert x.is_natural
            assert x.natural_value() == k

    def test_from_natural_rejects_negatives(self):
        with pytest.raises(OrdinalDomainError):
            from_natural(-1)

    def test_omega_is_not_natural(self):
        assert not OMEGA.is_natural
        with pytest.raises(OrdinalDomainError):
            OMEGA.natural_value()


class TestOrder:
    def test_ascending_chain(self):
        chain = [
            ZERO, ONE, nat(2), W, add(W, ONE), mul(W, nat(2)),
            pow_(W, nat(2)), pow_(W, W), omega_power(pow_(W, W)),
        ]
        for i, x in enumerate(chain):
            for j, y in enumerate(chain):
                assert compare(x, y) == (i > j) - (i < j)
                assert (x < y) == (i < j)
                assert (x == y) == (i == j)

    def test_coefficient_breaks_ties(self):
        assert mul(W, nat(2)) < mul(W, nat(3))

    def test_tail_breaks_ties(self):
        assert add(W, ONE) < add(W, nat(2))
        assert mul(W, nat(2)) > add(W, nat(50))

    @given(ordinals(), ordinals())
    def test_compare_is_antisymmetric(self, x, y):
        assert compare(x, y) == -compare(y, x)

    @given(ordinals(), ordinals(), ordinals())
    def test_compare_is_transitive(self, x, y, z):
        if x <= y and y <= z:
            assert x <= z

    @given(ordinals())
    def test_hash_consistent_with_eq(self, x):
        y = Ordinal(x.terms)
        assert x == y and hash(x) == hash(y)


class TestPredicates:
    def test_additive_principal_fixtures(self):
        for x in (ONE, W, pow_(W, nat(2)), pow_(W, W), omega_power(add(W, ONE))):
            assert is_additive_principal(x)
        for x in (ZERO, nat(2), add(W, ONE), mul(W, nat(2)), add(pow_(W, W), W)):
            assert not is_additive_principal(x)

    @given(ordinals())
    def test_additive_principal_is_single_unit_term(self, x):
        expected = len(x.terms) == 1 and x.terms[0][1] == 1
        assert is_additive_principal(x) == expected

    def test_successor_and_limit_partition(self):
        assert not is_successor(ZERO) and not is_limit(ZERO)
        for x in (ONE, nat(7), add(W, ONE), add(pow_(W, W), nat(3))):
            assert is_successor(x) and not is_limit(x)
        for x in (W, mul(W, nat(2)), pow_(W, W), add(pow_(W, nat(2)), W)):
            assert is_limit(x) and not is_successor(x)

    @given(ordinals())
    def test_successor_predecessor_invert(self, x):
        assert predecessor(successor(x)) == x
        assert successor(x) > x

    def test_predecessor_of_limit_rejected(self):
        with pytest.raises(OrdinalDomainError):
            predecessor(W)
        with pytest.raises(OrdinalDomainError):
            predecessor(ZERO)


class TestStructure:
    def test_head_tail(self):
        x = add(add(pow_(W, nat(2)), mul(W, nat(3))), nat(4))
        head, tail = head_tail(x)
        assert head == pow_(W, nat(2))
        assert tail == add(mul(W, nat(3)), nat(4))
        assert add(head, tail) == x

    def test_repeated_term_count(self):
        assert repeated_term_count(mul(W, nat(5))) == 5
        assert repeated_term_count(nat(3)) == 3

    def test_limit_and_finite_parts(self):
        assert limit_and_finite_parts(nat(5)) == (ZERO, 5)
        assert limit_and_finite_parts(W) == (W, 0)
        lam, m = limit_and_finite_parts(add(mul(W, nat(2)), nat(3)))
        assert lam == mul(W, nat(2)) and m == 3

    def test_cnf_height_grows_with_nesting(self):
        assert cnf_height(ZERO) == 0
        assert cnf_height(ONE) == 1
        assert cnf_height(W) == 2
        assert cnf_height(pow_(W, W)) == 3
        assert cnf_height(omega_power(pow_(W, W))) == 4
        assert cnf_height(pow_(W, nat(2))) == cnf_height(mul(W, nat(9)))

    def test_coefficient_bits_counts_all_levels(self):
        small = coefficient_bits(W)
        big = coefficient_bits(mul(W, nat(2 ** 40)))
        assert big > small + 30

    def test_omega_power(self):
        assert omega_power(ZERO) == ONE
        assert omega_power(ONE) == W
        assert omega_power(W) == pow_(W, W)


class TestFundamentalSequence:
    def test_below_omega_squared(self):
        # w[k] = k
        assert [fundamental_sequence(W, k) for k in range(4)] == [nat(k) for k in range(4)]
        # (w*2)[k] = w + k
        assert fundamental_sequence(mul(W, nat(2)), 3) == add(W, nat(3))

    def test_successor_exponent(self):
        # (w^2)[k] = w*k
        assert fundamental_sequence(pow_(W, nat(2)), 5) == mul(W, nat(5))
        # (w^(w+1))[k] = w^w * k
        assert fundamental_sequence(omega_power(add(W, ONE)), 2) == mul(pow_(W, W), nat(2))

    def test_limit_exponent(self):
        # (w^w)[k] = w^k
        assert fundamental_sequence(pow_(W, W), 4) == pow_(W, nat(4))

    def test_composite_limit(self):
        # (w^2 + w)[k] = w^2 + k
        x = add(pow_(W, nat(2)), W)
        assert fundamental_sequence(x, 3) == add(pow_(W, nat(2)), nat(3))

    def test_rejects_non_limits(self):
        with pytest.raises(OrdinalDomainError):
            fundamental_sequence(ZERO, 1)
        with pytest.raises(OrdinalDomainError):
            fundamental_sequence(add(W, ONE), 1)

    @given(ordinals(), st.integers(min_value=0, max_value=6))
    def test_sequence_climbs_strictly_below_its_limit(self, x, k):
        if is_limit(x):
            a = fundamental_sequence(x, k)
            b = fundamental_sequence(x, k + 1)
            assert a < b < x


class TestRendering:
    def test_text_fixtures(self):
        cases = [
            (ZERO, "0"),
            (ONE, "1"),
            (nat(42), "42"),
            (W, "w"),
            (mul(W, nat(3)), "w*3"),
            (add(W, nat(3)), "w + 3"),
            (pow_(W, nat(2)), "w^2"),
            (add(add(mul(pow_(W, W), nat(2)), W), nat(3)), "w^w*2 + w + 3"),
            (omega_power(add(W, ONE)), "w^(w + 1)"),
            (mul(omega_power(mul(W, nat(2))), nat(5)), "w^(w*2)*5"),
        ]
        for value, text in cases:
            assert str(value) == text

    @given(ordinals())
    def test_repr_shows_the_rendering(self, x):
        assert str(x) in repr(x)
