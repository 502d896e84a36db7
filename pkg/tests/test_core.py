"""Field arithmetic and sparse chain operations."""

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from perscoh import Field, chain_axpy, chain_eq_up_to_scalar, chain_low, field_inv
from perscoh.core import (chain_from_dict, chain_scale, op_count,
                          reset_op_count)


class TestField:
    def test_composite_modulus_rejected(self):
        for bad in (-3, 0, 1, 4, 9, 15, 91, 46349 * 46351):
            with pytest.raises(ValueError):
                Field(bad)

    def test_primes_accepted(self):
        for p in (2, 3, 11, 101, 46337, 2**31 - 1):
            assert Field(p).p == p

    def test_oversized_modulus_rejected(self):
        with pytest.raises(ValueError):
            Field(2**31 + 11)

    def test_normalize_and_neg(self):
        f = Field(11)
        assert f.normalize(-1) == 10
        assert f.normalize(22) == 0
        assert f.neg(1) == 10
        assert f.neg(0) == 0

    def test_equality(self):
        assert Field(11) == Field(11)
        assert Field(11) != Field(2)


class TestFieldInv:
    def test_examples(self):
        assert field_inv(1, 2) == 1
        assert field_inv(3, 11) == 4
        assert field_inv(10, 11) == 10

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            field_inv(0, 7)
        with pytest.raises(ValueError):
            Field(7).inv(14)

    @given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(1, 200))
    def test_involution_and_product(self, p, a):
        assume(a % p != 0)
        inv = field_inv(a, p)
        assert (a * inv) % p == 1
        assert field_inv(inv, p) == a % p


def _chain_cases():
    @st.composite
    def case(draw):
        p = draw(st.sampled_from((2, 3, 11)))
        def chain():
            d = draw(st.dictionaries(st.integers(1, 9), st.integers(1, p - 1),
                                     max_size=6))
            return sorted(d.items())
        return p, draw(st.integers(0, p - 1)), chain(), chain()
    return case()


class TestChainAxpy:
    def test_self_cancellation_over_gf2(self):
        assert chain_axpy(1, [(3, 1)], [(3, 1)], 2) == []

    def test_minus_one_cancels(self):
        x = [(1, 1), (2, 10)]
        assert chain_axpy(10, x, list(x), 11) == []

    def test_disjoint_supports_merge(self):
        assert chain_axpy(1, [(1, 1)], [(2, 10)], 11) == [(1, 1), (2, 10)]

    def test_partial_cancellation(self):
        x = [(1, 1), (2, 5)]
        y = [(2, 6), (3, 1)]
        assert chain_axpy(1, x, y, 11) == [(1, 1), (3, 1)]

    def test_counts_one_op_per_addend_term(self):
        reset_op_count()
        chain_axpy(1, [(1, 1), (4, 2), (7, 3)], [(2, 1)], 11)
        assert op_count() == 3
        chain_axpy(0, [(1, 1), (5, 3)], [], 7)
        assert op_count() == 5

    def test_inputs_unchanged(self):
        x = [(1, 1)]
        y = [(1, 10)]
        chain_axpy(1, x, y, 11)
        assert x == [(1, 1)] and y == [(1, 10)]

    @given(_chain_cases())
    def test_matches_dense_reference(self, case):
        p, c, x, y = case
        ref = {i: v for i, v in y}
        for i, v in x:
            ref[i] = (ref.get(i, 0) + c * v) % p
        expected = sorted((i, v % p) for i, v in ref.items() if v % p)
        assert chain_axpy(c, x, y, p) == expected

    @given(_chain_cases(), st.integers(0, 10))
    def test_repeated_addition_combines_scalars(self, case, c2):
        p, c1, x, y = case
        c2 %= p
        combined = chain_axpy((c1 + c2) % p, x, y, p)
        stepwise = chain_axpy(c2, x, chain_axpy(c1, x, y, p), p)
        assert combined == stepwise


class TestChainHelpers:
    def test_chain_low(self):
        assert chain_low([]) is None
        assert chain_low([(1, 1), (2, 10)]) == 2
        assert chain_low([(3, 1), (4, 10)]) == 4

    def test_chain_scale(self):
        assert chain_scale(0, [(1, 1)], 11) == []
        assert chain_scale(1, [(1, 1)], 11) == [(1, 1)]
        assert chain_scale(3, [(1, 4)], 11) == [(1, 1)]

    def test_chain_from_dict(self):
        assert chain_from_dict({3: 12, 1: 5, 2: 11}, 11) == [(1, 5), (3, 1)]

    def test_eq_up_to_scalar(self):
        assert chain_eq_up_to_scalar([], [], 11)
        assert not chain_eq_up_to_scalar([], [(1, 1)], 11)
        a = [(1, 1), (2, 10)]
        b = [(1, 2), (2, 9)]
        assert chain_eq_up_to_scalar(a, b, 11)
        assert not chain_eq_up_to_scalar(a, [(1, 2), (2, 2)], 11)
        assert not chain_eq_up_to_scalar(a, [(1, 2), (3, 9)], 11)

    @given(_chain_cases())
    def test_eq_up_to_scalar_accepts_all_multiples(self, case):
        p, c, x, _ = case
        assume(x and c % p != 0)
        assert chain_eq_up_to_scalar(x, chain_scale(c, x, p), p)
