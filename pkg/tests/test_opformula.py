import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmdpp.asm_side import gf_amt_enum, gf_extended_recursion, gf_mt_enum
from asmdpp.laurent import Ring, parse_text
from asmdpp.opformula import (
    CapacityError,
    DecorWeights,
    ShiftOperatorSum,
    expand_operator,
    gf_amt_closed,
    gf_generalized_closed,
    gf_mt_closed,
    prefactor,
    standard_weights,
)

increasing_rows = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(-2, 4), min_size=n, max_size=n, unique=True).map(sorted).map(tuple)
)
integer_rows = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(-2, 2), min_size=n, max_size=n).map(tuple)
)


def test_order_one():
    assert gf_amt_closed((1,)) == parse_text("u X1^2 + w X1 + v", 1)


def test_order_two_golden_sign_value():
    val = gf_amt_closed((1, 2)).substitute({"u": 1, "v": 1, "w": -1, "X1": 1, "X2": 1})
    assert val == 2


@given(increasing_rows)
def test_closed_matches_enumeration(k):
    assert gf_amt_closed(k) == gf_amt_enum(k)


@given(increasing_rows)
def test_mt_closed_matches_w0_sum(k):
    assert gf_mt_closed(k) == gf_mt_enum(k)


@given(increasing_rows)
def test_factorization_through_mt(k):
    ring = Ring(len(k))
    factor = ring.prod(ring.u * ring.x(i) + ring.v * ring.x(i, -1) + ring.w for i in range(1, len(k) + 1))
    assert gf_amt_closed(k) == factor * gf_mt_closed(k)


@given(integer_rows)
def test_closed_matches_recursion_with_empty_weight(k):
    ring = Ring(len(k) + 1)
    dw = DecorWeights(ring.u, ring.v, ring.w, ring.x(len(k) + 1))
    assert gf_amt_closed(k, dw, ring) == gf_extended_recursion(k, dw, ring)


def test_generalized_table_reduces_to_standard():
    ring = Ring(2)
    table = {(0, 1): ring.u, (1, 0): ring.v, (1, 1): ring.w}
    assert gf_generalized_closed((0, 2), table, ring) == gf_amt_closed((0, 2), ring=ring)


def test_operator_term_merging():
    ring = Ring(3)
    ops = expand_operator(3, standard_weights(ring), ring)
    assert isinstance(ops, ShiftOperatorSum)
    # 4^3 raw products, merged to shifts in a small box
    assert 0 < len(ops.terms) < 64
    assert ops.total_mass() == (ring.u + ring.v + ring.w) ** 3


def test_prefactor():
    ring = Ring(1)
    table = {(0, 1): ring.u, (1, 0): ring.v, (1, 1): ring.w, (0, 0): 2}
    assert prefactor(1, table, ring) == ring.u * ring.x(1) + ring.v * ring.x(1, -1) + ring.w + 2


def test_capacity_cap():
    with pytest.raises(CapacityError):
        gf_amt_closed(tuple(range(1, 7)))
    with pytest.raises(CapacityError):
        gf_amt_closed((1, 2, 3), max_n=2)


def test_mt_closed_rejects_non_increasing():
    with pytest.raises(ValueError):
        gf_mt_closed((2, 1))
