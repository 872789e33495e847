import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmdpp.dpp_side import (
    DomainError,
    DppPair,
    Sbcspp,
    class2_to_dpp,
    dpp_sbcspp_to_dpp,
    dpp_to_class2,
    enumerate_dpp,
    enumerate_dpp_pairs,
    enumerate_near_balanced,
    enumerate_sbcspp,
    fiber,
    frobenius,
    gf_bcspp,
    gf_dpp_pairs,
    gf_sbcspp,
    in_domain_a,
    in_domain_b,
    involution_a,
    involution_b,
    is_csspp,
    is_dpp,
    is_dpp_sbcspp,
    is_near_balanced,
    pair_from_sbcspp,
    pair_weight,
    principal,
    sbcspp_from_json,
    sbcspp_from_pair,
    sbcspp_weight,
    shape_from_frobenius,
    shape_weight_exponent,
    sign_value,
)
from asmdpp.laurent import Ring, parse_text

ORDER9 = Sbcspp.from_ints(
    [
        [8, 8, 8, 7, 7, 6, 4, 1],
        [7, 7, 7, 6, 5, 5],
        [6, 6, 5, 4, 4, 4],
        [5, 4, 3, [3, 2], 3, 2],
        [3, 2, [2, 1], 1],
        [2, 1],
        [1],
    ]
)
ORDER9_WEIGHT = "u^16 v^26 w^3 X1^5 X2^5 X3^4 X4^5 X5^4 X6^4 X7^5 X8^3"

PAIR_L = [[8, 7, 6, 5, 3, 2, 1], [7, 6, 4, 2, 1], [5, 3, 2], [3, 1]]
PAIR_R = [[8, 8, 7, 7, 6, 4, 1], [7, 6, 5, 5], [4, 4, 4], [3, 2]]

DPPS_3 = {(), ((2,),), ((3,),), ((3, 1),), ((3, 2),), ((3, 3),), ((3, 3), (2,))}


def test_dpps_of_order_three():
    assert set(enumerate_dpp(3)) == DPPS_3
    assert [len(enumerate_dpp(n)) for n in range(5)] == [1, 1, 2, 7, 42]


def test_dpp_predicates():
    example = [[7, 6, 6, 5, 5], [5, 5, 4, 4], [3, 3], [2]]
    assert is_csspp(example) and is_dpp(example)
    assert not is_dpp([[1]])
    assert not is_csspp([[3, 2], [2]])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_class2_round_trip(n):
    for d in enumerate_dpp(n):
        c = dpp_to_class2(d)
        assert all(row[0] == len(row) + 2 for row in c)
        assert class2_to_dpp(c) == d
    with pytest.raises(DomainError):
        dpp_to_class2([[1]])


def test_frobenius_coordinates():
    assert frobenius((4, 3, 1)) == ((3, 1), (2, 0))
    assert shape_from_frobenius((3, 1), (2, 0)) == (4, 3, 1)
    assert is_near_balanced((3, 1), (2, 0))
    assert not is_near_balanced((3,), (1,))
    assert shape_weight_exponent((3, 1), (2, 1)) == 1
    with pytest.raises(ValueError):
        shape_from_frobenius((1, 2), (0, 1))


@given(st.lists(st.integers(0, 6), min_size=1, max_size=4, unique=True))
def test_frobenius_round_trip(legs):
    legs = sorted(legs, reverse=True)
    arms = [b + 1 for b in legs]
    assert frobenius(shape_from_frobenius(arms, legs)) == (tuple(arms), tuple(legs))


def test_near_balanced_count():
    assert len(enumerate_near_balanced(3)) == 21


def test_order9_example_weight():
    n = 9
    assert ORDER9.is_valid(n)
    cells = list(ORDER9.cells())
    below = [c for i, j, c in cells if i >= j]
    assert len(below) == 17
    assert sum(len(c) for c in below) == 19
    assert sum(1 for i, j, _ in cells if i < j) == 16
    assert shape_weight_exponent(*ORDER9.shape) == 1
    assert sbcspp_weight(ORDER9, n) == parse_text(ORDER9_WEIGHT, n)


def test_pair_example_merges_into_order9_maxima():
    pair = DppPair(tuple(tuple((x,) for x in r) for r in PAIR_L), tuple(map(tuple, PAIR_R)))
    assert pair.is_valid(9)
    assert sbcspp_from_pair(pair).maxima() == ORDER9.maxima()
    # the set-valued version carries the two doubletons
    full = pair_from_sbcspp(ORDER9)
    assert full.is_valid(9)
    assert sbcspp_from_pair(full) == ORDER9
    assert pair_weight(full, 9) == sbcspp_weight(ORDER9, 9)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generating_functions_agree(n):
    ref = gf_sbcspp(n)
    assert gf_bcspp(n) == ref
    assert gf_dpp_pairs(n) == ref


def test_object_counts():
    assert [len(enumerate_sbcspp(n)) for n in range(1, 4)] == [3, 18, 243]
    # each principal part carries its fiber of set-valued refinements
    assert sum(len(fiber(d)) for d in enumerate_sbcspp(3) if principal(d) == d) == 243


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_shape_bound(n):
    for d in enumerate_sbcspp(n):
        assert len(d.rows) <= n
        assert not d.rows or len(d.rows[0]) <= n + 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_involutions(n):
    objs = enumerate_sbcspp(n)
    universe = set(objs)
    sign = {d: sign_value(sbcspp_weight(d, n)) for d in objs}
    for d in objs:
        if in_domain_a(d):
            e = involution_a(d)
            assert e in universe and e != d and involution_a(e) == d
            assert sign[e] == -sign[d]
        else:
            assert principal(d) == d
            if in_domain_b(d):
                e = involution_b(d)
                assert e in universe and not in_domain_a(e) and involution_b(e) == d
                assert sign[e] == -sign[d]
            else:
                assert is_dpp_sbcspp(d) and sign[d] == 1
    assert sum(sign.values()) == len(enumerate_dpp(n))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_survivors_biject_to_dpps(n):
    survivors = [d for d in enumerate_sbcspp(n) if is_dpp_sbcspp(d)]
    images = [dpp_sbcspp_to_dpp(d) for d in survivors]
    assert len(set(images)) == len(images)
    assert set(images) == set(enumerate_dpp(n))


def test_order2_survivors():
    survivors = [d for d in enumerate_sbcspp(2) if is_dpp_sbcspp(d)]
    assert set(survivors) == {Sbcspp(()), Sbcspp.from_ints([[2, 2, 2], [1]])}
    with pytest.raises(DomainError):
        dpp_sbcspp_to_dpp(Sbcspp.from_ints([[2, 1], [1]]))


@pytest.mark.parametrize("n", [3, 4])
def test_durfee_facts(n):
    survivors = [d for d in enumerate_sbcspp(n) if is_dpp_sbcspp(d)]
    long = [d for d in survivors if d.durfee == n - 1]
    assert [d.shape for d in long] == [(tuple(range(n, 1, -1)), tuple(range(n - 1, 0, -1)))]
    for d in survivors:
        (exps,) = sbcspp_weight(d, n).as_dict()
        assert exps[3] == d.durfee
        if d.durfee:
            assert d.shape[1][-1] >= 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pair_bijection(n):
    pairs = enumerate_dpp_pairs(n)
    objs = set(enumerate_sbcspp(n))
    images = set()
    for p in pairs:
        assert p.is_valid(n)
        d = sbcspp_from_pair(p) or Sbcspp(())
        assert d in objs
        assert sbcspp_weight(d, n) == pair_weight(p, n)
        images.add(d)
    assert images == objs


def test_json_round_trip():
    obj = json.loads(json.dumps(ORDER9.to_json_obj()))
    assert sbcspp_from_json(obj) == ORDER9
    assert ORDER9.render().count("\n") == 6


def test_invalid_fillings():
    assert not Sbcspp.from_ints([[1, 2]]).is_valid(2)
    assert not Sbcspp.from_ints([[2], [2]]).is_valid(2)
    assert Sbcspp.from_ints([[[2, 1], 1]]).is_valid(2)
    assert not Sbcspp.from_ints([[2, [2, 1]]]).is_valid(2)
    with pytest.raises(ValueError):
        Sbcspp.from_ints([[1], [1, 1]])


def test_sign_value_of_ring_elements():
    r = Ring(1)
    assert sign_value(r.u + r.v + r.w) == 1
