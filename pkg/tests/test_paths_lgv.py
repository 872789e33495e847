import json
from itertools import combinations

import pytest

from asmdpp.dpp_side import DomainError, enumerate_dpp, enumerate_dpp_pairs, gf_sbcspp
from asmdpp.laurent import Ring, parse_text
from asmdpp.paths_lgv import (
    Path,
    PathFamily,
    cancel_diagonal,
    dpp_pair_to_family,
    dpp_to_paths,
    enumerate_classical_families,
    enumerate_extended_families,
    family_from_json,
    family_to_dpp_pair,
    family_weight,
    gf_family_subset,
    gf_lgv,
    gf_paths_enum,
    lgv_subset,
    path_weight,
    paths_to_dpp,
    single_path_gf,
    single_path_gf_enum,
    single_paths,
    survivor_to_classical,
    w_matrix,
)

SIGN = {"u": 1, "v": 1, "w": -1}


def sign_spec(p, n):
    return p.substitute({**SIGN, **{f"X{i}": 1 for i in range(1, n + 1)}})


EXAMPLE_DPP = ((7, 6, 6, 5, 5), (5, 5, 4, 4), (3, 3), (2,))


def test_example_dpp_sources():
    f = dpp_to_paths(EXAMPLE_DPP, 7)
    assert f.sources == (2, 3, 5, 7)
    assert f.is_nonintersecting()
    assert paths_to_dpp(f) == EXAMPLE_DPP
    assert all(p.end == (p.index, 0) for p in f.paths)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_classical_families_are_dpps(n):
    fams = enumerate_classical_families(n)
    assert len(fams) == len(enumerate_dpp(n))
    assert {paths_to_dpp(f) for f in fams} == set(enumerate_dpp(n))
    for d in enumerate_dpp(n):
        assert paths_to_dpp(dpp_to_paths(d, n)) == d


def test_dpp_to_paths_rejects():
    with pytest.raises(DomainError):
        dpp_to_paths(((3,),), 2)


def test_order_one():
    r = Ring(1)
    assert single_path_gf(1, 1, 1) == (r.u * r.x(1, 2) + r.w * r.x(1)) * r.monomial(v=-1)
    assert gf_lgv(1) == parse_text("u X1^2 + w X1 + v", 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_w_entries_match_enumeration(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert single_path_gf(i, j, n) == single_path_gf_enum(i, j, n), (i, j)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_single_path_bounds(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            g = single_path_gf(i, j, n)
            if not g.is_zero():
                assert g.degree_in(1)[0] >= -n
            assert abs(sign_spec(g, n)) <= len(single_paths(i, j, n, True))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_main2_for_paths(n):
    ref = gf_sbcspp(n)
    assert gf_paths_enum(n) == ref
    assert gf_paths_enum(n, expanded=False) == ref
    assert gf_lgv(n) == ref


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lgv_per_subset(n):
    for size in range(n + 1):
        for S in combinations(range(1, n + 1), size):
            assert lgv_subset(S, n) == gf_family_subset(S, n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_expanded_weights_are_monomials(n):
    for f in enumerate_extended_families(n):
        assert f.is_nonintersecting()
        assert family_weight(f).is_monomial()


@pytest.mark.parametrize("n", [2, 3])
def test_specialization_audit(n):
    fams = enumerate_extended_families(n, expanded=False)
    total = 0
    alive = []
    for f in fams:
        val = sign_spec(family_weight(f, expanded=False), n)
        has_up = any(s == "U" for p in f.paths for s in p.steps)
        if has_up:
            assert val == 0
            continue
        diagonals = sum(p.steps[-1] == "G" for p in f.paths)
        assert val == (-1) ** diagonals
        total += val
        alive.append(f)
    assert total == len(enumerate_dpp(n))
    alive_set = set(alive)
    survivors = []
    for f in alive:
        g = cancel_diagonal(f)
        if g is None or g not in alive_set:
            survivors.append(f)
        else:
            assert cancel_diagonal(g) == f
    # every uncancelled family ends in two down steps per path and is a DPP
    assert all(p.steps[-2:] == ("D", "D") for f in survivors for p in f.paths)
    dpps = [paths_to_dpp(survivor_to_classical(f)) for f in survivors]
    assert sorted(dpps) == sorted(enumerate_dpp(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pairs_bijection(n):
    fams = enumerate_extended_families(n)
    pairs = set(enumerate_dpp_pairs(n))
    images = {family_to_dpp_pair(f) for f in fams}
    assert images == pairs and len(images) == len(fams)
    for p in pairs:
        assert family_to_dpp_pair(dpp_pair_to_family(p, n)) == p


def test_path_weight_rejects_bad_steps():
    r = Ring(2)
    with pytest.raises(ValueError):
        path_weight(Path(1, (-1, -1), ("D", "R")), r)
    with pytest.raises(ValueError):
        path_weight(Path(1, (0, 0), ("U",)), r)


def test_json_and_render():
    f = dpp_to_paths(EXAMPLE_DPP, 7)
    assert family_from_json(json.dumps(f.to_json_obj())) == f
    fam = enumerate_extended_families(2)[-1]
    assert family_from_json(fam.to_json_obj()) == fam
    assert "+" in PathFamily(1, (), False).render()


def test_w_matrix_shape():
    m = w_matrix(3)
    assert len(m) == 3 and all(len(r) == 3 for r in m)


def test_lgv_order_five_matches_closed_form():
    from asmdpp.opformula import gf_amt_closed

    assert gf_lgv(5) == gf_amt_closed((1, 2, 3, 4, 5))
