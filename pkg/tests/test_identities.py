import pytest

from asmdpp.identities import IDENTITIES, UnknownIdentityError, b_inverse_factors, b_matrix, verify_identity
from asmdpp.laurent import Ring, determinant, identity_matrix, matmul

EXPECTED = {
    "hrec", "reciprocity", "h_decomposition", "jacobi_trudi", "hinverse", "h_matrix_product", "asym",
    "lemma_general", "bialternant", "column_ops", "dettodet", "bn_det", "bn_inverse", "pathlast",
}


def test_registry():
    assert set(IDENTITIES) == EXPECTED


@pytest.mark.parametrize("name", sorted(EXPECTED))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_identity_holds(name, n):
    ok, diff = verify_identity(name, n)
    assert ok, diff.to_text()
    assert diff.is_zero()


@pytest.mark.parametrize("name", ["hrec", "h_decomposition", "hinverse", "jacobi_trudi"])
def test_identity_at_order_four(name):
    assert verify_identity(name, 4)[0]


def test_b_inverse_factors_multiply_to_inverse():
    n = 3
    ring = Ring(n)
    factors = b_inverse_factors(n, ring)
    inv = factors[0]
    for f in factors[1:]:
        inv = matmul(inv, f)
    assert matmul(b_matrix(n, ring), inv) == identity_matrix(ring, n)
    assert not determinant(b_matrix(n, ring), ring).is_zero()


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        verify_identity("nope", 2)
    with pytest.raises(KeyError):
        verify_identity("nope", 2)
    with pytest.raises(ValueError):
        verify_identity("hrec", 0)
