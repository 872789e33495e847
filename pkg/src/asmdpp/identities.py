"""Exact checks of the algebra that turns the operator formula into the path determinant.

Every check is posed multiplicatively (no fraction field) and returns
``(ok, diff)`` where ``diff`` is the first nonzero difference found, or the
zero polynomial on success.
"""

from __future__ import annotations

from itertools import permutations, product
from math import comb
from typing import Callable, Iterable

from .laurent import LaurentPoly, Ring, determinant, identity_matrix, matmul, vandermonde
from .opformula import gf_amt_closed
from .symfunc import (
    e_sym,
    h_ext,
    h_subset,
    perm_sign,
    schur_bialternant_numerator,
    schur_ext,
    schur_jt_full,
    schur_jt_staircase,
)

__all__ = ["IDENTITIES", "UnknownIdentityError", "verify_identity", "a_matrix", "b_matrix", "b_inverse_factors"]


class UnknownIdentityError(KeyError):
    pass


Check = tuple[bool, LaurentPoly]


def _first_failure(ring: Ring, pairs: Iterable[tuple[LaurentPoly, LaurentPoly]]) -> Check:
    for lhs, rhs in pairs:
        diff = lhs - rhs
        if diff:
            return False, diff
    return True, ring.zero


def _matrix_pairs(a, b):
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            yield x, y


# -- h function identities -----------------------------------------------------------------


def _hrec(n: int) -> Check:
    ring = Ring(n)
    full = range(1, n + 1)

    def h_without(k: int, i: int) -> LaurentPoly:
        rest = [j for j in full if j != i]
        if not rest:
            return ring.zero  # the recursion needs the empty alphabet to contribute nothing
        return h_subset(k, rest, ring)

    return _first_failure(
        ring,
        (
            (h_subset(k, full, ring), h_without(k, i) + ring.x(i) * h_subset(k - 1, full, ring))
            for k in range(-n - 3, n + 4)
            for i in full
        ),
    )


def _h_direct(k: int, idx: tuple[int, ...], ring: Ring) -> LaurentPoly:
    """Definition by summation over exponent vectors (finite for either sign of k)."""
    m = len(idx)
    if m == 0:
        return ring.one if k == 0 else ring.zero
    acc = ring.zero
    if k >= 0:
        rng = range(0, k + 1)
        sign = 1
    else:
        rng = range(k - (-m + 1), 0)  # each l_i <= -1, so l_i >= k + (m - 1)
        sign = 1 if m % 2 == 1 else -1
    for ls in product(rng, repeat=m):
        if sum(ls) != k:
            continue
        exps = [0] * ring.n
        for i, l in zip(idx, ls):
            exps[i - 1] = l
        acc = acc + ring.x_monomial(exps, sign)
    return acc


def _reciprocity(n: int) -> Check:
    ring = Ring(n)
    pairs = []
    for m in range(1, n + 1):
        idx = tuple(range(1, m + 1))
        inv_all = ring.x_monomial([-1] * m + [0] * (n - m))
        sign = 1 if m % 2 == 1 else -1
        for k in range(-m - 3, 4):
            direct = _h_direct(k, idx, ring)
            pairs.append((h_subset(k, idx, ring), direct))
            recip = _h_direct(-k - m, idx, ring).invert_x() * inv_all * sign
            pairs.append((direct, recip))
    return _first_failure(ring, pairs)


def _h_decomposition(n: int) -> Check:
    ring = Ring(n)
    pairs = []
    for a in range(-n - 3, n + 4):
        for b in range(1, n + 1):
            rhs = ring.sum(h_ext(a - l, b - l, n, ring) * h_ext(l, 1, b - l, ring) for l in range(b))
            pairs.append((h_ext(a, 1, n, ring), rhs))
    return _first_failure(ring, pairs)


def _jacobi_trudi(n: int) -> Check:
    ring = Ring(n)
    V = vandermonde(ring, n)
    pairs = []
    for k in product(range(-2, 3), repeat=n):
        s = schur_ext(k, ring)
        pairs.append((s, schur_jt_full(k, ring)))
        pairs.append((s, schur_jt_staircase(k, ring)))
        pairs.append((s * V, schur_bialternant_numerator(k, ring)))
    return _first_failure(ring, pairs)


def _h_full(n: int, ring: Ring):
    return [[h_ext(1 - i - j, 1, n, ring) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _e_signed(n: int, ring: Ring):
    return [[e_sym(i + j - 1, 1, n, ring) * (-1) ** (i + j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _hinverse(n: int) -> Check:
    ring = Ring(n)
    prod_ = matmul(_h_full(n, ring), _e_signed(n, ring))
    return _first_failure(ring, _matrix_pairs(prod_, identity_matrix(ring, n)))


def _h_matrix_product(n: int) -> Check:
    ring = Ring(n)
    hh = [[h_ext(j - i, j, n, ring) for j in range(1, n + 1)] for i in range(1, n + 1)]
    hi = [[h_ext(1 - i - j, 1, i, ring) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return _first_failure(ring, _matrix_pairs(matmul(hh, hi), _h_full(n, ring)))


# -- from the antisymmetrizer to the bialternant ---------------------------------------------


def _asym(f: Callable[[tuple[int, ...]], LaurentPoly], n: int, ring: Ring) -> LaurentPoly:
    return ring.sum(f(sigma) * perm_sign(sigma) for sigma in permutations(range(1, n + 1)))


def _asym_check(n: int) -> Check:
    ring = Ring(n)

    def term(sigma):
        acc = ring.one
        for p in range(n):
            for q in range(p, n):
                acc = acc * (ring.u * ring.x(sigma[q]) + ring.v * ring.x(sigma[p], -1) + ring.w)
        return acc

    lhs = ring.x_monomial([n] * n) * _asym(term, n, ring)
    rhs = gf_amt_closed(tuple(range(1, n + 1)), ring=ring) * vandermonde(ring, n)
    return _first_failure(ring, [(lhs, rhs)])


def _lemma_general(n: int) -> Check:
    ring = Ring(2 * n)
    X = lambda i: ring.x(i)
    Y = lambda i: ring.x(n + i)
    mat = [[X(i) ** j - Y(i) ** j for j in range(1, n + 1)] for i in range(1, n + 1)]
    lhs = determinant(mat, ring)
    rhs = ring.zero
    for sigma in permutations(range(1, n + 1)):
        term = ring.one
        for i in range(n):
            for j in range(i, n):
                term = term * (X(sigma[j]) - Y(sigma[i]))
        rhs = rhs + term * perm_sign(sigma)
    return _first_failure(ring, [(lhs, rhs)])


def _bialternant_matrix(n: int, ring: Ring):
    return [
        [(ring.u * ring.x(i) + ring.w) ** j - (ring.v * ring.x(i, -1) * -1) ** j for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def _bialternant(n: int) -> Check:
    ring = Ring(n)
    lhs = ring.x_monomial([n] * n) * determinant(_bialternant_matrix(n, ring), ring)
    rhs = gf_amt_closed(tuple(range(1, n + 1)), ring=ring) * vandermonde(ring, n)
    return _first_failure(ring, [(lhs, rhs)])


def _column_ops(n: int) -> Check:
    ring = Ring(n + 1)  # X_{n+1} plays the role of t
    t = ring.x(n + 1)
    base = determinant(_bialternant_matrix(n, ring), ring)
    with_t = [
        [
            (ring.u * ring.x(i) + ring.w + t) ** (j - 1) * (ring.u * ring.x(i) + ring.w)
            + (ring.v * ring.x(i, -1) * -1 + t) ** (j - 1) * ring.v * ring.x(i, -1)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    at_minus_w = [
        [
            (ring.u * ring.x(i)) ** (j - 1) * (ring.u * ring.x(i) + ring.w)
            + (ring.v * ring.x(i, -1) * -1 - ring.w) ** (j - 1) * ring.v * ring.x(i, -1)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    return _first_failure(ring, [(determinant(with_t, ring), base), (determinant(at_minus_w, ring), base)])


# -- Jacobi-Trudi form and the B_n algebra -------------------------------------------------------


def a_matrix(n: int, ring: Ring):
    return [
        [
            ring.monomial(u=j) * h_ext(j - i + 1, 1, i, ring) + ring.monomial(u=j - 1, w=1) * h_ext(j - i, 1, i, ring)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]


def b_matrix(n: int, ring: Ring):
    return [
        [
            ring.sum(
                ring.monomial(v=l, w=j - l) * h_ext(-l - i + 1, 1, i, ring) * (comb(j - 1, l - 1) * (-1) ** (j - 1))
                for l in range(1, j + 1)
            )
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]


def _binomial(n: int, ring: Ring, inverse: bool):
    out = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            c = comb(j - 1, i - 1) * (-1) ** (j - 1)
            row.append(ring.monomial(v=-j if inverse else i, w=j - i) * c if c else ring.zero)
        out.append(row)
    return out


def b_inverse_factors(n: int, ring: Ring):
    """The four factors whose product is the inverse of B_n."""
    c_inv = [
        [ring.monomial(v=-j, w=j - i) * comb(j - 1, i - 1) if j >= i else ring.zero for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    e_left = [[e_sym(i - 1, 1, n - j, ring) * ring.x(n - j + 1) for j in range(1, n + 1)] for i in range(1, n + 1)]
    e_right = [
        [e_sym(j - 1, n - i + 2, n, ring) * (-1) ** (j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)
    ]
    hh = [[h_ext(j - i, j, n, ring) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return c_inv, e_left, e_right, hh


def _chain(mats, ring):
    out = mats[0]
    for m in mats[1:]:
        out = matmul(out, m)
    return out


def _f_coefficients(j: int, ring: Ring) -> dict[int, LaurentPoly]:
    """<X^l> f_j for f_j(X) = (uX)^(j-1)(uX + w) + (-vX^-1 - w)^(j-1) v X^-1."""
    out = {j: ring.monomial(u=j), j - 1: ring.monomial(u=j - 1, w=1)}
    for k in range(j):
        c = comb(j - 1, k) * (-1) ** (j - 1)
        term = ring.monomial(v=k + 1, w=j - 1 - k) * c
        out[-k - 1] = out.get(-k - 1, ring.zero) + term
    return out


def _divided(coeffs: dict[int, LaurentPoly], i: int, ring: Ring) -> LaurentPoly:
    return ring.sum(c * h_ext(l - i + 1, 1, i, ring) for l, c in coeffs.items())


def _dettodet(n: int) -> Check:
    ring = Ring(n)
    V = vandermonde(ring, n)
    pairs = []
    for ms in product(range(-n - 1, n + 2), repeat=n):
        if len(set(ms)) < n:
            continue
        lhs = determinant([[ring.x(i, m) for m in ms] for i in range(1, n + 1)], ring)
        rhs = determinant([[_divided({m: ring.one}, i, ring) for m in ms] for i in range(1, n + 1)], ring)
        pairs.append((lhs, V * rhs))
    coeffs = [_f_coefficients(j, ring) for j in range(1, n + 1)]
    f_at = [[ring.sum(c * ring.x(i, l) for l, c in coeffs[j].items()) for j in range(n)] for i in range(1, n + 1)]
    divided = [[_divided(coeffs[j], i, ring) for j in range(n)] for i in range(1, n + 1)]
    a, b = a_matrix(n, ring), b_matrix(n, ring)
    pairs.extend(_matrix_pairs(divided, [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]))
    pairs.append((determinant(f_at, ring), V * determinant(divided, ring)))
    return _first_failure(ring, pairs)


def _bn_det(n: int) -> Check:
    ring = Ring(n)
    expected = ring.monomial(v=comb(n + 1, 2), x=[-n] * n)
    return _first_failure(ring, [(determinant(b_matrix(n, ring), ring), expected)])


def _bn_inverse(n: int) -> Check:
    ring = Ring(n)
    ident = identity_matrix(ring, n)
    pairs = []
    # binomial factor and its inverse
    pairs.extend(_matrix_pairs(matmul(_binomial(n, ring, False), _binomial(n, ring, True)), ident))
    # B_n = (h_{1-i-j}(X_1..X_i)) * binomial factor
    hi = [[h_ext(1 - i - j, 1, i, ring) for j in range(1, n + 1)] for i in range(1, n + 1)]
    pairs.extend(_matrix_pairs(matmul(hi, _binomial(n, ring, False)), b_matrix(n, ring)))
    # e-decomposition of the inverse of (h_{1-i-j}(X_1..X_n))
    e_l = [[e_sym(i - 1, 1, n - j, ring) * ring.x(n - j + 1) * (-1) ** i for j in range(1, n + 1)] for i in range(1, n + 1)]
    e_r = [[e_sym(j - 1, n - i + 2, n, ring) * (-1) ** j for j in range(1, n + 1)] for i in range(1, n + 1)]
    pairs.extend(_matrix_pairs(matmul(e_l, e_r), _e_signed(n, ring)))
    # B_n times the four-factor inverse is the identity
    inv = _chain(list(b_inverse_factors(n, ring)), ring)
    pairs.extend(_matrix_pairs(matmul(b_matrix(n, ring), inv), ident))
    return _first_failure(ring, pairs)


def _pathlast(n: int) -> Check:
    from .paths_lgv import w_matrix

    ring = Ring(n)
    inv = _chain(list(b_inverse_factors(n, ring)), ring)
    lhs = matmul(inv, a_matrix(n, ring))
    return _first_failure(ring, _matrix_pairs(lhs, w_matrix(n, ring)))


IDENTITIES: dict[str, Callable[[int], Check]] = {
    "hrec": _hrec,
    "reciprocity": _reciprocity,
    "h_decomposition": _h_decomposition,
    "jacobi_trudi": _jacobi_trudi,
    "hinverse": _hinverse,
    "h_matrix_product": _h_matrix_product,
    "asym": _asym_check,
    "lemma_general": _lemma_general,
    "bialternant": _bialternant,
    "column_ops": _column_ops,
    "dettodet": _dettodet,
    "bn_det": _bn_det,
    "bn_inverse": _bn_inverse,
    "pathlast": _pathlast,
}


def verify_identity(name: str, n: int) -> Check:
    try:
        fn = IDENTITIES[name]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}") from None
    if n < 1:
        raise ValueError("identity checks need n >= 1")
    return fn(n)
