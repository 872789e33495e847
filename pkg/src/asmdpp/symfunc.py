"""Complete homogeneous, elementary and (extended) Schur polynomials.

``h`` is extended to negative degree by

    h_k(X_1..X_m) = (-1)^(m+1) * sum over l_1+..+l_m = k, all l_i < 0, of X^l,

which vanishes for -m < k < 0 and satisfies the reciprocity
h_k(X) = (-1)^(m+1) prod X_i^-1 h_{-k-m}(X^-1).  We compute the negative side
through that reciprocity; the direct sum lives in the test suite.

Weight vectors ``k = (k_1, ..., k_n)`` index ``s_(k_n, ..., k_1)``, i.e. the
bottom row of a monotone triangle read right to left.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .laurent import LaurentPoly, Ring, determinant

__all__ = [
    "h_subset",
    "h_ext",
    "e_subset",
    "e_sym",
    "normalize_weight",
    "schur_partition",
    "schur_ext",
    "schur_jt_full",
    "schur_jt_staircase",
    "perm_sign",
    "schur_bialternant_numerator",
]


def _ring_order(ring: Ring | int) -> int:
    return ring.n if isinstance(ring, Ring) else int(ring)


@lru_cache(maxsize=None)
def _h_nonneg(k: int, idx: tuple[int, ...], n: int) -> LaurentPoly:
    ring = Ring(n)
    if k < 0:
        return ring.zero
    if k == 0:
        return ring.one
    if not idx:
        return ring.zero
    if len(idx) == 1:
        return ring.x(idx[0], k)
    # h_k(X_a, rest) = sum_j X_a^j h_{k-j}(rest)
    first, rest = idx[0], idx[1:]
    acc = ring.zero
    for j in range(k + 1):
        tail = _h_nonneg(k - j, rest, n)
        if tail:
            acc = acc + tail * ring.x(first, j) if j else acc + tail
    return acc


@lru_cache(maxsize=None)
def _h_subset(k: int, idx: tuple[int, ...], n: int) -> LaurentPoly:
    ring = Ring(n)
    m = len(idx)
    if m == 0:
        return ring.one if k == 0 else ring.zero
    if k >= 0:
        return _h_nonneg(k, idx, n)
    if k > -m:
        return ring.zero
    sign = 1 if m % 2 == 1 else -1
    pos = _h_nonneg(-k - m, idx, n)
    inv = pos.map_exponents(lambda e: e[:3] + tuple(-x if (j + 1) in idx else x for j, x in enumerate(e[3:])))
    shift = [0] * n
    for i in idx:
        shift[i - 1] = -1
    return inv.shift((0, 0, 0, *shift)) * sign


def h_subset(k: int, indices: Sequence[int], ring: Ring | int) -> LaurentPoly:
    """Extended h_k in the variables X_i, i in ``indices``."""
    n = _ring_order(ring)
    idx = tuple(sorted(set(indices)))
    if idx and not (1 <= idx[0] and idx[-1] <= n):
        raise IndexError(f"variable indices {idx} outside ring of order {n}")
    return _h_subset(k, idx, n)


def h_ext(k: int, a: int, b: int, ring: Ring | int | None = None) -> LaurentPoly:
    """Extended h_k(X_a, ..., X_b); an empty range (b < a) gives 1 for k=0 and 0 otherwise."""
    n = b if ring is None else _ring_order(ring)
    return h_subset(k, range(a, b + 1), n)


@lru_cache(maxsize=None)
def _e_subset(k: int, idx: tuple[int, ...], n: int) -> LaurentPoly:
    ring = Ring(n)
    if k == 0:
        return ring.one
    if k < 0 or k > len(idx):
        return ring.zero
    first, rest = idx[0], idx[1:]
    return _e_subset(k, rest, n) + ring.x(first) * _e_subset(k - 1, rest, n)


def e_subset(k: int, indices: Sequence[int], ring: Ring | int) -> LaurentPoly:
    return _e_subset(k, tuple(sorted(set(indices))), _ring_order(ring))


def e_sym(k: int, a: int, b: int, ring: Ring | int | None = None) -> LaurentPoly:
    """Elementary symmetric e_k(X_a, ..., X_b)."""
    n = b if ring is None else _ring_order(ring)
    return e_subset(k, range(a, b + 1), n)


def perm_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparable items."""
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                sign = -sign
    return sign


def normalize_weight(k: Sequence[int]) -> tuple[int, tuple[int, ...], int]:
    """Bring ``s_(k_n..k_1)`` to ``sign * s_mu * prod X_i^-p``.

    Returns ``(sign, mu, p)``; sign 0 means the Schur polynomial vanishes.
    """
    lam = list(reversed(k))
    n = len(lam)
    shifted = [lam[i] - (i + 1) for i in range(n)]
    if len(set(shifted)) < n:
        return 0, (), 0
    sigma = sorted(range(n), key=lambda i: shifted[i], reverse=True)
    sign = perm_sign(sigma)
    base = [lam[s] + j - s for j, s in enumerate(sigma)]  # lambda_sigma(j) + j - sigma(j), 0-based
    p = max(0, -base[-1]) if n else 0
    return sign, tuple(b + p for b in base), p


@lru_cache(maxsize=None)
def _schur_gt(mu: tuple[int, ...], m: int, n: int) -> LaurentPoly:
    """s_mu(X_1..X_m) for a partition mu of length m by branching on the last variable."""
    ring = Ring(n)
    if m == 0:
        return ring.one
    if m == 1:
        return ring.x(1, mu[0])
    total = sum(mu)
    acc = ring.zero

    def rec(i: int, row: list[int]) -> None:
        nonlocal acc
        if i == m - 1:
            sub = _schur_gt(tuple(row), m - 1, n)
            acc = acc + sub * ring.x(m, total - sum(row))
            return
        for val in range(mu[i + 1], mu[i] + 1):
            row.append(val)
            rec(i + 1, row)
            row.pop()

    rec(0, [])
    return acc


def schur_partition(mu: Sequence[int], ring: Ring | int | None = None) -> LaurentPoly:
    """Classical Schur polynomial of a partition in X_1..X_len(mu)."""
    mu = tuple(mu)
    n = len(mu) if ring is None else _ring_order(ring)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)) or (mu and mu[-1] < 0):
        raise ValueError(f"{mu} is not a partition")
    return _schur_gt(mu, len(mu), n)


def schur_ext(k: Sequence[int], ring: Ring | int | None = None) -> LaurentPoly:
    """Extended Schur polynomial s_(k_n, ..., k_1)(X_1..X_n)."""
    k = tuple(k)
    n = len(k) if ring is None else _ring_order(ring)
    sign, mu, p = normalize_weight(k)
    if sign == 0:
        return Ring(n).zero
    s = schur_partition(mu, n)
    if p:
        s = s.shift((0, 0, 0) + (-p,) * len(k) + (0,) * (n - len(k)))
    return s if sign > 0 else -s


def schur_jt_full(k: Sequence[int], ring: Ring | int | None = None) -> LaurentPoly:
    """det(h_{k_i+i-j}(X_1..X_n))."""
    m = len(k)
    n = m if ring is None else _ring_order(ring)
    if m == 0:
        return Ring(n).one
    mat = [[h_ext(k[i] + i - j, 1, m, n) for j in range(m)] for i in range(m)]
    return determinant(mat, Ring(n))


def schur_jt_staircase(k: Sequence[int], ring: Ring | int | None = None) -> LaurentPoly:
    """det(h_{k_i+i-j}(X_{n-j+1}..X_n)) with 1-based i, j."""
    m = len(k)
    n = m if ring is None else _ring_order(ring)
    if m == 0:
        return Ring(n).one
    mat = [[h_ext(k[i] + i - j, m - j, m, n) for j in range(m)] for i in range(m)]
    return determinant(mat, Ring(n))


def schur_bialternant_numerator(k: Sequence[int], ring: Ring | int | None = None) -> LaurentPoly:
    """ASym[prod X_i^(k_i + i - 1)] = sum_sigma sgn(sigma) prod X_sigma(i)^(k_i+i-1)."""
    m = len(k)
    n = m if ring is None else _ring_order(ring)
    r = Ring(n)
    acc = r.zero
    for perm in permutations(range(m)):
        exps = [0] * n
        for i, s in enumerate(perm):
            exps[s] = k[i] + i
        acc = acc + r.x_monomial(exps, perm_sign(perm))
    return acc
