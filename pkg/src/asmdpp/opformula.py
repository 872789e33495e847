"""Shift-operator formulas for generating functions of arrowed monotone triangles.

The operator
    prod_{p<q} ( sum_{s,t} omega(s,t) E_{k_p}^t E_{k_q}^{-s} )
is expanded into a finite sum of shift vectors with polynomial coefficients and
then applied to the extended Schur polynomial s_(k_n..k_1).  Decorations are
encoded by the pair (s, t): NE = (0, 1), NW = (1, 0), BOTH = (1, 1), EMPTY = (0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .laurent import LaurentPoly, Ring
from .symfunc import normalize_weight, schur_partition

__all__ = [
    "CapacityError",
    "DEFAULT_MAX_N",
    "DecorWeights",
    "ShiftOperatorSum",
    "standard_weights",
    "expand_operator",
    "expand_general_operator",
    "apply_to_schur",
    "prefactor",
    "gf_amt_closed",
    "gf_mt_closed",
    "gf_generalized_closed",
]

DEFAULT_MAX_N = 5

Coeff = Union[int, LaurentPoly]


class CapacityError(RuntimeError):
    """The requested expansion exceeds the configured size cap."""


@dataclass(frozen=True)
class DecorWeights:
    ne: Coeff
    nw: Coeff
    both: Coeff
    empty: Coeff = 0

    def table(self) -> dict[tuple[int, int], Coeff]:
        """The equivalent general weight table keyed by (s, t)."""
        return {(0, 1): self.ne, (1, 0): self.nw, (1, 1): self.both, (0, 0): self.empty}

    def ring_order(self) -> int | None:
        return _table_ring(self.table())


def _table_ring(table: Mapping[tuple[int, int], Coeff]) -> int | None:
    orders = {c.n for c in table.values() if isinstance(c, LaurentPoly)}
    if len(orders) > 1:
        raise ValueError("weights live in different rings")
    return orders.pop() if orders else None


def standard_weights(ring: Ring, empty: Coeff = 0) -> DecorWeights:
    """(u, v, w, empty) in the given ring."""
    return DecorWeights(ring.u, ring.v, ring.w, empty)


class ShiftOperatorSum:
    """Finite formal sum  sum_delta c_delta E^delta  of shift operators."""

    __slots__ = ("n", "ring", "terms")

    def __init__(self, n: int, ring: Ring, terms: Mapping[tuple[int, ...], LaurentPoly] | None = None):
        self.n = n
        self.ring = ring
        self.terms: dict[tuple[int, ...], LaurentPoly] = {d: c for d, c in (terms or {}).items() if c}

    @classmethod
    def identity(cls, n: int, ring: Ring) -> "ShiftOperatorSum":
        return cls(n, ring, {(0,) * n: ring.one})

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ShiftOperatorSum) and self.n == other.n and self.terms == other.terms

    def total_mass(self) -> LaurentPoly:
        return self.ring.sum(self.terms.values())

    def compose(self, factor: Mapping[tuple[int, ...], LaurentPoly]) -> "ShiftOperatorSum":
        out: dict[tuple[int, ...], LaurentPoly] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in factor.items():
                d = tuple(a + b for a, b in zip(d1, d2))
                prod = c1 * c2
                out[d] = out[d] + prod if d in out else prod
        return ShiftOperatorSum(self.n, self.ring, out)

    def __repr__(self) -> str:
        return f"ShiftOperatorSum(n={self.n}, terms={len(self.terms)})"


def _as_poly(c: Coeff, ring: Ring) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        if c.n != ring.n:
            raise ValueError("weight lives in a different ring")
        return c
    return ring.const(c)


def _resolve_ring(n: int, table: Mapping[tuple[int, int], Coeff], ring: Ring | None) -> Ring:
    if ring is not None:
        return ring
    order = _table_ring(table)
    return Ring(max(n, order or 0))


def expand_general_operator(
    n: int,
    table: Mapping[tuple[int, int], Coeff],
    ring: Ring | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> ShiftOperatorSum:
    """Expand prod_{p<q} sum_{(s,t)} omega(s,t) E_{k_p}^t E_{k_q}^{-s}."""
    if n > max_n:
        raise CapacityError(f"operator expansion for n={n} exceeds the cap max_n={max_n}")
    ring = _resolve_ring(n, table, ring)
    entries = [(st, _as_poly(c, ring)) for st, c in sorted(table.items())]
    entries = [(st, c) for st, c in entries if c]
    op = ShiftOperatorSum.identity(n, ring)
    for p in range(n):
        for q in range(p + 1, n):
            factor: dict[tuple[int, ...], LaurentPoly] = {}
            for (s, t), c in entries:
                d = [0] * n
                d[p] += t
                d[q] -= s
                d = tuple(d)
                factor[d] = factor[d] + c if d in factor else c
            op = op.compose(factor)
    return op


def expand_operator(
    n: int, dw: DecorWeights, ring: Ring | None = None, max_n: int = DEFAULT_MAX_N
) -> ShiftOperatorSum:
    return expand_general_operator(n, dw.table(), ring, max_n)


def apply_to_schur(ops: ShiftOperatorSum, k: Sequence[int]) -> LaurentPoly:
    """sum_delta c_delta * s_(k+delta) with the Schur polynomials normalized first.

    Terms whose shifted weight vectors normalize to the same partition share
    one Schur polynomial evaluation.
    """
    k = tuple(k)
    if len(k) != ops.n:
        raise ValueError(f"weight vector of length {len(k)} does not match operator order {ops.n}")
    ring = ops.ring
    grouped: dict[tuple[tuple[int, ...], int], LaurentPoly] = {}
    for delta, c in ops.terms.items():
        sign, mu, p = normalize_weight(tuple(a + b for a, b in zip(k, delta)))
        if sign == 0:
            continue
        key = (mu, p)
        contrib = c if sign > 0 else -c
        grouped[key] = grouped[key] + contrib if key in grouped else contrib
    n = ops.n
    acc = ring.zero
    for (mu, p), c in sorted(grouped.items()):
        if not c:
            continue
        s = schur_partition(mu, ring.n)
        if p:
            s = s.shift((0, 0, 0) + (-p,) * n + (0,) * (ring.n - n))
        acc = acc + c * s
    return acc


def prefactor(n: int, table: Mapping[tuple[int, int], Coeff], ring: Ring) -> LaurentPoly:
    """prod_{i=1}^n sum_{(s,t)} omega(s,t) X_i^(t-s)."""
    out = ring.one
    for i in range(1, n + 1):
        out = out * ring.sum(_as_poly(c, ring) * ring.x(i, t - s) for (s, t), c in table.items())
    return out


def gf_generalized_closed(
    k: Sequence[int],
    table: Mapping[tuple[int, int], Coeff],
    ring: Ring | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> LaurentPoly:
    """Closed form for generalized extended arrowed monotone triangles."""
    n = len(k)
    ring = _resolve_ring(n, table, ring)
    ops = expand_general_operator(n, table, ring, max_n)
    return prefactor(n, table, ring) * apply_to_schur(ops, k)


def gf_amt_closed(
    k: Sequence[int],
    dw: DecorWeights | None = None,
    ring: Ring | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> LaurentPoly:
    """Closed form for (extended) arrowed monotone triangles with bottom row k.

    ``dw`` defaults to (u, v, w, 0).
    """
    n = len(k)
    if dw is None:
        ring = ring or Ring(n)
        dw = standard_weights(ring)
    return gf_generalized_closed(k, dw.table(), ring, max_n)


def gf_mt_closed(k: Sequence[int], ring: Ring | None = None, max_n: int = DEFAULT_MAX_N) -> LaurentPoly:
    """The (u, v, w, 0) operator applied to s_(k_n..k_1), without prefactor."""
    k = tuple(k)
    if any(a >= b for a, b in zip(k, k[1:])):
        raise ValueError(f"bottom row {k} is not strictly increasing")
    ring = ring or Ring(len(k))
    ops = expand_operator(len(k), standard_weights(ring), ring, max_n)
    return apply_to_schur(ops, k)
