"""ASMs, monotone triangles and their decorated variants.

Decorations are stored as strings: ``"ne"`` (north-east arrow), ``"nw"``
(north-west arrow), ``"both"`` and ``"empty"``.  Rows of a triangle are
indexed from the top, so row i has i entries and the bottom row is row n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterator, Mapping, Sequence

from .laurent import LaurentPoly, Ring
from .opformula import Coeff, DecorWeights, standard_weights

__all__ = [
    "NE",
    "NW",
    "BOTH",
    "EMPTY",
    "DECOR_ST",
    "MonotoneTriangle",
    "ArrowedMT",
    "Statistics",
    "is_asm",
    "asm_to_mt",
    "mt_to_asm",
    "enumerate_asm",
    "enumerate_mt",
    "mt_statistics",
    "mt_weight_w0",
    "arrowings",
    "enumerate_amt",
    "amt_weight",
    "amt_exponents",
    "gf_amt_enum",
    "down_arrowings",
    "damt_weight",
    "gf_damt_enum",
    "gf_mt_enum",
    "gf_extended_recursion",
    "gf_generalized_recursion",
    "asm_count",
    "signed_interval",
    "triangle_from_json",
]

NE, NW, BOTH, EMPTY = "ne", "nw", "both", "empty"
DECOR_ST = {NE: (0, 1), NW: (1, 0), BOTH: (1, 1), EMPTY: (0, 0)}
_ARROWS = (NE, NW, BOTH)


def _strictly_increasing(row: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(row, row[1:]))


@dataclass(frozen=True)
class MonotoneTriangle:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for i, r in enumerate(rows):
            if len(r) != i + 1:
                raise ValueError(f"row {i + 1} has {len(r)} entries")
            if not _strictly_increasing(r):
                raise ValueError(f"row {i + 1} is not strictly increasing")
        for i in range(len(rows) - 1):
            up, down = rows[i], rows[i + 1]
            for j, a in enumerate(up):
                if not down[j] <= a <= down[j + 1]:
                    raise ValueError(f"entry ({i + 1},{j + 1}) violates interlacing")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.rows[-1] if self.rows else ()

    def row_sum(self, i: int) -> int:
        """Sum of row i (1-based); row 0 sums to 0."""
        return sum(self.rows[i - 1]) if i >= 1 else 0

    def render(self) -> str:
        return _render_rows([[str(x) for x in r] for r in self.rows])

    def to_json_obj(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _render_rows(cells: list[list[str]]) -> str:
    if not cells:
        return ""
    width = max(len(c) for row in cells for c in row) + 1
    n = len(cells)
    lines = []
    for i, row in enumerate(cells):
        pad = " " * ((n - 1 - i) * width // 2)
        lines.append(pad + "".join(c.center(width) for c in row).rstrip())
    return "\n".join(lines)


@dataclass(frozen=True)
class ArrowedMT:
    triangle: MonotoneTriangle
    decorations: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        decs = tuple(tuple(r) for r in self.decorations)
        object.__setattr__(self, "decorations", decs)
        if [len(r) for r in decs] != [len(r) for r in self.triangle.rows]:
            raise ValueError("decoration array does not match the triangle")
        for r in decs:
            for d in r:
                if d not in DECOR_ST:
                    raise ValueError(f"unknown decoration {d!r}")

    @property
    def n(self) -> int:
        return self.triangle.n

    def is_valid(self, allow_empty: bool = False) -> bool:
        """Check the neighbour rules for a plain arrowed monotone triangle."""
        rows = self.triangle.rows
        for i, row in enumerate(rows):
            for j, a in enumerate(row):
                d = self.decorations[i][j]
                if d == EMPTY and not allow_empty:
                    return False
                if i > 0 and j > 0 and rows[i - 1][j - 1] == a and d != NE:
                    return False
                if i > 0 and j < i and rows[i - 1][j] == a and d != NW:
                    return False
        return True

    def render(self) -> str:
        cells = []
        for row, drow in zip(self.triangle.rows, self.decorations):
            out = []
            for a, d in zip(row, drow):
                pre = "^" if d in (NW, BOTH) else ""
                post = "^" if d in (NE, BOTH) else ""
                out.append(f"{pre}{a}{post}")
            cells.append(out)
        return _render_rows(cells)

    def to_json_obj(self) -> list[list[dict]]:
        return [
            [{"value": a, "decoration": d} for a, d in zip(row, drow)]
            for row, drow in zip(self.triangle.rows, self.decorations)
        ]


@dataclass(frozen=True)
class Statistics:
    s: tuple[int, ...]
    l: tuple[int, ...]
    r: tuple[int, ...]
    d: tuple[int, ...]

    @property
    def total_s(self) -> int:
        return sum(self.s)

    @property
    def total_l(self) -> int:
        return sum(self.l)

    @property
    def total_r(self) -> int:
        return sum(self.r)


# -- ASMs -----------------------------------------------------------------------


def is_asm(a: Sequence[Sequence[int]]) -> bool:
    n = len(a)
    if any(len(row) != n for row in a):
        return False
    lines = [list(row) for row in a] + [[a[i][j] for i in range(n)] for j in range(n)]
    for line in lines:
        nz = [x for x in line if x]
        if any(x not in (-1, 1) for x in nz) or sum(nz) != 1:
            return False
        if any(x == y for x, y in zip(nz, nz[1:])):
            return False
    return True


def asm_to_mt(a: Sequence[Sequence[int]]) -> MonotoneTriangle:
    """Row i of the triangle lists the columns of the 1's in the i-th partial column sum."""
    if not is_asm(a):
        raise ValueError("input is not an alternating sign matrix")
    n = len(a)
    partial = [0] * n
    rows = []
    for i in range(n):
        partial = [p + x for p, x in zip(partial, a[i])]
        rows.append(tuple(j + 1 for j in range(n) if partial[j] == 1))
    return MonotoneTriangle(tuple(rows))


def mt_to_asm(m: MonotoneTriangle) -> tuple[tuple[int, ...], ...]:
    n = m.n
    if m.bottom != tuple(range(1, n + 1)):
        raise ValueError(f"bottom row must be 1..{n}, got {m.bottom}")
    prev = [0] * n
    out = []
    for row in m.rows:
        cur = [0] * n
        for c in row:
            cur[c - 1] = 1
        out.append(tuple(x - y for x, y in zip(cur, prev)))
        prev = cur
    return tuple(out)


def enumerate_asm(n: int) -> list[tuple[tuple[int, ...], ...]]:
    return [mt_to_asm(m) for m in enumerate_mt(range(1, n + 1))]


def asm_count(n: int) -> int:
    """prod_{i=0}^{n-1} (3i+1)! / (n+i)!"""
    if n < 1:
        raise ValueError("n must be positive")
    num = den = 1
    for i in range(n):
        num *= factorial(3 * i + 1)
        den *= factorial(n + i)
    q, r = divmod(num, den)
    assert r == 0
    return q


# -- monotone triangles ---------------------------------------------------------


def _rows_above(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Strictly increasing rows interlacing ``row`` from above."""
    m = len(row) - 1
    cur: list[int] = []

    def rec(j: int) -> Iterator[tuple[int, ...]]:
        if j == m:
            yield tuple(cur)
            return
        lo = row[j] if not cur else max(row[j], cur[-1] + 1)
        for x in range(lo, row[j + 1] + 1):
            cur.append(x)
            yield from rec(j + 1)
            cur.pop()

    yield from rec(0)


def enumerate_mt(bottom: Sequence[int]) -> list[MonotoneTriangle]:
    bottom = tuple(bottom)
    if not _strictly_increasing(bottom):
        raise ValueError(f"bottom row {bottom} is not strictly increasing")
    if not bottom:
        return [MonotoneTriangle(())]
    out: list[MonotoneTriangle] = []

    def rec(stack: list[tuple[int, ...]]) -> None:
        top = stack[-1]
        if len(top) == 1:
            out.append(MonotoneTriangle(tuple(reversed(stack))))
            return
        for above in _rows_above(top):
            stack.append(above)
            rec(stack)
            stack.pop()

    rec([bottom])
    return out


def mt_statistics(m: MonotoneTriangle) -> Statistics:
    rows = m.rows
    n = m.n
    s, l, r = [], [], []
    for i in range(n - 1):
        si = li = ri = 0
        for j, a in enumerate(rows[i]):
            left, right = rows[i + 1][j], rows[i + 1][j + 1]
            if a == left:
                li += 1
            elif a == right:
                ri += 1
            else:
                si += 1
        s.append(si)
        l.append(li)
        r.append(ri)
    d = []
    for i in range(1, n + 1):
        extra = (r[i - 2] - l[i - 2]) if i >= 2 else 0
        d.append(m.row_sum(i) - m.row_sum(i - 1) + extra)
    return Statistics(tuple(s), tuple(l), tuple(r), tuple(d))


def mt_weight_w0(m: MonotoneTriangle, ring: Ring | None = None) -> LaurentPoly:
    ring = ring or Ring(m.n)
    st = mt_statistics(m)
    out = ring.monomial(u=st.total_r, v=st.total_l, x=st.d)
    for i in range(2, m.n + 1):
        e = st.s[i - 2]
        if e:
            out = out * (ring.w + ring.u * ring.x(i) + ring.v * ring.x(i, -1)) ** e
    return out


def gf_mt_enum(bottom: Sequence[int], ring: Ring | None = None) -> LaurentPoly:
    """Sum of W0 over all monotone triangles with the given bottom row."""
    bottom = tuple(bottom)
    ring = ring or Ring(len(bottom))
    return ring.sum(mt_weight_w0(m, ring) for m in enumerate_mt(bottom))


# -- arrowed monotone triangles -------------------------------------------------


def _allowed_decorations(m: MonotoneTriangle, i: int, j: int) -> tuple[str, ...]:
    """Decorations permitted on entry (i, j) (0-based) of an arrowed triangle."""
    rows = m.rows
    a = rows[i][j]
    if i > 0 and j > 0 and rows[i - 1][j - 1] == a:
        return (NE,)
    if i > 0 and j < i and rows[i - 1][j] == a:
        return (NW,)
    return _ARROWS


def arrowings(m: MonotoneTriangle) -> list[ArrowedMT]:
    cells = [(i, j) for i in range(m.n) for j in range(i + 1)]
    choices = [_allowed_decorations(m, i, j) for i, j in cells]
    out = []
    for combo in product(*choices):
        it = iter(combo)
        decs = tuple(tuple(next(it) for _ in range(i + 1)) for i in range(m.n))
        out.append(ArrowedMT(m, decs))
    return out


def enumerate_amt(bottom: Sequence[int]) -> list[ArrowedMT]:
    return [a for m in enumerate_mt(bottom) for a in arrowings(m)]


def amt_exponents(a: ArrowedMT) -> tuple[int, ...]:
    """Exponent vector (u, v, w, X_1..X_n) of the weight under (u, v, w, 0)."""
    x = []
    counts = {NE: 0, NW: 0, BOTH: 0, EMPTY: 0}
    for i in range(1, a.n + 1):
        decs = a.decorations[i - 1]
        for d in decs:
            counts[d] += 1
        x.append(a.triangle.row_sum(i) - a.triangle.row_sum(i - 1) + decs.count(NE) - decs.count(NW))
    if counts[EMPTY]:
        raise ValueError("empty decorations carry no (u, v, w) monomial")
    return (counts[NE], counts[NW], counts[BOTH], *x)


def amt_weight(a: ArrowedMT, dw: DecorWeights | None = None, ring: Ring | None = None) -> LaurentPoly:
    """Monomial weight of an (extended) arrowed monotone triangle."""
    n = a.n
    if dw is None:
        ring = ring or Ring(n)
        dw = standard_weights(ring)
    ring = ring or Ring(dw.ring_order() or n)
    table = {NE: dw.ne, NW: dw.nw, BOTH: dw.both, EMPTY: dw.empty}
    x = [0] * ring.n
    counts = dict.fromkeys(table, 0)
    for i in range(1, n + 1):
        decs = a.decorations[i - 1]
        x[i - 1] = a.triangle.row_sum(i) - a.triangle.row_sum(i - 1) + decs.count(NE) - decs.count(NW)
        for d in decs:
            counts[d] += 1
    coeff = ring.one
    for d, c in counts.items():
        if c:
            coeff = coeff * table[d] ** c
    return coeff * ring.x_monomial(x)


def gf_amt_enum(bottom: Sequence[int], dw: DecorWeights | None = None, ring: Ring | None = None) -> LaurentPoly:
    """Generating function of arrowed monotone triangles by enumeration.

    Entries decorate independently once the triangle is fixed, so the sum
    over arrowings is computed as a product of per-entry decoration sums.
    """
    bottom = tuple(bottom)
    n = len(bottom)
    if dw is None:
        ring = ring or Ring(n)
        dw = standard_weights(ring)
    ring = ring or Ring(dw.ring_order() or n)
    wt = {NE: dw.ne, NW: dw.nw, BOTH: dw.both}
    entry_sum = {}
    for i in range(1, n + 1):
        for key in ((NE,), (NW,), _ARROWS):
            entry_sum[(i, key)] = ring.sum(wt[d] * ring.x(i, DECOR_ST[d][1] - DECOR_ST[d][0]) for d in key)
    acc = ring.zero
    for m in enumerate_mt(bottom):
        x = [m.row_sum(i) - m.row_sum(i - 1) for i in range(1, n + 1)] + [0] * (ring.n - n)
        term = ring.x_monomial(x)
        for i in range(n):
            for j in range(i + 1):
                term = term * entry_sum[(i + 1, _allowed_decorations(m, i, j))]
        acc = acc + term
    return acc


# -- down-arrowed monotone triangles ---------------------------------------------

DOWN_LEFT, DOWN_RIGHT, DOWN = "sw", "se", "down"


def down_arrowings(m: MonotoneTriangle) -> list[tuple[tuple[str | None, ...], ...]]:
    """All choices of a down-arrow for each special entry (None for non-special entries)."""
    rows = m.rows
    cells = []
    for i in range(m.n - 1):
        for j, a in enumerate(rows[i]):
            special = rows[i + 1][j] < a < rows[i + 1][j + 1]
            cells.append((DOWN_LEFT, DOWN_RIGHT, DOWN) if special else (None,))
    if m.n:
        cells.extend([(None,)] * m.n)
    out = []
    for combo in product(*cells):
        it = iter(combo)
        out.append(tuple(tuple(next(it) for _ in range(i + 1)) for i in range(m.n)))
    return out


def damt_weight(m: MonotoneTriangle, arrows, ring: Ring | None = None) -> LaurentPoly:
    """Monomial weight of a down-arrowed triangle: a special entry in row i-1 adds
    v X_i^-1 (south-west), u X_i (south-east) or w (down)."""
    ring = ring or Ring(m.n)
    st = mt_statistics(m)
    u, v, w = st.total_r, st.total_l, 0
    x = list(st.d) + [0] * (ring.n - m.n)
    for i, row in enumerate(arrows[:-1] if arrows else ()):
        for d in row:
            if d == DOWN_LEFT:
                v += 1
                x[i + 1] -= 1
            elif d == DOWN_RIGHT:
                u += 1
                x[i + 1] += 1
            elif d == DOWN:
                w += 1
    return ring.monomial(u=u, v=v, w=w, x=x)


def gf_damt_enum(bottom: Sequence[int], ring: Ring | None = None) -> LaurentPoly:
    bottom = tuple(bottom)
    ring = ring or Ring(len(bottom))
    return ring.sum(damt_weight(m, arr, ring) for m in enumerate_mt(bottom) for arr in down_arrowings(m))


# -- the signed recursion for extended triangles ----------------------------------


def signed_interval(a: int, b: int) -> tuple[int, range]:
    """The signed interval [[a, b]] as (sign, range)."""
    if a <= b:
        return 1, range(a, b + 1)
    if b + 1 <= a - 1:
        return -1, range(b + 1, a)
    return 1, range(0)


class _Recursion:
    """alpha(k) for a fixed finite weight table, memoized on bottom rows."""

    def __init__(self, table: Mapping[tuple[int, int], Coeff], ring: Ring):
        self.ring = ring
        self.entries = []
        for (s, t), c in sorted(table.items()):
            c = c if isinstance(c, LaurentPoly) else ring.const(c)
            if c:
                self.entries.append((s, t, c))
        self.alpha = lru_cache(maxsize=None)(self._alpha)
        self.inner = lru_cache(maxsize=None)(self._inner)

    def _alpha(self, k: tuple[int, ...]) -> LaurentPoly:
        ring = self.ring
        m = len(k)
        if m == 0:
            return ring.one
        if m == 1:
            return ring.sum(c * ring.x(1, k[0] + t - s) for s, t, c in self.entries)
        # group decoration tuples by the intervals they induce and the X_m exponent
        grouped: dict[tuple, LaurentPoly] = {}
        for combo in product(self.entries, repeat=m):
            shift = sum(t - s for s, t, _ in combo)
            bounds = tuple((k[j] + combo[j][1], k[j + 1] - combo[j + 1][0]) for j in range(m - 1))
            coeff = combo[0][2]
            for e in combo[1:]:
                coeff = coeff * e[2]
            key = (bounds, shift)
            grouped[key] = grouped[key] + coeff if key in grouped else coeff
        acc = ring.zero
        base = sum(k)
        for (bounds, shift), coeff in grouped.items():
            if not coeff:
                continue
            inner = self.inner(bounds, m)
            if inner:
                acc = acc + coeff * inner.shift(_xshift(ring.n, m, base + shift))
        return acc

    def _inner(self, bounds: tuple[tuple[int, int], ...], m: int) -> LaurentPoly:
        """sum over l_j in [[a_j, b_j]] of X_m^(-sum l) alpha(l)."""
        ring = self.ring
        sign = 1
        ranges = []
        for a, b in bounds:
            sg, rg = signed_interval(a, b)
            if not rg:
                return ring.zero
            sign *= sg
            ranges.append(rg)
        acc = ring.zero
        for l in product(*ranges):
            sub = self.alpha(l)
            if sub:
                acc = acc + sub.shift(_xshift(ring.n, m, -sum(l)))
        return acc if sign > 0 else -acc


def _xshift(n: int, i: int, e: int) -> tuple[int, ...]:
    x = [0] * n
    x[i - 1] = e
    return (0, 0, 0, *x)


def gf_generalized_recursion(
    k: Sequence[int], table: Mapping[tuple[int, int], Coeff], ring: Ring | None = None
) -> LaurentPoly:
    """Signed recursion for generalized extended arrowed monotone triangles.

    An entry decorated (s, t) has X-exponent shift t - s; the entry above and to
    its right lies in [[b + t_b, c - s_c]] where b, c are its lower neighbours.
    """
    k = tuple(k)
    orders = {c.n for c in table.values() if isinstance(c, LaurentPoly)}
    ring = ring or Ring(max([len(k), *orders]))
    return _Recursion(table, ring).alpha(k)


def gf_extended_recursion(k: Sequence[int], dw: DecorWeights | None = None, ring: Ring | None = None) -> LaurentPoly:
    k = tuple(k)
    if dw is None:
        ring = ring or Ring(len(k))
        dw = standard_weights(ring)
    return gf_generalized_recursion(k, dw.table(), ring)


# -- serialization ---------------------------------------------------------------


def triangle_from_json(obj) -> MonotoneTriangle | ArrowedMT:
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    if obj and obj[0] and isinstance(obj[0][0], dict):
        rows = tuple(tuple(c["value"] for c in r) for r in obj)
        decs = tuple(tuple(c["decoration"] for c in r) for r in obj)
        return ArrowedMT(MonotoneTriangle(rows), decs)
    return MonotoneTriangle(tuple(tuple(r) for r in obj))
