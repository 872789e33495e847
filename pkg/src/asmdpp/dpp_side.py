"""Descending plane partitions and the set-valued near-balanced plane partitions.

Conventions
-----------
* A shifted plane partition is a tuple of rows; row i (0-based) starts in
  column i.  Rows are weakly decreasing, columns strictly decreasing.
* A near-balanced shape is stored in Frobenius coordinates ``(arms, legs)``.
* An SBCSPP is a left-justified tuple of rows; every cell is a tuple of
  integers sorted in decreasing order (so ``cell[0]`` is its maximum).
  Cells strictly above the diagonal are singletons.
* A DPP pair ``(L, R)`` keeps both as shifted arrays: ``L`` has set-valued
  cells (decreasing tuples), ``R`` integer cells.  ``R`` may carry a final
  empty row when the last row of ``L`` has a single cell.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterator, Sequence

from .laurent import LaurentPoly, Ring

__all__ = [
    "DomainError",
    "is_csspp",
    "is_dpp",
    "enumerate_dpp",
    "dpp_to_class2",
    "class2_to_dpp",
    "frobenius",
    "shape_from_frobenius",
    "is_near_balanced",
    "shape_weight_exponent",
    "enumerate_near_balanced",
    "Sbcspp",
    "enumerate_cspp",
    "enumerate_bcspp",
    "bcspp_weight",
    "gf_bcspp",
    "enumerate_sbcspp",
    "sbcspp_weight",
    "gf_sbcspp",
    "principal",
    "fiber",
    "in_domain_a",
    "involution_a",
    "in_domain_b",
    "involution_b",
    "is_dpp_sbcspp",
    "dpp_sbcspp_to_dpp",
    "DppPair",
    "enumerate_dpp_pairs",
    "pair_weight",
    "gf_dpp_pairs",
    "sbcspp_from_pair",
    "pair_from_sbcspp",
    "sign_value",
]


class DomainError(ValueError):
    """Input lies outside the domain of the requested map."""


Shifted = tuple[tuple[int, ...], ...]


# -- shifted plane partitions and DPPs ---------------------------------------------


def is_csspp(rows: Sequence[Sequence[int]]) -> bool:
    """Column strict shifted plane partition with positive entries."""
    for i, row in enumerate(rows):
        if not row or any(x < 1 for x in row):
            return False
        if any(a < b for a, b in zip(row, row[1:])):
            return False
        if i > 0:
            if len(row) >= len(rows[i - 1]):
                return False
            above = rows[i - 1]
            # cell (i, i+c) sits below (i-1, i+c) = above[c+1]
            for c, x in enumerate(row):
                if not x < above[c + 1]:
                    return False
    return True


def is_dpp(rows: Sequence[Sequence[int]]) -> bool:
    if not is_csspp(rows):
        return False
    prev = None
    for row in rows:
        if not row[0] > len(row):
            return False
        if prev is not None and not row[0] <= prev:
            return False
        prev = len(row)
    return True


def enumerate_dpp(n: int) -> list[Shifted]:
    """All DPPs with parts at most n, including the empty one."""
    out: list[Shifted] = []

    def fill_row(i: int, length: int, above: tuple[int, ...] | None, first_max: int) -> Iterator[tuple[int, ...]]:
        cur: list[int] = []

        def rec(c: int) -> Iterator[tuple[int, ...]]:
            if c == length:
                yield tuple(cur)
                return
            hi = cur[-1] if cur else first_max
            if above is not None:
                hi = min(hi, above[c + 1] - 1)
            lo = length + 1 if c == 0 else 1
            for x in range(hi, lo - 1, -1):
                cur.append(x)
                yield from rec(c + 1)
                cur.pop()

        yield from rec(0)

    def rec(rows: list[tuple[int, ...]]) -> None:
        out.append(tuple(rows))
        prev_len = len(rows[-1]) if rows else None
        max_len = (prev_len - 1) if rows else n
        for length in range(1, max_len + 1):
            first_max = n if not rows else min(n, prev_len)
            above = rows[-1] if rows else None
            for row in fill_row(len(rows), length, above, first_max):
                rows.append(row)
                rec(rows)
                rows.pop()

    rec([])
    return sorted(out, key=lambda d: (sum(len(r) for r in d), d))


def dpp_to_class2(d: Sequence[Sequence[int]]) -> Shifted:
    """Add one to every part and pad row i with pi_ii - lambda_i - 1 ones."""
    if not is_dpp(d):
        raise DomainError("not a descending plane partition")
    out = []
    for row in d:
        pad = row[0] - len(row) - 1
        out.append(tuple(x + 1 for x in row) + (1,) * pad)
    return tuple(out)


def class2_to_dpp(c: Sequence[Sequence[int]]) -> Shifted:
    if not is_csspp(c) or any(row[0] != len(row) + 2 for row in c):
        raise DomainError("not a column strict shifted plane partition of class 2")
    out = tuple(tuple(x - 1 for x in row if x > 1) for row in c)
    if any(not row for row in out):
        raise DomainError("class-2 row consisting of ones only")
    return out


# -- shapes -----------------------------------------------------------------------


def frobenius(lengths: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lengths = [x for x in lengths if x > 0]
    conj = [sum(1 for x in lengths if x > j) for j in range(lengths[0])] if lengths else []
    durfee = sum(1 for i, x in enumerate(lengths) if x > i)
    arms = tuple(lengths[i] - i - 1 for i in range(durfee))
    legs = tuple(conj[i] - i - 1 for i in range(durfee))
    return arms, legs


def shape_from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> tuple[int, ...]:
    arms, legs = tuple(arms), tuple(legs)
    l = len(arms)
    if len(legs) != l:
        raise ValueError("arms and legs differ in length")
    if any(x < 0 for x in arms + legs) or any(a <= b for a, b in zip(arms, arms[1:])) or any(
        a <= b for a, b in zip(legs, legs[1:])
    ):
        raise ValueError("Frobenius coordinates must be strictly decreasing and nonnegative")
    nrows = legs[0] + 1 if l else 0
    rows = []
    for r in range(nrows):
        if r < l:
            rows.append(r + 1 + arms[r])
        else:
            rows.append(sum(1 for j in range(l) if legs[j] + j >= r))
    return tuple(rows)


def is_near_balanced(arms: Sequence[int], legs: Sequence[int]) -> bool:
    return all(a in (b, b + 1) for a, b in zip(arms, legs))


def shape_weight_exponent(arms: Sequence[int], legs: Sequence[int]) -> int:
    """Exponent of w in W(lambda): the number of balanced hooks."""
    return sum(1 for a, b in zip(arms, legs) if a == b)


def enumerate_near_balanced(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Near-balanced shapes with at most n rows, ordered by (Durfee length, arms)."""
    out = []

    def rec(arms: list[int], legs: list[int]) -> None:
        out.append((tuple(arms), tuple(legs)))
        top = legs[-1] - 1 if legs else n - 1
        for b in range(top, -1, -1):
            for a in (b, b + 1):
                if arms and a >= arms[-1]:
                    continue
                arms.append(a)
                legs.append(b)
                rec(arms, legs)
                arms.pop()
                legs.pop()

    rec([], [])
    return sorted(out, key=lambda s: (len(s[0]), s[0], s[1]))


# -- SBCSPPs ------------------------------------------------------------------------

Cell = tuple[int, ...]


@dataclass(frozen=True)
class Sbcspp:
    rows: tuple[tuple[Cell, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(tuple(sorted(set(c), reverse=True)) for c in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(not r for r in rows):
            raise ValueError("empty row")
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise ValueError("row lengths must weakly decrease")
        if any(not c for r in rows for c in r):
            raise ValueError("cells must be nonempty sets")

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int | Sequence[int]]]) -> "Sbcspp":
        return cls(tuple(tuple((c,) if isinstance(c, int) else tuple(c) for c in r) for r in rows))

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return frobenius(self.lengths)

    @property
    def durfee(self) -> int:
        return len(self.shape[0])

    def cells(self) -> Iterator[tuple[int, int, Cell]]:
        for i, r in enumerate(self.rows):
            for j, c in enumerate(r):
                yield i, j, c

    def maxima(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c[0] for c in r) for r in self.rows)

    def is_valid(self, n: int) -> bool:
        arms, legs = self.shape
        if not is_near_balanced(arms, legs):
            return False
        for i, j, c in self.cells():
            if any(not 1 <= x <= n for x in c):
                return False
            if j > i and len(c) != 1:
                return False
            if j > 0 and c[0] > self.rows[i][j - 1][0]:
                return False
            if i > 0 and not c[0] < self.rows[i - 1][j][-1]:
                return False
        return True

    def render(self) -> str:
        text = [[",".join(map(str, c)) for c in r] for r in self.rows]
        width = max((len(t) for r in text for t in r), default=1)
        return "\n".join(" ".join(t.rjust(width) for t in r) for r in text)

    def to_json_obj(self) -> dict:
        arms, legs = self.shape
        return {"arms": list(arms), "legs": list(legs), "filling": [[list(c) for c in r] for r in self.rows]}


def enumerate_cspp(lengths: Sequence[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Column strict plane partitions of the given (left-justified) shape, entries in 1..n.

    Cells are filled column by column, top to bottom.
    """
    lengths = tuple(lengths)
    if not lengths:
        yield ()
        return
    ncols = lengths[0]
    col_heights = [sum(1 for x in lengths if x > j) for j in range(ncols)]
    grid = [[0] * lengths[i] for i in range(len(lengths))]
    order = [(i, j) for j in range(ncols) for i in range(col_heights[j])]

    def rec(pos: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if pos == len(order):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = order[pos]
        hi = n
        if i > 0:
            hi = min(hi, grid[i - 1][j] - 1)
        if j > 0:
            hi = min(hi, grid[i][j - 1])
        lo = col_heights[j] - i  # room for the strictly smaller cells below
        for x in range(hi, lo - 1, -1):
            grid[i][j] = x
            yield from rec(pos + 1)
        grid[i][j] = 0

    yield from rec(0)


def _shape_lengths(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    return [(a, b, shape_from_frobenius(a, b)) for a, b in enumerate_near_balanced(n)]


def enumerate_bcspp(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Column strict plane partitions of near-balanced shape with parts in 1..n."""
    return [p for _, _, lengths in _shape_lengths(n) for p in enumerate_cspp(lengths, n)]


def bcspp_weight(d: Sequence[Sequence[int]], n: int, ring: Ring | None = None) -> LaurentPoly:
    """Non-monomial weight; S_j excludes every column-j entry on or below the diagonal."""
    ring = ring or Ring(n)
    lengths = [len(r) for r in d]
    arms, legs = frobenius(lengths)
    on_below = sum(1 for i, r in enumerate(d) for j in range(len(r)) if j <= i)
    above = sum(lengths) - on_below
    x = [0] * ring.n
    for r in d:
        for val in r:
            x[val - 1] += 1
    wt = ring.monomial(
        u=above, v=comb(n + 1, 2) - on_below, w=shape_weight_exponent(arms, legs), x=x
    )
    for j in range(len(arms)):
        diag = d[j][j]
        column = {d[i][j] for i in range(j, len(d)) if len(d[i]) > j}
        for e in range(1, diag + 1):
            if e not in column:
                wt = wt * (ring.x(e) * ring.monomial(v=-1, w=1) + 1)
    return wt


def gf_bcspp(n: int, ring: Ring | None = None) -> LaurentPoly:
    ring = ring or Ring(n)
    return ring.sum(bcspp_weight(d, n, ring) for d in enumerate_bcspp(n))


def _open_subsets(lo: int, hi: int) -> list[tuple[int, ...]]:
    """All subsets of the open interval (lo, hi)."""
    vals = list(range(hi - 1, lo, -1))
    return [c for k in range(len(vals) + 1) for c in combinations(vals, k)]


def _max_below(maxima: Sequence[Sequence[int]], i: int, j: int) -> int:
    return maxima[i + 1][j] if i + 1 < len(maxima) and len(maxima[i + 1]) > j else 0


def fiber(p: Sbcspp) -> list[Sbcspp]:
    """All SBCSPPs whose principal part is ``p`` (which must be principal)."""
    if any(len(c) != 1 for _, _, c in p.cells()):
        raise DomainError("fiber is defined over principal objects")
    maxima = p.maxima()
    choices = []
    for i, j, c in p.cells():
        if j <= i:
            choices.append(_open_subsets(_max_below(maxima, i, j), c[0]))
        else:
            choices.append([()])
    out = []
    for combo in product(*choices):
        it = iter(combo)
        rows = []
        for i, r in enumerate(maxima):
            rows.append(tuple((m,) + next(it) for m in r))
        out.append(Sbcspp(tuple(rows)))
    return out


def enumerate_sbcspp(n: int) -> list[Sbcspp]:
    out = []
    for _, _, lengths in _shape_lengths(n):
        for filling in enumerate_cspp(lengths, n):
            out.extend(fiber(Sbcspp.from_ints(filling)))
    return out


def sbcspp_weight(d: Sbcspp, n: int, ring: Ring | None = None) -> LaurentPoly:
    ring = ring or Ring(n)
    arms, legs = d.shape
    above = cells_on_below = entries_on_below = entries = 0
    x = [0] * ring.n
    for i, j, c in d.cells():
        entries += len(c)
        if j > i:
            above += 1
        else:
            cells_on_below += 1
            entries_on_below += len(c)
        for val in c:
            x[val - 1] += 1
    cells = above + cells_on_below
    return ring.monomial(
        u=above,
        v=comb(n + 1, 2) - entries_on_below,
        w=shape_weight_exponent(arms, legs) + entries - cells,
        x=x,
    )


def gf_sbcspp(n: int, ring: Ring | None = None) -> LaurentPoly:
    ring = ring or Ring(n)
    return ring.sum(sbcspp_weight(d, n, ring) for d in enumerate_sbcspp(n))


def sign_value(p: LaurentPoly):
    """Evaluate at u = v = 1, w = -1, X_i = 1."""
    values = {"u": 1, "v": 1, "w": -1}
    values.update({f"X{i}": 1 for i in range(1, p.n + 1)})
    return p.substitute(values)


# -- the two involutions -----------------------------------------------------------


def principal(d: Sbcspp) -> Sbcspp:
    return Sbcspp(tuple(tuple((c[0],) for c in r) for r in d.rows))


def _toggle_cell(d: Sbcspp) -> tuple[int, int, int] | None:
    """(row, column, value) toggled by involution (a), or None off its domain."""
    maxima = d.maxima()
    ncols = len(maxima[0]) if maxima else 0
    for j in range(ncols):
        hits = []
        for i in range(len(maxima)):
            if len(maxima[i]) > j and j <= i:
                below = _max_below(maxima, i, j)
                if maxima[i][j] - below >= 2:
                    hits.append((i, below))
        if hits:
            i, below = hits[-1]
            return i, j, below + 1
    return None


def in_domain_a(d: Sbcspp) -> bool:
    return _toggle_cell(d) is not None


def involution_a(d: Sbcspp) -> Sbcspp:
    """Toggle the least admissible integer in the bottommost eligible cell of the
    leftmost column that admits a set of size at least two."""
    hit = _toggle_cell(d)
    if hit is None:
        raise DomainError("principal part has no other preimage")
    i, j, val = hit
    rows = [list(r) for r in d.rows]
    cell = set(rows[i][j])
    cell ^= {val}
    rows[i][j] = tuple(cell)
    return Sbcspp(tuple(tuple(r) for r in rows))


def _unique_preimage(d: Sbcspp) -> bool:
    """Principal and each diagonal entry t has t-1, ..., 1 below it in its column."""
    if any(len(c) != 1 for _, _, c in d.cells()):
        return False
    maxima = d.maxima()
    for j in range(d.durfee):
        col = [maxima[i][j] for i in range(j, len(maxima)) if len(maxima[i]) > j]
        if col != list(range(col[0], 0, -1)):
            return False
    return True


def _ones_above_diagonal(d: Sbcspp) -> list[int]:
    return [i for i, j, c in d.cells() if j > i and c[0] == 1]


def in_domain_b(d: Sbcspp) -> bool:
    if not _unique_preimage(d):
        return False
    arms, legs = d.shape
    return bool(_ones_above_diagonal(d)) or any(a != b + 1 for a, b in zip(arms, legs))


def _topmost_one_row(d: Sbcspp) -> int | None:
    for i, r in enumerate(d.rows):
        if any(1 in c for c in r):
            return i
    return None


def involution_b(d: Sbcspp) -> Sbcspp:
    if not in_domain_b(d):
        raise DomainError("outside the domain of the second involution")
    arms, legs = d.shape
    bad = [i for i, (a, b) in enumerate(zip(arms, legs)) if a != b + 1]
    rows = [list(r) for r in d.rows]

    def remove_from_topmost() -> Sbcspp:
        t = _topmost_one_row(d)
        if rows[t][-1] != (1,):
            raise DomainError("rightmost cell of the topmost 1-row is not a 1")
        rows[t].pop()
        return Sbcspp(tuple(tuple(r) for r in rows if r))

    if not bad:
        return remove_from_topmost()
    i = bad[0]
    if any(1 in c for r in d.rows[:i] for c in r):
        return remove_from_topmost()
    rows[i].append((1,))
    return Sbcspp(tuple(tuple(r) for r in rows))


def is_dpp_sbcspp(d: Sbcspp) -> bool:
    """Survivor predicate: principal, a_i = b_i + 1, columns below the diagonal
    count down to 1, and no 1 strictly above the diagonal."""
    arms, legs = d.shape
    return (
        _unique_preimage(d)
        and all(a == b + 1 for a, b in zip(arms, legs))
        and not _ones_above_diagonal(d)
    )


def _conjugate(part: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for x in part if x > j) for j in range(part[0])) if part else ()


def dpp_sbcspp_to_dpp(d: Sbcspp) -> Shifted:
    if not is_dpp_sbcspp(d):
        raise DomainError("not a DPP-SBCSPP")
    maxima = d.maxima()
    shifted = [tuple(x - 1 for x in maxima[i][i:]) for i in range(d.durfee)]
    class2 = tuple(_conjugate(r) for r in shifted)
    if not is_csspp(class2):
        raise DomainError("row-wise conjugation did not give a column strict shifted plane partition")
    return class2_to_dpp(class2)


# -- DPP pairs ----------------------------------------------------------------------


@dataclass(frozen=True)
class DppPair:
    L: tuple[tuple[Cell, ...], ...]
    R: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        L = tuple(tuple(tuple(sorted(set(c), reverse=True)) for c in r) for r in self.L)
        R = tuple(tuple(r) for r in self.R)
        while len(R) < len(L):
            R = R + ((),)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "R", R)

    def is_valid(self, n: int) -> bool:
        L, R = self.L, self.R
        if len(R) != len(L):
            return False
        for i, (lr, rr) in enumerate(zip(L, R)):
            if not lr or len(rr) not in (len(lr), len(lr) - 1):
                return False
            if not rr and i != len(L) - 1:
                return False
            if any(not 1 <= x <= n for c in lr for x in c) or any(not 1 <= x <= n for x in rr):
                return False
            if any(a[-1] <= b[0] for a, b in zip(lr, lr[1:])):
                return False
            if any(a < b for a, b in zip(rr, rr[1:])):
                return False
            if rr and lr[0][0] < rr[0]:
                return False
            if i + 1 < len(L):
                if not rr or not rr[0] > L[i + 1][0][0]:
                    return False
                # shifted shapes: strictly shorter rows below
                if len(L[i + 1]) >= len(lr):
                    return False
                if R[i + 1] and len(R[i + 1]) >= len(rr):
                    return False
                # L columns weakly decrease on maxima: L[i+1][c] under L[i][c+1]
                if any(L[i + 1][c][0] > lr[c + 1][0] for c in range(len(L[i + 1]))):
                    return False
                # R columns strictly decrease
                if any(not R[i + 1][c] < rr[c + 1] for c in range(len(R[i + 1]))):
                    return False
        return True

    def to_json_obj(self) -> dict:
        return {"L": [[list(c) for c in r] for r in self.L], "R": [list(r) for r in self.R]}


def _set_rows(length: int, n: int) -> list[tuple[Cell, ...]]:
    """Rows of `length` nonempty sets, strictly decreasing setwise, entries in 1..n."""
    out = []
    for size in range(length, n + 1):
        for subset in combinations(range(n, 0, -1), size):
            for cuts in combinations(range(1, size), length - 1):
                bounds = (0,) + cuts + (size,)
                out.append(tuple(subset[bounds[k]:bounds[k + 1]] for k in range(length)))
    return out


@lru_cache(maxsize=None)
def _weakly_decreasing(length: int, n: int) -> tuple[tuple[int, ...], ...]:
    if length == 0:
        return ((),)
    out = []
    for first in range(n, 0, -1):
        for rest in _weakly_decreasing(length - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_dpp_pairs(n: int) -> list[DppPair]:
    out: list[DppPair] = []
    set_rows = {k: _set_rows(k, n) for k in range(1, n + 1)}

    def rec(L: list, R: list) -> None:
        out.append(DppPair(tuple(L), tuple(R)))
        if R and not R[-1]:
            return
        max_len = len(L[-1]) - 1 if L else n
        for llen in range(max_len, 0, -1):
            for rlen in (llen, llen - 1):
                if R and rlen >= len(R[-1]):
                    continue
                for lrow in set_rows[llen]:
                    if L:
                        if not R[-1][0] > lrow[0][0]:
                            continue
                        prev = L[-1]
                        if any(lrow[c][0] > prev[c + 1][0] for c in range(llen)):
                            continue
                    for rrow in _weakly_decreasing(rlen, lrow[0][0]):
                        if R and any(not rrow[c] < R[-1][c + 1] for c in range(rlen)):
                            continue
                        L.append(lrow)
                        R.append(rrow)
                        rec(L, R)
                        L.pop()
                        R.pop()

    rec([], [])
    return out


def pair_weight(p: DppPair, n: int, ring: Ring | None = None) -> LaurentPoly:
    ring = ring or Ring(n)
    x = [0] * ring.n
    w = v = u = 0
    for lr, rr in zip(p.L, p.R):
        if len(rr) == len(lr) - 1:
            w += 1
        w += sum(len(c) for c in lr) - len(lr)
        for c in lr:
            for e in c:
                x[e - 1] += 1
                v -= 1
        for e in rr:
            x[e - 1] += 1
            u += 1
    return ring.monomial(u=u, v=comb(n + 1, 2) + v, w=w, x=x)


def gf_dpp_pairs(n: int, ring: Ring | None = None) -> LaurentPoly:
    ring = ring or Ring(n)
    return ring.sum(pair_weight(p, n, ring) for p in enumerate_dpp_pairs(n))


def sbcspp_from_pair(p: DppPair) -> Sbcspp | None:
    """Reflect L along the diagonal and merge it with R.

    Row i of R fills cells (i, i+1), (i, i+2), ...; row i of L fills the
    diagonal cell (i, i) and the cells (i+1, i), (i+2, i), ... below it.
    Returns None for the empty pair.
    """
    L, R = p.L, p.R
    if not L:
        return None
    cells: dict[tuple[int, int], Cell] = {}
    for i, (lr, rr) in enumerate(zip(L, R)):
        for c, val in enumerate(rr):
            cells[(i, i + 1 + c)] = (val,)
        for c, s in enumerate(lr):
            cells[(i + c, i)] = s
    nrows = max(i for i, _ in cells) + 1
    rows = []
    for i in range(nrows):
        cols = sorted(j for (r, j) in cells if r == i)
        if cols != list(range(len(cols))):
            raise DomainError("merged cells do not form a Young diagram")
        rows.append(tuple(cells[(i, j)] for j in cols))
    d = Sbcspp(tuple(rows))
    return d


def pair_from_sbcspp(d: Sbcspp | None) -> DppPair:
    if d is None:
        return DppPair((), ())
    arms, legs = d.shape
    L, R = [], []
    for i in range(len(arms)):
        R.append(tuple(d.rows[i][i + 1 + c][0] for c in range(arms[i])))
        L.append(tuple(d.rows[i + c][i] for c in range(legs[i] + 1)))
    return DppPair(tuple(L), tuple(R))


def sbcspp_from_json(obj) -> Sbcspp:
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    return Sbcspp(tuple(tuple(tuple(c) for c in r) for r in obj["filling"]))
