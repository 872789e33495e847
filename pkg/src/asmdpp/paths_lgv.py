"""Classical and extended DPP lattice paths, and the path determinant.

Step codes: ``R`` right, ``U`` up, ``D`` down, ``G`` the final diagonal (1, -1).
In expanded families an up-step strictly left of the y-axis is either ``U``
(weight 1) or the marked copy ``Uw`` (weight X_m v^-1 w).  In collapsed
families only ``U`` occurs and it carries X_m v^-1 w + 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .dpp_side import DomainError, DppPair, Shifted, class2_to_dpp, dpp_to_class2, is_dpp
from .laurent import LaurentPoly, Ring, determinant
from .symfunc import e_sym, h_ext

__all__ = [
    "Path",
    "PathFamily",
    "dpp_to_paths",
    "paths_to_dpp",
    "enumerate_classical_families",
    "single_paths",
    "path_weight",
    "enumerate_extended_families",
    "family_weight",
    "gf_paths_enum",
    "family_to_dpp_pair",
    "dpp_pair_to_family",
    "cancel_diagonal",
    "survivor_to_classical",
    "single_path_gf",
    "single_path_gf_enum",
    "w_matrix",
    "gf_lgv",
    "lgv_subset",
    "gf_family_subset",
    "verify_identity",
    "family_from_json",
]

STEP_VECTORS = {"R": (1, 0), "U": (0, 1), "Uw": (0, 1), "D": (0, -1), "G": (1, -1)}


@dataclass(frozen=True)
class Path:
    index: int
    start: tuple[int, int]
    steps: tuple[str, ...]

    def vertices(self) -> list[tuple[int, int]]:
        x, y = self.start
        out = [(x, y)]
        for s in self.steps:
            dx, dy = STEP_VECTORS[s]
            x, y = x + dx, y + dy
            out.append((x, y))
        return out

    @property
    def end(self) -> tuple[int, int]:
        return self.vertices()[-1]

    def to_json_obj(self) -> dict:
        return {"i": self.index, "steps": list(self.steps)}


@dataclass(frozen=True)
class PathFamily:
    n: int
    paths: tuple[Path, ...]
    extended: bool = True

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(p.index for p in self.paths)

    def is_nonintersecting(self) -> bool:
        seen: set[tuple[int, int]] = set()
        for p in self.paths:
            vs = set(p.vertices())
            if vs & seen:
                return False
            seen |= vs
        return True

    def to_json_obj(self) -> dict:
        return {"n": self.n, "extended": self.extended, "paths": [p.to_json_obj() for p in self.paths]}

    def render(self) -> str:
        """Vertices labelled by the last digit of their path index, origin marked '+'."""
        pts = {}
        for p in self.paths:
            for v in p.vertices():
                pts[v] = str(p.index % 10)
        xs = [x for x, _ in pts] + [0]
        ys = [y for _, y in pts] + [0]
        lines = []
        for y in range(max(ys), min(ys) - 1, -1):
            row = []
            for x in range(min(xs), max(xs) + 1):
                row.append(pts.get((x, y), "+" if (x, y) == (0, 0) else "."))
            lines.append(" ".join(row))
        return "\n".join(lines)


def family_from_json(obj) -> PathFamily:
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    ext = obj.get("extended", True)
    paths = []
    for p in obj["paths"]:
        i = p["i"]
        start = (-i, i - 2) if ext else (0, i - 2)
        paths.append(Path(i, start, tuple(p["steps"])))
    return PathFamily(obj["n"], tuple(sorted(paths, key=lambda q: q.index)), ext)


# -- classical paths ------------------------------------------------------------------


def _class2_row_to_path(row: Sequence[int]) -> Path:
    i = len(row) + 1
    downs = sorted(c - 1 for c in row)  # x-positions, the last one is the extra step
    steps: list[str] = []
    x = 0
    for d in downs[:-1]:
        steps.extend("R" * (d - x))
        steps.append("D")
        x = d
    steps.extend("R" * (i - x))
    return Path(i, (0, i - 2), tuple(steps))


def dpp_to_paths(d: Shifted, n: int) -> PathFamily:
    if not is_dpp(d) or any(x > n for r in d for x in r):
        raise DomainError(f"not a DPP with parts at most {n}")
    paths = tuple(_class2_row_to_path(r) for r in reversed(dpp_to_class2(d)))
    return PathFamily(n, paths, extended=False)


def paths_to_dpp(f: PathFamily) -> Shifted:
    if f.extended:
        raise DomainError("expected a classical family")
    rows = []
    for p in sorted(f.paths, key=lambda q: -q.index):
        xs = [x for (x, _), s in zip(p.vertices(), p.steps) if s == "D"]
        rows.append(tuple(sorted((x + 1 for x in xs + [p.index]), reverse=True)))
    return class2_to_dpp(tuple(rows))


def _classical_single(i: int, n: int) -> list[Path]:
    # from (0, i-2) to (i, 0) with R and D; i-2 downs placed among i rights
    out = []
    for pos in combinations(range(2 * i - 2), i - 2):
        steps = ["R"] * (2 * i - 2)
        for k in pos:
            steps[k] = "D"
        out.append(Path(i, (0, i - 2), tuple(steps)))
    return out


def enumerate_classical_families(n: int) -> list[PathFamily]:
    singles = {i: _classical_single(i, n) for i in range(2, n + 1)}
    out = []
    for size in range(n):
        for S in combinations(range(2, n + 1), size):
            out.extend(PathFamily(n, fam, False) for fam in _disjoint_products([singles[i] for i in S]))
    return out


def _disjoint_products(lists: Sequence[Sequence[Path]]) -> Iterator[tuple[Path, ...]]:
    verts = [[set(p.vertices()) for p in lst] for lst in lists]

    def rec(k: int, used: set, chosen: list) -> Iterator[tuple[Path, ...]]:
        if k == len(lists):
            yield tuple(chosen)
            return
        for p, vs in zip(lists[k], verts[k]):
            if vs & used:
                continue
            chosen.append(p)
            yield from rec(k + 1, used | vs, chosen)
            chosen.pop()

    yield from rec(0, set(), [])


# -- extended paths ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def single_paths(i: int, j: int, n: int, expanded: bool = True) -> tuple[Path, ...]:
    """All extended single paths A'_i -> E'_j staying weakly below y = n - 2."""
    top = n - 2
    start = (-i, i - 2)
    out = []

    def left(x: int, y: int, steps: list[str]) -> Iterator[tuple[int, list[str]]]:
        if x == 0:
            yield y, steps
            return
        for q in range(y, top + 1):
            ups = q - y
            up_choices = _up_variants(ups) if expanded else [["U"] * ups]
            for ch in up_choices:
                yield from left(x + 1, q, steps + ch + ["R"])

    def right(h0: int) -> Iterator[list[str]]:
        # weakly decreasing right-step heights, then down to y = -1 and the final step
        for k, final in ((j, "D"), (j - 1, "G")):
            if k < 0:
                continue
            for heights in _weak_sequences(k, h0, -1):
                steps: list[str] = []
                y = h0
                for h in heights:
                    steps.extend("D" * (y - h))
                    steps.append("R")
                    y = h
                steps.extend("D" * (y + 1))
                steps.append(final)
                yield steps

    if i - 2 > top:
        return ()
    for h0, lsteps in left(-i, i - 2, []):
        for rsteps in right(h0):
            out.append(Path(i, start, tuple(lsteps + rsteps)))
    return tuple(out)


def _weak_sequences(k: int, hi: int, lo: int) -> list[tuple[int, ...]]:
    if k == 0:
        return [()]
    return [(h,) + rest for h in range(hi, lo - 1, -1) for rest in _weak_sequences(k - 1, h, lo)]


def _up_variants(k: int) -> list[list[str]]:
    out = [[]]
    for _ in range(k):
        out = [o + [s] for o in out for s in ("U", "Uw")]
    return out


def path_weight(p: Path, ring: Ring, expanded: bool = True) -> LaurentPoly:
    wt = ring.one
    verts = p.vertices()
    for (x0, y0), (x1, y1), s in zip(verts, verts[1:], p.steps):
        if x0 < 0:
            m = x1 + y1 + 2
            if s == "R":
                wt = wt * ring.monomial(v=-1) * ring.x(m)
            elif s == "Uw":
                wt = wt * ring.monomial(v=-1, w=1) * ring.x(m)
            elif s == "U":
                if not expanded:
                    wt = wt * (ring.monomial(v=-1, w=1) * ring.x(m) + 1)
            else:
                raise ValueError(f"step {s} not allowed left of the y-axis")
        elif s == "R":
            if y0 < -1:
                raise ValueError("right step below y = -1")
            wt = wt * ring.u * ring.x(y0 + 2)
        elif s == "G":
            wt = wt * ring.w
        elif s != "D":
            raise ValueError(f"step {s} not allowed right of the y-axis")
    return wt


def family_weight(f: PathFamily, expanded: bool = True, ring: Ring | None = None) -> LaurentPoly:
    """Product of step weights times v^C(n+1,2).

    With ``expanded`` a plain ``U`` weighs 1; otherwise it weighs X_m v^-1 w + 1.
    """
    ring = ring or Ring(f.n)
    wt = ring.monomial(v=comb(f.n + 1, 2))
    for p in f.paths:
        wt = wt * path_weight(p, ring, expanded)
    return wt


def enumerate_extended_families(n: int, expanded: bool = True) -> list[PathFamily]:
    out = []
    for size in range(n + 1):
        for S in combinations(range(1, n + 1), size):
            lists = [single_paths(i, i, n, expanded) for i in S]
            out.extend(PathFamily(n, fam) for fam in _disjoint_products(lists))
    return out


def gf_paths_enum(n: int, ring: Ring | None = None, expanded: bool = True) -> LaurentPoly:
    ring = ring or Ring(n)
    return ring.sum(family_weight(f, expanded, ring) for f in enumerate_extended_families(n, expanded))


def gf_family_subset(S: Sequence[int], n: int, ring: Ring | None = None) -> LaurentPoly:
    """Weighted count (without the v^C factor) of nonintersecting families with sources S."""
    ring = ring or Ring(n)
    lists = [single_paths(i, i, n, True) for i in sorted(S)]
    acc = ring.zero
    for fam in _disjoint_products(lists):
        term = ring.one
        for p in fam:
            term = term * path_weight(p, ring)
        acc = acc + term
    return acc


# -- specialization audit ----------------------------------------------------------------


def _ending(p: Path) -> str | None:
    if p.steps[-1] == "G":
        return "G"
    if p.steps[-2:] == ("R", "D"):
        return "RD"
    return None


def cancel_diagonal(f: PathFamily) -> PathFamily | None:
    """Toggle a final diagonal step with a final right-then-down pair.

    Acts on the path of largest index whose ending is either; None if there is none.
    """
    for k in range(len(f.paths) - 1, -1, -1):
        p = f.paths[k]
        e = _ending(p)
        if e is None:
            continue
        steps = p.steps[:-1] + ("R", "D") if e == "G" else p.steps[:-2] + ("G",)
        paths = list(f.paths)
        paths[k] = Path(p.index, p.start, steps)
        return PathFamily(f.n, tuple(paths), f.extended)
    return None


def survivor_to_classical(f: PathFamily) -> PathFamily:
    """Strip the leading right steps and the last down step of a surviving family."""
    paths = []
    for p in f.paths:
        i = p.index
        if any(s in ("U", "Uw", "G") for s in p.steps) or p.steps[-2:] != ("D", "D"):
            raise DomainError("family does not survive the specialization")
        paths.append(Path(i, (0, i - 2), p.steps[i:-2]))
    return PathFamily(f.n, tuple(paths), extended=False)


# -- bijection with DPP pairs -------------------------------------------------------------


def family_to_dpp_pair(f: PathFamily) -> DppPair:
    L, R = [], []
    for p in sorted(f.paths, key=lambda q: -q.index):
        verts = p.vertices()
        lcells: list[list[int]] = []
        pending: list[int] = []
        rrow: list[int] = []
        for (x0, y0), (x1, y1), s in zip(verts, verts[1:], p.steps):
            if x0 < 0:
                m = x1 + y1 + 2
                if s == "Uw":
                    pending.append(m)
                elif s == "R":
                    lcells.append([m] + pending)
                    pending = []
            elif s == "R":
                rrow.append(y0 + 2)
        L.append(tuple(tuple(c) for c in reversed(lcells)))
        R.append(tuple(rrow))
    return DppPair(tuple(L), tuple(R))


def dpp_pair_to_family(pair: DppPair, n: int) -> PathFamily:
    paths = []
    for lrow, rrow in zip(pair.L, pair.R):
        i = len(lrow)
        steps: list[str] = []
        y = i - 2
        for k, cell in enumerate(reversed(lrow)):
            p = -i + k + 1  # x-coordinate where this right step ends
            m = cell[0]
            q = m - p - 2
            marked = {e - p - 1 for e in cell[1:]}  # heights reached by marked ups
            while y < q:
                y += 1
                steps.append("Uw" if y in marked else "U")
            steps.append("R")
        for r in rrow:
            h = r - 2
            steps.extend("D" * (y - h))
            y = h
            steps.append("R")
        steps.extend("D" * (y + 1))
        steps.append("D" if len(rrow) == i else "G")
        paths.append(Path(i, (-i, i - 2), tuple(steps)))
    fam = PathFamily(n, tuple(sorted(paths, key=lambda q: q.index)))
    return fam


# -- the determinant ----------------------------------------------------------------------


def single_path_gf(i: int, j: int, n: int, ring: Ring | None = None) -> LaurentPoly:
    """Closed expression for the weighted single-path count A'_i -> E'_j."""
    ring = ring or Ring(n)
    acc = ring.zero
    for l in range(1, n + 1):
        top = n - l + 1
        right = ring.monomial(u=j - 1) * (ring.u * h_ext(j, 1, top, ring) + ring.w * h_ext(j - 1, 1, top, ring))
        left = ring.zero
        for k in range(max(i, 1), n + 1):
            left = left + ring.monomial(v=-k, w=k - i) * e_sym(k - 1, 1, n - l, ring) * (comb(k - 1, i - 1))
        acc = acc + right * left * ring.x(top)
    return acc


def single_path_gf_enum(i: int, j: int, n: int, ring: Ring | None = None) -> LaurentPoly:
    ring = ring or Ring(n)
    return ring.sum(path_weight(p, ring) for p in single_paths(i, j, n, True))


def w_matrix(n: int, ring: Ring | None = None) -> list[list[LaurentPoly]]:
    ring = ring or Ring(n)
    return [[single_path_gf(i, j, n, ring) for j in range(1, n + 1)] for i in range(1, n + 1)]


def gf_lgv(n: int, ring: Ring | None = None) -> LaurentPoly:
    """v^C(n+1,2) det(I + W)."""
    ring = ring or Ring(n)
    W = w_matrix(n, ring)
    M = [[W[a][b] + (1 if a == b else 0) for b in range(n)] for a in range(n)]
    return ring.monomial(v=comb(n + 1, 2)) * determinant(M, ring)


def lgv_subset(S: Sequence[int], n: int, ring: Ring | None = None) -> LaurentPoly:
    ring = ring or Ring(n)
    S = sorted(S)
    return determinant([[single_path_gf(a, b, n, ring) for b in S] for a in S], ring)


def verify_identity(name: str, n: int):
    from .identities import verify_identity as _verify

    return _verify(name, n)
