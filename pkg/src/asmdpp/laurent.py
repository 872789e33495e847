"""Sparse Laurent polynomials over the integers in u, v, w, X1..Xn.

A polynomial lives in a ring of fixed order ``n``; the variables are always
``u, v, w`` followed by ``X1..Xn``.  Exponent vectors are packed into a single
Python integer (fixed-width biased slots) so that multiplying two monomials is
one integer addition.  Everything public speaks in plain exponent tuples
``(u, v, w, x1, ..., xn)``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "LaurentPoly",
    "Ring",
    "RingMismatchError",
    "PoleError",
    "IndivisibleError",
    "ShapeError",
    "determinant",
    "divide_exact",
    "matmul",
    "identity_matrix",
    "parse_text",
    "parse_json",
    "vandermonde",
]

_BITS = 20
_BIAS = 1 << (_BITS - 1)
_MASK = (1 << _BITS) - 1

Scalar = Union[int, "LaurentPoly"]


class RingMismatchError(ValueError):
    """Operands belong to rings of different order."""


class PoleError(ZeroDivisionError):
    """Zero substituted for a variable that occurs with a negative exponent."""


class IndivisibleError(ArithmeticError):
    """Exact division left a nonzero remainder."""


class ShapeError(ValueError):
    """Matrix has the wrong shape for the requested operation."""


@lru_cache(maxsize=None)
def _bias_key(nvars: int) -> int:
    key = 0
    for i in range(nvars):
        key |= _BIAS << (_BITS * i)
    return key


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if not -_BIAS < e < _BIAS:
            raise OverflowError(f"exponent {e} out of range")
        key |= (e + _BIAS) << (_BITS * i)
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple(((key >> (_BITS * i)) & _MASK) - _BIAS for i in range(nvars))


def var_names(n: int) -> list[str]:
    return ["u", "v", "w"] + [f"X{i}" for i in range(1, n + 1)]


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("n", "_terms", "__dict__")

    def __init__(self, n: int, terms: Mapping[int, int] | None = None, *, _packed: bool = True):
        self.n = n
        if terms is None:
            self._terms: dict[int, int] = {}
        elif _packed:
            self._terms = {k: c for k, c in terms.items() if c}
        else:
            self._terms = {}
            for exps, c in terms.items():
                if len(exps) != n + 3:
                    raise ValueError(f"exponent vector {exps} does not fit ring of order {n}")
                if c:
                    k = _pack(exps)
                    self._terms[k] = self._terms.get(k, 0) + c
            self._terms = {k: c for k, c in self._terms.items() if c}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple[int, ...], int]) -> "LaurentPoly":
        return cls(n, terms, _packed=False)

    @property
    def nvars(self) -> int:
        return self.n + 3

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise RingMismatchError(f"ring orders differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return Ring(self.n).const(other)
        return NotImplemented

    # -- inspection -----------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Yield ``(exponent_tuple, coefficient)`` in canonical order."""
        for k in self._sorted_keys:
            yield _unpack(k, self.nvars), self._terms[k]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {_unpack(k, self.nvars): c for k, c in self._terms.items()}

    @cached_property
    def _sorted_keys(self) -> list[int]:
        nv = self.nvars
        decoded = [(k, _unpack(k, nv)) for k in self._terms]
        decoded.sort(key=lambda kv: (sum(kv[1]), kv[1]), reverse=True)
        return [k for k, _ in decoded]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> int | None:
        """The integer value if this polynomial is a constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            (k, c), = self._terms.items()
            if k == _bias_key(self.nvars):
                return c
        return None

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(_pack(exps), 0)

    def min_exponents(self) -> tuple[int, ...]:
        cols = zip(*(_unpack(k, self.nvars) for k in self._terms))
        return tuple(min(c) for c in cols) if self._terms else (0,) * self.nvars

    def max_exponents(self) -> tuple[int, ...]:
        cols = zip(*(_unpack(k, self.nvars) for k in self._terms))
        return tuple(max(c) for c in cols) if self._terms else (0,) * self.nvars

    def degree_in(self, var: int) -> tuple[int, int]:
        """(min, max) exponent of variable index ``var`` (0=u, 1=v, 2=w, 3=X1, ...)."""
        exps = [_unpack(k, self.nvars)[var] for k in self._terms]
        return (min(exps), max(exps)) if exps else (0, 0)

    # -- arithmetic -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Ring(self.n).const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(self.n, out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly(self.n)
            return LaurentPoly(self.n, {k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        bias = _bias_key(self.nvars)
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            shift = kb - bias
            for ka, ca in a.items():
                k = ka + shift
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (k, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a monomial with non-unit coefficient")
            exps = _unpack(k, self.nvars)
            return LaurentPoly.from_terms(self.n, {tuple(-x * -e for x in exps): c ** (-e)})
        result = Ring(self.n).one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        delta = _pack(exps) - _bias_key(self.nvars)
        return LaurentPoly(self.n, {k + delta: c for k, c in self._terms.items()})

    # -- variable maps --------------------------------------------------------

    def map_exponents(self, fn) -> "LaurentPoly":
        """Apply ``fn(exps) -> exps`` to every exponent vector (coefficients kept)."""
        out: dict[tuple[int, ...], int] = {}
        for k, c in self._terms.items():
            e = tuple(fn(_unpack(k, self.nvars)))
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_terms(self.n, out)

    def permute_x(self, perm: Sequence[int]) -> "LaurentPoly":
        """Substitute X_i -> X_{perm[i-1]} (perm is 1-based, length <= n)."""
        m = len(perm)

        def fn(e):
            new = list(e)
            for i in range(m):
                new[3 + i] = 0
            for i in range(m):
                new[3 + perm[i] - 1] += e[3 + i]
            return new

        return self.map_exponents(fn)

    def invert_x(self, count: int | None = None) -> "LaurentPoly":
        """Substitute X_i -> 1/X_i for i <= count (default: all)."""
        count = self.n if count is None else count
        return self.map_exponents(lambda e: e[:3] + tuple(-x for x in e[3:3 + count]) + e[3 + count:])

    def embed(self, n: int) -> "LaurentPoly":
        """The same polynomial viewed in a ring of order ``n`` >= self.n."""
        if n < self.n:
            if any(any(e[3 + self.n - (self.n - n):]) for e in self.as_dict()):
                raise ValueError("polynomial uses variables outside the target ring")
            return LaurentPoly.from_terms(n, {e[:3 + n]: c for e, c in self.as_dict().items()})
        pad = (0,) * (n - self.n)
        return LaurentPoly.from_terms(n, {e + pad: c for e, c in self.as_dict().items()})

    def substitute(self, values: Mapping[str, Scalar], target_n: int | None = None):
        """Substitute variables by integers or polynomials.

        Unassigned variables are kept.  If every variable occurring in ``self``
        is assigned an integer, the result is a plain number (int, or Fraction
        when a negative power of a non-unit integer appears).
        """
        names = var_names(self.n)
        unknown = set(values) - set(names)
        if unknown:
            raise KeyError(f"unknown variables {sorted(unknown)}")
        tn = self.n if target_n is None else target_n
        ring = Ring(tn)
        used = [any(e[i] for e in self.as_dict()) for i in range(self.nvars)] if self._terms else [False] * self.nvars
        all_int = all(isinstance(values.get(names[i]), int) for i in range(self.nvars) if used[i])

        for i, name in enumerate(names):
            val = values.get(name)
            if isinstance(val, int) and val == 0 and self._terms:
                if self.degree_in(i)[0] < 0:
                    raise PoleError(f"{name}=0 but {name} occurs with negative exponent")

        if all_int:
            total: Fraction | int = 0
            for e, c in self.as_dict().items():
                term: Fraction | int = c
                for i, x in enumerate(e):
                    if x == 0:
                        continue
                    val = values[names[i]]
                    term = term * (Fraction(val) ** x if x < 0 else val ** x)
                total += term
            total = Fraction(total)
            return int(total) if total.denominator == 1 else total

        images: list[LaurentPoly] = []
        for i, name in enumerate(names):
            val = values.get(name)
            if val is None:
                if i >= 3 + tn and used[i]:
                    raise ValueError(f"{name} has no place in target ring of order {tn}")
                images.append(ring.var(name) if i < 3 + tn else ring.one)
            elif isinstance(val, int):
                images.append(ring.const(val))
            else:
                if val.n != tn:
                    raise RingMismatchError("substituted value lives in a different ring")
                images.append(val)
        cache: dict[tuple[int, int], LaurentPoly] = {}

        def power(i: int, x: int) -> LaurentPoly:
            key = (i, x)
            if key not in cache:
                base = images[i]
                if x < 0:
                    cv = base.constant_value()
                    if cv is not None and cv not in (1, -1):
                        raise ValueError(f"negative power of integer {cv} is not integral")
                cache[key] = base ** x
            return cache[key]

        out = LaurentPoly(tn)
        for e, c in self.as_dict().items():
            term = ring.const(c)
            for i, x in enumerate(e):
                if x:
                    term = term * power(i, x)
            out = out + term
        return out

    # -- formatting -----------------------------------------------------------

    def monomial_text(self, exps: Sequence[int]) -> str:
        parts = []
        for name, x in zip(var_names(self.n), exps):
            if x == 0:
                continue
            parts.append(name if x == 1 else f"{name}^{x}")
        return " ".join(parts)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self.terms()):
            mono = self.monomial_text(e)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag} {mono}"
            else:
                body = str(mag)
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"c": str(c), "u": e[0], "v": e[1], "w": e[2], "x": list(e[3:])}
                for e, c in self.terms()
            ],
        }

    def serialize(self, fmt: str = "text") -> bytes:
        if fmt == "text":
            return self.to_text().encode()
        if fmt == "json":
            return json.dumps(self.to_json_obj(), separators=(",", ":")).encode()
        raise ValueError(f"unknown format {fmt!r}")

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, {self.to_text()!r})"


class Ring:
    """Factory for polynomials of a fixed order ``n``."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("ring order must be nonnegative")
        self.n = n

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("Ring", self.n))

    def __repr__(self) -> str:
        return f"Ring({self.n})"

    @property
    def zero(self) -> LaurentPoly:
        return LaurentPoly(self.n)

    @property
    def one(self) -> LaurentPoly:
        return self.const(1)

    def const(self, c: int) -> LaurentPoly:
        return LaurentPoly(self.n, {_bias_key(self.n + 3): c})

    def monomial(self, u: int = 0, v: int = 0, w: int = 0, x: Sequence[int] = (), c: int = 1) -> LaurentPoly:
        x = tuple(x) + (0,) * (self.n - len(x))
        if len(x) != self.n:
            raise ValueError(f"too many X exponents for ring of order {self.n}")
        return LaurentPoly.from_terms(self.n, {(u, v, w) + x: c})

    def x_monomial(self, exps: Sequence[int], c: int = 1) -> LaurentPoly:
        return self.monomial(x=exps, c=c)

    @property
    def u(self) -> LaurentPoly:
        return self.monomial(u=1)

    @property
    def v(self) -> LaurentPoly:
        return self.monomial(v=1)

    @property
    def w(self) -> LaurentPoly:
        return self.monomial(w=1)

    def x(self, i: int, power: int = 1) -> LaurentPoly:
        if not 1 <= i <= self.n:
            raise IndexError(f"X{i} not in ring of order {self.n}")
        exps = [0] * self.n
        exps[i - 1] = power
        return self.monomial(x=exps)

    def var(self, name: str) -> LaurentPoly:
        if name in ("u", "v", "w"):
            return getattr(self, name)
        if name.startswith("X"):
            return self.x(int(name[1:]))
        raise KeyError(name)

    def sum(self, items: Iterable[Scalar]) -> LaurentPoly:
        acc: dict[int, int] = {}
        for p in items:
            if isinstance(p, int):
                p = self.const(p)
            if p.n != self.n:
                raise RingMismatchError(f"ring orders differ: {self.n} vs {p.n}")
            for k, c in p._terms.items():
                acc[k] = acc.get(k, 0) + c
        return LaurentPoly(self.n, acc)

    def prod(self, items: Iterable[Scalar]) -> LaurentPoly:
        out = self.one
        for p in items:
            out = out * p
        return out


# -- matrices -------------------------------------------------------------------


def _check_square(m: Sequence[Sequence[Scalar]]) -> int:
    d = len(m)
    if any(len(row) != d for row in m):
        raise ShapeError("matrix is not square")
    return d


def determinant(m: Sequence[Sequence[Scalar]], ring: Ring | None = None) -> LaurentPoly:
    """Division-free determinant by Laplace expansion along rows.

    Minors are memoized by the set of columns still available, which keeps
    the cost at O(d 2^d) products.
    """
    d = _check_square(m)
    if ring is None:
        ring = next((Ring(e.n) for row in m for e in row if isinstance(e, LaurentPoly)), None)
        if ring is None:
            raise ValueError("cannot infer the ring of an all-integer matrix; pass ring=")
    if d == 0:
        return ring.one
    if d > 10:
        raise ShapeError("cofactor expansion is limited to dimension 10")
    rows = [[ring.const(e) if isinstance(e, int) else e for e in row] for row in m]
    memo: dict[int, LaurentPoly] = {}
    full = (1 << d) - 1

    def minor(cols: int) -> LaurentPoly:
        # cols = bitmask of columns still free; the row index is d - popcount(cols)
        if cols == 0:
            return ring.one
        if cols in memo:
            return memo[cols]
        r = d - bin(cols).count("1")
        acc = ring.zero
        sign = 1
        for c in range(d):
            bit = 1 << c
            if not cols & bit:
                continue
            entry = rows[r][c]
            if entry:
                sub = minor(cols & ~bit)
                if sub:
                    term = entry * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[cols] = acc
        return acc

    return minor(full)


def matmul(a: Sequence[Sequence[LaurentPoly]], b: Sequence[Sequence[LaurentPoly]]) -> list[list[LaurentPoly]]:
    if not a or not b or len(a[0]) != len(b):
        raise ShapeError("incompatible matrix shapes")
    ring = Ring(a[0][0].n)
    cols = len(b[0])
    return [
        [ring.sum(a[i][k] * b[k][j] for k in range(len(b)) if a[i][k] and b[k][j]) for j in range(cols)]
        for i in range(len(a))
    ]


def identity_matrix(ring: Ring, d: int) -> list[list[LaurentPoly]]:
    return [[ring.one if i == j else ring.zero for j in range(d)] for i in range(d)]


def vandermonde(ring: Ring, m: int | None = None) -> LaurentPoly:
    """prod_{1<=i<j<=m} (X_j - X_i)."""
    m = ring.n if m is None else m
    out = ring.one
    for j in range(1, m + 1):
        for i in range(1, j):
            out = out * (ring.x(j) - ring.x(i))
    return out


# -- exact division -------------------------------------------------------------


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return r with r*q == p, or raise IndivisibleError.

    Both operands are first cleared of their monomial content so that they
    become ordinary polynomials not divisible by any variable; a Laurent
    quotient then exists iff the polynomial quotient does.  The polynomial
    division repeatedly cancels the lex-leading term.
    """
    if p.n != q.n:
        raise RingMismatchError(f"ring orders differ: {p.n} vs {q.n}")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    nv = p.nvars
    pmin, qmin = p.min_exponents(), q.min_exponents()
    p0 = p.shift(tuple(-x for x in pmin))
    q0 = q.shift(tuple(-x for x in qmin))

    qd = q0.as_dict()
    lead_q = max(qd)
    lc_q = qd[lead_q]
    rem = p0.as_dict()
    quot: dict[tuple[int, ...], int] = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        delta = tuple(a - b for a, b in zip(lead, lead_q))
        if any(x < 0 for x in delta) or c % lc_q:
            raise IndivisibleError("polynomial is not divisible")
        f = c // lc_q
        quot[delta] = quot.get(delta, 0) + f
        for e, cq in qd.items():
            key = tuple(a + b for a, b in zip(e, delta))
            val = rem.get(key, 0) - f * cq
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    r = LaurentPoly.from_terms(p.n, quot)
    return r.shift(tuple(a - b for a, b in zip(pmin, qmin)))


# -- parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"(u|v|w|X\d+)(?:\^(-?\d+))?$")


def _parse_monomial(n: int, text: str) -> tuple[int, tuple[int, ...]]:
    names = var_names(n)
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * (n + 3)
    coeff = 1
    for pos, tok in enumerate(text.split()):
        if pos == 0 and re.fullmatch(r"\d+", tok):
            coeff = int(tok)
            continue
        m = _TOKEN.match(tok)
        if not m or m.group(1) not in index:
            raise ValueError(f"bad monomial token {tok!r}")
        exps[index[m.group(1)]] += int(m.group(2)) if m.group(2) else 1
    return coeff, tuple(exps)


def parse_text(text: str, n: int) -> LaurentPoly:
    """Inverse of :meth:`LaurentPoly.to_text`."""
    text = text.strip()
    if text == "0":
        return Ring(n).zero
    pieces = re.split(r" ([+-]) ", text)
    signs = [1] + [1 if s == "+" else -1 for s in pieces[1::2]]
    bodies = pieces[0::2]
    terms: dict[tuple[int, ...], int] = {}
    for sign, body in zip(signs, bodies):
        if body.startswith("-"):
            sign, body = -sign, body[1:]
        c, e = _parse_monomial(n, body)
        terms[e] = terms.get(e, 0) + sign * c
    return LaurentPoly.from_terms(n, terms)


def parse_json(data: str | bytes | dict) -> LaurentPoly:
    obj = json.loads(data) if isinstance(data, (str, bytes)) else data
    n = obj["n"]
    terms: dict[tuple[int, ...], int] = {}
    for t in obj["terms"]:
        x = list(t["x"])
        if len(x) != n:
            raise ValueError("x exponent list does not match n")
        e = (t["u"], t["v"], t["w"], *x)
        terms[e] = terms.get(e, 0) + int(t["c"])
    return LaurentPoly.from_terms(n, terms)
