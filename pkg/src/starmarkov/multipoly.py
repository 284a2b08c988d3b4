"""Sparse multivariate polynomials over an exact coefficient ring.

Used for the bracket computations on C⁶, C⁵ and C¹² (rational coefficients,
optionally with the parameters b1..b3 adjoined as variables) and for the
ν-endomorphism algebra Z[s][x1..x6] (coefficients in the Laurent ring).
Exponent vectors are packed into a single integer (7 bits per variable) so
monomial products are integer additions; coefficients only need the Python
operators +, −, *, bool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

_W = 7
_FIELD = 1 << _W
_MAXE = _FIELD - 1


class PolyRing:
    """A polynomial ring with named variables over an exact coefficient ring."""

    def __init__(self, names: Sequence[str], coerce: Callable | None = None):
        self.names = tuple(names)
        self.n = len(self.names)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.coerce = coerce if coerce is not None else Fraction
        self._zero = MultiPoly(self, {})

    def zero(self) -> "MultiPoly":
        return self._zero

    def const(self, c) -> "MultiPoly":
        c = self.coerce(c)
        return MultiPoly(self, {0: c} if c else {})

    def gen(self, name: str) -> "MultiPoly":
        return MultiPoly(self, {1 << (_W * self.index[name]): self.coerce(1)})

    def gens(self) -> list["MultiPoly"]:
        return [self.gen(name) for name in self.names]

    def monomial(self, exps: Sequence[int], c=1) -> "MultiPoly":
        c = self.coerce(c)
        if not c:
            return self._zero
        return MultiPoly(self, {self.pack(exps): c})

    def pack(self, exps: Sequence[int]) -> int:
        key = 0
        for i, e in enumerate(exps):
            if not 0 <= e <= _MAXE:
                raise OverflowError(f"exponent {e} out of range")
            key |= e << (_W * i)
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> (_W * i)) & _MAXE for i in range(self.n))

    def __repr__(self) -> str:
        return f"PolyRing({', '.join(self.names)})"


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def items(self) -> Iterator[tuple[tuple[int, ...], object]]:
        for key, c in self.terms.items():
            yield self.ring.unpack(key), c

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def _coerce_other(self, other):
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring:
                raise ValueError("mixed rings")
            return other
        return self.ring.const(other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce_other(other)
        res = dict(self.terms)
        for key, c in other.terms.items():
            s = res.get(key)
            s = c if s is None else s + c
            if s:
                res[key] = s
            elif key in res:
                del res[key]
        return MultiPoly(self.ring, res)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce_other(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce_other(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c0 = self.ring.coerce(other)
            if not c0:
                return self.ring.zero()
            return MultiPoly(self.ring, {k: c * c0 for k, c in self.terms.items()})
        if other.ring is not self.ring:
            raise ValueError("mixed rings")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        res: dict = {}
        get = res.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                s = get(k)
                prod = ca * cb
                s = prod if s is None else s + prod
                if s:
                    res[k] = s
                elif k in res:
                    del res[k]
        return MultiPoly(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus and substitution -------------------------------------------

    def diff(self, var: int | str) -> "MultiPoly":
        i = self.ring.index[var] if isinstance(var, str) else var
        shift = _W * i
        res: dict = {}
        for key, c in self.terms.items():
            e = (key >> shift) & _MAXE
            if e:
                nc = c * e
                if nc:
                    res[key - (1 << shift)] = nc
        return MultiPoly(self.ring, res)

    def subs(self, images: Mapping[int | str, "MultiPoly"], target: PolyRing | None = None) -> "MultiPoly":
        """Substitute polynomials for variables (missing variables persist)."""
        ring = target if target is not None else self.ring
        imgs: dict[int, MultiPoly] = {}
        for var, img in images.items():
            i = self.ring.index[var] if isinstance(var, str) else var
            if img.ring is not ring:
                raise ValueError("image in wrong ring")
            imgs[i] = img
        if target is not None and target is not self.ring:
            for i in range(self.ring.n):
                if i not in imgs:
                    raise ValueError(f"cross-ring substitution must cover all variables ({self.ring.names[i]})")
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            got = powers.get((i, e))
            if got is None:
                got = imgs[i] ** e
                powers[(i, e)] = got
            return got

        total = ring.zero()
        for exps, c in self.items():
            term = ring.const(c)
            rest_key = 0
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i in imgs:
                    term = term * power(i, e)
                else:
                    rest_key |= e << (_W * i)
            if rest_key:
                term = term * MultiPoly(ring, {rest_key: ring.coerce(1)})
            total = total + term
        return total

    def evaluate(self, point: Sequence) -> object:
        """Evaluate at a point of coefficients (exact)."""
        total = None
        for exps, c in self.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v = v * x**e
            total = v if total is None else total + v
        return self.ring.coerce(0) if total is None else total

    # -- structure -------------------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(self.ring.unpack(k)) for k in self.terms)

    def homogeneous_component(self, deg: int) -> "MultiPoly":
        return MultiPoly(
            self.ring, {k: c for k, c in self.terms.items() if sum(self.ring.unpack(k)) == deg}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.items(), reverse=True):
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            cs = str(c)
            if any(op in cs for op in (" + ", " - ")) or cs.startswith("-"):
                cs = f"({cs})"
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            else:
                parts.append(cs + "*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def det(matrix: Sequence[Sequence[MultiPoly]], ring: PolyRing) -> MultiPoly:
    """Determinant by dynamic programming over column subsets (Laplace by rows)."""
    n = len(matrix)
    if n == 0:
        return ring.const(1)
    prev = {0: ring.const(1)}  # subsets of columns used by the first r rows
    for r in range(n):
        row = matrix[r]
        cur: dict[int, MultiPoly] = {}
        for subset, val in prev.items():
            if not val:
                continue
            # sign of placing row r in column c: (−1)^(r + #used columns below c)
            sign = 1 if r % 2 == 0 else -1
            for c in range(n):
                bit = 1 << c
                if subset & bit:
                    sign = -sign
                    continue
                entry = row[c]
                if entry:
                    contrib = val * entry if sign > 0 else -(val * entry)
                    key = subset | bit
                    acc = cur.get(key)
                    cur[key] = contrib if acc is None else acc + contrib
        prev = cur
    return prev.get((1 << n) - 1, ring.zero())
