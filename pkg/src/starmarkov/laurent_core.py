"""Exact arithmetic in the ring Z[s1, s2, s3^{±1}].

The ring of symmetric Laurent polynomials in three variables z1, z2, z3 is
identified with Z[s1, s2, s3^{±1}] via the elementary symmetric functions.
Only s3 may appear with negative exponent.  On top of the ring structure this
module provides the involution f ↦ f*, the integer evaluation at
(s1, s2, s3) = (3, 3, 1), the bi-degree (d, q) of a quasi-homogeneous
polynomial, the duality f ↦ s3^d f(s2/s3, s1/s3, 1/s3), and Newton polygons.

Terms are stored sparsely, keyed by the exponent triple (a1, a2, a3) with
a1, a2 ≥ 0 and a3 ∈ Z, mapped to a nonzero Python int.  Internally the triple
is packed into a single int so that multiplication only adds keys.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .exactgeom import hull2d

# Exponent packing: key = (a1*M + a2)*M + a3 + B.  Keys add under monomial
# multiplication up to the constant B.  Bounds checked at construction.
_M = 4096
_B = 2048
_MAXE = _M - 1
_M2 = _M * _M


def _pack(a1: int, a2: int, a3: int) -> int:
    if not (0 <= a1 <= _MAXE and 0 <= a2 <= _MAXE and -_B <= a3 < _B):
        raise OverflowError(f"exponent triple out of range: {(a1, a2, a3)}")
    return (a1 * _M + a2) * _M + a3 + _B


def _unpack(key: int) -> tuple[int, int, int]:
    key, a3 = divmod(key, _M)
    a1, a2 = divmod(key, _M)
    return a1, a2, a3 - _B


class NonQuasiHomogeneousError(ValueError):
    """Raised when a bi-degree is requested for a non-quasi-homogeneous input.

    Carries the set of distinct quasi-degrees found in the support.
    """

    def __init__(self, quasi_degrees: set[int]):
        super().__init__(f"not quasi-homogeneous: quasi-degrees {sorted(quasi_degrees)}")
        self.quasi_degrees = quasi_degrees


class LaurentPoly:
    """Sparse element of Z[s1, s2, s3^{±1}] in canonical form (no zero terms)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None, *, _raw: dict[int, int] | None = None):
        if _raw is not None:
            self._terms = _raw
        else:
            self._terms = {}
            if terms:
                for (a1, a2, a3), c in terms.items():
                    if c:
                        self._terms[_pack(a1, a2, a3)] = c

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(_raw={})

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly(_raw={_pack(0, 0, 0): c} if c else {})

    @staticmethod
    def monomial(a1: int, a2: int, a3: int, c: int = 1) -> "LaurentPoly":
        return LaurentPoly(_raw={_pack(a1, a2, a3): c} if c else {})

    # -- basic structure ----------------------------------------------------

    def items(self) -> Iterator[tuple[tuple[int, int, int], int]]:
        for key, c in self._terms.items():
            yield _unpack(key), c

    def sorted_items(self) -> list[tuple[tuple[int, int, int], int]]:
        return sorted(self.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        res = dict(self._terms)
        for key, c in other._terms.items():
            s = res.get(key, 0) + c
            if s:
                res[key] = s
            elif key in res:
                del res[key]
        return LaurentPoly(_raw=res)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(_raw={k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly(_raw={k: c * other for k, c in self._terms.items()})
        res: dict[int, int] = {}
        get = res.get
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        for ka, ca in a.items():
            base = ka - _B
            for kb, cb in b.items():
                k = base + kb
                s = get(k, 0) + ca * cb
                if s:
                    res[k] = s
                elif k in res:
                    del res[k]
        return LaurentPoly(_raw=res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are limited to s3; use S3I")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # -- queries ------------------------------------------------------------

    def is_polynomial(self) -> bool:
        return all(key % _M >= _B for key in self._terms)

    def s3_valuation(self) -> int:
        """Minimal s3 exponent over the support (0 for the zero polynomial)."""
        if not self._terms:
            return 0
        return min(key % _M for key in self._terms) - _B

    def divisible_by_s3(self) -> bool:
        return bool(self._terms) and self.s3_valuation() >= 1

    def shift_s3(self, k: int) -> "LaurentPoly":
        """Multiply by s3^k."""
        if k == 0 or not self._terms:
            return self
        return LaurentPoly(_raw={key + k: c for key, c in self._terms.items()})

    def coefficient(self, a1: int, a2: int, a3: int) -> int:
        return self._terms.get(_pack(a1, a2, a3), 0)

    def support(self) -> list[tuple[int, int, int]]:
        return sorted(_unpack(key) for key in self._terms)

    def total_degree(self) -> int:
        """Maximal a1 + a2 + a3 over the support (the degree d for polynomials)."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(_unpack(key)) for key in self._terms)

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a1, a2, a3), c in sorted(self.items(), reverse=True):
            factors = []
            for name, e in (("s1", a1), ("s2", a2), ("s3", a3)):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vars": ["s1", "s2", "s3"],
            "terms": [{"e": list(e), "c": str(c)} for e, c in self.sorted_items()],
        }

    @staticmethod
    def from_json_dict(obj: Mapping) -> "LaurentPoly":
        if obj.get("vars") != ["s1", "s2", "s3"]:
            raise ValueError("expected vars ['s1','s2','s3']")
        terms: dict[tuple[int, int, int], int] = {}
        for t in obj["terms"]:
            e = tuple(t["e"])
            if len(e) != 3:
                raise ValueError(f"bad exponent triple {e}")
            terms[e] = terms.get(e, 0) + int(t["c"])
        return LaurentPoly(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.const(1)
S1 = LaurentPoly.monomial(1, 0, 0)
S2 = LaurentPoly.monomial(0, 1, 0)
S3 = LaurentPoly.monomial(0, 0, 1)
S3I = LaurentPoly.monomial(0, 0, -1)


def star(f: LaurentPoly) -> LaurentPoly:
    """The *-involution: f*(s1,s2,s3) = f(s2/s3, s1/s3, 1/s3).

    On monomials: s1^a1 s2^a2 s3^a3  ↦  s1^a2 s2^a1 s3^(−a1−a2−a3).
    A ring automorphism with star(star(f)) = f.
    """
    res: dict[int, int] = {}
    for key, c in f._terms.items():
        a1, a2, a3 = _unpack(key)
        res[_pack(a2, a1, -a1 - a2 - a3)] = c
    return LaurentPoly(_raw=res)


def evaluate_at_s0(f: LaurentPoly) -> int:
    """Evaluate at the base point (s1, s2, s3) = (3, 3, 1)."""
    total = 0
    for key, c in f._terms.items():
        a1, a2, _ = _unpack(key)
        total += c * 3 ** (a1 + a2)
    return total


@dataclass(frozen=True)
class BiDegree:
    """Degrees of a quasi-homogeneous polynomial: d for weights (1,1,1), q for (1,2,3)."""

    d: int
    q: int

    def __add__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.d + other.d, self.q + other.q)

    @property
    def deviation(self) -> int:
        return 2 * self.q - 3 * self.d

    def dual(self) -> "BiDegree":
        return BiDegree(self.d, 3 * self.d - self.q)

    def as_tuple(self) -> tuple[int, int]:
        return (self.d, self.q)


def bidegree(f: LaurentPoly) -> BiDegree:
    """Bi-degree (d, q) of a nonzero quasi-homogeneous polynomial.

    Raises NonQuasiHomogeneousError (carrying the quasi-degree set) when the
    (1,2,3)-weighted degree is not constant on the support.
    """
    if not f:
        raise ValueError("zero polynomial has no bi-degree")
    if not f.is_polynomial():
        raise ValueError("bi-degree requires a polynomial (a3 >= 0)")
    qs = set()
    d = 0
    for (a1, a2, a3), _ in f.items():
        qs.add(a1 + 2 * a2 + 3 * a3)
        t = a1 + a2 + a3
        if t > d:
            d = t
    if len(qs) > 1:
        raise NonQuasiHomogeneousError(qs)
    return BiDegree(d, qs.pop())


def mu_dual(f: LaurentPoly) -> LaurentPoly:
    """The duality g = s3^d · f(s2/s3, s1/s3, 1/s3) on polynomials coprime to s3.

    Sends bi-degree (d, q) to (d, 3d−q); an involution with the same
    evaluation at the base point.
    """
    if not f:
        raise ValueError("mu is undefined for the zero polynomial")
    if not f.is_polynomial():
        raise ValueError("mu requires a polynomial (a3 >= 0)")
    if f.divisible_by_s3():
        raise ValueError("mu requires a polynomial not divisible by s3")
    d = f.total_degree()
    res: dict[int, int] = {}
    for key, c in f._terms.items():
        a1, a2, a3 = _unpack(key)
        res[_pack(a2, a1, d - a1 - a2 - a3)] = c
    return LaurentPoly(_raw=res)


@dataclass(frozen=True)
class NewtonPolygon:
    """Extreme points of the monomial support, with the d-normalized projection.

    vertices: counterclockwise integer triples (a1, a2, a3).
    projected: the matching points (a1/d, a2/d) of the projected normalized
    polygon (projection along the a3 axis).
    """

    vertices: tuple[tuple[int, int, int], ...]
    projected: tuple[tuple[Fraction, Fraction], ...]


def newton_polygon(f: LaurentPoly) -> NewtonPolygon:
    """Newton polygon of a nonzero quasi-homogeneous polynomial.

    The support lies in the plane a1 + 2a2 + 3a3 = q, so projecting along a3
    is an affine bijection and the extreme points can be computed in the
    (a1, a2) chart.
    """
    bd = bidegree(f)  # validates nonzero, polynomial, quasi-homogeneous
    pts = {}
    for (a1, a2, a3), _ in f.items():
        pts[(a1, a2)] = a3
    hull = hull2d(list(pts.keys()))
    d = bd.d
    vertices = tuple((a1, a2, pts[(a1, a2)]) for a1, a2 in hull)
    projected = tuple((Fraction(a1, d), Fraction(a2, d)) for a1, a2, _ in vertices)
    return NewtonPolygon(vertices, projected)


def triple_to_json(t: Iterable[LaurentPoly]) -> list[dict]:
    return [f.to_json_dict() for f in t]


def triple_from_json(obj: Iterable[Mapping]) -> tuple[LaurentPoly, ...]:
    return tuple(LaurentPoly.from_json_dict(o) for o in obj)
