"""Decorated planar binary trees over sets with involution and transformations.

A decoration system is a carrier S with an involution τ, a set of triples T
with marked point t⁰, and moves

    L(t1,t2,t3) = (τ(t1), L2(t), t2),   R(t1,t2,t3) = (t2, R2(t), τ(t3)).

Vertices of the planar binary tree get triples by applying turns to t⁰ at the
marked vertex (depth 1); each domain of the complement gets the middle entry
of its distinguished vertex, the two initial domains get t⁰₁ and t⁰₃.  The
edge into a vertex carries labels l_a|r_b with (1,1) at the root edge,
(a+1, 1) after a left turn and (1, b+1) after a right turn, and the vertex
triple is recovered from the three surrounding domain labels as
(τ^{a−1}(t1), t2, τ^{b−1}(t3)).

The six concrete decorations (*-Markov polynomials, bi-degree 2-vectors,
degree matrices, deviations, Markov numbers, Euclid triples) are provided
together with the de-quantization morphisms between them and the convex-set
tree that mirrors the projected normalized Newton polygons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import exactgeom as eg
from .laurent_core import LaurentPoly, bidegree, evaluate_at_s0, newton_polygon
from .presentations import SEED, degree_matrix, mu, transform


class InconsistentLabelsError(ValueError):
    pass


@dataclass(frozen=True)
class DecorationSystem:
    name: str
    t0: tuple
    tau: Callable
    l2: Callable
    r2: Callable
    member: Callable | None = None

    def left(self, t: tuple) -> tuple:
        return (self.tau(t[0]), self.l2(t), t[1])

    def right(self, t: tuple) -> tuple:
        return (t[1], self.r2(t), self.tau(t[2]))

    def step(self, kind: str, t: tuple) -> tuple:
        if kind == "L":
            return self.left(t)
        if kind == "R":
            return self.right(t)
        raise ValueError(f"turn must be 'L' or 'R', got {kind!r}")


@dataclass
class DecoratedTree:
    system: DecorationSystem
    depth: int
    vertices: dict[str, tuple]  # path of turns from the marked vertex -> triple

    def edge_labels(self, path: str) -> tuple[int, int]:
        a = b = 1
        for turn in path:
            a, b = (a + 1, 1) if turn == "L" else (1, b + 1)
        return a, b

    def domain_labels(self, path: str):
        """Labels (t1, t2, t3) of the domains surrounding a vertex."""
        t2 = self.vertices[path][1]
        # walk up: the left domain is unchanged by left turns, replaced by the
        # parent's own domain after a right turn (and symmetrically).
        t1 = t3 = None
        p = path
        while p and t1 is None:
            p, turn = p[:-1], p[-1]
            if turn == "R":
                t1 = self.vertices[p][1]
        p = path
        while p and t3 is None:
            p, turn = p[:-1], p[-1]
            if turn == "L":
                t3 = self.vertices[p][1]
        if t1 is None:
            t1 = self.system.t0[0]
        if t3 is None:
            t3 = self.system.t0[2]
        return t1, t2, t3

    def domains(self) -> list:
        """All domain labels of the truncated tree (initial domains first)."""
        out = [self.system.t0[0], self.system.t0[2]]
        out.extend(self.vertices[p][1] for p in sorted(self.vertices, key=lambda q: (len(q), q)))
        return out

    def verify_reconstruction(self) -> None:
        for path, triple in self.vertices.items():
            rec = vertex_from_domains(self.system, self.domain_labels(path), self.edge_labels(path))
            if rec != triple:
                raise InconsistentLabelsError(f"reconstruction failed at path {path!r}")


def generate(system: DecorationSystem, depth: int) -> DecoratedTree:
    """Decorate the planar binary tree to the given depth (t⁰ sits at depth 1)."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    vertices: dict[str, tuple] = {}
    if depth >= 1:
        vertices[""] = system.t0
        level = [""]
        for _ in range(depth - 1):
            nxt = []
            for path in level:
                t = vertices[path]
                vertices[path + "L"] = system.left(t)
                vertices[path + "R"] = system.right(t)
                nxt.extend((path + "L", path + "R"))
            level = nxt
    return DecoratedTree(system, depth, vertices)


def vertex_from_domains(system: DecorationSystem, labels: tuple, edge: tuple[int, int]) -> tuple:
    """Recover (τ^{a−1}(t1), t2, τ^{b−1}(t3)) from domain labels and edge labels."""
    t1, t2, t3 = labels
    a, b = edge
    if a < 1 or b < 1 or (a > 1 and b > 1):
        raise InconsistentLabelsError(f"impossible edge labels l_{a}|r_{b}")
    for _ in range(a - 1):
        t1 = system.tau(t1)
    for _ in range(b - 1):
        t3 = system.tau(t3)
    triple = (t1, t2, t3)
    if system.member is not None and not system.member(triple):
        raise InconsistentLabelsError(f"labels {labels} with edge {edge} do not form a valid triple")
    return triple


@dataclass(frozen=True)
class MorphismReport:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def morphism_check(src: DecorationSystem, dst: DecorationSystem, phi: Callable, depth: int) -> MorphismReport:
    """Does phi send t⁰ to t⁰ and commute with τ, L, R on all vertices to depth?"""

    def lift(t: tuple) -> tuple:
        return tuple(phi(x) for x in t)

    if lift(src.t0) != dst.t0:
        return MorphismReport(False, f"phi(t0) = {lift(src.t0)} != {dst.t0}")
    tree = generate(src, depth)
    for path, t in tree.vertices.items():
        for x in t:
            if phi(src.tau(x)) != dst.tau(phi(x)):
                return MorphismReport(False, f"tau mismatch at {path!r}")
        if lift(src.left(t)) != dst.left(lift(t)):
            return MorphismReport(False, f"L mismatch at {path!r}")
        if lift(src.right(t)) != dst.right(lift(t)):
            return MorphismReport(False, f"R mismatch at {path!r}")
    return MorphismReport(True)


# -- the six decorations ------------------------------------------------------

T0_DEVIATIONS = {(1, -1, -2), (-1, 1, 2), (-2, -1, 1), (2, 1, -1), (1, 2, 1), (-1, -2, -1)}


def polynomial_system() -> DecorationSystem:
    seed = SEED.entries()

    def l2(t):
        d1 = bidegree(t[0]).d
        return mu(t[0]) * t[1] - t[2].shift_s3(d1)

    def r2(t):
        d3 = bidegree(t[2]).d
        return t[1] * mu(t[2]) - t[0].shift_s3(d3)

    def member(t):
        return bidegree(t[0]) + bidegree(t[2]) == bidegree(t[1])

    return DecorationSystem("polynomial", seed, mu, l2, r2, member)


def bivector_system() -> DecorationSystem:
    def tau(w):
        d, q = w
        return (d, 3 * d - q)

    def add(u, v):
        return (u[0] + v[0], u[1] + v[1])

    return DecorationSystem(
        "bivector",
        ((1, 2), (3, 4), (2, 2)),
        tau,
        lambda t: add(tau(t[0]), t[1]),
        lambda t: add(t[1], tau(t[2])),
        lambda t: add(t[0], t[2]) == t[1],
    )


def matrix_system() -> DecorationSystem:
    def tau(m):  # column swap: M ↦ MP
        return ((m[0][1], m[0][0]), (m[1][1], m[1][0]))

    def add(u, v):
        return tuple(tuple(a + b for a, b in zip(ru, rv)) for ru, rv in zip(u, v))

    return DecorationSystem(
        "matrix",
        (((1, 1), (2, 1)), ((3, 3), (4, 5)), ((2, 2), (2, 4))),
        tau,
        lambda t: add(tau(t[0]), t[1]),
        lambda t: add(t[1], tau(t[2])),
        lambda t: add(t[0], t[2]) == t[1],
    )


def deviation_system() -> DecorationSystem:
    return DecorationSystem(
        "deviation",
        (1, -1, -2),
        lambda w: -w,
        lambda t: -t[0] + t[1],
        lambda t: t[1] - t[2],
        lambda t: t[0] + t[2] == t[1],
    )


def markov_system() -> DecorationSystem:
    return DecorationSystem(
        "markov",
        (3, 15, 6),
        lambda w: w,
        lambda t: t[0] * t[1] - t[2],
        lambda t: t[1] * t[2] - t[0],
    )


def euclid_system() -> DecorationSystem:
    return DecorationSystem(
        "euclid",
        (1, 3, 2),
        lambda w: w,
        lambda t: t[0] + t[1],
        lambda t: t[1] + t[2],
    )


# -- de-quantization morphisms ---------------------------------------------------

def phi_bidegree(f: LaurentPoly) -> tuple[int, int]:
    return bidegree(f).as_tuple()


def phi_degree_matrix(f: LaurentPoly):
    return degree_matrix(f)


def phi_matrix_deviation(m) -> int:
    return m[1][0] - m[1][1]


def phi_evaluate(f: LaurentPoly) -> int:
    return evaluate_at_s0(f)


def phi_degree(f: LaurentPoly) -> int:
    return bidegree(f).d


MORPHISMS: list[tuple[str, str, Callable]] = [
    ("polynomial", "bivector", phi_bidegree),
    ("polynomial", "matrix", phi_degree_matrix),
    ("matrix", "deviation", phi_matrix_deviation),
    ("polynomial", "markov", phi_evaluate),
    ("polynomial", "euclid", phi_degree),
]

SYSTEMS: dict[str, Callable[[], DecorationSystem]] = {
    "polynomial": polynomial_system,
    "bivector": bivector_system,
    "matrix": matrix_system,
    "deviation": deviation_system,
    "markov": markov_system,
    "euclid": euclid_system,
}


# -- convex-set tree ----------------------------------------------------------

@dataclass(frozen=True)
class ConvexSet:
    """A convex polygon (ccw rational vertices, canonical start) with weight d."""

    polygon: tuple[tuple[Fraction, Fraction], ...]
    d: Fraction

    @staticmethod
    def of(points: Iterable, d) -> "ConvexSet":
        pts = [(Fraction(p[0]), Fraction(p[1])) for p in points]
        return ConvexSet(eg.canonical(eg.hull2d(pts)), Fraction(d))

    def reflect(self) -> "ConvexSet":
        return ConvexSet.of(eg.reflect_diag(self.polygon), self.d)

    def scaled(self, factor: Fraction) -> list:
        return eg.scale(self.polygon, factor)


def convex_of_poly(f: LaurentPoly) -> ConvexSet:
    """Projected normalized Newton polygon of a quasi-homogeneous polynomial."""
    np_ = newton_polygon(f)
    return ConvexSet.of(np_.projected, bidegree(f).d)


def convex_step(kind: str, t: tuple[ConvexSet, ConvexSet, ConvexSet]) -> tuple[ConvexSet, ConvexSet, ConvexSet]:
    """One move of the convex-set tree (scaled Minkowski sum plus union hull)."""
    A1, A2, A3 = t
    if A1.d + A3.d != A2.d:
        raise ValueError(f"weights must satisfy d2 = d1 + d3, got {(A1.d, A2.d, A3.d)}")
    if kind == "L":
        dn = A1.d + A2.d
        body = eg.minkowski(A1.reflect().scaled(A1.d / dn), A2.scaled(A2.d / dn))
        middle = ConvexSet.of(body + A3.scaled(A3.d / dn), dn)
        return (A1.reflect(), middle, A2)
    if kind == "R":
        dn = A2.d + A3.d
        body = eg.minkowski(A2.scaled(A2.d / dn), A3.reflect().scaled(A3.d / dn))
        middle = ConvexSet.of(body + A1.scaled(A1.d / dn), dn)
        return (A2, middle, A3.reflect())
    raise ValueError(f"turn must be 'L' or 'R', got {kind!r}")


def convex_system() -> DecorationSystem:
    t0 = (
        ConvexSet.of([(0, 1)], 1),
        ConvexSet.of([(Fraction(1, 3), 0), (Fraction(2, 3), Fraction(1, 3)), (0, Fraction(2, 3))], 3),
        ConvexSet.of([(1, 0), (0, Fraction(1, 2))], 2),
    )

    return DecorationSystem(
        "convex",
        t0,
        lambda a: a.reflect(),
        lambda t: convex_step("L", t)[1],
        lambda t: convex_step("R", t)[1],
        lambda t: t[0].d + t[2].d == t[1].d,
    )


def fib_segment_distance(n: int) -> float:
    """Hausdorff distance of the projected F_{4n+1} polygon to [(0,0), (1/2,1/2)]."""
    from .fibonacci_pell import star_fibonacci

    hull = convex_of_poly(star_fibonacci(2 * n)).polygon
    segment = [(Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1, 2))]
    return eg.hausdorff(hull, segment)


def pell_corner_distances(n: int) -> list[float]:
    """Distances from the limiting quadrilateral corners to the projected P_{4n+1} hull."""
    from .fibonacci_pell import star_pell

    hull = convex_of_poly(star_pell(2 * n)).polygon
    corners = [(Fraction(3, 4), Fraction(0)), (Fraction(0), Fraction(3, 4)), (Fraction(1, 2), Fraction(1, 2))]
    return [eg.point_to_hull_dist(c, hull) for c in corners]
