"""Admissible triples and reduced polynomial presentations of Markov triples.

An admissible triple (f1, f2, f3) consists of quasi-homogeneous polynomials
coprime to s3 whose bi-degrees add: (d1,q1) + (d3,q3) = (d2,q2).  The left
and right transforms

    L(f) = (μ(f1), μ(f1)f2 − s3^{d1}f3, f2)
    R(f) = (f2, f2μ(f3) − s3^{d3}f1, μ(f3))

mirror the Markov tree moves, and replaying the tree path from the seed
(s2, s2(s1²−s2)−s3s1, s1²−s2) yields the unique reduced polynomial solution
(f1*, f2, f3*) presenting a given Markov triple.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import markov_classical as mc
from .laurent_core import S1, S2, S3, BiDegree, LaurentPoly, bidegree, star
from .star_group import INITIAL, StarTriple


@dataclass(frozen=True)
class AdmissibleTriple:
    f1: LaurentPoly
    f2: LaurentPoly
    f3: LaurentPoly
    degrees: tuple[BiDegree, BiDegree, BiDegree] = field(init=False)

    def __post_init__(self):
        degs = []
        for f in (self.f1, self.f2, self.f3):
            if not f:
                raise ValueError("admissible entries must be nonzero")
            if f.divisible_by_s3():
                raise ValueError(f"admissible entry divisible by s3: {f}")
            bd = bidegree(f)  # also rejects non-polynomials and non-quasi-homogeneous
            if bd.d == 0:
                raise ValueError(f"admissible entries must be nonconstant: {f}")
            degs.append(bd)
        if degs[0] + degs[2] != degs[1]:
            raise ValueError(f"bi-degrees not additive: {[d.as_tuple() for d in degs]}")
        object.__setattr__(self, "degrees", tuple(degs))

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.f1, self.f2, self.f3)

    def solution(self) -> StarTriple:
        """The associated solution (f1*, f2, f3*) of the *-Markov equation."""
        return (star(self.f1), self.f2, star(self.f3))

    def evaluation(self) -> mc.Triple:
        from .star_group import evaluate_triple

        return evaluate_triple(self.solution())


SEED = None  # populated below; the admissible triple presenting (3, 15, 6)


def mu(f: LaurentPoly) -> LaurentPoly:
    from .laurent_core import mu_dual

    return mu_dual(f)


def transform(kind: str, t: AdmissibleTriple) -> AdmissibleTriple:
    """One tree move on admissible triples; output re-validated from scratch."""
    f1, f2, f3 = t.entries()
    d1, _, d3 = (bd.d for bd in t.degrees)
    if kind == "L":
        g1 = mu(f1)
        out = AdmissibleTriple(g1, g1 * f2 - f3.shift_s3(d1), f2)
        expected = (t.degrees[0].dual(), t.degrees[0].dual() + t.degrees[1], t.degrees[1])
    elif kind == "R":
        g3 = mu(f3)
        out = AdmissibleTriple(f2, f2 * g3 - f1.shift_s3(d3), g3)
        expected = (t.degrees[1], t.degrees[1] + t.degrees[2].dual(), t.degrees[2].dual())
    else:
        raise ValueError(f"transform kind must be 'L' or 'R', got {kind!r}")
    if out.degrees != expected:
        raise AssertionError(f"bi-degree law violated: {out.degrees} != {expected}")
    return out


def degree_matrix(f: LaurentPoly) -> tuple[tuple[int, int], tuple[int, int]]:
    """The 2×2 degree matrix with columns the bi-degrees of f and μ(f)."""
    bd = bidegree(f)
    return ((bd.d, bd.d), (bd.q, 3 * bd.d - bd.q))


def deviation(f: LaurentPoly) -> int:
    """The integer 2q − 3d of a quasi-homogeneous polynomial."""
    return bidegree(f).deviation


@dataclass(frozen=True)
class ReducedSolution:
    """Reduced polynomial presentation of a Markov triple.

    For (3,3,3) there is no polynomial presentation; the initial solution is
    returned with admissible = None.
    """

    markov: mc.Triple
    admissible: AdmissibleTriple | None
    solution: StarTriple


def reduced_presentation(p: mc.Triple) -> ReducedSolution:
    """The unique reduced polynomial solution evaluating to p.

    p must be (3,3,3), (3,6,3), or a triple with 0 < a < b, 0 < c < b, 6 ≤ b
    (a vertex of the branching tree or the reversal of one).
    """
    if not mc.is_positive_markov(p):
        raise ValueError(f"{p} is not a positive Markov solution")
    if p == mc.ROOT:
        return ReducedSolution(p, None, INITIAL)
    if p == mc.STEM:
        base = AdmissibleTriple(S1, S1 * S1 - S2, S1)
        return ReducedSolution(p, base, base.solution())
    a, b, c = p
    if not (0 < a < b and 0 < c < b and 6 <= b):
        raise ValueError(f"{p} violates 0<a<b, 0<c<b, 6<=b")
    try:
        path = mc.branch_path(p)
        reverse = False
    except ValueError:
        path = mc.branch_path((c, b, a))
        reverse = True
    t = SEED
    for step in path:
        t = transform(step, t)
    if reverse:
        t = AdmissibleTriple(t.f3, t.f2, t.f1)
    return ReducedSolution(p, t, t.solution())


SEED = AdmissibleTriple(S2, S2 * (S1 * S1 - S2) - S3 * S1, S1 * S1 - S2)
