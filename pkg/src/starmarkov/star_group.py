"""The *-Markov group acting on triples of Laurent polynomials.

Generators: sign changes λ_{i,j}, permutations σ1, σ2, the braid moves
τ1: (a,b,c) ↦ (−a*, c*, b*−ac) and τ2: (a,b,c) ↦ (b*, a*−bc, −c*),
the s3-power scalings μ_{i,j}, and the *-Viète involutions v1, v2, v3.
Solutions of aa* + bb* + cc* − abc = (3s1s2 − s1³)/s3 map to solutions;
evaluation at (3,3,1) intertwines the action with its classical counterpart.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import markov_classical as mc
from .laurent_core import S1, S3I, LaurentPoly, evaluate_at_s0, star

StarTriple = tuple[LaurentPoly, LaurentPoly, LaurentPoly]

INITIAL: StarTriple = (S1, S1 * S3I, S1)

# (3 s1 s2 − s1³) / s3, the right-hand side of the equation
ME_RHS = LaurentPoly({(1, 1, -1): 3, (3, 0, -1): -1})


@dataclass(frozen=True)
class Generator:
    kind: str  # "lam" | "sigma" | "tau" | "mu" | "v"
    i: int = 0
    j: int = 0

    def __str__(self) -> str:
        if self.kind in ("lam", "mu"):
            return f"{self.kind}_{{{self.i},{self.j}}}"
        return f"{self.kind}{self.i}"


def lam(i: int, j: int) -> Generator:
    return Generator("lam", i % 2, j % 2)


def sigma(k: int) -> Generator:
    if k not in (1, 2):
        raise ValueError("sigma index must be 1 or 2")
    return Generator("sigma", k)


def tau(k: int) -> Generator:
    if k not in (1, 2):
        raise ValueError("tau index must be 1 or 2")
    return Generator("tau", k)


def mu(i: int, j: int) -> Generator:
    return Generator("mu", i, j)


def viete(k: int) -> Generator:
    if k not in (1, 2, 3):
        raise ValueError("Viete index must be 1, 2 or 3")
    return Generator("v", k)


def apply(g: Generator, t: StarTriple) -> StarTriple:
    a, b, c = t
    if g.kind == "lam":
        return ((-1) ** g.i * a, (-1) ** (g.i + g.j) * b, (-1) ** g.j * c)
    if g.kind == "sigma":
        return (b, a, c) if g.i == 1 else (a, c, b)
    if g.kind == "tau":
        if g.i == 1:
            return (-star(a), star(c), star(b) - a * c)
        return (star(b), star(a) - b * c, -star(c))
    if g.kind == "mu":
        return (a.shift_s3(g.i), b.shift_s3(-g.i - g.j), c.shift_s3(g.j))
    if g.kind == "v":
        if g.i == 1:
            return (b * c - star(a), star(b), star(c))
        if g.i == 2:
            return (star(a), a * c - star(b), star(c))
        return (star(a), star(b), a * b - star(c))
    raise ValueError(f"unknown generator {g}")


def apply_word(word: tuple[Generator, ...], t: StarTriple) -> StarTriple:
    """Apply generators in order (word[0] first)."""
    for g in word:
        t = apply(g, t)
    return t


def classical_apply(g: Generator, t: mc.Triple) -> mc.Triple:
    """The image of a generator under the epimorphism onto the classical group."""
    if g.kind == "lam":
        return mc.lam_c(g.i, g.j, t)
    if g.kind == "sigma":
        return mc.sigma_c(g.i, t)
    if g.kind == "tau":
        return mc.tau_c(g.i, t)
    if g.kind == "mu":
        return t
    if g.kind == "v":
        return mc.viete_c(g.i, t)
    raise ValueError(f"unknown generator {g}")


def check_star_markov(t: StarTriple, form: int = 1) -> bool:
    """Exact test of aa* + bb* + cc* − abc = (3s1s2 − s1³)/s3.

    form=2 checks the variant with −ab*c, form=3 the one with −a*bc*, via the
    change of variables identifying the three versions.
    """
    a, b, c = t
    if form == 2:
        b = star(b)
    elif form == 3:
        a, c = star(a), star(c)
    elif form != 1:
        raise ValueError("form must be 1, 2 or 3")
    lhs = a * star(a) + b * star(b) + c * star(c) - a * b * c
    return lhs == ME_RHS


def evaluate_triple(t: StarTriple) -> mc.Triple:
    return tuple(evaluate_at_s0(f) for f in t)  # type: ignore[return-value]


def distinguished_element(p: mc.Triple) -> StarTriple:
    """The solution v^p I, where v^p is the Viète word with v^p(3,3,3) = p."""
    word = mc.viete_word_to_triple(p)  # raises unless p is a positive solution
    return apply_word(tuple(viete(i) for i in word), INITIAL)


def normalize_s3(t: StarTriple) -> StarTriple:
    """Scale each coordinate by a power of s3 to zero s3-valuation.

    This is the convention used to compare solutions modulo the scaling
    subgroup: permuted positive triples then have distinguished elements that
    agree up to the permutation.
    """
    return tuple(f.shift_s3(-f.s3_valuation()) for f in t)  # type: ignore[return-value]
