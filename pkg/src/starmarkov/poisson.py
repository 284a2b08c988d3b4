"""Nambu and Poisson structures on C⁶, C⁵ and C¹² with exact verification.

On C⁶ with coordinates (a, a*, b, b*, c, c*) the canonical order-6 Nambu
bracket subordinates a 4-bracket {..}_{H1,H2} and, through the 4-form Ω, the
log-canonical Poisson bracket {f,g}_Ω = (Ω ∧ df ∧ dg)/dV whose Casimirs are
generated by h1..h5.  The map F: C⁶ → C⁵, y = (x1x2, x3x4, x5x6, x1x3x5,
x2x4x6), pulls the Gelfand-Leray form back to Ω and carries the group action;
on C⁵ the subordinated bracket {,}_{J,J1,J2} is polynomial in the linear
coordinates u = (y1, y2, y3, J1, J2).  On C¹² the quadratic brackets with
Casimirs H1, H2, H3 form a three-parameter log-canonical family permuted by
the braid group through a vector representation ρ on the parameters.

Everything is exact: coefficients are rationals, the parameters b1, b2, b3
are adjoined as polynomial variables, and all invariance statements are
checked as polynomial identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .multipoly import MultiPoly, PolyRing, det

# -- rings --------------------------------------------------------------------

RING_C3 = PolyRing(["a", "b", "c"])
RING_C6 = PolyRing([f"x{i}" for i in range(1, 7)])
RING_C5 = PolyRing([f"y{i}" for i in range(1, 6)])
RING_C12 = PolyRing([f"x{i}" for i in range(1, 13)])
RING_C12B = PolyRing([f"x{i}" for i in range(1, 13)] + ["b1", "b2", "b3"])

_X = {i: RING_C6.gen(f"x{i}") for i in range(1, 7)}
_Y = {i: RING_C5.gen(f"y{i}") for i in range(1, 6)}
_Z = {i: RING_C12B.gen(f"x{i}") for i in range(1, 13)}
_B = {i: RING_C12B.gen(f"b{i}") for i in range(1, 4)}


def _prod(ring: PolyRing, factors: Iterable[MultiPoly]) -> MultiPoly:
    out = ring.const(1)
    for f in factors:
        out = out * f
    return out


# -- C6 data -------------------------------------------------------------------

H1_C6 = _X[1] * _X[2] + _X[3] * _X[4] + _X[5] * _X[6] - _X[1] * _X[3] * _X[5]
H2_C6 = _X[1] * _X[2] + _X[3] * _X[4] + _X[5] * _X[6] - _X[2] * _X[4] * _X[6]

H_GENERATORS_C6 = {
    "h1": _X[1] * _X[2],
    "h2": _X[3] * _X[4],
    "h3": _X[5] * _X[6],
    "h4": _X[1] * _X[3] * _X[5],
    "h5": _X[2] * _X[4] * _X[6],
}

# -- C5 data -------------------------------------------------------------------

J_C5 = _Y[1] * _Y[2] * _Y[3] - _Y[4] * _Y[5]
J1_C5 = _Y[1] + _Y[2] + _Y[3] - _Y[4]
J2_C5 = _Y[1] + _Y[2] + _Y[3] - _Y[5]

U_COORDS = (_Y[1], _Y[2], _Y[3], J1_C5, J2_C5)

# the map F: C6 -> C5 (as the pullback substitution y_i -> F_i)
F_MAP: dict[str, MultiPoly] = {
    "y1": _X[1] * _X[2],
    "y2": _X[3] * _X[4],
    "y3": _X[5] * _X[6],
    "y4": _X[1] * _X[3] * _X[5],
    "y5": _X[2] * _X[4] * _X[6],
}


# -- differential forms ----------------------------------------------------------

@dataclass(frozen=True)
class DiffForm:
    """Exterior form with polynomial coefficients; keys are increasing index tuples."""

    ring: PolyRing
    terms: dict[tuple[int, ...], MultiPoly]

    @staticmethod
    def zero(ring: PolyRing) -> "DiffForm":
        return DiffForm(ring, {})

    @staticmethod
    def monomial(ring: PolyRing, idx: Sequence[int], coeff: MultiPoly) -> "DiffForm":
        idx, sign = _sort_indices(tuple(idx))
        if sign == 0 or not coeff:
            return DiffForm(ring, {})
        return DiffForm(ring, {idx: coeff if sign > 0 else -coeff})

    def __add__(self, other: "DiffForm") -> "DiffForm":
        res = dict(self.terms)
        for idx, c in other.terms.items():
            s = res.get(idx)
            s = c if s is None else s + c
            if s:
                res[idx] = s
            elif idx in res:
                del res[idx]
        return DiffForm(self.ring, res)

    def __neg__(self) -> "DiffForm":
        return DiffForm(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "DiffForm") -> "DiffForm":
        return self + (-other)

    def scale(self, f: MultiPoly) -> "DiffForm":
        res = {}
        for idx, c in self.terms.items():
            p = c * f
            if p:
                res[idx] = p
        return DiffForm(self.ring, res)

    def wedge(self, other: "DiffForm") -> "DiffForm":
        res: dict[tuple[int, ...], MultiPoly] = {}
        for i1, c1 in self.terms.items():
            set1 = set(i1)
            for i2, c2 in other.terms.items():
                if set1 & set(i2):
                    continue
                idx, sign = _sort_indices(i1 + i2)
                c = c1 * c2
                if sign < 0:
                    c = -c
                s = res.get(idx)
                s = c if s is None else s + c
                if s:
                    res[idx] = s
                elif idx in res:
                    del res[idx]
        return DiffForm(self.ring, res)

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffForm) and self.ring is other.ring and self.terms == other.terms

    def top_coefficient(self) -> MultiPoly:
        """The coefficient of dx1∧...∧dxn (division by the volume form)."""
        top = tuple(range(self.ring.n))
        for idx, c in self.terms.items():
            if idx != top:
                raise ValueError("form is not a multiple of the volume form")
        return self.terms.get(top, self.ring.zero())


def _sort_indices(idx: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    lst = list(idx)
    if len(set(lst)) != len(lst):
        return (), 0
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    return tuple(lst), sign


def d(f: MultiPoly) -> DiffForm:
    ring = f.ring
    res = {}
    for i in range(ring.n):
        p = f.diff(i)
        if p:
            res[(i,)] = p
    return DiffForm(ring, res)


def wedge_all(forms: Sequence[DiffForm]) -> DiffForm:
    out = forms[0]
    for f in forms[1:]:
        out = out.wedge(f)
    return out


def _omega_form() -> DiffForm:
    """The 4-form Ω on C⁶ (in the factored presentation, expanded)."""
    ring = RING_C6
    log34 = DiffForm(ring, {(2,): _X[4], (3,): _X[3]})  # x4 dx3 + x3 dx4, times 1/(x3x4) implied
    log56 = DiffForm(ring, {(4,): _X[6], (5,): _X[5]})
    odd = DiffForm(ring, {(0,): _X[3] * _X[5], (2,): _X[1] * _X[5], (4,): _X[1] * _X[3]})
    even = DiffForm(ring, {(1,): _X[4] * _X[6], (3,): _X[2] * _X[6], (5,): _X[2] * _X[4]})
    quotient = _X[3] * _X[4] * _X[5] * _X[6]
    full = wedge_all([log34, log56, odd, even])
    res = {}
    for idx, c in full.terms.items():
        q, r = _poly_divmod_exact(c, quotient)
        if r:
            raise AssertionError("factored form not divisible by x3x4x5x6")
        if q:
            res[idx] = q
    return DiffForm(ring, res)


def _poly_divmod_exact(f: MultiPoly, g: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Divide by a monomial times unit or fail; only used for exact quotients."""
    if len(g.terms) != 1:
        raise ValueError("divisor must be a monomial")
    (gk, gc), = g.terms.items()
    res = {}
    for k, c in f.terms.items():
        exps_f = f.ring.unpack(k)
        exps_g = f.ring.unpack(gk)
        if any(ef < eg for ef, eg in zip(exps_f, exps_g)):
            return f.ring.zero(), f
        res[f.ring.pack(tuple(ef - eg for ef, eg in zip(exps_f, exps_g)))] = c / gc
    return MultiPoly(f.ring, res), f.ring.zero()


OMEGA_FORM = _omega_form()


# -- brackets -----------------------------------------------------------------

@dataclass
class BracketTable:
    """Antisymmetric table {x_i, x_j} of polynomial brackets on the first n variables."""

    ring: PolyRing
    n: int
    entries: dict[tuple[int, int], MultiPoly]  # keys (i, j) with 1 <= i < j <= n, 1-based

    def entry(self, i: int, j: int) -> MultiPoly:
        if i == j:
            return self.ring.zero()
        if i < j:
            return self.entries.get((i, j), self.ring.zero())
        return -self.entries.get((j, i), self.ring.zero())

    def map_entries(self, fn: Callable[[MultiPoly], MultiPoly]) -> "BracketTable":
        out = {}
        for key, val in self.entries.items():
            img = fn(val)
            if img:
                out[key] = img
        return BracketTable(self.ring, self.n, out)

    def __neg__(self) -> "BracketTable":
        return self.map_entries(lambda p: -p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketTable):
            return NotImplemented
        if self.ring is not other.ring or self.n != other.n:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(self.entry(*k) == other.entry(*k) for k in keys)

    def scale(self, c) -> "BracketTable":
        return self.map_entries(lambda p: p * c)

    def add(self, other: "BracketTable") -> "BracketTable":
        keys = set(self.entries) | set(other.entries)
        out = {}
        for k in keys:
            v = self.entry(*k) + other.entry(*k)
            if v:
                out[k] = v
        return BracketTable(self.ring, self.n, out)


def nambu_canonical(fs: Sequence[MultiPoly], variables: Sequence[int | str] | None = None) -> MultiPoly:
    """The canonical Nambu bracket det(∂f_i/∂x_j) of n functions in n variables."""
    ring = fs[0].ring
    if variables is None:
        variables = list(range(ring.n))
    idxs = [ring.index[v] if isinstance(v, str) else v for v in variables]
    if len(fs) != len(idxs):
        raise ValueError(f"need as many functions as variables: {len(fs)} vs {len(idxs)}")
    matrix = [[f.diff(i) for i in idxs] for f in fs]
    return det(matrix, ring)


def bracket_from_form(omega: DiffForm, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """{f, g}_ω = (ω ∧ df ∧ dg) / dV for a form of degree n−2."""
    degrees = {len(idx) for idx in omega.terms}
    if degrees and degrees != {omega.ring.n - 2}:
        raise ValueError("form must have degree n-2")
    return omega.wedge(d(f)).wedge(d(g)).top_coefficient()


def table_from_form(omega: DiffForm) -> BracketTable:
    ring = omega.ring
    gens = ring.gens()
    entries = {}
    for i, j in combinations(range(1, ring.n + 1), 2):
        val = bracket_from_form(omega, gens[i - 1], gens[j - 1])
        if val:
            entries[(i, j)] = val
    return BracketTable(ring, ring.n, entries)


def extend_bracket(table: BracketTable, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Leibniz extension Σ_{i<j} W_ij (∂_i f ∂_j g − ∂_j f ∂_i g)."""
    if f.ring is not table.ring or g.ring is not table.ring:
        raise ValueError("functions must live in the table's ring")
    total = table.ring.zero()
    df = [f.diff(i) for i in range(table.n)]
    dg = [g.diff(i) for i in range(table.n)]
    for (i, j), w in table.entries.items():
        a = df[i - 1] * dg[j - 1] - df[j - 1] * dg[i - 1]
        if a:
            total = total + w * a
    return total


def coord_bracket(table: BracketTable, i: int, g: MultiPoly) -> MultiPoly:
    """{x_i, g} = Σ_j W_ij ∂_j g."""
    total = table.ring.zero()
    for j in range(1, table.n + 1):
        if j == i:
            continue
        w = table.entry(i, j)
        if w:
            p = g.diff(j - 1)
            if p:
                total = total + w * p
    return total


def jacobi_check(table: BracketTable) -> bool:
    """Σ_cyc {x_i, {x_j, x_k}} = 0 for all i<j<k (sufficient for a bivector)."""
    for i, j, k in combinations(range(1, table.n + 1), 3):
        acc = (
            coord_bracket(table, i, table.entry(j, k))
            + coord_bracket(table, j, table.entry(k, i))
            + coord_bracket(table, k, table.entry(i, j))
        )
        if acc:
            return False
    return True


@dataclass(frozen=True)
class CanonicalNambu:
    ring: PolyRing
    order: int

    def __call__(self, fs: Sequence[MultiPoly]) -> MultiPoly:
        if len(fs) != self.order:
            raise ValueError(f"bracket of order {self.order} got {len(fs)} arguments")
        return nambu_canonical(list(fs), list(range(self.order)))


@dataclass(frozen=True)
class SubordinatedBracket:
    """k-bracket {h1..hk}_H = {H1..H_{n−k}, h1..hk} of a canonical n-bracket."""

    ring: PolyRing
    hamiltonians: tuple[MultiPoly, ...]
    order: int

    def __call__(self, fs: Sequence[MultiPoly]) -> MultiPoly:
        if len(fs) != self.order:
            raise ValueError(f"bracket of order {self.order} got {len(fs)} arguments")
        return nambu_canonical(list(self.hamiltonians) + list(fs), list(range(self.ring.n)))


def fundamental_identity_check(nbr: Callable, order: int, samples: Iterable[tuple[Sequence[MultiPoly], Sequence[MultiPoly]]]) -> bool:
    """FI: {f.., {g1..gn}} = Σ_i {g1, .., {f.., g_i}, .., gn} on each sampled tuple."""
    for fs, gs in samples:
        if len(fs) != order - 1 or len(gs) != order:
            raise ValueError("sample arity mismatch")
        lhs = nbr(list(fs) + [nbr(list(gs))])
        rhs = None
        for i in range(order):
            inner = nbr(list(fs) + [gs[i]])
            term = nbr(list(gs[:i]) + [inner] + list(gs[i + 1:]))
            rhs = term if rhs is None else rhs + term
        if lhs != rhs:
            return False
    return True


def pullback_form(images: Mapping[str, MultiPoly], omega: DiffForm, target: PolyRing) -> DiffForm:
    """Substitute variables and differentials of a polynomial form along a map."""
    ring = omega.ring
    subst = {name: images[name] for name in ring.names}
    diffs = {i: d(images[ring.names[i]]) for i in range(ring.n)}
    total = DiffForm.zero(target)
    for idx, c in omega.terms.items():
        cf = c.subs(subst, target=target)
        if not cf:
            continue
        form = wedge_all([diffs[i] for i in idx]) if idx else None
        if form is None:
            total = total + DiffForm(target, {(): cf})
        else:
            total = total + form.scale(cf)
    return total


# -- group actions -------------------------------------------------------------

@dataclass(frozen=True)
class Action:
    """A polynomial automorphism given by its pullback substitution and inverse."""

    name: str
    subst: dict[str, MultiPoly]
    inv: dict[str, MultiPoly]

    def pull(self, f: MultiPoly) -> MultiPoly:
        return f.subs(self.subst)

    def pull_inv(self, f: MultiPoly) -> MultiPoly:
        return f.subs(self.inv)


def _subst6(images: Sequence[MultiPoly]) -> dict[str, MultiPoly]:
    return {f"x{i+1}": images[i] for i in range(6)}


def _actions_c6() -> dict[str, Action]:
    x = _X
    acts = {}

    def invol(name, images):
        s = _subst6(images)
        acts[name] = Action(name, s, s)

    invol("lam10", [-x[1], -x[2], -x[3], -x[4], x[5], x[6]])
    invol("lam01", [x[1], x[2], -x[3], -x[4], -x[5], -x[6]])
    invol("lam11", [-x[1], -x[2], x[3], x[4], -x[5], -x[6]])
    invol("sigma1", [x[3], x[4], x[1], x[2], x[5], x[6]])
    invol("sigma2", [x[1], x[2], x[5], x[6], x[3], x[4]])
    invol("nu", [x[2], x[1], x[4], x[3], x[6], x[5]])
    acts["tau1"] = Action(
        "tau1",
        _subst6([-x[2], -x[1], x[6], x[5], x[4] - x[1] * x[5], x[3] - x[2] * x[6]]),
        _subst6([-x[2], -x[1], x[6] - x[1] * x[3], x[5] - x[2] * x[4], x[4], x[3]]),
    )
    acts["tau2"] = Action(
        "tau2",
        _subst6([x[4], x[3], x[2] - x[3] * x[5], x[1] - x[4] * x[6], -x[6], -x[5]]),
        _subst6([x[4] - x[1] * x[5], x[3] - x[2] * x[6], x[2], x[1], -x[6], -x[5]]),
    )
    return acts


def _actions_c5() -> dict[str, Action]:
    y = _Y

    def sub(images):
        return {f"y{i+1}": images[i] for i in range(5)}

    acts = {}
    for name, images in (
        ("sigma1", [y[2], y[1], y[3], y[4], y[5]]),
        ("sigma2", [y[1], y[3], y[2], y[4], y[5]]),
        ("nu", [y[1], y[2], y[3], y[5], y[4]]),
    ):
        s = sub(images)
        acts[name] = Action(name, s, s)
    acts["tau1"] = Action(
        "tau1",
        sub([y[1], y[3], y[2] + y[1] * y[3] - y[4] - y[5], y[1] * y[3] - y[5], y[1] * y[3] - y[4]]),
        sub([y[1], y[3] + y[1] * y[2] - y[4] - y[5], y[2], y[1] * y[2] - y[5], y[1] * y[2] - y[4]]),
    )
    acts["tau2"] = Action(
        "tau2",
        sub([y[2], y[1] + y[2] * y[3] - y[4] - y[5], y[3], y[2] * y[3] - y[5], y[2] * y[3] - y[4]]),
        sub([y[2] + y[1] * y[3] - y[4] - y[5], y[1], y[3], y[1] * y[3] - y[5], y[1] * y[3] - y[4]]),
    )
    return acts


def _actions_c12() -> dict[str, Action]:
    z = _Z

    def sub(images: dict[int, MultiPoly]) -> dict[str, MultiPoly]:
        out = {f"x{i}": images[i] for i in images}
        for i in range(1, 4):
            out[f"b{i}"] = _B[i]
        return out

    t1 = sub({1: -z[2], 2: -z[1], 3: -z[2] * z[3] + z[7], 4: -z[1] * z[4] + z[8],
              5: -z[2] * z[5] + z[9], 6: -z[1] * z[6] + z[10],
              7: z[3], 8: z[4], 9: z[5], 10: z[6], 11: z[11], 12: z[12]})
    t1i = sub({1: -z[2], 2: -z[1], 3: z[7], 4: z[8], 5: z[9], 6: z[10],
               7: z[3] - z[1] * z[7], 8: z[4] - z[2] * z[8],
               9: z[5] - z[1] * z[9], 10: z[6] - z[2] * z[10], 11: z[11], 12: z[12]})
    t2 = sub({1: z[3] - z[1] * z[7], 2: z[4] - z[2] * z[8], 3: z[1], 4: z[2],
              5: z[5], 6: z[6], 7: -z[8], 8: -z[7],
              9: -z[8] * z[9] + z[11], 10: -z[7] * z[10] + z[12], 11: z[9], 12: z[10]})
    t2i = sub({1: z[3], 2: z[4], 3: z[1] - z[3] * z[8], 4: z[2] - z[4] * z[7],
               5: z[5], 6: z[6], 7: -z[8], 8: -z[7],
               9: z[11], 10: z[12], 11: z[9] - z[7] * z[11], 12: z[10] - z[8] * z[12]})
    t3 = sub({1: z[1], 2: z[2], 3: z[5] - z[3] * z[11], 4: z[6] - z[4] * z[12],
              5: z[3], 6: z[4], 7: z[9] - z[7] * z[11], 8: z[10] - z[8] * z[12],
              9: z[7], 10: z[8], 11: -z[12], 12: -z[11]})
    t3i = sub({1: z[1], 2: z[2], 3: z[5], 4: z[6], 5: z[3] - z[5] * z[12], 6: z[4] - z[6] * z[11],
               7: z[9], 8: z[10], 9: z[7] - z[9] * z[12], 10: z[8] - z[10] * z[11],
               11: -z[12], 12: -z[11]})
    return {
        "tau1": Action("tau1", t1, t1i),
        "tau2": Action("tau2", t2, t2i),
        "tau3": Action("tau3", t3, t3i),
    }


ACTIONS_C6 = _actions_c6()
ACTIONS_C5 = _actions_c5()
ACTIONS_C12 = _actions_c12()

# induced braid action on the family parameters (an S4 vector representation)
RHO = {
    "tau1": ((1, -1, 0), (0, -1, 0), (0, 0, -1)),   # rows: images of b1,b2,b3
    "tau2": ((-1, 0, 0), (-1, 1, -1), (0, 0, -1)),
    "tau3": ((-1, 0, 0), (0, -1, 0), (0, -1, 1)),
}


def rho_subst(name: str) -> dict[str, MultiPoly]:
    rows = RHO[name]
    out = {f"x{i}": _Z[i] for i in range(1, 13)}
    for i in range(1, 4):
        row = rows[i - 1]
        out[f"b{i}"] = row[0] * _B[1] + row[1] * _B[2] + row[2] * _B[3]
    return out


def transform_bracket(action: Action, table: BracketTable) -> BracketTable:
    """{f,g}^φ = φ*({f∘φ^{−1}, g∘φ^{−1}}), tabulated on coordinates."""
    ring = table.ring
    gens = ring.gens()
    entries = {}
    for i, j in combinations(range(1, table.n + 1), 2):
        pre_i = gens[i - 1].subs(action.inv)
        pre_j = gens[j - 1].subs(action.inv)
        val = action.pull(extend_bracket(table, pre_i, pre_j))
        if val:
            entries[(i, j)] = val
    return BracketTable(ring, table.n, entries)


# -- concrete tables --------------------------------------------------------------

def omega_table() -> BracketTable:
    """The log-canonical Poisson table {x_i,x_j}_Ω on C⁶."""
    return table_from_form(OMEGA_FORM)


def dubrovin_table() -> BracketTable:
    """The braid-invariant Poisson structure {f,g}_H on C³."""
    a, b, c = RING_C3.gens()
    H = a * a + b * b + c * c - a * b * c
    nb = CanonicalNambu(RING_C3, 3)
    entries = {}
    gens = [a, b, c]
    for i, j in combinations(range(1, 4), 2):
        val = nb([H, gens[i - 1], gens[j - 1]])
        if val:
            entries[(i, j)] = val
    return BracketTable(RING_C3, 3, entries)


def c5_table() -> BracketTable:
    """{y_i, y_j}_{J,J1,J2} on C⁵ from the canonical order-5 bracket."""
    nb = CanonicalNambu(RING_C5, 5)
    gens = RING_C5.gens()
    entries = {}
    for i, j in combinations(range(1, 6), 2):
        val = nb([J_C5, J1_C5, J2_C5, gens[i - 1], gens[j - 1]])
        if val:
            entries[(i, j)] = val
    return BracketTable(RING_C5, 5, entries)


def c5_u_bracket(i: int, j: int) -> MultiPoly:
    """{u_i, u_j}_{J,J1,J2} expressed as a polynomial on C⁵ (y-coordinates)."""
    nb = CanonicalNambu(RING_C5, 5)
    return nb([J_C5, J1_C5, J2_C5, U_COORDS[i - 1], U_COORDS[j - 1]])


# -- the C12 three-parameter family ------------------------------------------------

def _c12_hamiltonian(data: list[tuple[int, tuple[int, ...]]]) -> MultiPoly:
    total = RING_C12B.zero()
    for coeff, idxs in data:
        total = total + coeff * _prod(RING_C12B, (_Z[i] for i in idxs))
    return total


H1_C12 = _c12_hamiltonian(
    [(1, (1, 2)), (1, (3, 4)), (1, (5, 6)), (1, (7, 8)), (1, (9, 10)), (1, (11, 12)),
     (-1, (2, 3, 8)), (-1, (2, 5, 10)), (-1, (4, 5, 12)), (-1, (8, 9, 12)), (1, (2, 5, 8, 12))]
)
H2_C12 = _c12_hamiltonian(
    [(-2, (1, 2)), (-2, (3, 4)), (-2, (5, 6)), (-2, (7, 8)), (-2, (9, 10)), (-2, (11, 12)),
     (1, (2, 3, 8)), (1, (2, 5, 10)), (1, (1, 4, 7)), (1, (1, 6, 9)), (1, (3, 6, 11)),
     (1, (7, 10, 11)), (1, (4, 5, 12)), (1, (8, 9, 12)),
     (-1, (2, 3, 10, 11)), (1, (1, 2, 11, 12)), (1, (5, 6, 7, 8)), (-1, (3, 6, 8, 9)),
     (-1, (4, 5, 7, 10)), (1, (3, 4, 9, 10)), (-1, (1, 4, 9, 12))]
)
H3_C12 = _c12_hamiltonian(
    [(1, (1, 2)), (1, (3, 4)), (1, (5, 6)), (1, (7, 8)), (1, (9, 10)), (1, (11, 12)),
     (-1, (1, 4, 7)), (-1, (1, 6, 9)), (-1, (3, 6, 11)), (-1, (7, 10, 11)), (1, (1, 6, 7, 11))]
)

CASIMIR_MONOMIALS_C12 = {
    "m1": (1, 2), "m2": (3, 4), "m3": (5, 6), "m4": (7, 8), "m5": (9, 10), "m6": (11, 12),
    "m7": (2, 3, 8), "m8": (2, 5, 10), "m9": (4, 5, 12), "m10": (8, 9, 12),
    "m11": (1, 4, 7), "m12": (1, 6, 9), "m13": (3, 6, 11), "m14": (7, 10, 11),
    "m15": (2, 5, 8, 12), "m16": (2, 3, 10, 11), "m17": (3, 6, 8, 9),
    "m18": (4, 5, 7, 10), "m19": (1, 4, 9, 12), "m20": (1, 6, 7, 11),
}


def casimir_monomial(name: str) -> MultiPoly:
    return _prod(RING_C12B, (_Z[i] for i in CASIMIR_MONOMIALS_C12[name]))


# block coefficients of the family; blocks are the pairs (x_{2I−1}, x_{2I})
_BLOCK_COEFF: dict[tuple[int, int], tuple[int, int, int]] = {
    (1, 2): (0, 0, -1), (1, 3): (0, 1, -1), (1, 4): (0, 0, -1), (1, 5): (0, 1, -1), (1, 6): (0, 1, 0),
    (2, 3): (-1, 1, 0), (2, 4): (0, 0, -1), (2, 5): (-1, 1, -1), (2, 6): (-1, 1, 0),
    (3, 4): (1, 0, -1), (3, 5): (0, 1, -1), (3, 6): (-1, 1, 0),
    (4, 5): (-1, 0, 0), (4, 6): (-1, 0, 0), (5, 6): (-1, 0, 0),
}


def c12_family_table(b: tuple | None = None) -> BracketTable:
    """The three-parameter log-canonical table {x_i,x_j} = κ_{IJ}(b) x_i x_j.

    With b = None the parameters stay symbolic (variables b1, b2, b3);
    otherwise b is a triple of rationals substituted into the coefficients.
    """
    if b is None:
        bs = (_B[1], _B[2], _B[3])
    else:
        bs = tuple(RING_C12B.const(v) for v in b)
    entries = {}
    for (bi, bj), (c1, c2, c3) in _BLOCK_COEFF.items():
        kappa = c1 * bs[0] + c2 * bs[1] + c3 * bs[2]
        if not kappa:
            continue
        for s in (0, 1):
            for t in (0, 1):
                i, j = 2 * bi - 1 + s, 2 * bj - 1 + t
                sign = 1 if (s + t) % 2 == 0 else -1
                entries[(i, j)] = sign * kappa * _Z[i] * _Z[j]
    return BracketTable(RING_C12B, 12, entries)


# -- quadratic Casimir solver -------------------------------------------------------

def _monomials(ring: PolyRing, nvars: int, degree: int) -> list[tuple[int, ...]]:
    if degree == 1:
        out = []
        for i in range(nvars):
            e = [0] * ring.n
            e[i] = 1
            out.append(tuple(e))
        return out
    if degree == 2:
        out = []
        for i in range(nvars):
            for j in range(i, nvars):
                e = [0] * ring.n
                e[i] += 1
                e[j] += 1
                out.append(tuple(e))
        return out
    raise ValueError("only degrees 1 and 2 are supported")


def quadratic_casimir_solver(ring: PolyRing, nvars: int, casimirs: Sequence[MultiPoly], degree: int = 2) -> list[BracketTable]:
    """Basis of antisymmetric tables {x_i,x_j} = Σ Q x^α (deg α = degree) killing the Casimirs.

    Sets up the exact linear system from {x_i, H} ≡ 0 for each Casimir H and
    solves its nullspace by sparse Gaussian elimination over the rationals.
    """
    pairs = list(combinations(range(1, nvars + 1), 2))
    pair_index = {p: k for k, p in enumerate(pairs)}
    monos = _monomials(ring, nvars, degree)
    ncols = len(pairs) * len(monos)

    def col(pair_k: int, mono_k: int) -> int:
        return pair_k * len(monos) + mono_k

    mono_keys = [ring.pack(e) for e in monos]
    partials = [[h.diff(j) for j in range(nvars)] for h in casimirs]

    # assemble rows: for each casimir H and coordinate i, the polynomial
    # Σ_j W_ij ∂H/∂x_j has every monomial coefficient vanish.
    rows: list[dict[int, Fraction]] = []
    for hi, h in enumerate(casimirs):
        for i in range(1, nvars + 1):
            acc: dict[int, dict[int, Fraction]] = {}  # result monomial -> {column: coeff}
            for j in range(1, nvars + 1):
                if j == i:
                    continue
                dh = partials[hi][j - 1]
                if not dh:
                    continue
                if i < j:
                    pk, sgn = pair_index[(i, j)], 1
                else:
                    pk, sgn = pair_index[(j, i)], -1
                for mk, mkey in enumerate(mono_keys):
                    column = col(pk, mk)
                    for dkey, dc in dh.terms.items():
                        rkey = mkey + dkey
                        bucket = acc.setdefault(rkey, {})
                        bucket[column] = bucket.get(column, Fraction(0)) + sgn * dc
            for bucket in acc.values():
                row = {c: v for c, v in bucket.items() if v}
                if row:
                    rows.append(row)

    basis_vecs = _nullspace(rows, ncols)
    tables = []
    for vec in basis_vecs:
        entries: dict[tuple[int, int], MultiPoly] = {}
        for cidx, val in vec.items():
            pk, mk = divmod(cidx, len(monos))
            i, j = pairs[pk]
            add = MultiPoly(ring, {mono_keys[mk]: val})
            entries[(i, j)] = entries.get((i, j), ring.zero()) + add
        entries = {k: v for k, v in entries.items() if v}
        tables.append(BracketTable(ring, nvars, entries))
    return tables


def _nullspace(rows: list[dict[int, Fraction]], ncols: int) -> list[dict[int, Fraction]]:
    """Nullspace basis of a sparse rational matrix (online elimination)."""
    pivots: dict[int, dict[int, Fraction]] = {}  # pivot column -> normalized row
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                break
            factor = row[c]
            for k, v in piv.items():
                nv = row.get(k, Fraction(0)) - factor * v
                if nv:
                    row[k] = nv
                elif k in row:
                    del row[k]
    free_cols = [c for c in range(ncols) if c not in pivots]
    # back-substitute to echelon form so each pivot row has no other pivot cols
    order = sorted(pivots, reverse=True)
    for c in order:
        row = pivots[c]
        for c2 in [k for k in row if k != c and k in pivots]:
            factor = row[c2]
            for k, v in pivots[c2].items():
                nv = row.get(k, Fraction(0)) - factor * v
                if nv:
                    row[k] = nv
                elif k in row:
                    del row[k]
    basis = []
    for fc in free_cols:
        vec = {fc: Fraction(1)}
        for pc, prow in pivots.items():
            coeff = prow.get(fc)
            if coeff:
                vec[pc] = -coeff
        basis.append(vec)
    return basis


def span_coefficients(target: BracketTable, basis: Sequence[BracketTable]):
    """Rational coefficients writing target = Σ λ_i basis_i, or None."""
    keys = set(target.entries)
    for b in basis:
        keys |= set(b.entries)
    rows: list[tuple[list[Fraction], Fraction]] = []
    for key in keys:
        monos = set()
        polys = [b.entry(*key) for b in basis] + [target.entry(*key)]
        for p in polys:
            monos |= set(p.terms)
        for mk in monos:
            coeffs = [p.terms.get(mk, Fraction(0)) for p in polys[:-1]]
            rhs = polys[-1].terms.get(mk, Fraction(0))
            rows.append((coeffs, rhs))
    return _solve_dense(rows, len(basis))


def in_span(target: BracketTable, basis: Sequence[BracketTable]) -> bool:
    """Exact membership of a table in the rational span of basis tables."""
    return span_coefficients(target, basis) is not None


def coefficient_linear_forms(table: BracketTable) -> set[tuple]:
    """Distinct nonzero linear forms in (b1,b2,b3) scaling the x_i x_j entries."""
    ring = table.ring
    forms = set()
    bidx = [ring.index[f"b{i}"] for i in range(1, 4)]
    for (i, j), poly in table.entries.items():
        coeffs = [Fraction(0)] * 3
        for exps, c in poly.items():
            for k, bi in enumerate(bidx):
                if exps[bi] == 1:
                    coeffs[k] += c
        if any(coeffs):
            forms.add(tuple(coeffs))
    return forms


def _solve_dense(rows: list[tuple[list[Fraction], Fraction]], nuk: int):
    mat = [list(r) + [v] for r, v in rows]
    piv = 0
    pivcols = []
    for c in range(nuk):
        sel = None
        for r in range(piv, len(mat)):
            if mat[r][c]:
                sel = r
                break
        if sel is None:
            continue
        mat[piv], mat[sel] = mat[sel], mat[piv]
        inv = 1 / mat[piv][c]
        mat[piv] = [v * inv for v in mat[piv]]
        for r in range(len(mat)):
            if r != piv and mat[r][c]:
                f = mat[r][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[piv])]
        pivcols.append(c)
        piv += 1
    for r in range(piv, len(mat)):
        if mat[r][nuk]:
            return None
    sol = [Fraction(0)] * nuk
    for r, c in enumerate(pivcols):
        sol[c] = mat[r][nuk]
    return sol


def table_rank_at_point(table: BracketTable, point: Sequence[Fraction]) -> int:
    n = table.n
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                mat[i - 1][j - 1] = Fraction(table.entry(i, j).evaluate(point))
    rank = 0
    rowi = 0
    for c in range(n):
        sel = None
        for r in range(rowi, n):
            if mat[r][c]:
                sel = r
                break
        if sel is None:
            continue
        mat[rowi], mat[sel] = mat[sel], mat[rowi]
        inv = 1 / mat[rowi][c]
        mat[rowi] = [v * inv for v in mat[rowi]]
        for r in range(n):
            if r != rowi and mat[r][c]:
                f = mat[r][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rowi])]
        rank += 1
        rowi += 1
    return rank
