"""Odd *-Fibonacci and odd *-Pell polynomials.

The left boundary of the Markov tree is governed by

    F_1 = s1,  F_3 = s1² − s2,  F_{2n+3} = g_n F_{2n+1} − s3 F_{2n−1},

with g_n = s2 for odd n and s1 for even n; the right boundary by

    P_1 = s2,  P_3 = s1²s2 − s1s3 − s2²,  P_{2n+3} = h_n P_{2n+1} − s3² P_{2n−1},

with h_n = s2² − s1s3 for odd n and s1² − s2 for even n.  Evaluation at
(3,3,1) gives three times the odd Fibonacci and Pell numbers.  This module
implements the recurrences, binomial closed forms, generating-function
coefficients, Cassini identities, continued-fraction convergents, negative
indices, the numeric Binet formula, and the classical integer corollaries.

Sequence caches are insert-only dicts of immutable values; recomputation is
idempotent, so sharing them across threads cannot change any result.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .laurent_core import S1, S2, S3, LaurentPoly, star

_g = (S1, S2)  # g_n = _g[n % 2]
_h = (S1 * S1 - S2, S2 * S2 - S1 * S3)  # h_n = _h[n % 2]

CASSINI_FIB_CONSTANT = S1**3 * S3 + S2**3 - S1**2 * S2**2
CASSINI_PELL_CONSTANT = (S1 * S1 - S2) * S2**2 * S3 - S1 * (S2 * S2 - S1 * S3) * (
    (S1 * S1 - S2) * S2 - S1 * S3
)

_fib_cache: dict[int, LaurentPoly] = {0: S1, 1: S1 * S1 - S2}
_pell_cache: dict[int, LaurentPoly] = {0: S2, 1: S1 * S1 * S2 - S1 * S3 - S2 * S2}


def g_weight(n: int) -> LaurentPoly:
    return _g[n % 2]


def h_weight(n: int) -> LaurentPoly:
    return _h[n % 2]


def star_fibonacci(n: int) -> LaurentPoly:
    """F_{2n+1}; negative n through F_{−2n−1} = (F_{2n+1})*."""
    if n < 0:
        return star(star_fibonacci(-n - 1))
    if n not in _fib_cache:
        top = max(_fib_cache)
        for m in range(top + 1, n + 1):
            _fib_cache[m] = g_weight(m - 1) * _fib_cache[m - 1] - S3 * _fib_cache[m - 2]
    return _fib_cache[n]


def star_pell(n: int) -> LaurentPoly:
    """P_{2n+1} for n ≥ 0."""
    if n < 0:
        raise ValueError("odd *-Pell polynomials are defined for index 2n+1 with n >= 0")
    if n not in _pell_cache:
        top = max(_pell_cache)
        s3sq = S3 * S3
        for m in range(top + 1, n + 1):
            _pell_cache[m] = h_weight(m - 1) * _pell_cache[m - 1] - s3sq * _pell_cache[m - 2]
    return _pell_cache[n]


def _require_odd_index(m: int) -> None:
    if m < 1 or m % 2 == 0:
        raise ValueError(f"index must be an odd positive integer, got {m}")


def star_fibonacci_closed(m: int) -> LaurentPoly:
    """F_m by the binomial formulas, m odd positive (4n+1 or 4n+3)."""
    _require_odd_index(m)
    n, r = divmod(m - 1, 4)
    acc = LaurentPoly.zero()
    if r == 0:  # m = 4n+1
        for i in range(n + 1):
            c = math.comb(2 * n - i, i) * (-1) ** i
            acc = acc + LaurentPoly.monomial(n - i + 1, n - i, i, c)
        for i in range(n):
            c = math.comb(2 * n - 1 - i, i) * (-1) ** i
            acc = acc - LaurentPoly.monomial(n - 1 - i, n - i + 1, i, c)
    else:  # m = 4n+3
        for i in range(n + 1):
            c = math.comb(2 * n + 1 - i, i) * (-1) ** i
            acc = acc + LaurentPoly.monomial(n + 2 - i, n - i, i, c)
        for i in range(n + 1):
            c = math.comb(2 * n - i, i) * (-1) ** i
            acc = acc - LaurentPoly.monomial(n - i, n - i + 1, i, c)
    return acc


def pell_closed(m: int) -> LaurentPoly:
    """P_m by the binomial formulas in h0 = s1²−s2, h1 = s2²−s1s3."""
    _require_odd_index(m)
    n, r = divmod(m - 1, 4)
    h0, h1 = _h[0], _h[1]
    h01 = h0 * h1
    acc = LaurentPoly.zero()
    if r == 0:  # m = 4n+1
        for i in range(n + 1):
            c = (-1) ** i * math.comb(2 * n - i, i)
            acc = acc + c * S2 * h01 ** (n - i) * S3 ** (2 * i)
        for i in range(n):
            c = (-1) ** i * math.comb(2 * n - 1 - i, i)
            acc = acc - c * S1 * h1 * h01 ** (n - i - 1) * S3 ** (2 * i + 1)
    else:  # m = 4n+3
        for i in range(n + 1):
            c = (-1) ** i * math.comb(2 * n + 1 - i, i)
            acc = acc + c * S2 * h0 * h01 ** (n - i) * S3 ** (2 * i)
        for i in range(n + 1):
            c = (-1) ** i * math.comb(2 * n - i, i)
            acc = acc - c * S1 * h01 ** (n - i) * S3 ** (2 * i + 1)
    return acc


# -- generating functions -----------------------------------------------------
#
# F(s,t) = (s2s3 t⁷ + (s2²−s1s3) t⁵ + (s2−s1²) t³ − s1 t)
#          / (−s3² t⁸ − (2s3−s1s2) t⁴ − 1)
# P(s,t) = (−s1s3³ t⁷ + ((s1²+s2)s3² − s1s2²s3) t⁵ + ((s1²−s2)s2 − s1s3) t³ + s2 t)
#          / (s3⁴ t⁸ + (s1³s3 − s1s2s3 + s2³ − s1²s2² + 2s3²) t⁴ + 1)
#
# Both denominators are units at t = 0, so the coefficients satisfy the linear
# recurrence read off the denominator; no series division is needed.

_FIB_NUM = {1: -S1, 3: S2 - S1 * S1, 5: S2 * S2 - S1 * S3, 7: S2 * S3}
_FIB_DEN4 = -(2 * S3 - S1 * S2)  # t⁴ coefficient of the denominator, constant term −1
_PELL_NUM = {
    1: S2,
    3: (S1 * S1 - S2) * S2 - S1 * S3,
    5: (S1 * S1 + S2) * S3 * S3 - S1 * S2 * S2 * S3,
    7: -S1 * S3**3,
}
_PELL_DEN4 = S1**3 * S3 - S1 * S2 * S3 + S2**3 - S1**2 * S2**2 + 2 * S3 * S3


def _genfun_coeff(k: int, num: dict[int, LaurentPoly], den4: LaurentPoly, den8: LaurentPoly, den0: int) -> LaurentPoly:
    """Coefficient extraction for N(t)/(den0 + den4 t⁴ + den8 t⁸), den0 = ±1."""
    if k < 1 or k % 2 == 0:
        raise ValueError(f"generating series has odd positive exponents only, got {k}")
    coeffs: dict[int, LaurentPoly] = {}
    for m in range(1, k + 1, 2):
        acc = num.get(m, LaurentPoly.zero())
        if m - 4 >= 1:
            acc = acc - den4 * coeffs[m - 4]
        if m - 8 >= 1:
            acc = acc - den8 * coeffs[m - 8]
        coeffs[m] = acc * den0
    return coeffs[k]


def fib_genfun_coeff(k: int) -> LaurentPoly:
    """Coefficient of t^k in the odd *-Fibonacci generating series."""
    return _genfun_coeff(k, _FIB_NUM, _FIB_DEN4, -(S3 * S3), -1)


def pell_genfun_coeff(k: int) -> LaurentPoly:
    """Coefficient of t^k in the odd *-Pell generating series."""
    return _genfun_coeff(k, _PELL_NUM, _PELL_DEN4, S3**4, 1)


# -- Cassini ------------------------------------------------------------------

def cassini_fib(n: int) -> LaurentPoly:
    """g_n F_{2n+1}² − g_{n−1} F_{2n+3} F_{2n−1}; equals s3^{n−1}·(s1³s3+s2³−s1²s2²)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return g_weight(n) * star_fibonacci(n) ** 2 - g_weight(n - 1) * star_fibonacci(n + 1) * star_fibonacci(n - 1)


def cassini_fib_expected(n: int) -> LaurentPoly:
    return CASSINI_FIB_CONSTANT.shift_s3(n - 1)


def cassini_pell(n: int) -> LaurentPoly:
    """h_n P_{2n+1}² − h_{n−1} P_{2n+3} P_{2n−1}; equals s3^{2n−1}·(its constant)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return h_weight(n) * star_pell(n) ** 2 - h_weight(n - 1) * star_pell(n + 1) * star_pell(n - 1)


def cassini_pell_expected(n: int) -> LaurentPoly:
    return CASSINI_PELL_CONSTANT.shift_s3(2 * n - 1)


# -- continued fractions --------------------------------------------------------

Fractional = tuple[LaurentPoly, LaurentPoly]  # unreduced numerator/denominator


def _cf_eval(a0: LaurentPoly, tail: list[tuple[LaurentPoly, LaurentPoly]]) -> Fractional:
    """a0 + b1/(a1 + b2/(a2 + ...)) as an unreduced fraction, built right to left."""
    acc: Fractional | None = None
    for b, a in reversed(tail):
        if acc is None:
            acc = (b, a)
        else:
            p, q = acc
            acc = (b * q, a * q + p)
    if acc is None:
        return (a0, LaurentPoly.const(1))
    p, q = acc
    return (a0 * q + p, q)


def cf_convergent_fib(n: int) -> Fractional:
    """[g_n; −s3/g_{n−1}, ..., −s3/g_0, −s2/s1] = F_{2n+3}/F_{2n+1}, cross-multiplied."""
    if n < 1:
        raise ValueError("n must be >= 1")
    tail = [(-S3, g_weight(k)) for k in range(n - 1, -1, -1)]
    tail.append((-S2, S1))
    return _cf_eval(g_weight(n), tail)


def cf_convergent_pell(n: int) -> Fractional:
    """[h_n; −s3²/h_{n−1}, ..., −s3²/h_0, −s1s3/s2] = P_{2n+3}/P_{2n+1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s3sq = S3 * S3
    tail = [(-s3sq, h_weight(k)) for k in range(n - 1, -1, -1)]
    tail.append((-S1 * S3, S2))
    return _cf_eval(h_weight(n), tail)


def fractions_equal(x: Fractional, y: Fractional) -> bool:
    """Equality p/q = r/s by cross-multiplication (no gcds)."""
    return x[0] * y[1] == y[0] * x[1]


# -- Binet (numeric) ------------------------------------------------------------

def _eval_float(f: LaurentPoly, s: tuple[float, float, float]) -> float:
    s1, s2, s3 = s
    total = 0.0
    for (a1, a2, a3), c in f.items():
        total += c * s1**a1 * s2**a2 * s3**a3
    return total


def binet_numeric_fib(m: int, s: tuple[float, float, float]) -> tuple[float, float]:
    """Closed Binet value of F_m at a real point vs direct evaluation.

    m must be odd positive; the discriminant s1²s2² − 4 s1 s2 s3 must be
    positive so the two roots a± are real and separated.
    """
    _require_odd_index(m)
    s1, s2, s3 = (float(v) for v in s)
    disc = s1 * s1 * s2 * s2 - 4 * s1 * s2 * s3
    if disc <= 0:
        raise ValueError("degenerate branch point: discriminant must be positive")
    root = math.sqrt(disc)
    ap = (s1 * s2 - 2 * s3 + root) / (2 * s3 * s3)
    am = (s1 * s2 - 2 * s3 - root) / (2 * s3 * s3)
    g1 = 2 * s3 - s1 * s2
    g2 = s3 * s3
    k, r = divmod(m - 1, 4)
    if r == 0:
        c1, c0 = s1 * s3 - s2 * s2, s1  # α1 t⁵ + α0 t
    else:
        c1, c0 = -s2 * s3, s1 * s1 - s2  # β1 t⁷ + β0 t³
    predicted = -(c1 * ap + c0) / (ap ** (k + 1) * (2 * g2 * ap + g1)) - (c1 * am + c0) / (
        am ** (k + 1) * (2 * g2 * am + g1)
    )
    exact = _eval_float(star_fibonacci((m - 1) // 2), (s1, s2, s3))
    return predicted, exact


# -- Newton polygon formulas ------------------------------------------------------

def fib_newton_vertices(m: int) -> set[tuple[int, int, int]]:
    """The four-point hulls of F_{4n+1} (n ≥ 1) and F_{4n+3} (n ≥ 0)."""
    _require_odd_index(m)
    n, r = divmod(m - 1, 4)
    if r == 0:
        if n < 1:
            raise ValueError("four-point hull formula needs index >= 5")
        pts = [(n + 1, n, 0), (1, 0, n), (n - 1, n + 1, 0), (0, 2, n - 1)]
    else:
        pts = [(n + 2, n, 0), (2, 0, n), (n, n + 1, 0), (0, 1, n)]
    return set(pts)


def pell_support_points(m: int) -> set[tuple[int, int, int]]:
    """Support points of P_{4n+1} pinning the limiting quadrilateral."""
    n, r = divmod(m - 1, 4)
    if r != 0 or n < 1:
        raise ValueError("index must be 4n+1 with n >= 1")
    return {(0, 1, 2 * n), (2 * n, 2 * n + 1, 0), (0, 3 * n + 1, 0), (3 * n, 1, n)}


# -- classical integer sequences ---------------------------------------------------

def classical_sequences(kind: str, m: int) -> int:
    """φ_m or ψ_m through the paper-style binomial formulas."""
    if m < 1:
        raise ValueError("m must be >= 1")
    n, r = divmod(m - 1, 4)

    def s(top_off: int, base: int, exp_off: int, upper: int) -> Fraction:
        return Fraction(
            sum((-1) ** i * math.comb(top_off - i, i) * base ** (top_off + exp_off - 2 * i) for i in range(upper + 1))
        )

    if kind == "fib":
        if r == 0:
            val = s(2 * n, 3, 0, n) - s(2 * n - 1, 3, 0, n - 1)
        elif r == 1:
            val = s(2 * n, 3, 1, n) - 2 * s(2 * n, 3, 0, n)
        elif r == 2:
            val = s(2 * n + 1, 3, 0, n) - s(2 * n, 3, 0, n)
        else:
            val = s(2 * n + 1, 3, 0, n)
    elif kind == "pell":
        if r == 0:
            val = s(2 * n, 6, 0, n) - s(2 * n - 1, 6, 0, n - 1)
        elif r == 1:
            val = Fraction(1, 2) * s(2 * n, 6, 1, n) - s(2 * n, 6, 0, n)
        elif r == 2:
            val = s(2 * n + 1, 6, 0, n) - s(2 * n, 6, 0, n)
        else:
            val = 2 * s(2 * n + 1, 6, 0, n) + Fraction(1, 2) * s(2 * n, 6, 1, n) - 3 * s(2 * n, 6, 0, n)
    else:
        raise ValueError("kind must be 'fib' or 'pell'")
    if val.denominator != 1:
        raise AssertionError(f"formula did not produce an integer for {kind} m={m}")
    return int(val)
