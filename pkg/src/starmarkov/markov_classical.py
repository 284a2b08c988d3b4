"""The integer Markov equation a² + b² + c² − abc = 0 and its tree.

Positive solutions form a binary tree under the moves
L(x,y,z) = (x, xy−z, y) and R(x,y,z) = (y, yz−x, z), rooted at the chain
(3,3,3) → (3,6,3) → (3,15,6) after which the tree branches.  The classical
Viète involutions replace one coordinate by the other root of its quadratic;
the greedy descent on the maximal entry reduces every positive solution to
(3,3,3) by a unique word.
"""

from __future__ import annotations

Triple = tuple[int, int, int]

ROOT: Triple = (3, 3, 3)
STEM: Triple = (3, 6, 3)
BRANCH_ROOT: Triple = (3, 15, 6)


def is_markov(t: Triple) -> bool:
    a, b, c = t
    return a * a + b * b + c * c - a * b * c == 0


def is_positive_markov(t: Triple) -> bool:
    return is_markov(t) and all(x > 0 for x in t)


# -- group generators on integer triples -------------------------------------

def lam_c(i: int, j: int, t: Triple) -> Triple:
    a, b, c = t
    return ((-1) ** i * a, (-1) ** (i + j) * b, (-1) ** j * c)


def sigma_c(k: int, t: Triple) -> Triple:
    a, b, c = t
    if k == 1:
        return (b, a, c)
    if k == 2:
        return (a, c, b)
    raise ValueError(f"no classical permutation sigma_{k}")


def tau_c(k: int, t: Triple) -> Triple:
    a, b, c = t
    if k == 1:
        return (-a, c, b - a * c)
    if k == 2:
        return (b, a - b * c, -c)
    raise ValueError(f"no classical braid generator tau_{k}")


def viete_c(i: int, t: Triple) -> Triple:
    a, b, c = t
    if i == 1:
        return (b * c - a, b, c)
    if i == 2:
        return (a, a * c - b, c)
    if i == 3:
        return (a, b, a * b - c)
    raise ValueError(f"no Viete involution v_{i}")


def apply_viete_word(word: tuple[int, ...], t: Triple) -> Triple:
    """Apply Viète letters in order (word[0] first)."""
    for i in word:
        t = viete_c(i, t)
    return t


def tree_step(kind: str, t: Triple) -> Triple:
    x, y, z = t
    if kind == "L":
        return (x, x * y - z, y)
    if kind == "R":
        return (y, y * z - x, z)
    raise ValueError(f"tree step must be 'L' or 'R', got {kind!r}")


def reduce_to_root(t: Triple) -> tuple[int, ...]:
    """Greedy Viète descent from a positive solution to (3,3,3).

    Returns the word (applied left to right) that sends t to (3,3,3); the
    letter at each step is the position of the maximal entry (Lemma-unique
    except at (3,3,3) and (3,6,3), which are explicit base cases).
    """
    if not is_positive_markov(t):
        raise ValueError(f"{t} is not a positive Markov solution")
    word: list[int] = []
    while t != ROOT:
        if t == STEM:
            t = viete_c(2, t)
            word.append(2)
            continue
        m = max(t)
        i = t.index(m) + 1
        nxt = viete_c(i, t)
        if max(nxt) >= m:
            raise AssertionError(f"descent failed at {t}")
        t = nxt
        word.append(i)
    return tuple(word)


def viete_word_to_triple(p: Triple) -> tuple[int, ...]:
    """The unique Viète word sending (3,3,3) to the positive solution p."""
    return tuple(reversed(reduce_to_root(p)))


def enumerate_tree(depth: int) -> list[tuple[str, Triple]]:
    """Vertices of the Markov tree, as (path, triple) pairs.

    Paths are L/R words from (3,3,3); the stem is "" → (3,3,3) and
    "L" → (3,6,3), the branching part starts at "LL" → (3,15,6) which sits at
    depth 1 of the planar binary tree, so depth k ≥ 1 adds the 2^(k−1)
    vertices with paths "LL"+w, |w| = k−1.  depth 0 gives just the root.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    out: list[tuple[str, Triple]] = [("", ROOT)]
    if depth == 0:
        return out
    out.append(("L", STEM))
    level: list[tuple[str, Triple]] = [("LL", BRANCH_ROOT)]
    out.extend(level)
    for _ in range(depth - 1):
        nxt: list[tuple[str, Triple]] = []
        for path, t in level:
            nxt.append((path + "L", tree_step("L", t)))
            nxt.append((path + "R", tree_step("R", t)))
        out.extend(nxt)
        level = nxt
    return out


def branch_path(t: Triple) -> str:
    """The L/R path from (3,15,6) to a vertex of the branching tree.

    Walks up through parents: an R-child has first entry larger than its
    third, an L-child the opposite (middle entries are strict maxima off the
    stem).  Raises for triples that are not vertices of the tree.
    """
    if not is_positive_markov(t):
        raise ValueError(f"{t} is not a positive Markov solution")
    steps: list[str] = []
    while t != BRANCH_ROOT:
        a, b, c = t
        if t in (ROOT, STEM) or b <= a or b <= c:
            raise ValueError(f"{t} is not a vertex of the branching Markov tree")
        if a > c:
            t = (a * c - b, a, c)
            steps.append("R")
        else:
            t = (a, c, a * c - b)
            steps.append("L")
        if not is_markov(t):
            raise AssertionError(f"parent step left the solution set at {t}")
    return "".join(reversed(steps))
