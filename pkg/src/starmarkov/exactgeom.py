"""Exact planar convex geometry over the rationals.

Small helpers shared by the Newton-polygon code and the convex-set tree:
convex hulls by monotone chain, Minkowski sums by vertex sums, the reflection
across the diagonal a1 = a2, and a numeric Hausdorff distance used only for
reporting asymptotics.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple  # pair of Fraction (or int) coordinates


def _cross(o: Point, a: Point, b: Point):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull2d(points: Iterable[Point]) -> list[Point]:
    """Extreme points of a finite planar set, counterclockwise.

    Collinear interior points are dropped.  Degenerate inputs are fine: a
    single point gives [p], a segment gives its two endpoints.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def canonical(hull: Sequence[Point]) -> tuple[Point, ...]:
    """Rotate a counterclockwise vertex list to start at its minimum."""
    if not hull:
        return ()
    i = hull.index(min(hull))
    return tuple(hull[i:]) + tuple(hull[:i])


def reflect_diag(points: Iterable[Point]) -> list[Point]:
    """Mirror across the diagonal a1 = a2 (swap coordinates)."""
    return [(p[1], p[0]) for p in points]


def scale(points: Iterable[Point], factor: Fraction) -> list[Point]:
    return [(p[0] * factor, p[1] * factor) for p in points]


def minkowski(a: Sequence[Point], b: Sequence[Point]) -> list[Point]:
    """Minkowski sum of two convex vertex sets (via pairwise sums + hull)."""
    sums = [(p[0] + q[0], p[1] + q[1]) for p in a for q in b]
    return hull2d(sums)


def contains_point(hull: Sequence[Point], p: Point) -> bool:
    """Exact membership of a point in the convex region of a ccw vertex list."""
    if not hull:
        return False
    if len(hull) == 1:
        return tuple(p) == tuple(hull[0])
    if len(hull) == 2:
        a, b = hull
        if _cross(a, b, p) != 0:
            return False
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    return all(_cross(hull[i], hull[(i + 1) % len(hull)], p) >= 0 for i in range(len(hull)))


def contains_hull(outer: Sequence[Point], inner: Sequence[Point]) -> bool:
    return all(contains_point(outer, p) for p in inner)


# -- numeric distances (reporting only) --------------------------------------

def _seg_dist(p: Point, a: Point, b: Point) -> float:
    px, py = float(p[0]), float(p[1])
    ax, ay = float(a[0]), float(a[1])
    bx, by = float(b[0]), float(b[1])
    dx, dy = bx - ax, by - ay
    denom = dx * dx + dy * dy
    if denom == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / denom
    t = max(0.0, min(1.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def _inside(p: Point, hull: Sequence[Point]) -> bool:
    if len(hull) < 3:
        return False
    px, py = float(p[0]), float(p[1])
    for i in range(len(hull)):
        a, b = hull[i], hull[(i + 1) % len(hull)]
        cr = (float(b[0]) - float(a[0])) * (py - float(a[1])) - (float(b[1]) - float(a[1])) * (px - float(a[0]))
        if cr < 0:
            return False
    return True


def point_to_hull_dist(p: Point, hull: Sequence[Point]) -> float:
    """Distance from a point to a convex region given by ccw vertices."""
    if not hull:
        raise ValueError("empty hull")
    if len(hull) == 1:
        return _seg_dist(p, hull[0], hull[0])
    if _inside(p, hull):
        return 0.0
    return min(_seg_dist(p, hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull)))


def hausdorff(a: Sequence[Point], b: Sequence[Point]) -> float:
    """Numeric Hausdorff distance between two convex polygons.

    The distance to a convex set is a convex function, so its supremum over a
    convex polygon is attained at a vertex; checking vertices is exact.
    """
    d1 = max(point_to_hull_dist(p, b) for p in a)
    d2 = max(point_to_hull_dist(p, a) for p in b)
    return max(d1, d2)
