"""Planar predicates: orientation, segment intersection, polygon convexity."""

from __future__ import annotations

import math
from typing import Sequence

Point = Sequence[float]


def cross(o: Point, a: Point, b: Point) -> float:
    """Twice the signed area of triangle (o, a, b); positive when counterclockwise."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _orient(o, a, b, eps):
    c = cross(o, a, b)
    if c > eps:
        return 1
    if c < -eps:
        return -1
    return 0


def _on_segment(p, q, r) -> bool:
    # r is collinear with pq; check it lies within the bounding box
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point, eps: float = 1e-12) -> bool:
    """True if closed segments p1p2 and q1q2 share any point, touching included."""
    o1 = _orient(p1, p2, q1, eps)
    o2 = _orient(p1, p2, q2, eps)
    o3 = _orient(q1, q2, p1, eps)
    o4 = _orient(q1, q2, p2, eps)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    if o1 == 0 and _on_segment(p1, p2, q1):
        return True
    if o2 == 0 and _on_segment(p1, p2, q2):
        return True
    if o3 == 0 and _on_segment(q1, q2, p1):
        return True
    if o4 == 0 and _on_segment(q1, q2, p2):
        return True
    return False


def is_convex_polygon(points: Sequence[Point], eps: float = 1e-12) -> bool:
    """Convexity of a closed polygon given in cyclic order.

    Straight angles count as convex. The total turning must be one full turn,
    which rules out self-overlapping star shapes with consistent turn signs.
    """
    k = len(points)
    if k < 3:
        return False
    sign = 0
    turning = 0.0
    for i in range(k):
        a, b, c = points[i - 1], points[i], points[(i + 1) % k]
        s = _orient(a, b, c, eps)
        if s:
            if sign and s != sign:
                return False
            sign = s
        v1 = (b[0] - a[0], b[1] - a[1])
        v2 = (c[0] - b[0], c[1] - b[1])
        turning += math.atan2(v1[0] * v2[1] - v1[1] * v2[0], v1[0] * v2[0] + v1[1] * v2[1])
    if sign == 0:
        return False
    return abs(abs(turning) - 2 * math.pi) < 1e-6


def regular_polygon(k: int, radius: float = 1.0, start_angle: float = math.pi / 2) -> list[tuple[float, float]]:
    """Corners of a regular k-gon centred at the origin, counterclockwise."""
    return [
        (radius * math.cos(start_angle + 2 * math.pi * i / k),
         radius * math.sin(start_angle + 2 * math.pi * i / k))
        for i in range(k)
    ]
