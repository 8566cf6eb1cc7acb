"""Convex polygon geometry and quadrature.

Polygons are ``(n, 2)`` float arrays holding a counter-clockwise vertex loop.
Anything with fewer than three vertices is the empty polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from polymg._triangle_rules import TRIANGLE_RULES

GEOM_EPS = 1e-12
MAX_TRIANGLE_DEGREE = max(TRIANGLE_RULES)
MAX_SEGMENT_DEGREE = 41

EMPTY = np.zeros((0, 2))


@dataclass(frozen=True)
class QuadratureRule:
    """Points and weights on a reference element.

    Triangle rules live on (0,0), (1,0), (0,1) with weights summing to 1/2;
    segment rules live on [-1, 1] with weights summing to 2.
    """

    points: np.ndarray
    weights: np.ndarray
    exactness_degree: int


@lru_cache(maxsize=None)
def triangle_quadrature(degree: int) -> QuadratureRule:
    """Symmetric rule exact for bivariate polynomials of total degree ``degree``."""
    if not 1 <= degree <= MAX_TRIANGLE_DEGREE:
        raise ValueError(f"unsupported triangle quadrature degree {degree}")
    pts, wts = TRIANGLE_RULES[degree]
    points = np.array(pts, dtype=float)
    weights = np.array(wts, dtype=float)
    points.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(points, weights, degree)


@lru_cache(maxsize=None)
def segment_quadrature(degree: int) -> QuadratureRule:
    """Gauss-Legendre rule on [-1, 1] exact to ``degree``."""
    if not 1 <= degree <= MAX_SEGMENT_DEGREE:
        raise ValueError(f"unsupported segment quadrature degree {degree}")
    points, weights = np.polynomial.legendre.leggauss(degree // 2 + 1)
    points.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(points, weights, degree)


def polygon_area(p) -> float:
    """Signed shoelace area (positive for CCW loops), 0 for degenerate input."""
    p = np.asarray(p, dtype=float)
    if len(p) < 3:
        return 0.0
    x, y = p[:, 0], p[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def polygon_centroid(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    x, y = p[:, 0], p[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    a = 0.5 * cross.sum()
    if abs(a) <= 0.0:
        return p.mean(axis=0)
    return np.array([((x + xn) * cross).sum(), ((y + yn) * cross).sum()]) / (6.0 * a)


def polygon_diameter(p) -> float:
    p = np.asarray(p, dtype=float)
    d = p[:, None, :] - p[None, :, :]
    return float(np.sqrt((d**2).sum(-1).max()))


def clip_halfplane(poly: list, a: float, b: float, c: float, eps: float = 0.0) -> list:
    """Keep the part of ``poly`` (list of (x, y) tuples) where a*x + b*y <= c."""
    out = []
    n = len(poly)
    if n == 0:
        return out
    sx, sy = poly[-1]
    ds = a * sx + b * sy - c
    for ex, ey in poly:
        de = a * ex + b * ey - c
        if de <= eps:
            if ds > eps:
                t = ds / (ds - de)
                out.append((sx + t * (ex - sx), sy + t * (ey - sy)))
            out.append((ex, ey))
        elif ds <= eps:
            t = ds / (ds - de)
            out.append((sx + t * (ex - sx), sy + t * (ey - sy)))
        sx, sy, ds = ex, ey, de
    return out


def _dedupe(loop: list, tol: float) -> list:
    out = []
    for pt in loop:
        if not out or abs(pt[0] - out[-1][0]) > tol or abs(pt[1] - out[-1][1]) > tol:
            out.append(pt)
    while len(out) > 1 and abs(out[0][0] - out[-1][0]) <= tol and abs(out[0][1] - out[-1][1]) <= tol:
        out.pop()
    return out


def clip_convex(p, q) -> np.ndarray:
    """Intersection of two convex CCW polygons (Sutherland-Hodgman against q's edges)."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if len(p) < 3 or len(q) < 3:
        return EMPTY.copy()
    scale = max(np.ptp(p, axis=0).max(), np.ptp(q, axis=0).max())
    tol = GEOM_EPS * scale
    out = [tuple(v) for v in p]
    m = len(q)
    for i in range(m):
        x0, y0 = q[i]
        x1, y1 = q[(i + 1) % m]
        # inside of a CCW edge is to its left: (y1-y0)*x - (x1-x0)*y <= (y1-y0)*x0 - (x1-x0)*y0
        a, b = y1 - y0, -(x1 - x0)
        out = clip_halfplane(out, a, b, a * x0 + b * y0, eps=tol * np.hypot(a, b))
        if len(out) < 3:
            return EMPTY.copy()
    out = _dedupe(out, tol)
    if len(out) < 3:
        return EMPTY.copy()
    return np.array(out)


def fan_triangles(p) -> np.ndarray:
    """Centroid fan of a convex polygon as an ``(n, 3, 2)`` array of triangles."""
    p = np.asarray(p, dtype=float)
    c = polygon_centroid(p)
    nxt = np.roll(p, -1, axis=0)
    return np.stack([np.broadcast_to(c, p.shape), p, nxt], axis=1)


def map_triangle_rule(tris: np.ndarray, rule: QuadratureRule):
    """Physical points ``(nt*nq, 2)`` and weights for a stack of triangles."""
    tris = np.asarray(tris, dtype=float)
    v0 = tris[:, 0, :]
    e1 = tris[:, 1, :] - v0
    e2 = tris[:, 2, :] - v0
    det = e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]
    r, s = rule.points[:, 0], rule.points[:, 1]
    pts = v0[:, None, :] + r[None, :, None] * e1[:, None, :] + s[None, :, None] * e2[:, None, :]
    wts = np.abs(det)[:, None] * rule.weights[None, :]
    return pts.reshape(-1, 2), wts.reshape(-1)


def polygon_quadrature(p, degree: int):
    """Quadrature points and weights on a convex polygon, exact to ``degree``."""
    rule = triangle_quadrature(max(1, degree))
    return map_triangle_rule(fan_triangles(p), rule)


def integrate_on_polygon(p, f, degree: int) -> float:
    """Integrate ``f(x, y)`` (vectorised) over a convex polygon."""
    p = np.asarray(p, dtype=float)
    if len(p) < 3:
        raise ValueError("cannot integrate over an empty polygon")
    pts, wts = polygon_quadrature(p, degree)
    vals = np.asarray(f(pts[:, 0], pts[:, 1]), dtype=float)
    return float(np.dot(np.broadcast_to(vals, wts.shape), wts))


def segment_points(a, b, degree: int):
    """Gauss points on the segment a->b with physical weights."""
    rule = segment_quadrature(max(1, degree))
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    t = 0.5 * (rule.points + 1.0)
    pts = a[None, :] + t[:, None] * (b - a)[None, :]
    return pts, rule.weights * (0.5 * float(np.hypot(*(b - a))))
