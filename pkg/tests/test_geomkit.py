import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polymg.geomkit import (
    EMPTY,
    MAX_TRIANGLE_DEGREE,
    clip_convex,
    clip_halfplane,
    fan_triangles,
    integrate_on_polygon,
    polygon_area,
    polygon_centroid,
    polygon_diameter,
    segment_points,
    segment_quadrature,
    triangle_quadrature,
)

SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def ref_triangle_monomial(a, b):
    # int_T x^a y^b over the unit right triangle
    return math.factorial(a) * math.factorial(b) / math.factorial(a + b + 2)


@pytest.mark.parametrize("degree", range(1, MAX_TRIANGLE_DEGREE + 1))
def test_triangle_rule_exact_for_all_monomials_up_to_degree(degree):
    rule = triangle_quadrature(degree)
    x, y = rule.points[:, 0], rule.points[:, 1]
    assert rule.exactness_degree >= degree
    assert np.all(rule.weights > 0)
    assert np.all(x >= -1e-14) and np.all(y >= -1e-14) and np.all(x + y <= 1 + 1e-14)
    for d in range(degree + 1):
        for a in range(d + 1):
            got = float(rule.weights @ (x**a * y ** (d - a)))
            assert got == pytest.approx(ref_triangle_monomial(a, d - a), rel=1e-12, abs=1e-15)


def test_triangle_rule_rejects_unsupported_degree():
    with pytest.raises(ValueError):
        triangle_quadrature(MAX_TRIANGLE_DEGREE + 1)


@pytest.mark.parametrize("degree", [1, 2, 5, 9, 17, 41])
def test_segment_rule_exactness(degree):
    rule = segment_quadrature(degree)
    for k in range(degree + 1):
        exact = 0.0 if k % 2 else 2.0 / (k + 1)
        assert float(rule.weights @ rule.points**k) == pytest.approx(exact, abs=1e-13)


def test_area_centroid_diameter_of_unit_square():
    assert polygon_area(SQUARE) == pytest.approx(1.0)
    assert polygon_area(SQUARE[::-1]) == pytest.approx(-1.0)
    assert polygon_area(SQUARE[:2]) == 0.0
    np.testing.assert_allclose(polygon_centroid(SQUARE), [0.5, 0.5])
    assert polygon_diameter(SQUARE) == pytest.approx(math.sqrt(2))


def test_halfplane_clip_cuts_square_in_half():
    out = clip_halfplane([tuple(v) for v in SQUARE], 1.0, 0.0, 0.5)
    assert polygon_area(np.array(out)) == pytest.approx(0.5)
    assert clip_halfplane([tuple(v) for v in SQUARE], 1.0, 0.0, -1.0) == []


def test_clip_convex_overlap_and_disjoint():
    shifted = SQUARE + 0.5
    assert polygon_area(clip_convex(SQUARE, shifted)) == pytest.approx(0.25)
    assert len(clip_convex(SQUARE, SQUARE + 3.0)) == 0
    assert clip_convex(SQUARE, EMPTY).shape == (0, 2)
    # self-intersection returns the polygon itself
    assert polygon_area(clip_convex(SQUARE, SQUARE)) == pytest.approx(1.0)


def test_fan_triangles_cover_polygon():
    hexagon = np.array([[math.cos(t), math.sin(t)] for t in np.linspace(0, 2 * math.pi, 7)[:-1]])
    tris = fan_triangles(hexagon)
    assert tris.shape == (6, 3, 2)
    e1 = tris[:, 1] - tris[:, 0]
    e2 = tris[:, 2] - tris[:, 0]
    assert float(0.5 * (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]).sum()) == pytest.approx(polygon_area(hexagon))


def test_polygon_integration_of_polynomials():
    tri = np.array([[0.0, 0.0], [2.0, 0.0], [0.0, 1.0]])
    assert integrate_on_polygon(SQUARE, lambda x, y: np.ones_like(x), 1) == pytest.approx(1.0)
    assert integrate_on_polygon(SQUARE, lambda x, y: x**3 * y**2, 5) == pytest.approx(1 / 12)
    # int_0^2 x^2 (1 - x/2) dx
    assert integrate_on_polygon(tri, lambda x, y: x**2, 2) == pytest.approx(2 / 3)
    with pytest.raises(ValueError):
        integrate_on_polygon(SQUARE[:2], lambda x, y: x, 1)


def test_segment_points_weights_sum_to_length():
    pts, wts = segment_points([0, 0], [3, 4], 5)
    assert wts.sum() == pytest.approx(5.0)
    assert float(wts @ pts[:, 0] ** 2) == pytest.approx(5.0 * 3.0)  # 5 * int_0^1 (3t)^2 dt


def _convex_polygon(points):
    """Counter-clockwise convex hull of a point set (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return None

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = np.array(lower[:-1] + upper[:-1])
    return hull if len(hull) >= 3 and polygon_area(hull) > 1e-3 else None


coords = st.tuples(st.floats(0, 1, allow_nan=False), st.floats(0, 1, allow_nan=False))


@settings(max_examples=60, deadline=None)
@given(st.lists(coords, min_size=3, max_size=9), st.lists(coords, min_size=3, max_size=9))
def test_clip_convex_properties(a, b):
    p, q = _convex_polygon(a), _convex_polygon(b)
    if p is None or q is None:
        return
    pq, qp = clip_convex(p, q), clip_convex(q, p)
    area = polygon_area(pq) if len(pq) else 0.0
    assert area >= 0.0
    assert area <= min(polygon_area(p), polygon_area(q)) + 1e-12
    assert area == pytest.approx(polygon_area(qp) if len(qp) else 0.0, abs=1e-12)
    # every intersection vertex lies in both polygons
    for poly in (p, q):
        for v in pq:
            for i in range(len(poly)):
                e = poly[(i + 1) % len(poly)] - poly[i]
                w = v - poly[i]
                assert e[0] * w[1] - e[1] * w[0] >= -1e-10
