import numpy as np
import pytest

from polymg.dgcore import build_level, l2_project
from polymg.geomkit import clip_convex, polygon_area
from polymg.polymesh import structured_quad_mesh
from polymg.xfer import (
    SupermeshError,
    build_supermesh,
    build_transfer,
    p_coarse_projection,
    prolong,
    restrict,
)


def test_supermesh_conserves_area(pair_meshes):
    coarse, fine = pair_meshes
    sm = build_supermesh(fine, coarse)
    assert sm.areas.sum() == pytest.approx(1.0, abs=1e-10)
    np.testing.assert_allclose(np.bincount(sm.fine_ids, sm.areas, fine.n_cells), fine.areas, atol=1e-10)
    np.testing.assert_allclose(np.bincount(sm.coarse_ids, sm.areas, coarse.n_cells), coarse.areas, atol=1e-10)


def test_supermesh_pairs_match_brute_force(pair_meshes):
    coarse, fine = pair_meshes
    sm = build_supermesh(fine, coarse)
    expected = set()
    for f in range(fine.n_cells):
        for c in range(coarse.n_cells):
            q = clip_convex(fine.cell_polygon(f), coarse.cell_polygon(c))
            if len(q) and polygon_area(q) > 1e-12 * min(fine.areas[f], coarse.areas[c]):
                expected.add((f, c))
    assert set(zip(sm.fine_ids.tolist(), sm.coarse_ids.tolist())) == expected


def test_supermesh_detects_uncovered_cells():
    fine = structured_quad_mesh(4)
    half = structured_quad_mesh(2, 2, domain=(0.0, 0.0, 0.5, 1.0))
    with pytest.raises(SupermeshError):
        build_supermesh(fine, half)


def test_supermesh_stats_csv(tmp_path, pair_meshes):
    coarse, fine = pair_meshes
    sm = build_supermesh(fine, coarse)
    sm.write_stats_csv(tmp_path / "s.csv")
    head, row = (tmp_path / "s.csv").read_text().splitlines()
    assert head == "fine_cells,coarse_cells,pairs,min_area,max_area,total_area"
    assert row.split(",")[:3] == ["32", "8", str(len(sm))]


def test_transfer_adjointness(pair_levels, rng):
    fine, coarse = pair_levels
    pair = build_transfer(fine, coarse)
    for _ in range(3):
        v = rng.standard_normal(coarse.n_dofs)
        w = rng.standard_normal(fine.n_dofs)
        lhs = w @ fine.M.matvec(prolong(pair, v))
        rhs = v @ coarse.M.matvec(restrict(pair, w))
        assert lhs == pytest.approx(rhs, rel=1e-12)
        g = rng.standard_normal(fine.n_dofs)
        assert g @ pair.prolong(v) == pytest.approx(pair.restrict_functional(g) @ v, rel=1e-12)


def test_prolongation_preserves_linears(pair_levels):
    fine, coarse = pair_levels
    pair = build_transfer(fine, coarse)
    for f in (lambda x, y: 1.0 + 0 * x, lambda x, y: 2.0 - 3.0 * x + 0.5 * y):
        vc = l2_project(coarse.space, f)
        np.testing.assert_allclose(pair.prolong(vc), l2_project(fine.space, f), atol=1e-12)


def test_identity_pair_is_identity(pair_meshes, rng):
    lev = build_level(pair_meshes[0], 2)
    pair = build_transfer(lev, lev)
    v = rng.standard_normal(lev.n_dofs)
    np.testing.assert_allclose(pair.prolong(v), v, rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(pair.restrict(v), v, rtol=1e-12, atol=1e-12)


def test_p_coarse_projection_defining_identity(pair_levels, rng):
    """A_coarse(P w, v) = A_fine(w, I v) for all coarse v."""
    fine, coarse = pair_levels
    pair = build_transfer(fine, coarse)
    w = rng.standard_normal(fine.n_dofs)
    pw = p_coarse_projection(pair, w)
    for _ in range(4):
        v = rng.standard_normal(coarse.n_dofs)
        lhs = pw @ (coarse.K @ v)
        rhs = w @ (fine.K @ pair.prolong(v))
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10 * np.abs(rhs))
