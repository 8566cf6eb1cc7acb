"""Transfer between DG spaces on unrelated meshes via an exact supermesh L2 projection."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from polymg.dgcore import LevelOperators, tabulate
from polymg.geomkit import clip_convex, fan_triangles, map_triangle_rule, polygon_area, triangle_quadrature
from polymg.polymesh import PolyMesh
from polymg.sparsela import SparseCholesky

SLIVER_REL = 1e-12
CONSERVATION_TOL = 1e-8


class SupermeshError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Supermesh:
    fine: PolyMesh
    coarse: PolyMesh
    fine_ids: np.ndarray
    coarse_ids: np.ndarray
    polygons: list
    areas: np.ndarray

    def __len__(self):
        return len(self.polygons)

    def stats(self) -> dict:
        return {
            "pairs": len(self),
            "min_area": float(self.areas.min()),
            "max_area": float(self.areas.max()),
            "total_area": float(self.areas.sum()),
        }

    def write_stats_csv(self, path) -> None:
        s = self.stats()
        Path(path).write_text(
            "fine_cells,coarse_cells,pairs,min_area,max_area,total_area\n"
            f"{self.fine.n_cells},{self.coarse.n_cells},{s['pairs']},{s['min_area']:.17g},"
            f"{s['max_area']:.17g},{s['total_area']:.17g}\n"
        )


def _candidate_pairs(fine: PolyMesh, coarse: PolyMesh) -> list:
    """Coarse cells whose bounding box meets each fine cell's box (uniform bucket grid)."""
    bf, bc = fine.bboxes, coarse.bboxes
    x0, y0, x1, y1 = coarse.domain
    nx = max(1, int(math.sqrt(coarse.n_cells)))
    dx, dy = (x1 - x0) / nx, (y1 - y0) / nx

    def span(lo, hi, o, d):
        return max(0, int((lo - o) // d)), min(nx - 1, int((hi - o) // d))

    buckets = {}
    for c, (a0, b0, a1, b1) in enumerate(bc):
        i0, i1 = span(a0, a1, x0, dx)
        j0, j1 = span(b0, b1, y0, dy)
        for i in range(i0, i1 + 1):
            for j in range(j0, j1 + 1):
                buckets.setdefault((i, j), []).append(c)
    out = []
    for a0, b0, a1, b1 in bf:
        i0, i1 = span(a0, a1, x0, dx)
        j0, j1 = span(b0, b1, y0, dy)
        cand = set()
        for i in range(i0, i1 + 1):
            for j in range(j0, j1 + 1):
                cand.update(buckets.get((i, j), ()))
        cand = np.array(sorted(cand), dtype=int)
        if len(cand):
            hit = (bc[cand, 0] <= a1) & (bc[cand, 2] >= a0) & (bc[cand, 1] <= b1) & (bc[cand, 3] >= b0)
            cand = cand[hit]
        out.append(cand)
    return out


def build_supermesh(fine: PolyMesh, coarse: PolyMesh) -> Supermesh:
    """All non-negligible intersections of fine and coarse cells."""
    fa, ca = fine.areas, coarse.areas
    fids, cids, polys, areas = [], [], [], []
    for f, cands in enumerate(_candidate_pairs(fine, coarse)):
        pf = fine.cell_polygon(f)
        covered = 0.0
        for c in cands:
            q = clip_convex(pf, coarse.cell_polygon(c))
            a = polygon_area(q)
            if a <= SLIVER_REL * min(fa[f], ca[c]):
                continue
            fids.append(f)
            cids.append(int(c))
            polys.append(q)
            areas.append(a)
            covered += a
        if abs(covered - fa[f]) > CONSERVATION_TOL * fa[f]:
            raise SupermeshError(f"fine cell {f}: intersections cover {covered!r} of area {fa[f]!r}")
    return Supermesh(fine, coarse, np.array(fids), np.array(cids), polys, np.array(areas))


def assemble_mixed_mass(fine_space, coarse_space, supermesh: Supermesh) -> sp.csr_matrix:
    """P[k, l] = (phi_l^coarse, phi_k^fine) integrated exactly on each intersection."""
    pf, pc = fine_space.p, coarse_space.p
    nbf, nbc = fine_space.n_local, coarse_space.n_local
    rule = triangle_quadrature(pf + pc + 2)
    groups = {}
    for i, poly in enumerate(supermesh.polygons):
        groups.setdefault(len(poly), []).append(i)
    rows, cols, vals = [], [], []
    for _, idx in sorted(groups.items()):
        idx = np.array(idx)
        tris = np.stack([fan_triangles(supermesh.polygons[i]) for i in idx])
        n, nt = tris.shape[:2]
        pts, wts = map_triangle_rule(tris.reshape(-1, 3, 2), rule)
        pts = pts.reshape(n, -1, 2)
        wts = wts.reshape(n, -1)
        f = supermesh.fine_ids[idx]
        c = supermesh.coarse_ids[idx]
        vf, _ = tabulate(pf, pts, fine_space.box_center[f][:, None, :], fine_space.box_half[f][:, None, :])
        vc, _ = tabulate(pc, pts, coarse_space.box_center[c][:, None, :], coarse_space.box_half[c][:, None, :])
        blk = np.einsum("nqi,nq,nqj->nij", vf, wts, vc)
        r = f[:, None] * nbf + np.arange(nbf)
        cc = c[:, None] * nbc + np.arange(nbc)
        rows.append(np.broadcast_to(r[:, :, None], blk.shape).ravel())
        cols.append(np.broadcast_to(cc[:, None, :], blk.shape).ravel())
        vals.append(blk.ravel())
    shape = (fine_space.n_dofs, coarse_space.n_dofs)
    return sp.csr_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=shape)


@dataclass(eq=False)
class TransferPair:
    """Prolongation/restriction between a fine level and an unrelated coarse level.

    ``P`` is the mixed mass matrix; the prolongation matrix is ``M_fine^{-1} P`` and is
    only ever applied, never formed.
    """

    fine: LevelOperators
    coarse: LevelOperators
    supermesh: Supermesh
    P: sp.csr_matrix
    _coarse_factor: SparseCholesky | None = field(default=None, repr=False)

    @cached_property
    def PT(self) -> sp.csr_matrix:
        return self.P.T.tocsr()

    def prolong(self, v_coarse: np.ndarray) -> np.ndarray:
        """Coefficients of the L2 projection of a coarse function onto the fine space."""
        return self.fine.M.solve(self.P @ v_coarse)

    def restrict(self, r_fine: np.ndarray) -> np.ndarray:
        """L2-adjoint of ``prolong`` acting on fine *coefficient* vectors."""
        return self.coarse.M.solve(self.PT @ r_fine)

    def restrict_functional(self, g_fine: np.ndarray) -> np.ndarray:
        """Coarse functional l -> g(I phi_l^coarse), i.e. the transpose of the prolongation."""
        return self.PT @ self.fine.M.solve(g_fine)

    @property
    def coarse_factor(self) -> SparseCholesky:
        if self._coarse_factor is None:
            self._coarse_factor = SparseCholesky(self.coarse.K)
        return self._coarse_factor

    def p_coarse_projection(self, w_fine: np.ndarray) -> np.ndarray:
        """Coarse w_H with A_coarse(w_H, v) = A_fine(w, I v) for all coarse v."""
        return self.coarse_factor.solve(self.restrict_functional(self.fine.K @ w_fine))


def build_transfer(fine: LevelOperators, coarse: LevelOperators, supermesh: Supermesh | None = None) -> TransferPair:
    sm = build_supermesh(fine.space.mesh, coarse.space.mesh) if supermesh is None else supermesh
    P = assemble_mixed_mass(fine.space, coarse.space, sm)
    return TransferPair(fine, coarse, sm, P)


def prolong(pair: TransferPair, v_coarse) -> np.ndarray:
    return pair.prolong(np.asarray(v_coarse, dtype=float))


def restrict(pair: TransferPair, r_fine) -> np.ndarray:
    return pair.restrict(np.asarray(r_fine, dtype=float))


def p_coarse_projection(pair: TransferPair, w_fine) -> np.ndarray:
    return pair.p_coarse_projection(np.asarray(w_fine, dtype=float))
