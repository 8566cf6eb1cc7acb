"""Discontinuous Galerkin spaces on polygonal meshes and level-matrix assembly.

Local basis: products of Legendre polynomials L_a(xi) L_b(eta) with a + b <= p, where
(xi, eta) are the coordinates of the cell's bounding box mapped to [-1, 1]^2. The
constant mode is identically 1, so its mass entry is the cell area.

All vectors in this module are either *coefficient* vectors (a function in V_j) or
*functional* vectors (entries (g, phi_k)); the mass matrix converts between the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from polymg.geomkit import fan_triangles, map_triangle_rule, segment_quadrature, triangle_quadrature
from polymg.polymesh import BOUNDARY, PolyMesh
from polymg.sparsela import BlockDiagFactor

DEFAULT_C_SIGMA = 10.0


def n_local(p: int) -> int:
    return (p + 1) * (p + 2) // 2


def modes(p: int) -> list:
    """Exponent pairs (a, b), grouped by total degree."""
    return [(a, d - a) for d in range(p + 1) for a in range(d, -1, -1)]


def legendre_table(p: int, x: np.ndarray):
    """Values and derivatives of L_0..L_p at ``x``; arrays of shape ``(p+1,) + x.shape``."""
    x = np.asarray(x, dtype=float)
    val = np.empty((p + 1,) + x.shape)
    der = np.empty_like(val)
    val[0] = 1.0
    der[0] = 0.0
    if p >= 1:
        val[1] = x
        der[1] = 1.0
    for n in range(1, p):
        val[n + 1] = ((2 * n + 1) * x * val[n] - n * val[n - 1]) / (n + 1)
        der[n + 1] = der[n - 1] + (2 * n + 1) * val[n]
    return val, der


def tabulate(p: int, pts: np.ndarray, center: np.ndarray, half: np.ndarray):
    """Basis values ``(..., nb)`` and gradients ``(..., nb, 2)`` at ``pts`` (``(..., 2)``).

    ``center`` and ``half`` describe each point's bounding box and broadcast against ``pts``.
    """
    xi = (pts - center) / half
    vx, dx = legendre_table(p, xi[..., 0])
    vy, dy = legendre_table(p, xi[..., 1])
    ab = modes(p)
    a = [m[0] for m in ab]
    b = [m[1] for m in ab]
    vals = np.moveaxis(vx[a] * vy[b], 0, -1)
    gx = np.moveaxis(dx[a] * vy[b], 0, -1) / half[..., 0:1]
    gy = np.moveaxis(vx[a] * dy[b], 0, -1) / half[..., 1:2]
    return vals, np.stack([gx, gy], axis=-1)


@dataclass(frozen=True, eq=False)
class DgSpace:
    mesh: PolyMesh
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("polynomial degree must be >= 1")
        if self.mesh.faces is None:
            raise ValueError("mesh faces have not been extracted")

    @property
    def n_local(self) -> int:
        return n_local(self.p)

    @property
    def n_dofs(self) -> int:
        return self.mesh.n_cells * self.n_local

    def dofs(self, k: int) -> np.ndarray:
        nb = self.n_local
        return np.arange(k * nb, (k + 1) * nb)

    @cached_property
    def box_center(self) -> np.ndarray:
        bb = self.mesh.bboxes
        return 0.5 * (bb[:, :2] + bb[:, 2:])

    @cached_property
    def box_half(self) -> np.ndarray:
        bb = self.mesh.bboxes
        return 0.5 * (bb[:, 2:] - bb[:, :2])

    def eval_basis(self, cell_id: int, points):
        """Values ``(n, nb)`` and gradients ``(n, nb, 2)`` of the local basis of one cell."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return tabulate(self.p, pts, self.box_center[cell_id], self.box_half[cell_id])

    def evaluate(self, u: np.ndarray, cell_id: int, points):
        """Value and gradient of the coefficient vector ``u`` at points of one cell."""
        vals, grads = self.eval_basis(cell_id, points)
        c = u[self.dofs(cell_id)]
        return vals @ c, np.einsum("qid,i->qd", grads, c)

    def cell_batches(self, degree: int):
        """Cells grouped by vertex count, with stacked quadrature.

        Yields ``(cells, pts, wts)`` with ``pts`` of shape ``(nc, nq, 2)``.
        """
        rule = triangle_quadrature(max(1, degree))
        groups = {}
        for k, loop in enumerate(self.mesh.cells):
            groups.setdefault(len(loop), []).append(k)
        for _, cells in sorted(groups.items()):
            tris = np.stack([fan_triangles(self.mesh.cell_polygon(k)) for k in cells])
            nc, nt = tris.shape[:2]
            pts, wts = map_triangle_rule(tris.reshape(-1, 3, 2), rule)
            yield np.array(cells), pts.reshape(nc, -1, 2), wts.reshape(nc, -1)

    def face_quadrature(self, degree: int):
        """Gauss points ``(nf, nq, 2)`` and physical weights ``(nf, nq)`` on every face."""
        rule = segment_quadrature(max(1, degree))
        f = self.mesh.faces
        a = self.mesh.vertices[f.verts[:, 0]]
        b = self.mesh.vertices[f.verts[:, 1]]
        t = 0.5 * (rule.points + 1.0)
        pts = a[:, None, :] + t[None, :, None] * (b - a)[:, None, :]
        wts = 0.5 * f.lengths[:, None] * rule.weights[None, :]
        return pts, wts


# --------------------------------------------------------------------------- penalty


def penalty_sigma(space: DgSpace, face: int, C_sigma: float = DEFAULT_C_SIGMA) -> float:
    """C_sigma * max(p^2 / h_k) over the cells sharing ``face``."""
    f = space.mesh.faces
    h = space.mesh.diameters
    p2 = space.p**2
    o, n = f.owner[face], f.neighbor[face]
    if n == BOUNDARY:
        return C_sigma * p2 / h[o]
    return C_sigma * max(p2 / h[o], p2 / h[n])


def penalty_all(space: DgSpace, C_sigma: float = DEFAULT_C_SIGMA) -> np.ndarray:
    f = space.mesh.faces
    h = space.mesh.diameters
    hmin = h[f.owner].copy()
    inner = f.neighbor != BOUNDARY
    hmin[inner] = np.minimum(hmin[inner], h[f.neighbor[inner]])
    return C_sigma * space.p**2 / hmin


# --------------------------------------------------------------------------- face traces


@dataclass(frozen=True)
class FaceTraces:
    """Traces of the basis on all faces at segment quadrature points.

    ``jump`` holds (phi_owner, -phi_neighbor) so that [[u]] = (jump @ u_local) * n;
    ``avg_dn`` holds {grad phi}.n with the same column layout; ``cols`` are global dofs
    (neighbor columns of boundary faces point at the owner's dofs and carry zeros).
    """

    pts: np.ndarray
    wts: np.ndarray
    jump: np.ndarray
    avg_dn: np.ndarray
    vals_owner: np.ndarray
    vals_neighbor: np.ndarray
    cols: np.ndarray
    interior: np.ndarray


def face_traces(space: DgSpace, degree: int | None = None) -> FaceTraces:
    p, nb = space.p, space.n_local
    f = space.mesh.faces
    deg = 2 * p + 1 if degree is None else degree
    pts, wts = space.face_quadrature(deg)
    inner = f.neighbor != BOUNDARY
    nbr = np.where(inner, f.neighbor, f.owner)
    vo, go = tabulate(p, pts, space.box_center[f.owner][:, None, :], space.box_half[f.owner][:, None, :])
    vn, gn = tabulate(p, pts, space.box_center[nbr][:, None, :], space.box_half[nbr][:, None, :])
    mask = inner.astype(float)[:, None, None]
    vn = vn * mask
    gn = gn * mask[..., None]
    nrm = f.normals[:, None, None, :]
    dno = (go * nrm).sum(-1)
    dnn = (gn * nrm).sum(-1)
    half = np.where(inner, 0.5, 1.0)[:, None, None]
    jump = np.concatenate([vo, -vn], axis=2)
    avg_dn = np.concatenate([half * dno, half * dnn], axis=2)
    base = np.arange(nb)
    cols = np.concatenate([f.owner[:, None] * nb + base, nbr[:, None] * nb + base], axis=1)
    return FaceTraces(pts, wts, jump, avg_dn, vo, vn, cols, inner)


def _coo_blocks(rows: np.ndarray, cols: np.ndarray, blocks: np.ndarray, shape) -> sp.csr_matrix:
    """Sum dense blocks ``(n, r, c)`` into a sparse matrix at ``rows (n, r)`` x ``cols (n, c)``."""
    R = np.broadcast_to(rows[:, :, None], blocks.shape)
    C = np.broadcast_to(cols[:, None, :], blocks.shape)
    return sp.csr_matrix((blocks.ravel(), (R.ravel(), C.ravel())), shape=shape)


# --------------------------------------------------------------------------- volume terms


def mass_blocks(space: DgSpace, degree: int | None = None) -> np.ndarray:
    """Per-cell mass blocks ``(n_cells, nb, nb)``."""
    deg = 2 * space.p if degree is None else degree
    nb = space.n_local
    out = np.empty((space.mesh.n_cells, nb, nb))
    for cells, pts, wts in space.cell_batches(deg):
        v, _ = tabulate(space.p, pts, space.box_center[cells][:, None, :], space.box_half[cells][:, None, :])
        out[cells] = np.einsum("cqi,cq,cqj->cij", v, wts, v)
    return out


def assemble_mass(space: DgSpace) -> sp.csr_matrix:
    return sp.block_diag(list(mass_blocks(space)), format="csr")


def gradient_blocks(space: DgSpace, degree: int | None = None) -> np.ndarray:
    """Per-cell blocks of sum_k int grad phi_i . grad phi_j."""
    deg = 2 * space.p + 2 if degree is None else degree
    nb = space.n_local
    out = np.empty((space.mesh.n_cells, nb, nb))
    for cells, pts, wts in space.cell_batches(deg):
        _, g = tabulate(space.p, pts, space.box_center[cells][:, None, :], space.box_half[cells][:, None, :])
        out[cells] = np.einsum("cqid,cq,cqjd->cij", g, wts, g)
    return out


# --------------------------------------------------------------------------- lifting


def lifting_moments(space: DgSpace, traces: FaceTraces | None = None) -> tuple:
    """Sparse face-moment operators ``(Gx, Gy)``, each ``n_dofs x n_dofs``.

    Row ``(k, i)`` of ``Gd`` applied to ``u`` gives -int_{dk} [[u]]_d {phi_i e_d} over the
    faces of cell k, so the lifting coefficients are ``M^{-1} Gd u``.
    """
    tr = face_traces(space) if traces is None else traces
    f = space.mesh.faces
    nb, n = space.n_local, space.n_dofs
    weight = np.where(tr.interior, 0.5, 1.0)
    # owner side: -w_F int phi_owner_i * jump_col
    s_own = -weight[:, None, None] * np.einsum("fqi,fq,fqj->fij", tr.vals_owner, tr.wts, tr.jump)
    s_nbr = -weight[:, None, None] * np.einsum("fqi,fq,fqj->fij", tr.vals_neighbor, tr.wts, tr.jump)
    base = np.arange(nb)
    rows_own = f.owner[:, None] * nb + base
    nbr = np.where(tr.interior, f.neighbor, f.owner)
    rows_nbr = nbr[:, None] * nb + base
    out = []
    for d in range(2):
        nd = f.normals[:, d][:, None, None]
        Gd = _coo_blocks(rows_own, tr.cols, nd * s_own, (n, n))
        inner = np.flatnonzero(tr.interior)
        Gd = Gd + _coo_blocks(rows_nbr[inner], tr.cols[inner], (nd * s_nbr)[inner], (n, n))
        out.append(Gd.tocsr())
    return tuple(out)


@dataclass(frozen=True)
class FaceLifting:
    """Lifting of the jumps of the basis functions touching one face.

    ``coeffs[cell]`` has shape ``(2, nb, len(columns))``: component, local basis, column.
    """

    face: int
    columns: np.ndarray
    coeffs: dict


def assemble_lifting(space: DgSpace, face: int, mass: BlockDiagFactor | None = None) -> FaceLifting:
    """Coefficients of R([[phi_c]]) for every dof c of the cells sharing ``face``."""
    f = space.mesh.faces
    p, nb = space.p, space.n_local
    a = space.mesh.vertices[f.verts[face, 0]]
    b = space.mesh.vertices[f.verts[face, 1]]
    rule = segment_quadrature(2 * p + 1)
    t = 0.5 * (rule.points + 1.0)
    pts = a + t[:, None] * (b - a)
    wts = 0.5 * f.lengths[face] * rule.weights
    o, n = int(f.owner[face]), int(f.neighbor[face])
    vo, _ = space.eval_basis(o, pts)
    if n == BOUNDARY:
        jump = vo
        support = [o]
        columns = space.dofs(o)
        weight = 1.0
    else:
        vn, _ = space.eval_basis(n, pts)
        jump = np.concatenate([vo, -vn], axis=1)
        support = [o, n]
        columns = np.concatenate([space.dofs(o), space.dofs(n)])
        weight = 0.5
    M = BlockDiagFactor(mass_blocks(space)) if mass is None else mass
    coeffs = {}
    for k in support:
        vk, _ = space.eval_basis(k, pts)
        s = -weight * np.einsum("qi,q,qj->ij", vk, wts, jump)
        Minv = M.inverse[k]
        coeffs[k] = np.stack([Minv @ (f.normals[face, d] * s) for d in range(2)])
    return FaceLifting(face, columns, coeffs)


# --------------------------------------------------------------------------- global forms


def _face_form_blocks(space: DgSpace, tr: FaceTraces, sigma: np.ndarray, consistency: bool) -> np.ndarray:
    jj = np.einsum("fqi,fq,fqj->fij", tr.jump, tr.wts, tr.jump)
    blocks = sigma[:, None, None] * jj
    if consistency:
        # -int [[u]].{grad v} - int [[v]].{grad u}; rows index v, columns index u
        c = -np.einsum("fqi,fq,fqj->fij", tr.avg_dn, tr.wts, tr.jump)
        blocks = blocks + c + np.transpose(c, (0, 2, 1))
    return blocks


def assemble_stiffness(space: DgSpace, C_sigma: float = DEFAULT_C_SIGMA, mass: BlockDiagFactor | None = None,
                       traces: FaceTraces | None = None) -> sp.csr_matrix:
    """Matrix of the lifted symmetric interior penalty form.

    sum_k int (grad u + R[[u]]).(grad v + R[[v]]) + sum_F int sigma [[u]].[[v]], expanded as
    volume gradients + face consistency terms + lifting product + penalty.
    """
    n = space.n_dofs
    tr = face_traces(space) if traces is None else traces
    M = BlockDiagFactor(mass_blocks(space)) if mass is None else mass
    K = sp.block_diag(list(gradient_blocks(space)), format="csr")
    sigma = penalty_all(space, C_sigma)
    blocks = _face_form_blocks(space, tr, sigma, consistency=True)
    K = K + _keep_real(blocks, tr, n)
    Minv = sp.block_diag(list(M.inverse), format="csr")
    for Gd in lifting_moments(space, tr):
        K = K + (Gd.T @ (Minv @ Gd))
    K = K.tocsr()
    K.eliminate_zeros()
    return K


def _keep_real(blocks: np.ndarray, tr: FaceTraces, n: int) -> sp.csr_matrix:
    """Drop the phantom neighbor columns of boundary faces before scattering."""
    nb = blocks.shape[1] // 2
    out = _coo_blocks(tr.cols[:, :nb], tr.cols[:, :nb], blocks[:, :nb, :nb], (n, n))
    inner = np.flatnonzero(tr.interior)
    b = blocks[inner]
    c = tr.cols[inner]
    out = out + _coo_blocks(c[:, :nb], c[:, nb:], b[:, :nb, nb:], (n, n))
    out = out + _coo_blocks(c[:, nb:], c[:, :nb], b[:, nb:, :nb], (n, n))
    out = out + _coo_blocks(c[:, nb:], c[:, nb:], b[:, nb:, nb:], (n, n))
    return out


def assemble_dg_norm_gram(space: DgSpace, C_sigma: float = DEFAULT_C_SIGMA,
                          traces: FaceTraces | None = None) -> sp.csr_matrix:
    """Gram matrix of the DG norm: broken gradients plus penalised jumps (no lifting)."""
    tr = face_traces(space) if traces is None else traces
    N = sp.block_diag(list(gradient_blocks(space)), format="csr")
    blocks = _face_form_blocks(space, tr, penalty_all(space, C_sigma), consistency=False)
    return (N + _keep_real(blocks, tr, space.n_dofs)).tocsr()


def assemble_rhs(space: DgSpace, f) -> np.ndarray:
    """Functional vector (f, phi_k) for a vectorised ``f(x, y)``."""
    b = np.zeros(space.n_dofs)
    nb = space.n_local
    for cells, pts, wts in space.cell_batches(2 * space.p + 2):
        v, _ = tabulate(space.p, pts, space.box_center[cells][:, None, :], space.box_half[cells][:, None, :])
        fv = np.broadcast_to(np.asarray(f(pts[..., 0], pts[..., 1]), dtype=float), wts.shape)
        loc = np.einsum("cqi,cq->ci", v, wts * fv)
        idx = cells[:, None] * nb + np.arange(nb)
        b[idx] = loc
    return b


def l2_project(space: DgSpace, f, mass: BlockDiagFactor | None = None) -> np.ndarray:
    M = BlockDiagFactor(mass_blocks(space)) if mass is None else mass
    return M.solve(assemble_rhs(space, f))


def error_norms(space: DgSpace, u_h: np.ndarray, u_exact, grad_u_exact,
                C_sigma: float = DEFAULT_C_SIGMA) -> dict:
    """L2 and DG-norm errors of ``u_h`` against an exact solution."""
    nb = space.n_local
    deg = 2 * space.p + 2
    l2 = 0.0
    h1 = 0.0
    for cells, pts, wts in space.cell_batches(deg):
        v, g = tabulate(space.p, pts, space.box_center[cells][:, None, :], space.box_half[cells][:, None, :])
        c = u_h[cells[:, None] * nb + np.arange(nb)]
        uh = np.einsum("cqi,ci->cq", v, c)
        guh = np.einsum("cqid,ci->cqd", g, c)
        x, y = pts[..., 0], pts[..., 1]
        ue = np.broadcast_to(np.asarray(u_exact(x, y), dtype=float), wts.shape)
        gx, gy = grad_u_exact(x, y)
        ge = np.stack([np.broadcast_to(gx, wts.shape), np.broadcast_to(gy, wts.shape)], axis=-1)
        l2 += float((wts * (ue - uh) ** 2).sum())
        h1 += float((wts * ((ge - guh) ** 2).sum(-1)).sum())
    tr = face_traces(space, deg)
    sigma = penalty_all(space, C_sigma)
    uloc = u_h[tr.cols]
    uloc[~tr.interior, nb:] = 0.0
    jump_h = np.einsum("fqi,fi->fq", tr.jump, uloc)
    # exact solution is continuous: its jump only survives on the boundary
    ue_face = np.asarray(u_exact(tr.pts[..., 0], tr.pts[..., 1]), dtype=float)
    jump_e = np.where(tr.interior[:, None], 0.0, np.broadcast_to(ue_face, tr.wts.shape))
    jump_pen = float((sigma[:, None] * tr.wts * (jump_e - jump_h) ** 2).sum())
    return {"l2": float(np.sqrt(l2)), "dg": float(np.sqrt(h1 + jump_pen)), "h1_broken": float(np.sqrt(h1))}


# --------------------------------------------------------------------------- level bundle


@dataclass(eq=False)
class LevelOperators:
    """Matrices of one multigrid level; ``Lambda`` is filled in by the solver setup."""

    space: DgSpace
    K: sp.csr_matrix
    M: BlockDiagFactor
    N: sp.csr_matrix
    C_sigma: float = DEFAULT_C_SIGMA
    Lambda: float | None = None
    extras: dict = field(default_factory=dict, repr=False)

    @property
    def n_dofs(self) -> int:
        return self.space.n_dofs

    @cached_property
    def M_sparse(self) -> sp.csr_matrix:
        return self.M.to_sparse()


def build_level(mesh: PolyMesh, p: int, C_sigma: float = DEFAULT_C_SIGMA) -> LevelOperators:
    space = DgSpace(mesh, p)
    M = BlockDiagFactor(mass_blocks(space))
    tr = face_traces(space)
    K = assemble_stiffness(space, C_sigma, mass=M, traces=tr)
    N = assemble_dg_norm_gram(space, C_sigma, traces=tr)
    return LevelOperators(space, K, M, N, C_sigma)
