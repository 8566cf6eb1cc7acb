import numpy as np
import pytest
from numpy.polynomial import legendre as npleg
from oracles import RefBasis, dense_lifted_form, dense_mass, lifting_pairing_rhs

from polymg.dgcore import (
    DgSpace,
    assemble_lifting,
    assemble_mass,
    assemble_rhs,
    assemble_stiffness,
    build_level,
    error_norms,
    l2_project,
    legendre_table,
    lifting_moments,
    mass_blocks,
    n_local,
    penalty_all,
    penalty_sigma,
    tabulate,
)
from polymg.polymesh import BOUNDARY
from polymg.sparsela import symmetry_defect


def test_legendre_table_matches_numpy():
    x = np.linspace(-1, 1, 11)
    v, d = legendre_table(6, x)
    for n in range(7):
        c = np.eye(7)[n]
        np.testing.assert_allclose(v[n], npleg.legval(x, c), atol=1e-14)
        np.testing.assert_allclose(d[n], npleg.legval(x, npleg.legder(c)), atol=1e-12)


def test_tabulate_gradient_by_finite_differences(rng):
    c, h = np.array([0.3, 0.6]), np.array([0.2, 0.1])
    pts = c + h * rng.uniform(-1, 1, (5, 2))
    v, g = tabulate(3, pts, c, h)
    assert v.shape == (5, n_local(3)) and g.shape == (5, n_local(3), 2)
    eps = 1e-6
    for d in range(2):
        e = np.zeros(2)
        e[d] = eps
        fd = (tabulate(3, pts + e, c, h)[0] - tabulate(3, pts - e, c, h)[0]) / (2 * eps)
        np.testing.assert_allclose(g[..., d], fd, atol=1e-6)


def test_degree_zero_rejected(mesh16):
    with pytest.raises(ValueError):
        DgSpace(mesh16, 0)


def test_mass_blocks_constant_mode_is_area(mesh16):
    blocks = mass_blocks(DgSpace(mesh16, 2))
    np.testing.assert_allclose(blocks[:, 0, 0], mesh16.areas, rtol=1e-13)
    assert np.all(np.linalg.eigvalsh(blocks) > 0)


def test_penalty_definition(mesh16):
    space = DgSpace(mesh16, 3)
    sig = penalty_all(space, 10.0)
    f, h = mesh16.faces, mesh16.diameters
    for i in range(len(f)):
        assert penalty_sigma(space, i, 10.0) == pytest.approx(sig[i])
        o, n = f.owner[i], f.neighbor[i]
        hmin = h[o] if n == BOUNDARY else min(h[o], h[n])
        assert sig[i] == pytest.approx(10.0 * 9 / hmin)


@pytest.mark.parametrize("p", [1, 2])
def test_stiffness_matches_dense_lifted_form_oracle(mesh32, p):
    A, M, _, _ = dense_lifted_form(mesh32, p)
    lev = build_level(mesh32, p)
    K = lev.K.toarray()
    assert np.abs(K - A).max() <= 1e-10 * np.abs(A).max()
    np.testing.assert_allclose(assemble_mass(lev.space).toarray(), M, atol=1e-14)


def test_stiffness_on_structured_mesh_matches_oracle(quad_mesh):
    A, _, _, _ = dense_lifted_form(quad_mesh, 3)
    K = assemble_stiffness(DgSpace(quad_mesh, 3)).toarray()
    assert np.abs(K - A).max() <= 1e-10 * np.abs(A).max()


def test_lifting_adjoint_identity(mesh16, rng):
    """int R([[u]]) . tau = -sum_F int [[u]] . {tau} for tau in the vector DG space."""
    space = DgSpace(mesh16, 2)
    M = assemble_mass(space)
    Gx, Gy = lifting_moments(space)
    basis = RefBasis(mesh16, 2)
    for _ in range(3):
        u = rng.standard_normal(space.n_dofs)
        tau = (rng.standard_normal(space.n_dofs), rng.standard_normal(space.n_dofs))
        Rx = np.linalg.solve(M.toarray(), Gx @ u)
        Ry = np.linalg.solve(M.toarray(), Gy @ u)
        lhs = tau[0] @ (M @ Rx) + tau[1] @ (M @ Ry)
        rhs = lifting_pairing_rhs(basis, u, tau)
        assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-11 * np.abs(rhs))


def test_face_lifting_sums_to_global_lifting(mesh16):
    space = DgSpace(mesh16, 2)
    M = build_level(mesh16, 2).M
    Minv = M.to_sparse()
    G = [np.linalg.solve(Minv.toarray(), Gd.toarray()) for Gd in lifting_moments(space)]
    total = np.zeros((2, space.n_dofs, space.n_dofs))
    for face in range(len(mesh16.faces)):
        fl = assemble_lifting(space, face, M)
        for k, c in fl.coeffs.items():
            total[np.ix_([0, 1], space.dofs(k), fl.columns)] += c
    np.testing.assert_allclose(total[0], G[0], atol=1e-10)
    np.testing.assert_allclose(total[1], G[1], atol=1e-10)


def test_lifting_vanishes_on_interior_of_smooth_functions(mesh16):
    # a global linear function has no interior jumps: only boundary faces contribute
    space = DgSpace(mesh16, 1)
    u = l2_project(space, lambda x, y: 1.0 + 0 * x)
    f = mesh16.faces
    for face in f.interior[:5]:
        fl = assemble_lifting(space, face)
        for c in fl.coeffs.values():
            np.testing.assert_allclose(c @ u[fl.columns], 0.0, atol=1e-12)


def test_symmetry_and_spd(mesh16):
    lev = build_level(mesh16, 2)
    assert symmetry_defect(lev.K) <= 1e-10
    assert symmetry_defect(lev.N) <= 1e-10
    assert np.linalg.eigvalsh(lev.K.toarray()).min() > 0
    assert np.linalg.eigvalsh(lev.N.toarray()).min() > 0


def test_rhs_and_projection_reproduce_polynomials(mesh16):
    space = DgSpace(mesh16, 2)
    b = assemble_rhs(space, lambda x, y: 1.0 + 0 * x)
    np.testing.assert_allclose(b[:: space.n_local], mesh16.areas, rtol=1e-13)
    poly = lambda x, y: 1 + x - 2 * y + x * y + 3 * y**2  # noqa: E731
    u = l2_project(space, poly)
    for k in (0, 7, 15):
        pts = mesh16.centroids[k][None] + 0.01
        val, _ = space.evaluate(u, k, pts)
        np.testing.assert_allclose(val, poly(pts[:, 0], pts[:, 1]), atol=1e-12)


def test_error_norms_zero_for_captured_polynomial(mesh16):
    space = DgSpace(mesh16, 2)
    f = lambda x, y: x * (1 - x) + y * y  # noqa: E731
    g = lambda x, y: (1 - 2 * x, 2 * y)  # noqa: E731
    u = l2_project(space, f)
    err = error_norms(space, u, f, g)
    assert err["l2"] < 1e-13 and err["h1_broken"] < 1e-12
    # boundary jump of u - u_exact is zero too since the polynomial is reproduced
    assert err["dg"] < 1e-11


def test_dense_mass_oracle_agrees(mesh16):
    np.testing.assert_allclose(dense_mass(RefBasis(mesh16, 3)), assemble_mass(DgSpace(mesh16, 3)).toarray(), atol=1e-14)
