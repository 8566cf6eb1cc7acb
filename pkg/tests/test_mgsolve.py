import math

import numpy as np
import pytest
import scipy.linalg as sl
import scipy.sparse.linalg as spla

from polymg.dgcore import build_level
from polymg.mgsolve import (
    Smoother,
    SolveReport,
    build_as_preconditioner,
    build_stack,
    cg_solve,
    energy_stability_ratios,
    error_propagation,
    estimate_cstab,
    estimate_delta,
    estimate_lambda_max,
    manufactured_rhs,
    mg_solve,
    mg_solve_as,
    pcg_fixed,
    vcycle,
)
from polymg.polymesh import UNIT_SQUARE, build_hierarchy
from polymg.xfer import build_transfer


@pytest.fixture(scope="module")
def stack2():
    meshes = build_hierarchy(UNIT_SQUARE, 64, 2, seed=4).levels
    return build_stack(meshes, 1, m1=3, m2=3)


@pytest.fixture(scope="module")
def stack3():
    meshes = build_hierarchy(UNIT_SQUARE, 128, 3, seed=4).levels
    return build_stack(meshes, 1, smoother=Smoother.ADDITIVE_SCHWARZ, m1=3, m2=3)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_lambda_against_dense_eigensolver(p):
    mesh = build_hierarchy(UNIT_SQUARE, 8, 1, seed=p).levels[0]
    lev = build_level(mesh, p)
    est = estimate_lambda_max(lev.K, lev.M, tol=1e-8, max_iters=5000)
    exact = sl.eigh(lev.K.toarray(), lev.M.to_sparse().toarray(), eigvals_only=True)[-1]
    assert est.raw == pytest.approx(exact, rel=0.01)
    assert est.value == pytest.approx(1.1 * est.raw)


def test_vcycle_is_symmetric_in_euclidean_pairing(stack2, rng):
    fine = stack2.level(2)
    a, b = rng.standard_normal(fine.n_dofs), rng.standard_normal(fine.n_dofs)
    Ba, Bb = vcycle(stack2, 2, a), vcycle(stack2, 2, b)
    assert b @ Ba == pytest.approx(a @ Bb, rel=1e-10)


def test_level_one_cycle_is_direct_solve(stack2, rng):
    g = rng.standard_normal(stack2.level(1).n_dofs)
    z = vcycle(stack2, 1, g)
    np.testing.assert_allclose(stack2.level(1).K @ z, g, rtol=1e-10, atol=1e-10)


def test_mg_converges_and_rho_identity(stack2):
    f = manufactured_rhs(stack2.level(2).space)
    u, rep = mg_solve(stack2, f, tol=1e-8)
    assert rep.converged and not rep.diverged
    assert rep.residual_history[-1] <= 1e-8 * rep.residual_history[0]
    h = rep.residual_history
    assert rep.rho == math.exp(math.log(h[-1] / h[0]) / (len(h) - 1))
    assert rep.rho == SolveReport.convergence_factor(h)
    ref = spla.spsolve(stack2.level(2).K.tocsc(), f)
    assert np.linalg.norm(u - ref) <= 1e-6 * np.linalg.norm(ref)


def test_convergence_factor_edge_cases():
    assert SolveReport.convergence_factor([1.0]) == 0.0
    assert SolveReport.convergence_factor([1.0, 0.0]) == 0.0
    assert SolveReport.convergence_factor([1.0, 0.25, 0.0625]) == pytest.approx(0.25)


def test_more_smoothing_contracts_faster(stack2):
    f = manufactured_rhs(stack2.level(2).space)
    rhos = [mg_solve(stack2, f, m1=m, m2=m)[1].rho for m in (2, 4, 8)]
    assert rhos[0] > rhos[1] > rhos[2]


def test_divergence_guard_stops_run():
    meshes = build_hierarchy(UNIT_SQUARE, 64, 2, seed=4).levels
    stack = build_stack(meshes, 1)
    stack.level(2).Lambda = 0.2 * stack.level(2).extras["lambda"].raw
    _, rep = mg_solve(stack, manufactured_rhs(stack.level(2).space), max_iters=500)
    assert rep.diverged and not rep.converged
    assert rep.iterations < 500
    assert rep.residual_history[-1] > 10 * rep.residual_history[0]


def test_cg_matches_direct_solve(stack2):
    K = stack2.level(2).K
    b = manufactured_rhs(stack2.level(2).space)
    x, rep = cg_solve(K, b, tol=1e-10)
    assert rep.converged and rep.method == "cg"
    np.testing.assert_allclose(x, spla.spsolve(K.tocsc(), b), rtol=1e-7, atol=1e-9)


def test_pcg_fixed_basic(stack2, rng):
    K = stack2.level(1).K
    g = rng.standard_normal(K.shape[0])
    z, brk = pcg_fixed(K, lambda r: r, np.zeros_like(g), g, 0)
    assert not brk and np.all(z == 0)
    z, brk = pcg_fixed(K, lambda r: r, np.zeros_like(g), g, K.shape[0] + 5)
    assert np.linalg.norm(K @ z - g) <= 1e-8 * np.linalg.norm(g) or brk


def test_additive_schwarz_is_spd(stack3):
    B = stack3.as_preconditioner(3)
    n = stack3.level(3).n_dofs
    Bd = np.column_stack([B.apply(e) for e in np.eye(n)])
    assert np.abs(Bd - Bd.T).max() <= 1e-10 * np.abs(Bd).max()
    assert np.linalg.eigvalsh(0.5 * (Bd + Bd.T)).min() > 0


def test_additive_schwarz_single_cell_is_twice_inverse():
    mesh = build_hierarchy(UNIT_SQUARE, 1, 1, seed=0).levels[0]
    lev = build_level(mesh, 2)
    B = build_as_preconditioner(lev, build_transfer(lev, lev))
    K = lev.K.toarray()
    Bd = np.column_stack([B.apply(e) for e in np.eye(lev.n_dofs)])
    np.testing.assert_allclose(Bd, 2 * np.linalg.inv(K), rtol=1e-10, atol=1e-12)


def test_as_smoothed_mg_converges(stack3):
    f = manufactured_rhs(stack3.level(3).space)
    _, rep = mg_solve_as(stack3, f)
    assert rep.converged and rep.iterations <= 20 and rep.method == "mg-as"
    assert stack3.stats["pcg_breakdowns"] == 0


def test_cstab_identity_and_dense_oracle(pair_levels):
    fine, coarse = pair_levels
    same = estimate_cstab(build_transfer(coarse, coarse))
    assert same.value == pytest.approx(1.0, rel=1e-8)
    pair = build_transfer(fine, coarse)
    est = estimate_cstab(pair, tol=1e-10, max_iters=20000)
    I = np.column_stack([pair.prolong(e) for e in np.eye(coarse.n_dofs)])
    top = sl.eigh(I.T @ fine.N.toarray() @ I, coarse.N.toarray(), eigvals_only=True)[-1]
    assert est.value == pytest.approx(math.sqrt(top), rel=1e-4)


def test_delta_control_and_contraction(stack2):
    assert estimate_delta(stack2, 1, 3).value == 0.0
    d = estimate_delta(stack2, 2, 3)
    assert d.converged and 0.0 < d.value < 1.0
    # the error map at level 2 contracts every sampled vector in the energy norm
    K = stack2.level(2).K
    x = np.random.default_rng(0).standard_normal(K.shape[0])
    y = error_propagation(stack2, 2, x, 3, 3)
    assert y @ (K @ y) < x @ (K @ x)


def test_energy_stability_ratios_positive(pair_levels):
    fine, coarse = pair_levels
    r = energy_stability_ratios(build_transfer(fine, coarse), n_samples=5)
    assert np.all(np.isfinite(r)) and np.all(r > 0)


def test_build_stack_validates_degrees():
    meshes = build_hierarchy(UNIT_SQUARE, 32, 2, seed=1).levels
    with pytest.raises(ValueError):
        build_stack(meshes, [1, 2, 3])
    hp = build_stack(meshes, [1, 2])
    assert [lev.space.p for lev in hp.levels] == [1, 2]
