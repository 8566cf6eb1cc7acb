"""Acceptance checks, one test per criterion.

Each test prints a single ``CRITERION n PASS|FAIL`` line (shown even under output
capture) and then asserts the same condition. Meshes are random Voronoi tessellations
with a fixed seed, so the numbers are reproducible run to run.
"""

import csv
import io
import math
import time

import numpy as np
import pytest
from oracles import RefBasis, dense_lifted_form, lifting_pairing_rhs

from polymg.dgcore import build_level, error_norms, lifting_moments
from polymg.labcli import TABLE_HEADER, write_csv, least_squares_slope, make_config, run_table
from polymg.mgsolve import (
    Smoother,
    SolveReport,
    build_stack,
    cg_solve,
    estimate_cstab,
    estimate_delta,
    estimate_lambda_max,
    manufactured_rhs,
    mg_solve,
    vcycle,
)
from polymg.polymesh import UNIT_SQUARE, build_hierarchy
from polymg.sparsela import SparseCholesky, symmetry_defect
from polymg.xfer import build_supermesh, build_transfer

SEED = 0


@pytest.fixture
def report(capsys):
    def emit(n, ok, text):
        with capsys.disabled():
            print(f"\nCRITERION {n} {'PASS' if ok else 'FAIL'}: {text}")
        return ok

    return emit


def hierarchy(n, levels):
    return build_hierarchy(UNIT_SQUARE, n, levels, SEED).levels


_STACKS = {}


def stack(n, levels, degrees, smoother=Smoother.RICHARDSON):
    key = (n, levels, tuple(degrees) if not isinstance(degrees, int) else degrees, smoother)
    if key not in _STACKS:
        _STACKS[key] = build_stack(hierarchy(n, levels), degrees, smoother=smoother)
    return _STACKS[key]


def solve(st, m):
    return mg_solve(st, manufactured_rhs(st.level(st.J).space), tol=1e-8, m1=m, m2=m)[1]


def u_exact(x, y):
    return np.sin(np.pi * x) * np.sin(np.pi * y)


def grad_exact(x, y):
    return np.pi * np.cos(np.pi * x) * np.sin(np.pi * y), np.pi * np.sin(np.pi * x) * np.cos(np.pi * y)


def test_criterion_01_manufactured_rates(report):
    t0 = time.perf_counter()
    lines, ok = [], True
    for p in (1, 2, 3):
        hs, l2, dg = [], [], []
        for n in (128, 512, 2048):
            mesh = hierarchy(n, 1)[0]
            lev = build_level(mesh, p)
            u = SparseCholesky(lev.K).solve(manufactured_rhs(lev.space))
            err = error_norms(lev.space, u, u_exact, grad_exact)
            hs.append(mesh.h)
            l2.append(err["l2"])
            dg.append(err["dg"])
        rl2 = least_squares_slope(np.log(hs), np.log(l2))
        rdg = least_squares_slope(np.log(hs), np.log(dg))
        ok &= rl2 >= p + 1 - 0.2 and rdg >= p - 0.2
        lines.append(f"p={p} L2 order {rl2:.2f} (>= {p + 0.8:.1f}) DG order {rdg:.2f} (>= {p - 0.2:.1f})")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 180
    report(1, ok, "; ".join(lines) + f"; {elapsed:.0f}s (< 180s)")
    assert ok


def test_criterion_02_h_independence(report):
    t0 = time.perf_counter()
    rhos = {n: solve(stack(n, 2, 1), 5).rho for n in (512, 1024, 2048)}
    elapsed = time.perf_counter() - t0
    spread = max(rhos.values()) - min(rhos.values())
    ok = spread <= 0.10 and max(rhos.values()) <= 0.85 and elapsed < 120
    text = ", ".join(f"{n}: {r:.3f}" for n, r in rhos.items())
    report(2, ok, f"rho {text}; spread {spread:.3f} (<= 0.10), max <= 0.85; {elapsed:.0f}s (< 120s)")
    assert ok


def test_criterion_03_smoothing_monotonicity(report):
    st = stack(512, 2, 1)
    r = [solve(st, m).rho for m in (3, 5, 8)]
    ok = r[0] > r[1] > r[2]
    report(3, ok, f"rho(m=3,5,8) = {r[0]:.3f} > {r[1]:.3f} > {r[2]:.3f} on 512/128, p=1")
    assert ok


def test_criterion_04_cg_contrast(report):
    cg_it, mg_it = {}, {}
    for n in (512, 1024, 2048):
        st = stack(n, 2, 1)
        fine = st.level(2)
        cg_it[n] = cg_solve(fine.K, manufactured_rhs(fine.space), tol=1e-8)[1].iterations
        mg_it[n] = solve(st, 5).iterations
    ratios = [cg_it[1024] / cg_it[512], cg_it[2048] / cg_it[1024]]
    mg_change = [abs(mg_it[1024] - mg_it[512]), abs(mg_it[2048] - mg_it[1024])]
    ok = all(1.2 <= q <= 1.7 for q in ratios) and max(mg_change) <= 2
    report(4, ok, f"CG iterations {cg_it} growth {ratios[0]:.2f}, {ratios[1]:.2f} (in [1.2, 1.7]); "
                  f"MG iterations {mg_it} change {mg_change} (<= 2)")
    assert ok


def test_criterion_05_as_flatness(report):
    it2 = solve(stack(1024, 2, 1, Smoother.ADDITIVE_SCHWARZ), 5).iterations
    it3 = solve(stack(1024, 3, 1, Smoother.ADDITIVE_SCHWARZ), 5).iterations
    it_p3 = solve(stack(1024, 2, 3, Smoother.ADDITIVE_SCHWARZ), 8).iterations
    ok = max(it2, it3) <= 15 and abs(it2 - it3) <= 2 and it_p3 <= 28
    report(5, ok, f"p=1 m=5 iterations J=2: {it2}, J=3: {it3} (<= 15, differ <= 2); p=3 m=8: {it_p3} (<= 28)")
    assert ok


def test_criterion_06_hp_vcycle(report):
    rep = solve(stack(1024, 3, [1, 2, 3], Smoother.ADDITIVE_SCHWARZ), 5)
    ok = rep.converged and rep.iterations <= 70
    report(6, ok, f"degrees (1,2,3), J=3, AS m=5: {rep.iterations} iterations, converged={rep.converged} (<= 70)")
    assert ok


def test_criterion_07_cstab_linearity(report):
    ps = (1, 2, 3, 4)
    values = {}
    for n in (64, 256):
        coarse_mesh, fine_mesh = hierarchy(n, 2)
        vals = []
        for p in ps:
            pair = build_transfer(build_level(fine_mesh, p), build_level(coarse_mesh, p))
            vals.append(estimate_cstab(pair).value)
        values[n] = vals
    slopes = {n: least_squares_slope(ps, v) for n, v in values.items()}
    rel = max(abs(a - b) / max(a, b) for a, b in zip(values[64], values[256]))
    ok = all(0.5 <= s <= 1.5 for s in slopes.values()) and rel <= 0.20
    text = "; ".join(f"{n}/{n // 4}: " + ", ".join(f"{v:.3f}" for v in vals) + f" slope {slopes[n]:.3f}"
                     for n, vals in values.items())
    report(7, ok, f"C_stab(p=1..4) {text} (slope in [0.5, 1.5]); pair difference {rel:.1%} (<= 20%)")
    assert ok


def test_criterion_08_delta_contraction(report):
    meshes = hierarchy(256, 2)
    deltas = {p: estimate_delta(build_stack(meshes, p), 2, 3 * p * p).value for p in (1, 2, 3)}
    st1 = build_stack(meshes, 1)
    d3, d8 = estimate_delta(st1, 2, 3).value, estimate_delta(st1, 2, 8).value
    ok = all(d < 1 for d in deltas.values()) and d8 < d3
    text = ", ".join(f"p={p}: {d:.3f}" for p, d in deltas.items())
    report(8, ok, f"delta with m=3p^2 {text} (< 1); p=1 delta(m=8) {d8:.3f} < delta(m=3) {d3:.3f}")
    assert ok


def test_criterion_09_operator_properties(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    checks = {}
    coarse_mesh, fine_mesh = hierarchy(32, 2)
    fine, coarse = build_level(fine_mesh, 2), build_level(coarse_mesh, 1)
    pair = build_transfer(fine, coarse)

    v, w = rng.standard_normal(coarse.n_dofs), rng.standard_normal(fine.n_dofs)
    lhs, rhs = w @ fine.M.matvec(pair.prolong(v)), v @ coarse.M.matvec(pair.restrict(w))
    checks["transfer adjointness"] = abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1.0)

    const = np.zeros(coarse.n_dofs)
    const[:: coarse.space.n_local] = 1.0
    expect = np.zeros(fine.n_dofs)
    expect[:: fine.space.n_local] = 1.0
    checks["constant preservation"] = np.abs(pair.prolong(const) - expect).max() <= 1e-12

    sm = build_supermesh(fine_mesh, coarse_mesh)
    checks["supermesh area"] = abs(sm.areas.sum() - 1.0) <= 1e-10 and np.allclose(
        np.bincount(sm.fine_ids, sm.areas, fine_mesh.n_cells), fine_mesh.areas, rtol=0, atol=1e-10)

    checks["stiffness symmetry"] = symmetry_defect(fine.K) <= 1e-10

    basis = RefBasis(fine_mesh, 2)
    Gx, Gy = lifting_moments(fine.space)
    u = rng.standard_normal(fine.n_dofs)
    tau = (rng.standard_normal(fine.n_dofs), rng.standard_normal(fine.n_dofs))
    lhs = tau[0] @ (Gx @ u) + tau[1] @ (Gy @ u)
    rhs = lifting_pairing_rhs(basis, u, tau)
    checks["lifting adjoint"] = abs(lhs - rhs) <= 1e-11 * max(abs(rhs), 1.0)

    A, _, _, _ = dense_lifted_form(fine_mesh, 2)
    checks["bilinear-form oracle"] = np.abs(fine.K.toarray() - A).max() <= 1e-10 * np.abs(A).max()

    st = build_stack([coarse_mesh, fine_mesh], [1, 2], smoother=Smoother.ADDITIVE_SCHWARZ)
    B = st.as_preconditioner(2)
    Bd = np.column_stack([B.apply(e) for e in np.eye(fine.n_dofs)])
    spd = lambda X: np.abs(X - X.T).max() <= 1e-10 * np.abs(X).max() and np.linalg.eigvalsh(X).min() > 0  # noqa: E731
    checks["SPD K, N, B_ad^-1"] = spd(fine.K.toarray()) and spd(fine.N.toarray()) and spd(Bd)

    pw = pair.p_coarse_projection(w)
    vv = rng.standard_normal(coarse.n_dofs)
    a1, a2 = pw @ (coarse.K @ vv), w @ (fine.K @ pair.prolong(vv))
    checks["coarse projection identity"] = abs(a1 - a2) <= 1e-10 * max(abs(a2), 1.0)

    lam_ok = True
    for p in (1, 2):
        lev = build_level(hierarchy(8, 1)[0], p)
        est = estimate_lambda_max(lev.K, lev.M, tol=1e-8, max_iters=5000)
        exact = np.linalg.eigvals(np.linalg.solve(lev.M.to_sparse().toarray(), lev.K.toarray())).real.max()
        lam_ok &= abs(est.raw - exact) <= 0.01 * exact
    checks["Lambda vs dense"] = lam_ok

    st1 = build_stack([coarse_mesh, fine_mesh], [1, 2])
    _, rep = mg_solve(st1, manufactured_rhs(st1.level(2).space))
    h = rep.residual_history
    checks["rho recomputation"] = rep.rho == math.exp(math.log(h[-1] / h[0]) / (len(h) - 1)) == \
        SolveReport.convergence_factor(h)

    g1, g2 = rng.standard_normal(fine.n_dofs), rng.standard_normal(fine.n_dofs)
    s1, s2 = g2 @ vcycle(st1, 2, g1), g1 @ vcycle(st1, 2, g2)
    checks["V-cycle symmetry"] = abs(s1 - s2) <= 1e-10 * abs(s1)

    elapsed = time.perf_counter() - t0
    ok = all(checks.values()) and elapsed < 30
    failed = [k for k, good in checks.items() if not good]
    report(9, ok, f"{len(checks) - len(failed)}/{len(checks)} properties hold"
                  + (f", failed: {failed}" if failed else "") + f"; {elapsed:.1f}s (< 30s)")
    assert ok


def test_criterion_10_divergence_reporting(report, tmp_path):
    cfg = make_config({"cells": "512", "table": "T2", "seed": SEED, "max_iters": 1000})
    t0 = time.perf_counter()
    rows = run_table(cfg, levels=(2,))
    out = tmp_path / "t2.csv"
    write_csv(rows, TABLE_HEADER, str(out))
    parsed = list(csv.DictReader(io.StringIO(out.read_text())))
    row = next(r for r in parsed if r["method"].startswith("mg") and r["m"] == "3" and r["levels"] == "2")
    terminated = row["converged"] == "true" or int(row["iterations"]) <= cfg.max_iters
    # forcing an unstable smoother must trip the guard rather than run to the cap
    st = build_stack(hierarchy(512, 2), 3)
    st.level(2).Lambda = 0.2 * st.level(2).extras["lambda"].raw
    _, bad = mg_solve(st, manufactured_rhs(st.level(2).space), max_iters=1000)
    guard = bad.diverged and not bad.converged and bad.iterations < 1000
    elapsed = time.perf_counter() - t0
    ok = terminated and guard
    report(10, ok, f"p=3 m=3 J=2 row: converged={row['converged']} diverged={row['diverged']} "
                   f"iterations={row['iterations']}; forced-unstable run stopped by guard after "
                   f"{bad.iterations} iterations (converged={bad.converged}); {elapsed:.0f}s")
    assert ok
