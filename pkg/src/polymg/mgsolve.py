"""Non-nested V-cycle multigrid for the DG system, with Richardson or additive Schwarz
smoothing, plus a CG baseline and the spectral diagnostics used to judge convergence.

Right-hand sides and residuals are *functional* vectors (entries (g, phi_k)); iterates
are coefficient vectors. The smoothers apply M^{-1} where the operator A_j = M^{-1} K
requires it, and the coarse residual is the transpose of the prolongation applied to
the fine residual functional.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from polymg.dgcore import DEFAULT_C_SIGMA, LevelOperators, assemble_rhs, build_level
from polymg.sparsela import BlockDiagFactor, SparseCholesky
from polymg.xfer import TransferPair, build_transfer

log = logging.getLogger(__name__)

LAMBDA_SAFETY = 1.1
DIVERGENCE_FACTOR = 10.0


class Smoother(str, Enum):
    RICHARDSON = "richardson"
    ADDITIVE_SCHWARZ = "as"


@dataclass(frozen=True)
class EigenEstimate:
    value: float
    raw: float
    iterations: int
    converged: bool

    def __float__(self):
        return self.value


@dataclass
class SolveReport:
    method: str
    iterations: int
    residual_history: list
    rho: float
    converged: bool
    diverged: bool = False
    wall_time: float = 0.0

    @staticmethod
    def convergence_factor(history) -> float:
        n = len(history) - 1
        if n <= 0 or history[0] == 0.0:
            return 0.0
        if history[-1] == 0.0:
            return 0.0
        return math.exp(math.log(history[-1] / history[0]) / n)


# --------------------------------------------------------------------------- eigenvalues


def estimate_lambda_max(K, M: BlockDiagFactor, tol: float = 1e-4, max_iters: int = 500,
                        safety: float = LAMBDA_SAFETY, seed: int = 0) -> EigenEstimate:
    """Largest eigenvalue of the pencil (K, M) by power iteration on M^{-1}K.

    ``value`` includes the safety factor; ``raw`` is the Rayleigh quotient itself.
    """
    n = K.shape[0]
    x = np.random.default_rng(seed).standard_normal(n)
    x /= math.sqrt(x @ M.matvec(x))
    lam = 0.0
    for it in range(1, max_iters + 1):
        Kx = K @ x
        new = float(x @ Kx)
        y = M.solve(Kx)
        y /= math.sqrt(y @ M.matvec(y))
        x = y
        if it > 1 and abs(new - lam) <= tol * abs(new):
            lam = new
            return EigenEstimate(safety * lam, lam, it, True)
        lam = new
    log.warning("lambda_max power iteration did not converge in %d iterations", max_iters)
    return EigenEstimate(safety * lam, lam, max_iters, False)


# --------------------------------------------------------------------------- hierarchy


@dataclass(frozen=True, eq=False)
class AsPreconditioner:
    """B_ad^{-1} r = sum_i K_ii^{-1} r_i + I K_coarse^{-1} I^T r (functional in, coefficients out)."""

    local: BlockDiagFactor
    coarse: SparseCholesky
    transfer: TransferPair

    def apply(self, r: np.ndarray) -> np.ndarray:
        t = self.transfer
        return self.local.solve(r) + t.prolong(self.coarse.solve(t.restrict_functional(r)))


def diagonal_blocks(K, nb: int) -> np.ndarray:
    n = K.shape[0] // nb
    Kc = K.tocsr()
    out = np.empty((n, nb, nb))
    for k in range(n):
        s = slice(k * nb, (k + 1) * nb)
        out[k] = Kc[s, s].toarray()
    return out


def build_as_preconditioner(level: LevelOperators, transfer: TransferPair) -> AsPreconditioner:
    local = BlockDiagFactor(diagonal_blocks(level.K, level.space.n_local))
    return AsPreconditioner(local, transfer.coarse_factor, transfer)


@dataclass(eq=False)
class LevelStack:
    """Levels ordered coarsest first; ``transfers[j]`` links level j to level j-1."""

    levels: list
    transfers: list
    smoother: Smoother = Smoother.RICHARDSON
    m1: int = 3
    m2: int = 3
    coarse_solver: SparseCholesky | None = None
    _as: dict = field(default_factory=dict, repr=False)
    stats: dict = field(default_factory=lambda: {"pcg_breakdowns": 0}, repr=False)

    def __post_init__(self):
        if not self.levels:
            raise ValueError("a stack needs at least one level")
        if len(self.transfers) != len(self.levels):
            raise ValueError("transfers must be indexed like levels (transfers[0] is None)")
        if self.coarse_solver is None:
            self.coarse_solver = SparseCholesky(self.levels[0].K)

    @property
    def J(self) -> int:
        return len(self.levels)

    def level(self, j: int) -> LevelOperators:
        """1-based level access, as in the algorithm statements."""
        return self.levels[j - 1]

    def transfer(self, j: int) -> TransferPair:
        return self.transfers[j - 1]

    def as_preconditioner(self, j: int) -> AsPreconditioner:
        if j not in self._as:
            self._as[j] = build_as_preconditioner(self.level(j), self.transfer(j))
        return self._as[j]


def build_stack(meshes, degrees, C_sigma: float = DEFAULT_C_SIGMA, smoother=Smoother.RICHARDSON,
                m1: int = 3, m2: int = 3, lambda_tol: float = 1e-4) -> LevelStack:
    """Assemble every level, its Lambda and the transfers between consecutive levels."""
    meshes = list(meshes)
    if isinstance(degrees, int):
        degrees = [degrees] * len(meshes)
    if len(degrees) != len(meshes):
        raise ValueError("need one polynomial degree per level")
    levels = []
    for mesh, p in zip(meshes, degrees):
        lev = build_level(mesh, p, C_sigma)
        est = estimate_lambda_max(lev.K, lev.M, tol=lambda_tol)
        lev.Lambda = est.value
        lev.extras["lambda"] = est
        levels.append(lev)
    transfers = [None] + [build_transfer(levels[j], levels[j - 1]) for j in range(1, len(levels))]
    return LevelStack(levels, transfers, Smoother(smoother), m1, m2)


# --------------------------------------------------------------------------- smoothers


def richardson_smooth(level: LevelOperators, z: np.ndarray, g: np.ndarray, m: int) -> np.ndarray:
    """m steps of z <- z + Lambda^{-1} M^{-1} (g - K z)."""
    z = np.array(z, dtype=float, copy=True)
    inv = 1.0 / level.Lambda
    for _ in range(m):
        z += inv * level.M.solve(g - level.K @ z)
    return z


def pcg_fixed(K, precond, z0: np.ndarray, g: np.ndarray, m: int):
    """Exactly ``m`` preconditioned CG steps on K z = g; returns ``(z, breakdown)``."""
    z = np.array(z0, dtype=float, copy=True)
    if m <= 0:
        return z, False
    r = g - K @ z
    s = precond(r)
    d = s.copy()
    rs = float(r @ s)
    for _ in range(m):
        Kd = K @ d
        curv = float(d @ Kd)
        if curv <= 0.0 or rs == 0.0:
            return z, True
        alpha = rs / curv
        z += alpha * d
        r -= alpha * Kd
        s = precond(r)
        rs_new = float(r @ s)
        d = s + (rs_new / rs) * d
        rs = rs_new
    return z, False


def aspcg_smooth(stack: LevelStack, j: int, z0: np.ndarray, g: np.ndarray, m: int) -> np.ndarray:
    """m PCG iterations on level j preconditioned by the additive Schwarz operator."""
    if m <= 0:
        return np.array(z0, dtype=float, copy=True)
    B = stack.as_preconditioner(j)
    z, breakdown = pcg_fixed(stack.level(j).K, B.apply, z0, g, m)
    if breakdown:
        stack.stats["pcg_breakdowns"] += 1
    return z


def _smooth(stack: LevelStack, j: int, z, g, m):
    if stack.smoother is Smoother.ADDITIVE_SCHWARZ:
        return aspcg_smooth(stack, j, z, g, m)
    return richardson_smooth(stack.level(j), z, g, m)


# --------------------------------------------------------------------------- cycles


def vcycle(stack: LevelStack, j: int, g: np.ndarray, z0: np.ndarray | None = None,
           m1: int | None = None, m2: int | None = None) -> np.ndarray:
    """One V-cycle for A_j z = g on level j (1-based), smoother chosen by the stack."""
    m1 = stack.m1 if m1 is None else m1
    m2 = stack.m2 if m2 is None else m2
    if j == 1:
        return stack.coarse_solver.solve(g)
    lev = stack.level(j)
    t = stack.transfer(j)
    z = np.zeros(lev.n_dofs) if z0 is None else np.asarray(z0, dtype=float)
    z = _smooth(stack, j, z, g, m1)
    r = t.restrict_functional(g - lev.K @ z)
    e = vcycle(stack, j - 1, r, None, m1, m2)
    z = z + t.prolong(e)
    return _smooth(stack, j, z, g, m2)


def vcycle_as(stack: LevelStack, j: int, g, z0=None, m1=None, m2=None) -> np.ndarray:
    """V-cycle with additive Schwarz PCG smoothing regardless of the stack's default."""
    saved = stack.smoother
    stack.smoother = Smoother.ADDITIVE_SCHWARZ
    try:
        return vcycle(stack, j, g, z0, m1, m2)
    finally:
        stack.smoother = saved


def mg_solve(stack: LevelStack, f: np.ndarray, tol: float = 1e-8, max_iters: int = 2000,
             m1: int | None = None, m2: int | None = None, u0: np.ndarray | None = None):
    """Repeated V-cycles on the finest level until ||r_k|| / ||r_0|| <= tol."""
    t0 = time.perf_counter()
    fine = stack.level(stack.J)
    u = np.zeros(fine.n_dofs) if u0 is None else np.array(u0, dtype=float)
    r0 = float(np.linalg.norm(f - fine.K @ u))
    hist = [r0]
    converged = r0 == 0.0
    diverged = False
    it = 0
    while not converged and it < max_iters:
        u = vcycle(stack, stack.J, f, u, m1, m2)
        it += 1
        rn = float(np.linalg.norm(f - fine.K @ u))
        hist.append(rn)
        if rn <= tol * r0:
            converged = True
        elif not math.isfinite(rn) or rn > DIVERGENCE_FACTOR * r0:
            diverged = True
            break
    method = "mg-" + stack.smoother.value
    rep = SolveReport(method, it, hist, SolveReport.convergence_factor(hist), converged, diverged,
                      time.perf_counter() - t0)
    return u, rep


def mg_solve_as(stack: LevelStack, f, tol: float = 1e-8, max_iters: int = 2000, m1=None, m2=None, u0=None):
    saved = stack.smoother
    stack.smoother = Smoother.ADDITIVE_SCHWARZ
    try:
        return mg_solve(stack, f, tol, max_iters, m1, m2, u0)
    finally:
        stack.smoother = saved


def cg_solve(K, b: np.ndarray, tol: float = 1e-8, max_iters: int = 100000):
    """Unpreconditioned conjugate gradients from a zero initial guess."""
    t0 = time.perf_counter()
    b = np.asarray(b, dtype=float)
    x = np.zeros_like(b)
    r = b.copy()
    d = r.copy()
    rr = float(r @ r)
    r0 = math.sqrt(rr)
    hist = [r0]
    converged = r0 == 0.0
    it = 0
    while not converged and it < max_iters:
        Kd = K @ d
        alpha = rr / float(d @ Kd)
        x += alpha * d
        r -= alpha * Kd
        rr_new = float(r @ r)
        it += 1
        hist.append(math.sqrt(rr_new))
        if math.sqrt(rr_new) <= tol * r0:
            converged = True
            break
        d = r + (rr_new / rr) * d
        rr = rr_new
    rep = SolveReport("cg", it, hist, SolveReport.convergence_factor(hist), converged, False,
                      time.perf_counter() - t0)
    return x, rep


# --------------------------------------------------------------------------- diagnostics


def estimate_cstab(pair: TransferPair, N_fine=None, N_coarse=None, tol: float = 1e-6,
                   max_iters: int = 2000, seed: int = 0) -> EigenEstimate:
    """Norm of the prolongation from the coarse to the fine DG norm.

    sqrt of the top eigenvalue of (I^T N_fine I, N_coarse), by power iteration in the
    N_coarse inner product.
    """
    Nf = pair.fine.N if N_fine is None else N_fine
    Nc = pair.coarse.N if N_coarse is None else N_coarse
    Ncf = SparseCholesky(Nc)
    x = np.random.default_rng(seed).standard_normal(Nc.shape[0])
    x /= math.sqrt(x @ (Nc @ x))
    lam = 0.0
    for it in range(1, max_iters + 1):
        Ix = pair.prolong(x)
        NIx = Nf @ Ix
        new = float(Ix @ NIx)
        y = Ncf.solve(pair.restrict_functional(NIx))
        y /= math.sqrt(y @ (Nc @ y))
        x = y
        if it > 1 and abs(new - lam) <= tol * abs(new):
            return EigenEstimate(math.sqrt(new), new, it, True)
        lam = new
    log.warning("C_stab power iteration did not converge in %d iterations", max_iters)
    return EigenEstimate(math.sqrt(lam), lam, max_iters, False)


def error_propagation(stack: LevelStack, j: int, u: np.ndarray, m1: int, m2: int) -> np.ndarray:
    """E u = u - MG(j, K_j u, 0): the V-cycle error map applied to ``u``."""
    lev = stack.level(j)
    return u - vcycle(stack, j, lev.K @ u, np.zeros(lev.n_dofs), m1, m2)


def estimate_delta(stack: LevelStack, j: int, m: int, tol: float = 1e-4, max_iters: int = 500,
                   seed: int = 0) -> EigenEstimate:
    """Dominant eigenvalue (in the K_j inner product) of the V-cycle error map with m1 = m2 = m."""
    if j == 1:
        return EigenEstimate(0.0, 0.0, 0, True)
    K = stack.level(j).K
    x = np.random.default_rng(seed).standard_normal(K.shape[0])
    x /= math.sqrt(x @ (K @ x))
    lam = 0.0
    for it in range(1, max_iters + 1):
        y = error_propagation(stack, j, x, m, m)
        new = abs(float(y @ (K @ x)))
        ny = math.sqrt(max(float(y @ (K @ y)), 0.0))
        if ny == 0.0:
            return EigenEstimate(0.0, 0.0, it, True)
        x = y / ny
        if it > 1 and abs(new - lam) <= tol * max(abs(new), 1e-300):
            return EigenEstimate(new, new, it, True)
        lam = new
    log.warning("delta power iteration did not converge in %d iterations", max_iters)
    return EigenEstimate(lam, lam, max_iters, False)


def energy_stability_ratios(pair: TransferPair, n_samples: int = 20, seed: int = 0) -> np.ndarray:
    """Samples of A_coarse(P w, P w) / A_fine(w, w) for random fine w."""
    rng = np.random.default_rng(seed)
    Kf, Kc = pair.fine.K, pair.coarse.K
    out = []
    for _ in range(n_samples):
        w = rng.standard_normal(Kf.shape[0])
        pw = pair.p_coarse_projection(w)
        out.append(float(pw @ (Kc @ pw)) / float(w @ (Kf @ w)))
    return np.array(out)


def manufactured_rhs(space):
    """Load functional for -Lap u = f with u = sin(pi x) sin(pi y)."""
    return assemble_rhs(space, lambda x, y: 2.0 * np.pi**2 * np.sin(np.pi * x) * np.sin(np.pi * y))
