"""Sparse linear-algebra kernel: CSR helpers, block-diagonal factors, sparse Cholesky-type
direct solves and Matrix Market I/O."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla


class FactorizationError(np.linalg.LinAlgError):
    pass


def spmv(A, x) -> np.ndarray:
    """y = A x for a sparse or dense matrix."""
    x = np.asarray(x)
    if A.shape[1] != x.shape[0]:
        raise ValueError(f"dimension mismatch: {A.shape} @ {x.shape}")
    return A @ x


def symmetry_defect(A) -> float:
    """max|A - A^T| / max|A|."""
    A = sp.csr_matrix(A)
    d = abs(A - A.T)
    amax = abs(A).max()
    return float(d.max() / amax) if amax > 0 else 0.0


class BlockDiagFactor:
    """Cholesky-factored block-diagonal matrix with equal block size.

    ``blocks`` has shape ``(n_blocks, b, b)``; dof ``k*b + i`` belongs to block ``k``.
    """

    def __init__(self, blocks: np.ndarray):
        blocks = np.asarray(blocks, dtype=float)
        self.blocks = blocks
        self.block_size = blocks.shape[1]
        try:
            L = np.linalg.cholesky(blocks)
        except np.linalg.LinAlgError as exc:
            bad = [k for k in range(len(blocks)) if np.linalg.eigvalsh(blocks[k]).min() <= 0]
            raise FactorizationError(f"block(s) {bad[:5]} not positive definite") from exc
        Linv = np.linalg.inv(L)
        self.inverse = np.einsum("kji,kjl->kil", Linv, Linv)

    @property
    def shape(self):
        n = self.blocks.shape[0] * self.block_size
        return (n, n)

    def solve(self, b: np.ndarray) -> np.ndarray:
        b = np.asarray(b, dtype=float)
        nb, bs = self.blocks.shape[:2]
        if b.ndim == 1:
            return np.einsum("kij,kj->ki", self.inverse, b.reshape(nb, bs)).ravel()
        return np.einsum("kij,kjm->kim", self.inverse, b.reshape(nb, bs, -1)).reshape(b.shape)

    def matvec(self, x: np.ndarray) -> np.ndarray:
        nb, bs = self.blocks.shape[:2]
        return np.einsum("kij,kj->ki", self.blocks, np.asarray(x).reshape(nb, bs)).ravel()

    def to_sparse(self) -> sp.csr_matrix:
        return sp.block_diag(list(self.blocks), format="csr")


class SparseCholesky:
    """Direct solver for an SPD sparse matrix.

    Backed by SuperLU with diagonal pivoting; every pivot is checked positive, so a
    non-SPD input raises ``FactorizationError`` naming the offending row.
    """

    def __init__(self, A, permc_spec: str = "MMD_AT_PLUS_A"):
        A = sp.csc_matrix(A, dtype=float)
        if A.shape[0] != A.shape[1]:
            raise ValueError("matrix must be square")
        self.shape = A.shape
        self._A = A
        try:
            self._lu = spla.splu(
                A, permc_spec=permc_spec, diag_pivot_thresh=0.0, options={"SymmetricMode": True}
            )
        except RuntimeError as exc:
            raise FactorizationError(f"factorization failed: {exc}") from exc
        piv = self._lu.U.diagonal()
        bad = np.flatnonzero(~(piv > 0))
        if len(bad):
            row = int(self._lu.perm_c[bad[0]])
            raise FactorizationError(f"non-positive pivot {piv[bad[0]]!r} at row {row}")

    def solve(self, b: np.ndarray) -> np.ndarray:
        return self._lu.solve(np.asarray(b, dtype=float))


def cholesky_sparse(A) -> SparseCholesky:
    return SparseCholesky(A)


def solve(factor: SparseCholesky, b) -> np.ndarray:
    return factor.solve(b)


def write_matrix_market(A, path, symmetric: bool = True) -> None:
    """Coordinate real Matrix Market; symmetric files store the lower triangle."""
    A = sp.coo_matrix(A)
    if symmetric:
        keep = A.row >= A.col
        rows, cols, vals = A.row[keep], A.col[keep], A.data[keep]
        header = "%%MatrixMarket matrix coordinate real symmetric"
    else:
        rows, cols, vals = A.row, A.col, A.data
        header = "%%MatrixMarket matrix coordinate real general"
    order = np.lexsort((rows, cols))
    lines = [header, f"{A.shape[0]} {A.shape[1]} {len(vals)}"]
    lines += [f"{r + 1} {c + 1} {v:.17g}" for r, c, v in zip(rows[order], cols[order], vals[order])]
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix_market(path) -> sp.csr_matrix:
    lines = Path(path).read_text().splitlines()
    header = lines[0].lower().split()
    if header[:4] != ["%%matrixmarket", "matrix", "coordinate", "real"]:
        raise ValueError(f"{path}: unsupported Matrix Market header {lines[0]!r}")
    symmetric = header[4] == "symmetric"
    body = [ln for ln in lines[1:] if ln.strip() and not ln.startswith("%")]
    n, m, nnz = (int(t) for t in body[0].split())
    data = np.array([ln.split() for ln in body[1 : 1 + nnz]], dtype=float).reshape(-1, 3)
    r = data[:, 0].astype(int) - 1
    c = data[:, 1].astype(int) - 1
    v = data[:, 2]
    if symmetric:
        off = r != c
        r, c, v = np.concatenate([r, c[off]]), np.concatenate([c, r[off]]), np.concatenate([v, v[off]])
    return sp.csr_matrix((v, (r, c)), shape=(n, m))
