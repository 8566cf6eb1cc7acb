"""
Convergence of the lifted interior penalty discretisation
=========================================================

Solve -Lap u = f with u = sin(pi x) sin(pi y) on three Voronoi meshes and
estimate the orders of convergence in L2 and in the DG energy norm.
"""

import numpy as np

from polymg.dgcore import build_level, error_norms
from polymg.mgsolve import manufactured_rhs
from polymg.polymesh import UNIT_SQUARE, build_hierarchy
from polymg.sparsela import SparseCholesky


def u(x, y):
    return np.sin(np.pi * x) * np.sin(np.pi * y)


def grad_u(x, y):
    return np.pi * np.cos(np.pi * x) * np.sin(np.pi * y), np.pi * np.sin(np.pi * x) * np.cos(np.pi * y)


###############################################################################
# Orders are computed against the measured mesh size h (largest cell
# diameter) rather than an assumed halving.

for p in (1, 2, 3):
    rows = []
    for n in (128, 512, 2048):
        mesh = build_hierarchy(UNIT_SQUARE, n, 1, seed=0).levels[0]
        lev = build_level(mesh, p)
        uh = SparseCholesky(lev.K).solve(manufactured_rhs(lev.space))
        e = error_norms(lev.space, uh, u, grad_u)
        rows.append((mesh.h, e["l2"], e["dg"]))
    print(f"p = {p}")
    for i, (h, l2, dg) in enumerate(rows):
        line = f"  h={h:.4f}  L2={l2:.3e}  DG={dg:.3e}"
        if i:
            h0, l20, dg0 = rows[i - 1]
            r = np.log(h0 / h)
            line += f"  orders {np.log(l20 / l2) / r:.2f} / {np.log(dg0 / dg) / r:.2f}"
        print(line)
