"""
Non-nested Voronoi hierarchies and the supermesh transfer
=========================================================

Build a four-level hierarchy of independent Voronoi meshes, look at their
regularity, and check that the L2-projection transfer between two unrelated
levels is exact on the functions both spaces contain.
"""

import numpy as np

from polymg.dgcore import build_level, l2_project
from polymg.polymesh import UNIT_SQUARE, build_hierarchy, check_assumptions
from polymg.xfer import build_supermesh, build_transfer

###############################################################################
# Each level is generated from its own random generators followed by Lloyd
# relaxation, so no coarse cell is a union of fine cells.

hier = build_hierarchy(UNIT_SQUARE, n_finest=512, n_levels=4, seed=0)
print("cells per level:", hier.counts)
print("h_coarse / h_fine:", [f"{r:.2f}" for r in hier.h_ratios])

for mesh in hier.levels:
    s = check_assumptions(mesh).summary()
    print(f"{mesh.n_cells:5d} cells  h={mesh.h:.4f}  max h^2/|K|={s['h2_over_area_max']:.2f}")

###############################################################################
# The supermesh collects every fine/coarse cell intersection. Its pieces tile
# the domain, which is what makes the mixed mass matrix exact.

coarse_mesh, fine_mesh = hier.levels[2], hier.levels[3]
sm = build_supermesh(fine_mesh, coarse_mesh)
print("supermesh:", sm.stats())

###############################################################################
# Prolongation of a coarse linear function reproduces it on the fine mesh.

fine, coarse = build_level(fine_mesh, 2), build_level(coarse_mesh, 1)
pair = build_transfer(fine, coarse)
linear = lambda x, y: 1.0 + 2.0 * x - y  # noqa: E731
err = pair.prolong(l2_project(coarse.space, linear)) - l2_project(fine.space, linear)
print(f"prolongation error on a linear function: {np.abs(err).max():.2e}")
