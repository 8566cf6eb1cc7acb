"""
Prolongation stability and V-cycle contraction
==============================================

Estimate C_stab(p), the norm of the prolongation between the DG norms of two
unrelated meshes, and the energy-norm contraction delta of the V-cycle with
m = 3 p^2 smoothing steps.
"""

from polymg.labcli import CSTAB_HEADER, DELTA_HEADER, write_csv, make_config, run_cstab, run_delta

###############################################################################
# C_stab for two mesh pairs. The first row is a control: a mesh paired with
# itself, where the prolongation is the identity and C_stab = 1. The measured
# growth in p is much slower than linear; see the README for the numbers.

write_csv(run_cstab(make_config({"cells": "64,256", "p": "1,2,3,4", "seed": 0})), CSTAB_HEADER, "-")

###############################################################################
# delta for J = 2 and 3. Values below one mean every V-cycle reduces the
# error in the energy norm.

write_csv(run_delta(make_config({"cells": "256", "levels": "3", "p": "1,2,3", "seed": 0})), DELTA_HEADER, "-")
