"""
V-cycle convergence with Richardson and additive Schwarz smoothing
==================================================================

Small analogues of the multigrid tables: convergence factors for m = 3, 5, 8
smoothing steps on 2, 3 and 4 levels, next to plain conjugate gradients.
"""

import sys

from polymg.labcli import TABLE_HEADER, write_csv, make_config, run_table

###############################################################################
# T1: Richardson smoothing, p = 1. More smoothing steps give a smaller rho,
# and rho changes little with the number of levels.

rows = run_table(make_config({"cells": "512", "table": "T1", "seed": 0}))
write_csv(rows, TABLE_HEADER, "-")

###############################################################################
# T3: the same grid with additive Schwarz PCG smoothing. Iteration counts
# stay flat as levels are added.

rows = run_table(make_config({"cells": "512", "table": "T3", "seed": 0}))
write_csv(rows, TABLE_HEADER, "-")
sys.stdout.flush()
