"""Multigrid for symmetric interior penalty DG on non-nested polygonal meshes.

Modules: ``geomkit`` (polygons and quadrature), ``polymesh`` (Voronoi meshes),
``dgcore`` (spaces and forms), ``xfer`` (supermesh transfers), ``mgsolve`` (V-cycles,
smoothers, diagnostics), ``sparsela`` (direct solves) and ``labcli`` (experiments).
"""

from polymg.dgcore import DgSpace, LevelOperators, assemble_stiffness, build_level, error_norms
from polymg.mgsolve import (
    LevelStack,
    Smoother,
    SolveReport,
    build_stack,
    cg_solve,
    estimate_cstab,
    estimate_delta,
    estimate_lambda_max,
    mg_solve,
    vcycle,
)
from polymg.polymesh import (
    PolyMesh,
    build_hierarchy,
    generate_voronoi_mesh,
    read_mesh,
    write_mesh,
)
from polymg.xfer import TransferPair, build_supermesh, build_transfer

__version__ = "0.1.0"

__all__ = [
    "DgSpace", "LevelOperators", "LevelStack", "PolyMesh", "Smoother", "SolveReport", "TransferPair",
    "assemble_stiffness", "build_hierarchy", "build_level", "build_stack", "build_supermesh",
    "build_transfer", "cg_solve", "error_norms", "estimate_cstab", "estimate_delta",
    "estimate_lambda_max", "generate_voronoi_mesh", "mg_solve", "read_mesh", "vcycle", "write_mesh",
]
