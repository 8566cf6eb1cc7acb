"""Command-line front end: ``polymg mesh|solve|table|cstab|delta``.

Every command is also callable as a function taking an :class:`ExperimentConfig`, which
is how the tests and demo scripts drive it. CSV rows are produced in a fixed order so
reruns with the same seed give identical files apart from the ``wall_time`` column.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from polymg.dgcore import DEFAULT_C_SIGMA, build_level, error_norms
from polymg.mgsolve import (
    Smoother,
    build_stack,
    cg_solve,
    estimate_cstab,
    estimate_delta,
    manufactured_rhs,
    mg_solve,
)
from polymg.polymesh import UNIT_SQUARE, build_hierarchy, check_assumptions, write_mesh
from polymg.xfer import build_transfer

log = logging.getLogger(__name__)

EXIT_OK, EXIT_ERROR, EXIT_NONCONVERGED = 0, 1, 2

SOLVE_HEADER = ["method", "levels", "p", "m", "cells", "iterations", "rho", "converged",
                "diverged", "h", "l2_error", "dg_error", "seed", "wall_time"]
TABLE_HEADER = ["method", "levels", "p", "m", "cells", "iterations", "rho", "converged",
                "diverged", "table", "seed", "wall_time"]
CSTAB_HEADER = ["mesh_pair", "p", "cstab", "iterations", "converged", "seed"]
DELTA_HEADER = ["J", "p", "m", "delta", "iterations", "converged", "cells", "seed"]

TABLE_M = (3, 5, 8)
TABLE_LEVELS = (2, 3, 4)
# table id -> (smoother, default degree); None degree means p_j = j on level j
TABLES = {
    "T1": (Smoother.RICHARDSON, 1),
    "T2": (Smoother.RICHARDSON, 3),
    "T3": (Smoother.ADDITIVE_SCHWARZ, 1),
    "T4": (Smoother.ADDITIVE_SCHWARZ, None),
}


class UsageError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    domain: tuple = UNIT_SQUARE
    cells: list = field(default_factory=lambda: [512])
    levels: int = 2
    p: list | None = None
    m1: int = 5
    m2: int = 5
    smoother: Smoother = Smoother.RICHARDSON
    csigma: float = DEFAULT_C_SIGMA
    tol: float = 1e-8
    seed: int = 0
    mms: bool = False
    out: str | None = None
    lloyd: int = 20
    max_iters: int = 2000
    cg: bool = False
    dump: str | None = None
    table: str = "T1"
    workers: int = 1

    def validate(self) -> "ExperimentConfig":
        if self.levels < 1:
            raise UsageError("levels must be >= 1")
        if not 0.0 < self.tol < 1.0:
            raise UsageError("tol must lie in (0, 1)")
        if not self.cells or min(self.cells) < 1:
            raise UsageError("cells must be positive")
        if self.p is not None and (not self.p or min(self.p) < 0):
            raise UsageError("p must be non-negative")
        if self.m1 < 0 or self.m2 < 0:
            raise UsageError("smoothing steps must be non-negative")
        if self.table not in TABLES:
            raise UsageError(f"unknown table {self.table!r}; choose from {sorted(TABLES)}")
        return self

    def degrees(self, levels: int | None = None) -> list:
        """Per-level degrees, coarsest first: a single p is repeated, a list is taken as given."""
        J = self.levels if levels is None else levels
        p = self.p or [1]
        if len(p) == 1:
            return [p[0]] * J
        if len(p) != J:
            raise UsageError(f"hp list {p} has {len(p)} entries but levels={J}")
        return list(p)


# --------------------------------------------------------------------------- config parsing


def _int_list(text) -> list:
    if isinstance(text, (list, tuple)):
        return [int(t) for t in text]
    return [int(t) for t in str(text).replace(" ", "").split(",") if t]


_CONVERTERS = {
    "domain": lambda s: tuple(float(t) for t in str(s).replace(",", " ").split()),
    "cells": _int_list,
    "p": _int_list,
    "levels": int,
    "m1": int,
    "m2": int,
    "m": int,
    "smoother": lambda s: Smoother(str(s).lower()),
    "csigma": float,
    "tol": float,
    "seed": int,
    "mms": lambda s: s if isinstance(s, bool) else str(s).lower() in ("1", "true", "yes", "on"),
    "cg": lambda s: s if isinstance(s, bool) else str(s).lower() in ("1", "true", "yes", "on"),
    "out": str,
    "dump": str,
    "lloyd": int,
    "max_iters": int,
    "table": lambda s: str(s).upper(),
    "workers": int,
}


def read_config_file(path) -> dict:
    """Flat ``key = value`` file; blank lines and ``#`` comments are ignored."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CONVERTERS:
            raise UsageError(f"{path}:{n}: unknown key {key!r}")
        out[key] = value
    return out


def make_config(overrides: dict) -> ExperimentConfig:
    """Build a validated config from raw string/typed values (file or CLI)."""
    kw = {}
    try:
        for key, value in overrides.items():
            if value is None:
                continue
            kw[key] = _CONVERTERS[key](value)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    m = kw.pop("m", None)
    if m is not None:
        kw.setdefault("m1", m)
        kw.setdefault("m2", m)
    known = {f.name for f in fields(ExperimentConfig)}
    return ExperimentConfig(**{k: v for k, v in kw.items() if k in known}).validate()


# --------------------------------------------------------------------------- output helpers


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isnan(v):
            return ""
        return f"{v:.6g}"
    return str(v)


def write_csv(rows, header, out) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(r.get(h, "")) for h in header])
    text = buf.getvalue()
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        path = Path(out)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc}") from exc
    return text


def _hp_label(degrees) -> str:
    return str(degrees[0]) if len(set(degrees)) == 1 else "-".join(str(d) for d in degrees)


def _hierarchy(cfg: ExperimentConfig, n_finest: int, levels: int):
    return build_hierarchy(cfg.domain, n_finest, levels, cfg.seed, cfg.lloyd)


def _u_exact(x, y):
    return np.sin(np.pi * x) * np.sin(np.pi * y)


def _grad_exact(x, y):
    return (np.pi * np.cos(np.pi * x) * np.sin(np.pi * y), np.pi * np.sin(np.pi * x) * np.cos(np.pi * y))


# --------------------------------------------------------------------------- commands


def cmd_mesh(cfg: ExperimentConfig) -> list:
    """Write each hierarchy level and its quality report; returns the written paths."""
    outdir = Path(cfg.out or "meshes")
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create {outdir}: {exc}") from exc
    written = []
    for n in cfg.cells:
        hier = _hierarchy(cfg, n, cfg.levels)
        for j, mesh in enumerate(hier.levels, 1):
            stem = outdir / f"mesh_n{n}_j{j}_c{mesh.n_cells}"
            try:
                write_mesh(mesh, stem.with_suffix(".mesh"))
                check_assumptions(mesh).to_csv(stem.with_name(stem.name + "_quality.csv"))
            except OSError as exc:
                raise UsageError(f"cannot write {stem}: {exc}") from exc
            written.append(stem.with_suffix(".mesh"))
    return written


def run_solve(cfg: ExperimentConfig) -> list:
    rows = []
    degrees = cfg.degrees()
    for n in cfg.cells:
        hier = _hierarchy(cfg, n, cfg.levels)
        stack = build_stack(hier.levels, degrees, cfg.csigma, cfg.smoother, cfg.m1, cfg.m2)
        fine = stack.level(stack.J)
        f = manufactured_rhs(fine.space)
        u, rep = mg_solve(stack, f, cfg.tol, cfg.max_iters)
        row = {
            "method": rep.method, "levels": cfg.levels, "p": _hp_label(degrees), "m": cfg.m1,
            "cells": fine.space.mesh.n_cells, "iterations": rep.iterations, "rho": rep.rho,
            "converged": rep.converged, "diverged": rep.diverged, "h": fine.space.mesh.h,
            "l2_error": float("nan"), "dg_error": float("nan"), "seed": cfg.seed,
            "wall_time": f"{rep.wall_time:.3f}",
        }
        if cfg.mms:
            err = error_norms(fine.space, u, _u_exact, _grad_exact, cfg.csigma)
            row["l2_error"], row["dg_error"] = err["l2"], err["dg"]
        rows.append(row)
        if cfg.dump:
            d = Path(cfg.dump)
            d.mkdir(parents=True, exist_ok=True)
            np.savetxt(d / f"solution_n{n}_J{cfg.levels}_p{_hp_label(degrees)}.txt", u, fmt="%.17g")
        if cfg.cg:
            _, crep = cg_solve(fine.K, f, cfg.tol)
            rows.append({
                "method": "cg", "levels": 1, "p": degrees[-1], "m": "", "cells": fine.space.mesh.n_cells,
                "iterations": crep.iterations, "rho": crep.rho, "converged": crep.converged,
                "diverged": False, "h": fine.space.mesh.h, "l2_error": float("nan"),
                "dg_error": float("nan"), "seed": cfg.seed, "wall_time": f"{crep.wall_time:.3f}",
            })
    return rows


def cmd_solve(cfg: ExperimentConfig) -> int:
    rows = run_solve(cfg)
    write_csv(rows, SOLVE_HEADER, cfg.out)
    return EXIT_OK if all(r["converged"] for r in rows) else EXIT_NONCONVERGED


def _table_block(args) -> list:
    """All m values for one (set, levels) cell group; one stack serves every m."""
    cfg, table, n, levels = args
    smoother, p = TABLES[table]
    if table != "T4" and cfg.p:
        p = cfg.p[0]
    degrees = list(range(1, levels + 1)) if p is None else [p] * levels
    rows = []
    try:
        hier = _hierarchy(cfg, n, levels)
        stack = build_stack(hier.levels, degrees, cfg.csigma, smoother)
        f = manufactured_rhs(stack.level(stack.J).space)
    except Exception as exc:  # recorded per cell, the table keeps going
        log.error("table %s set %d levels %d: setup failed: %s", table, n, levels, exc)
        return [{"method": "mg-" + smoother.value, "levels": levels, "p": _hp_label(degrees), "m": m,
                 "cells": n, "iterations": "", "rho": float("nan"), "converged": False,
                 "diverged": False, "table": table, "seed": cfg.seed, "wall_time": ""} for m in TABLE_M]
    for m in TABLE_M:
        _, rep = mg_solve(stack, f, cfg.tol, cfg.max_iters, m, m)
        rows.append({
            "method": rep.method, "levels": levels, "p": _hp_label(degrees), "m": m, "cells": n,
            "iterations": rep.iterations, "rho": rep.rho, "converged": rep.converged,
            "diverged": rep.diverged, "table": table, "seed": cfg.seed, "wall_time": f"{rep.wall_time:.3f}",
        })
    return rows


def _cg_row(args) -> dict:
    cfg, table, n = args
    _, p = TABLES[table]
    if table != "T4" and cfg.p:
        p = cfg.p[0]
    # hp tables use the finest degree of the deepest hierarchy for the baseline
    p = max(TABLE_LEVELS) if p is None else p
    mesh = _hierarchy(cfg, n, 1).levels[0]
    lev = build_level(mesh, p, cfg.csigma)
    _, rep = cg_solve(lev.K, manufactured_rhs(lev.space), cfg.tol)
    return {"method": "cg", "levels": 1, "p": p, "m": "", "cells": n, "iterations": rep.iterations,
            "rho": rep.rho, "converged": rep.converged, "diverged": False, "table": table,
            "seed": cfg.seed, "wall_time": f"{rep.wall_time:.3f}"}


def run_table(cfg: ExperimentConfig, levels=TABLE_LEVELS) -> list:
    """Rows ordered set, then levels, then m; each set ends with its CG baseline."""
    table = cfg.table
    blocks = [(cfg, table, n, L) for n in cfg.cells for L in levels]
    cgs = [(cfg, table, n) for n in cfg.cells]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            mg = list(pool.map(_table_block, blocks))
            cg = list(pool.map(_cg_row, cgs))
    else:
        mg = [_table_block(b) for b in blocks]
        cg = [_cg_row(c) for c in cgs]
    rows = []
    for i, _ in enumerate(cfg.cells):
        for k in range(len(levels)):
            rows.extend(mg[i * len(levels) + k])
        rows.append(cg[i])
    return rows


def cmd_table(cfg: ExperimentConfig) -> int:
    write_csv(run_table(cfg), TABLE_HEADER, cfg.out)
    return EXIT_OK


def least_squares_slope(x, y) -> float:
    return float(np.polyfit(np.asarray(x, float), np.asarray(y, float), 1)[0])


def run_cstab(cfg: ExperimentConfig, control: bool = True) -> list:
    """C_stab(p) for each fine/coarse pair (coarse has a quarter of the cells)."""
    ps = cfg.p or [1, 2, 3, 4]
    rows = []
    if control:
        mesh = _hierarchy(cfg, min(cfg.cells), 1).levels[0]
        lev = build_level(mesh, ps[0], cfg.csigma)
        est = estimate_cstab(build_transfer(lev, lev))
        rows.append({"mesh_pair": f"{mesh.n_cells}/{mesh.n_cells}", "p": ps[0], "cstab": est.value,
                     "iterations": est.iterations, "converged": est.converged, "seed": cfg.seed})
    for n in cfg.cells:
        coarse_mesh, fine_mesh = _hierarchy(cfg, n, 2).levels
        label = f"{fine_mesh.n_cells}/{coarse_mesh.n_cells}"
        vals = []
        for p in ps:
            fine, coarse = build_level(fine_mesh, p, cfg.csigma), build_level(coarse_mesh, p, cfg.csigma)
            est = estimate_cstab(build_transfer(fine, coarse))
            if not est.converged:
                log.warning("C_stab estimate for %s p=%d not converged", label, p)
            vals.append(est.value)
            rows.append({"mesh_pair": label, "p": p, "cstab": est.value, "iterations": est.iterations,
                         "converged": est.converged, "seed": cfg.seed})
        if len(ps) > 1:
            rows.append({"mesh_pair": label, "p": "slope", "cstab": least_squares_slope(ps, vals),
                         "iterations": "", "converged": "", "seed": cfg.seed})
    return rows


def cmd_cstab(cfg: ExperimentConfig) -> int:
    write_csv(run_cstab(cfg), CSTAB_HEADER, cfg.out)
    return EXIT_OK


def run_delta(cfg: ExperimentConfig, m_rule=lambda p: 3 * p * p) -> list:
    """delta_J for J = 1 (control) .. levels and each p, with m1 = m2 = m_rule(p)."""
    n = cfg.cells[0]
    ps = cfg.p or [1, 2, 3]
    rows = [{"J": 1, "p": ps[0], "m": 0, "delta": 0.0, "iterations": 0, "converged": True,
             "cells": n, "seed": cfg.seed}]
    for J in range(2, cfg.levels + 1):
        hier = _hierarchy(cfg, n, J)
        for p in ps:
            stack = build_stack(hier.levels, p, cfg.csigma, cfg.smoother)
            m = m_rule(p)
            est = estimate_delta(stack, J, m)
            if not est.converged:
                log.warning("delta estimate J=%d p=%d not converged", J, p)
            rows.append({"J": J, "p": p, "m": m, "delta": est.value, "iterations": est.iterations,
                         "converged": est.converged, "cells": n, "seed": cfg.seed})
    return rows


def cmd_delta(cfg: ExperimentConfig) -> int:
    write_csv(run_delta(cfg), DELTA_HEADER, cfg.out)
    return EXIT_OK


COMMANDS = {"mesh": cmd_mesh, "solve": cmd_solve, "table": cmd_table, "cstab": cmd_cstab, "delta": cmd_delta}

# per-command defaults applied beneath the config file and the flags
COMMAND_DEFAULTS = {
    "mesh": {"cells": "512", "levels": "4"},
    "solve": {},
    "table": {"cells": "512,1024"},
    "cstab": {"cells": "64,256", "p": "1,2,3,4"},
    "delta": {"cells": "256", "levels": "3", "p": "1,2,3"},
}


# --------------------------------------------------------------------------- argparse


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polymg", description="Non-nested polygonal DG multigrid experiments")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="key = value file; flags override it")
        p.add_argument("--cells", help="finest cell count(s), comma separated")
        p.add_argument("--levels", type=int)
        p.add_argument("--p", help="degree, comma list (hp per level for solve, sweep for cstab/delta)")
        p.add_argument("--m", type=int, help="sets both m1 and m2")
        p.add_argument("--m1", type=int)
        p.add_argument("--m2", type=int)
        p.add_argument("--smoother", choices=[s.value for s in Smoother])
        p.add_argument("--csigma", type=float)
        p.add_argument("--tol", type=float)
        p.add_argument("--seed", type=int)
        p.add_argument("--mms", action="store_const", const=True)
        p.add_argument("--cg", action="store_const", const=True, help="add an unpreconditioned CG row")
        p.add_argument("--out")
        p.add_argument("--dump", help="directory for solution coefficient files")
        p.add_argument("--lloyd", type=int)
        p.add_argument("--max-iters", dest="max_iters", type=int)
        p.add_argument("--workers", type=int)
        p.add_argument("--domain", help="x0,y0,x1,y1")
        if name == "table":
            p.add_argument("table", choices=sorted(TABLES))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    raw = dict(COMMAND_DEFAULTS[args.command])
    try:
        if args.config:
            raw.update(read_config_file(args.config))
        flags = {k: v for k, v in vars(args).items() if k not in ("command", "config", "verbose")}
        raw.update({k: v for k, v in flags.items() if v is not None})
        cfg = make_config(raw)
        result = COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"polymg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return result if isinstance(result, int) else EXIT_OK


__all__ = [
    "ExperimentConfig", "UsageError", "make_config", "read_config_file", "run_solve", "run_table",
    "run_cstab", "run_delta", "cmd_mesh", "cmd_solve", "cmd_table", "cmd_cstab", "cmd_delta",
    "least_squares_slope", "main", "write_csv",
]
