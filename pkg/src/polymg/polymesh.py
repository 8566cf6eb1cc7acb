"""Convex polygonal meshes: Voronoi generation, face topology, quality audits, file I/O."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np
from scipy.spatial import Delaunay, QhullError, cKDTree

from polymg.geomkit import (
    GEOM_EPS,
    clip_halfplane,
    fan_triangles,
    polygon_area,
    polygon_centroid,
    polygon_diameter,
)

log = logging.getLogger(__name__)

BOUNDARY = -1
MESH_HEADER = "polymg-mesh v1"
UNIT_SQUARE = (0.0, 0.0, 1.0, 1.0)


class MeshTopologyError(ValueError):
    pass


class MeshGenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Faces:
    """Edge topology. ``neighbor`` is ``BOUNDARY`` on the domain boundary;
    ``normals`` are unit vectors pointing out of the owner cell."""

    verts: np.ndarray
    owner: np.ndarray
    neighbor: np.ndarray
    normals: np.ndarray
    lengths: np.ndarray

    def __len__(self):
        return len(self.owner)

    @property
    def interior(self) -> np.ndarray:
        return np.flatnonzero(self.neighbor != BOUNDARY)

    @property
    def boundary(self) -> np.ndarray:
        return np.flatnonzero(self.neighbor == BOUNDARY)


@dataclass(frozen=True, eq=False)
class PolyMesh:
    vertices: np.ndarray
    cells: tuple
    domain: tuple = UNIT_SQUARE
    faces: Faces | None = field(default=None, repr=False)

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    def cell_polygon(self, k: int) -> np.ndarray:
        return self.vertices[list(self.cells[k])]

    @cached_property
    def areas(self) -> np.ndarray:
        return np.array([polygon_area(self.cell_polygon(k)) for k in range(self.n_cells)])

    @cached_property
    def diameters(self) -> np.ndarray:
        return np.array([polygon_diameter(self.cell_polygon(k)) for k in range(self.n_cells)])

    @cached_property
    def centroids(self) -> np.ndarray:
        return np.array([polygon_centroid(self.cell_polygon(k)) for k in range(self.n_cells)])

    @cached_property
    def bboxes(self) -> np.ndarray:
        """Per-cell ``(xmin, ymin, xmax, ymax)``."""
        out = np.empty((self.n_cells, 4))
        for k in range(self.n_cells):
            p = self.cell_polygon(k)
            out[k, :2] = p.min(axis=0)
            out[k, 2:] = p.max(axis=0)
        return out

    @property
    def h(self) -> float:
        return float(self.diameters.max())

    @property
    def domain_area(self) -> float:
        x0, y0, x1, y1 = self.domain
        return (x1 - x0) * (y1 - y0)

    @cached_property
    def cell_faces(self) -> list:
        """Face ids touching each cell."""
        out = [[] for _ in range(self.n_cells)]
        for f, (o, n) in enumerate(zip(self.faces.owner, self.faces.neighbor)):
            out[o].append(f)
            if n != BOUNDARY:
                out[n].append(f)
        return out


# --------------------------------------------------------------------------- Voronoi


def _voronoi_cells(gens: np.ndarray, domain) -> list:
    x0, y0, x1, y1 = domain
    n = len(gens)
    box = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    if n == 1:
        return [box]
    nbrs = None
    if n > 8:
        try:
            tri = Delaunay(gens)
            indptr, indices = tri.vertex_neighbor_vertices
            nbrs = [indices[indptr[i] : indptr[i + 1]] for i in range(n)]
        except QhullError:
            nbrs = None
    if nbrs is None:
        nbrs = [np.delete(np.arange(n), i) for i in range(n)]
    cells = []
    for i in range(n):
        gx, gy = gens[i]
        poly = box
        for j in nbrs[i]:
            hx, hy = gens[j]
            a, b = hx - gx, hy - gy
            c = 0.5 * (a * (hx + gx) + b * (hy + gy))
            poly = clip_halfplane(poly, a, b, c)
            if len(poly) < 3:
                break
        cells.append(poly)
    return cells


def _assemble_conforming(cells: list, domain) -> tuple:
    """Merge independently clipped cell loops into one vertex table."""
    x0, y0, x1, y1 = domain
    scale = max(x1 - x0, y1 - y0)
    tol = 1e-10 * scale
    pts = np.array([p for c in cells for p in c])
    # snap to the exact domain boundary
    for col, lo, hi in ((0, x0, x1), (1, y0, y1)):
        pts[np.abs(pts[:, col] - lo) < tol, col] = lo
        pts[np.abs(pts[:, col] - hi) < tol, col] = hi
    tree = cKDTree(pts)
    parent = np.arange(len(pts))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in sorted(tree.query_pairs(tol)):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    roots = np.array([find(i) for i in range(len(pts))])
    uniq, inverse = np.unique(roots, return_inverse=True)
    verts = pts[uniq]
    loops = []
    pos = 0
    for c in cells:
        ids = inverse[pos : pos + len(c)]
        pos += len(c)
        loop = []
        for v in ids:
            if not loop or loop[-1] != v:
                loop.append(int(v))
        while len(loop) > 1 and loop[0] == loop[-1]:
            loop.pop()
        loops.append(tuple(loop))
    return verts, loops


def _drop_unused(verts: np.ndarray, loops: list) -> tuple:
    used = sorted({v for loop in loops for v in loop})
    remap = -np.ones(len(verts), dtype=int)
    remap[used] = np.arange(len(used))
    return verts[used], [tuple(int(remap[v]) for v in loop) for loop in loops]


def voronoi_mesh_from_generators(generators, domain=UNIT_SQUARE) -> PolyMesh:
    """Bounded Voronoi tessellation of ``domain`` for fixed generator points."""
    gens = np.asarray(generators, dtype=float).reshape(-1, 2)
    cells = _voronoi_cells(gens, domain)
    verts, loops = _assemble_conforming(cells, domain)
    verts, loops = _drop_unused(verts, loops)
    return extract_faces(PolyMesh(verts, tuple(loops), tuple(float(d) for d in domain)))


def _lloyd(gens: np.ndarray, domain, iters: int) -> np.ndarray:
    for _ in range(iters):
        cells = _voronoi_cells(gens, domain)
        new = gens.copy()
        for i, c in enumerate(cells):
            if len(c) >= 3:
                new[i] = polygon_centroid(np.array(c))
        gens = new
    return gens


def generate_voronoi_mesh(
    domain=UNIT_SQUARE,
    n_cells: int = 64,
    seed: int = 0,
    lloyd_iters: int = 20,
    generators=None,
) -> PolyMesh:
    """Random-seed centroidal Voronoi mesh clipped to a rectangle.

    Generators are drawn uniformly from ``domain`` with ``numpy.random.default_rng(seed)``
    (or taken from ``generators``), relaxed ``lloyd_iters`` times, then tessellated.
    Degenerate cells trigger a retry with a perturbed seed.
    """
    x0, y0, x1, y1 = (float(d) for d in domain)
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"degenerate domain {domain}")
    if n_cells < 1:
        raise ValueError("n_cells must be >= 1")
    domain = (x0, y0, x1, y1)
    area_tol = 1e-14 * (x1 - x0) * (y1 - y0)
    for attempt in range(10):
        if generators is not None and attempt == 0:
            gens = np.asarray(generators, dtype=float).reshape(-1, 2)
            if len(gens) != n_cells:
                raise ValueError("generators do not match n_cells")
        else:
            rng = np.random.default_rng([seed, attempt] if attempt else seed)
            gens = rng.uniform((x0, y0), (x1, y1), size=(n_cells, 2))
        gens = _lloyd(gens, domain, lloyd_iters)
        mesh = voronoi_mesh_from_generators(gens, domain)
        if mesh.n_cells == n_cells and all(len(c) >= 3 for c in mesh.cells) and mesh.areas.min() > area_tol:
            return mesh
        log.warning("degenerate Voronoi cell (seed=%s, attempt %d); regenerating", seed, attempt)
    raise MeshGenerationError(f"could not generate a valid {n_cells}-cell mesh after 10 attempts")


# --------------------------------------------------------------------------- hierarchy


@dataclass(frozen=True, eq=False)
class MeshHierarchy:
    levels: tuple
    seeds: tuple
    target_ratio: float = 0.25

    def __len__(self):
        return len(self.levels)

    @property
    def counts(self) -> list:
        return [m.n_cells for m in self.levels]

    @property
    def h_ratios(self) -> list:
        """h_{j-1}/h_j for consecutive levels (coarse over fine)."""
        return [self.levels[j - 1].h / self.levels[j].h for j in range(1, len(self.levels))]


def level_seed(seed: int, n_cells: int) -> int:
    """Seed for one level, derived so that levels of a hierarchy are independent."""
    return int(np.random.SeedSequence([seed, n_cells]).generate_state(1)[0])


def hierarchy_counts(n_finest: int, n_levels: int) -> list:
    return [math.ceil(n_finest / 4**k) for k in reversed(range(n_levels))]


def build_hierarchy(domain=UNIT_SQUARE, n_finest: int = 512, n_levels: int = 4, seed: int = 0,
                    lloyd_iters: int = 20) -> MeshHierarchy:
    """Independent Voronoi meshes with cell counts n, n/4, n/16, ... (coarsest first)."""
    if n_levels < 1:
        raise ValueError("n_levels must be >= 1")
    if n_finest < 4 ** (n_levels - 1):
        raise ValueError(f"n_finest={n_finest} too small for {n_levels} levels")
    counts = hierarchy_counts(n_finest, n_levels)
    if n_levels == 1:
        seeds = (seed,)
    else:
        seeds = tuple(level_seed(seed, n) for n in counts)
    levels = tuple(cached_voronoi_mesh(tuple(domain), n, s, lloyd_iters) for n, s in zip(counts, seeds))
    return MeshHierarchy(levels, seeds, 0.25)


_MESH_CACHE: dict = {}


def cached_voronoi_mesh(domain, n_cells, seed, lloyd_iters=20) -> PolyMesh:
    """Memoised ``generate_voronoi_mesh``; meshes are immutable so sharing is safe."""
    key = (tuple(float(d) for d in domain), int(n_cells), int(seed), int(lloyd_iters))
    if key not in _MESH_CACHE:
        _MESH_CACHE[key] = generate_voronoi_mesh(domain, n_cells, seed, lloyd_iters)
    return _MESH_CACHE[key]


# --------------------------------------------------------------------------- topology


def extract_faces(mesh: PolyMesh) -> PolyMesh:
    """Classify every cell edge as interior (owner+neighbor) or boundary."""
    verts = mesh.vertices
    x0, y0, x1, y1 = mesh.domain
    tol = 1e-10 * max(x1 - x0, y1 - y0)
    directed = {}
    for c, loop in enumerate(mesh.cells):
        n = len(loop)
        for i in range(n):
            a, b = loop[i], loop[(i + 1) % n]
            if (a, b) in directed:
                raise MeshTopologyError(f"edge {a}->{b} used twice with the same orientation")
            directed[(a, b)] = c
    fv, owner, nbr = [], [], []
    for c, loop in enumerate(mesh.cells):
        n = len(loop)
        for i in range(n):
            a, b = loop[i], loop[(i + 1) % n]
            other = directed.get((b, a))
            if other is None:
                pa, pb = verts[a], verts[b]
                on_side = any(
                    abs(pa[k] - v) < tol and abs(pb[k] - v) < tol
                    for k, v in ((0, x0), (0, x1), (1, y0), (1, y1))
                )
                if not on_side:
                    raise MeshTopologyError(
                        f"cell {c}: edge {a}-{b} has no matching neighbor edge and is not on the boundary"
                    )
                fv.append((a, b))
                owner.append(c)
                nbr.append(BOUNDARY)
            elif c < other:
                fv.append((a, b))
                owner.append(c)
                nbr.append(other)
    fv = np.array(fv, dtype=int).reshape(-1, 2)
    d = verts[fv[:, 1]] - verts[fv[:, 0]]
    lengths = np.hypot(d[:, 0], d[:, 1])
    normals = np.stack([d[:, 1], -d[:, 0]], axis=1) / lengths[:, None]
    faces = Faces(fv, np.array(owner, dtype=int), np.array(nbr, dtype=int), normals, lengths)
    return PolyMesh(mesh.vertices, mesh.cells, mesh.domain, faces)


def subtriangulate(mesh: PolyMesh, cell_id: int) -> np.ndarray:
    """Centroid fan of one cell, ``(n_edges, 3, 2)``."""
    return fan_triangles(mesh.cell_polygon(cell_id))


def topology_audit(mesh: PolyMesh) -> dict:
    """Counts and consistency checks of the face structure."""
    f = mesh.faces
    interior = f.interior
    nb = len(f.boundary)
    mutual = all(
        (fid in mesh.cell_faces[f.neighbor[fid]]) and (fid in mesh.cell_faces[f.owner[fid]]) for fid in interior
    )
    n_v = len(mesh.vertices)
    # Euler for a disk: V - E + F = 1 with E = interior + boundary faces
    euler = n_v - (len(interior) + nb) + mesh.n_cells
    return {
        "cells": mesh.n_cells,
        "vertices": n_v,
        "interior_faces": len(interior),
        "boundary_faces": nb,
        "euler_characteristic": euler,
        "mutual_neighbors": mutual,
    }


def assert_valid(mesh: PolyMesh) -> None:
    """Raise if any structural invariant of the mesh is violated."""
    total = mesh.areas.sum()
    if abs(total - mesh.domain_area) > 1e-12 * mesh.domain_area * max(1.0, math.sqrt(mesh.n_cells)):
        raise MeshTopologyError(f"cell areas sum to {total!r}, domain area {mesh.domain_area!r}")
    if mesh.areas.min() <= 0:
        raise MeshTopologyError("non-positive cell area")
    for k in range(mesh.n_cells):
        p = mesh.cell_polygon(k)
        e = np.roll(p, -1, axis=0) - p
        cross = e[:, 0] * np.roll(e[:, 1], -1) - e[:, 1] * np.roll(e[:, 0], -1)
        if cross.min() < -GEOM_EPS * mesh.diameters[k] ** 2:
            raise MeshTopologyError(f"cell {k} is not convex CCW")


# --------------------------------------------------------------------------- quality


@dataclass(frozen=True)
class MeshQualityReport:
    h: np.ndarray
    area: np.ndarray
    h2_over_area: np.ndarray
    face_simplex_ratio: np.ndarray
    face_h: np.ndarray
    subtri_min_fraction: np.ndarray
    bbox_overlap: np.ndarray

    def summary(self) -> dict:
        out = {}
        for name in ("h", "area", "h2_over_area", "face_simplex_ratio", "subtri_min_fraction", "bbox_overlap"):
            v = getattr(self, name)
            out[f"{name}_min"] = float(v.min())
            out[f"{name}_max"] = float(v.max())
        return out

    def to_csv(self, path) -> None:
        rows = ["cell,h,area,h2_over_area,subtri_min_fraction,bbox_overlap"]
        for k in range(len(self.h)):
            rows.append(
                f"{k},{self.h[k]:.17g},{self.area[k]:.17g},{self.h2_over_area[k]:.17g},"
                f"{self.subtri_min_fraction[k]:.17g},{int(self.bbox_overlap[k])}"
            )
        Path(path).write_text("\n".join(rows) + "\n")


def check_assumptions(mesh: PolyMesh) -> MeshQualityReport:
    """Measured surrogates of the grid-regularity assumptions (report only, no thresholds).

    * ``h2_over_area``: h_k^2 / |k| per cell (>= 1 always, bounded for shape-regular cells).
    * ``face_simplex_ratio``: 2|T_F| / |F| for the fan triangle T_F over each cell edge,
      listed per (cell, edge) with the matching ``face_h`` = h_k for comparison.
    * ``subtri_min_fraction``: smallest fan-triangle area over |k|.
    * ``bbox_overlap``: number of cells whose bounding box meets the cell's own box.
    """
    h = mesh.diameters
    area = mesh.areas
    ratios, face_h, fractions = [], [], []
    for k in range(mesh.n_cells):
        tris = subtriangulate(mesh, k)
        e1 = tris[:, 1] - tris[:, 0]
        e2 = tris[:, 2] - tris[:, 0]
        ta = 0.5 * np.abs(e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])
        elen = np.hypot(*(tris[:, 2] - tris[:, 1]).T)
        ratios.extend(2.0 * ta / elen)
        face_h.extend([h[k]] * len(ta))
        fractions.append(ta.min() / area[k])
    bb = mesh.bboxes
    overlap = np.empty(mesh.n_cells, dtype=int)
    for k in range(mesh.n_cells):
        hit = (bb[:, 0] <= bb[k, 2]) & (bb[:, 2] >= bb[k, 0]) & (bb[:, 1] <= bb[k, 3]) & (bb[:, 3] >= bb[k, 1])
        overlap[k] = int(hit.sum())
    return MeshQualityReport(
        h=h,
        area=area,
        h2_over_area=h**2 / area,
        face_simplex_ratio=np.array(ratios),
        face_h=np.array(face_h),
        subtri_min_fraction=np.array(fractions),
        bbox_overlap=overlap,
    )


# --------------------------------------------------------------------------- file I/O


def write_mesh(mesh: PolyMesh, path, with_faces: bool = True) -> None:
    lines = [MESH_HEADER, "domain " + " ".join(f"{d:.17g}" for d in mesh.domain)]
    lines.append(f"vertices {len(mesh.vertices)}")
    lines += [f"{x:.17g} {y:.17g}" for x, y in mesh.vertices]
    lines.append(f"cells {mesh.n_cells}")
    lines += [" ".join(str(v) for v in (len(c), *c)) for c in mesh.cells]
    if with_faces and mesh.faces is not None:
        f = mesh.faces
        lines.append(f"faces {len(f)}")
        lines += [f"{a} {b} {o} {n}" for (a, b), o, n in zip(f.verts, f.owner, f.neighbor)]
    Path(path).write_text("\n".join(lines) + "\n")


def read_mesh(path) -> PolyMesh:
    """Load a ``polymg-mesh v1`` file; the face block is always rebuilt from the cells."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != MESH_HEADER:
        raise ValueError(f"{path}: missing '{MESH_HEADER}' header")
    i = 1
    domain = None
    if lines[i].startswith("domain"):
        domain = tuple(float(t) for t in lines[i].split()[1:5])
        i += 1
    key, n = lines[i].split()
    if key != "vertices":
        raise ValueError(f"{path}: expected vertex block, got {lines[i]!r}")
    n = int(n)
    verts = np.array([[float(t) for t in ln.split()] for ln in lines[i + 1 : i + 1 + n]])
    i += 1 + n
    key, m = lines[i].split()
    if key != "cells":
        raise ValueError(f"{path}: expected cell block, got {lines[i]!r}")
    m = int(m)
    cells = []
    for ln in lines[i + 1 : i + 1 + m]:
        toks = [int(t) for t in ln.split()]
        if toks[0] != len(toks) - 1:
            raise ValueError(f"{path}: malformed cell line {ln!r}")
        cells.append(tuple(toks[1:]))
    if domain is None:
        lo, hi = verts.min(axis=0), verts.max(axis=0)
        domain = (float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1]))
    return extract_faces(PolyMesh(verts, tuple(cells), domain))


def structured_quad_mesh(nx: int, ny: int | None = None, domain=UNIT_SQUARE) -> PolyMesh:
    """Uniform grid of rectangles; handy for exact-geometry checks."""
    ny = nx if ny is None else ny
    x0, y0, x1, y1 = domain
    xs = np.linspace(x0, x1, nx + 1)
    ys = np.linspace(y0, y1, ny + 1)
    X, Y = np.meshgrid(xs, ys, indexing="xy")
    verts = np.stack([X.ravel(), Y.ravel()], axis=1)

    def vid(i, j):
        return j * (nx + 1) + i

    cells = tuple((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)) for j in range(ny) for i in range(nx))
    return extract_faces(PolyMesh(verts, cells, tuple(float(d) for d in domain)))
