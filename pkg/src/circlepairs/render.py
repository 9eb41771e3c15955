"""Planar drawings of arrangements as deterministic SVG.

A drawing is a stereographic view: one region is sent to infinity, the
rest of the map is drawn inside it with straight segments.  The layout is
a barycentric (Tutte-style) embedding of the subdivided map:

- every arc is subdivided into 4 segments (the raw map has multi-edges,
  which no convex embedding of a simple graph can separate);
- every interior region additionally receives a hidden anchor node joined
  to its whole boundary cycle.  Without the anchors the equilibrium of a
  degree-2 subdivision chain is the straight segment between its
  endpoints, so parallel arcs of a bigon would collapse onto one line;
- the outer face is pinned to a regular polygon and all free nodes are
  iterated to the barycentre of their neighbours (Jacobi, residual 1e-10,
  capped at 1e5 sweeps), then the anchors are discarded.

The result is validated numerically: no two drawn segments may intersect
except at shared endpoints (tolerance 1e-9), and the rotation system read
off the coordinates must reproduce the face count 2n + 2.  On validation
failure the free nodes are perturbed once by 1e-6 with a fixed seed and
revalidated; a second failure raises LayoutDegenerate.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .arrangement import Arrangement, InvalidArrangement

_RESIDUAL = 1e-10
_MAX_SWEEPS = 100_000
_PLANARITY_TOL = 1e-9
_PERTURBATION = 1e-6

# layout node keys: ("v", vertex) for intersection points, ("s", arc_min_dart, k)
# for the k-th subdivision point (k = 1..3) counted from the arc's smaller dart
Node = tuple


class LayoutDegenerate(RuntimeError):
    """Planarity validation failed even after the perturbation retry."""


@dataclass(frozen=True)
class PlanarLayout:
    """Node coordinates in [0, 1]^2 plus the face placed at infinity."""

    coordinates: dict[Node, tuple[float, float]]
    outer_face: int


def _arc_key(arr: Arrangement, d: int) -> tuple[int, int]:
    return (d, arr.alpha[d]) if d < arr.alpha[d] else (arr.alpha[d], d)


def _subdivision_nodes(arr: Arrangement, d: int) -> list[Node]:
    """Subdivision nodes of the arc of ``d``, ordered away from ``d``'s vertex."""
    lo, _ = _arc_key(arr, d)
    ks = (1, 2, 3) if d == lo else (3, 2, 1)
    return [("s", lo, k) for k in ks]


def _face_cycle(arr: Arrangement, vertex_of: dict[int, int], walk: tuple[int, ...]) -> list[Node]:
    """Boundary cycle of one face in the subdivided graph."""
    cycle: list[Node] = []
    for d in walk:
        cycle.append(("v", vertex_of[d]))
        cycle.extend(_subdivision_nodes(arr, d))
    return cycle


def _adjacency(arr: Arrangement, vertex_of: dict[int, int], outer: int) -> dict[Node, list[Node]]:
    adj: dict[Node, list[Node]] = {}

    def link(a: Node, b: Node) -> None:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for d, e in arr.arcs():
        chain = [("v", vertex_of[d]), *_subdivision_nodes(arr, d), ("v", vertex_of[e])]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
    for fid, walk in enumerate(arr.faces()):
        if fid == outer:
            continue
        anchor: Node = ("f", fid)
        for node in _face_cycle(arr, vertex_of, walk):
            link(anchor, node)
    return adj


def _solve_positions(
    adj: dict[Node, list[Node]], pinned: dict[Node, tuple[float, float]]
) -> dict[Node, tuple[float, float]]:
    free = sorted(n for n in adj if n not in pinned)
    index = {n: i for i, n in enumerate(free)}
    m = len(free)
    a = np.zeros((m, m))
    b = np.zeros((m, 2))
    for n in free:
        i = index[n]
        deg = len(adj[n])
        for nb in adj[n]:
            if nb in pinned:
                b[i] += np.asarray(pinned[nb]) / deg
            else:
                a[i, index[nb]] += 1.0 / deg
    x = np.zeros((m, 2))
    for _ in range(_MAX_SWEEPS):
        x_new = a @ x + b
        if np.max(np.abs(x_new - x)) < _RESIDUAL:
            x = x_new
            break
        x = x_new
    out = dict(pinned)
    for n, i in index.items():
        out[n] = (float(x[i, 0]), float(x[i, 1]))
    return out


def _segments(arr: Arrangement, vertex_of: dict[int, int], pos: dict[Node, tuple[float, float]]):
    segs = []
    for d, e in arr.arcs():
        chain = [("v", vertex_of[d]), *_subdivision_nodes(arr, d), ("v", vertex_of[e])]
        for a, b in zip(chain, chain[1:]):
            segs.append((a, b, pos[a], pos[b]))
    return segs


def _segments_conflict(p, q, r, s, tol: float) -> bool:
    """Proper intersection or overlap of segments pq and rs (no shared ends)."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    def on_segment(a, b, c):
        return (
            min(a[0], b[0]) - tol <= c[0] <= max(a[0], b[0]) + tol
            and min(a[1], b[1]) - tol <= c[1] <= max(a[1], b[1]) + tol
        )

    o1 = orient(p, q, r)
    o2 = orient(p, q, s)
    o3 = orient(r, s, p)
    o4 = orient(r, s, q)
    if ((o1 > tol and o2 < -tol) or (o1 < -tol and o2 > tol)) and (
        (o3 > tol and o4 < -tol) or (o3 < -tol and o4 > tol)
    ):
        return True
    for a, b, c in ((p, q, r), (p, q, s), (r, s, p), (r, s, q)):
        if abs(orient(a, b, c)) <= tol and on_segment(a, b, c):
            return True
    return False


def validate_planarity(segments, tol: float = _PLANARITY_TOL) -> bool:
    """True iff no two segments intersect except at shared endpoints."""
    for i in range(len(segments)):
        a1, b1, p, q = segments[i]
        for j in range(i + 1, len(segments)):
            a2, b2, r, s = segments[j]
            if a1 in (a2, b2) or b1 in (a2, b2):
                continue
            if _segments_conflict(p, q, r, s, tol):
                return False
    return True


def drawn_face_count(arr: Arrangement, lay: PlanarLayout) -> int:
    """Faces of the embedding reconstructed from the drawn coordinates.

    Rebuilds the rotation system of the subdivided graph from the angular
    order of neighbours at every node and counts the face cycles, an
    independent geometric check of the combinatorial face count.
    """
    vertex_of = arr.vertex_of()
    adj: dict[Node, list[Node]] = {}
    for d, e in arr.arcs():
        chain = [("v", vertex_of[d]), *_subdivision_nodes(arr, d), ("v", vertex_of[e])]
        for a, b in zip(chain, chain[1:]):
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    pos = lay.coordinates
    rot: dict[Node, list[Node]] = {}
    for n, nbs in adj.items():
        rot[n] = sorted(
            nbs, key=lambda m: math.atan2(pos[m][1] - pos[n][1], pos[m][0] - pos[n][0])
        )
    darts = {(n, m) for n in adj for m in adj[n]}
    faces = 0
    seen = set()
    for dart in darts:
        if dart in seen:
            continue
        faces += 1
        cur = dart
        while cur not in seen:
            seen.add(cur)
            n, m = cur
            order = rot[m]
            cur = (m, order[(order.index(n) + 1) % len(order)])
    return faces


def default_outer_face(arr: Arrangement) -> int:
    """Face of maximum degree, ties broken by lowest face id."""
    walks = arr.faces()
    return max(range(len(walks)), key=lambda f: (len(walks[f]), -f))


def layout(arr: Arrangement, outer_face: int | None = None) -> PlanarLayout:
    """Barycentric embedding with ``outer_face`` (default: auto) at infinity."""
    report = arr.validate()
    if not report.ok:
        raise InvalidArrangement("arrangement fails validation: " + ", ".join(report.failed()))
    walks = arr.faces()
    outer = default_outer_face(arr) if outer_face is None else outer_face
    if not 0 <= outer < len(walks):
        raise InvalidArrangement(f"no face {outer}")

    vertex_of = arr.vertex_of()
    adj = _adjacency(arr, vertex_of, outer)

    boundary = _face_cycle(arr, vertex_of, walks[outer])
    m = len(boundary)
    pinned = {}
    for i, node in enumerate(boundary):
        # clockwise placement: interior faces then wind counterclockwise
        angle = math.pi / 2 - 2.0 * math.pi * i / m
        pinned[node] = (0.5 + 0.48 * math.cos(angle), 0.5 + 0.48 * math.sin(angle))

    pos = _solve_positions(adj, pinned)
    coords = {n: xy for n, xy in pos.items() if n[0] != "f"}

    segs = _segments(arr, vertex_of, coords)
    if not validate_planarity(segs):
        rng = random.Random(20240)
        coords = {
            n: (
                (x + rng.uniform(-_PERTURBATION, _PERTURBATION), y + rng.uniform(-_PERTURBATION, _PERTURBATION))
                if n not in pinned
                else (x, y)
            )
            for n, (x, y) in coords.items()
        }
        segs = _segments(arr, vertex_of, coords)
        if not validate_planarity(segs):
            raise LayoutDegenerate("straight-line drawing has improper intersections")
    return PlanarLayout(coordinates=coords, outer_face=outer)


# ============================================================
# SVG output
# ============================================================


@dataclass(frozen=True)
class RenderStyle:
    stroke_curve1: str = "#1f77b4"
    stroke_curve2: str = "#d62728"
    stroke_width: float = 2.0
    size: int = 480
    marker_radius: float = 3.0
    marker_fill: str = "#222222"


def _curve_polyline(arr: Arrangement, lay: PlanarLayout, curve: int) -> list[Node]:
    """Closed node sequence of one curve: vertices and subdivision points."""
    vertex_of = arr.vertex_of()
    start = min(d for d in range(arr.n_darts) if arr.color[d] == curve)
    nodes: list[Node] = []
    d = start
    while True:
        nodes.append(("v", vertex_of[d]))
        nodes.extend(_subdivision_nodes(arr, d))
        d = arr.sigma[arr.sigma[arr.alpha[d]]]
        if d == start:
            break
    return nodes


def to_svg(arr: Arrangement, lay: PlanarLayout, style: RenderStyle = RenderStyle()) -> str:
    """SVG 1.1 document: two closed paths (one per curve) and 2n markers.

    Byte output is deterministic for fixed inputs and tool version.
    """
    size = style.size

    def xy(node: Node) -> tuple[float, float]:
        x, y = lay.coordinates[node]
        return (x * size, (1.0 - y) * size)

    def path_d(nodes: list[Node]) -> str:
        pts = [xy(n) for n in nodes]
        head = f"M {pts[0][0]:.3f} {pts[0][1]:.3f}"
        tail = " ".join(f"L {x:.3f} {y:.3f}" for x, y in pts[1:])
        return f"{head} {tail} Z"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    for curve, stroke in ((1, style.stroke_curve1), (2, style.stroke_curve2)):
        d_attr = path_d(_curve_polyline(arr, lay, curve))
        lines.append(
            f'<path fill="none" stroke="{stroke}" stroke-width="{style.stroke_width:g}" '
            f'stroke-linejoin="round" d="{d_attr}"/>'
        )
    for vertex in sorted({v for v in arr.vertex_of().values()}):
        x, y = xy(("v", vertex))
        lines.append(
            f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{style.marker_radius:g}" fill="{style.marker_fill}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
