"""Region apparatus: checkerboard colouring, adjacency multigraph, signed matrix.

The regions of an arrangement admit a proper 2-colouring in which every
arc separates a black region from a white one, so the region-adjacency
graph (one vertex per region, one edge per arc) is bipartite.  Every
region has even degree with equally many arcs of each curve.

When no two regions share more than one arc the graph is recorded as a
signed matrix: rows are black regions, columns white regions, an entry
+1/-1 for a curve-1/curve-2 arc and 0 for non-adjacency; all row and
column sums are then zero.  Two regions sharing several arcs cannot be
expressed in that matrix, so the graph is kept as a multigraph and the
matrix is withheld behind a flag.

The sorted degree sequences of the two colour classes (the defining
vectors) are a fast necessary invariant of equivalence: classes with
different vectors are never equivalent.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .arrangement import Arrangement, InvalidArrangement


def two_coloring(arr: Arrangement) -> list[int]:
    """Proper 2-colouring of the regions, 0 = black, 1 = white, by face id.

    Face ids index ``arr.faces()``.  Exactly two proper colourings exist;
    the one painting the face that contains dart 0 black is returned.
    """
    faces = arr.faces()
    face_of = {}
    for fid, walk in enumerate(faces):
        for d in walk:
            face_of[d] = fid
    colors = [-1] * len(faces)
    start = face_of[0]
    colors[start] = 0
    stack = [start]
    while stack:
        f = stack.pop()
        for d in faces[f]:
            g = face_of[arr.alpha[d]]
            if colors[g] == -1:
                colors[g] = 1 - colors[f]
                stack.append(g)
            elif colors[g] == colors[f]:
                raise InvalidArrangement("region adjacency is not bipartite")
    if any(c == -1 for c in colors):
        raise InvalidArrangement("region adjacency graph is disconnected")
    return colors


@dataclass(frozen=True)
class RegionGraph:
    """Bipartite edge-coloured region-adjacency multigraph of an arrangement.

    ``edges`` holds one (black_face, white_face, curve) triple per arc.
    ``matrix`` is present only when ``simple`` (rows = ``black_faces``,
    columns = ``white_faces`` order, entries +1/-1/0).
    """

    n_points: int
    region_colors: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    degrees: tuple[int, ...]
    black_faces: tuple[int, ...]
    white_faces: tuple[int, ...]
    simple: bool
    matrix: tuple[tuple[int, ...], ...] | None

    @property
    def n_regions(self) -> int:
        return len(self.region_colors)


def region_graph(arr: Arrangement) -> RegionGraph:
    """Region graph with one edge per arc plus the signed matrix when simple."""
    report = arr.validate()
    if not report.ok:
        raise InvalidArrangement("arrangement fails validation: " + ", ".join(report.failed()))
    faces = arr.faces()
    colors = two_coloring(arr)
    face_of = {}
    for fid, walk in enumerate(faces):
        for d in walk:
            face_of[d] = fid

    edges = []
    for d, e in arr.arcs():
        f, g = face_of[d], face_of[e]
        if colors[f] == colors[g]:
            raise InvalidArrangement("arc joins regions of equal checkerboard colour")
        black, white = (f, g) if colors[f] == 0 else (g, f)
        edges.append((black, white, arr.color[d]))

    degrees = [0] * len(faces)
    for b, w, _ in edges:
        degrees[b] += 1
        degrees[w] += 1

    pair_counts = Counter((b, w) for b, w, _ in edges)
    simple = all(c == 1 for c in pair_counts.values())

    # rows/columns sorted by degree descending, ties by first-visit face id
    black = tuple(sorted((f for f in range(len(faces)) if colors[f] == 0), key=lambda f: (-degrees[f], f)))
    white = tuple(sorted((f for f in range(len(faces)) if colors[f] == 1), key=lambda f: (-degrees[f], f)))

    matrix = None
    if simple:
        row_of = {f: i for i, f in enumerate(black)}
        col_of = {f: j for j, f in enumerate(white)}
        m = [[0] * len(white) for _ in black]
        for b, w, curve in edges:
            m[row_of[b]][col_of[w]] = 1 if curve == 1 else -1
        matrix = tuple(tuple(row) for row in m)

    return RegionGraph(
        n_points=arr.n_points,
        region_colors=tuple(colors),
        edges=tuple(sorted(edges)),
        degrees=tuple(degrees),
        black_faces=black,
        white_faces=white,
        simple=simple,
        matrix=matrix,
    )


@dataclass(frozen=True)
class DefiningVectors:
    """Degree multisets of the two region colour classes, sorted descending.

    Which class is "black" depends on the labelling, so cross-arrangement
    comparison and grouping must use :meth:`key`, which ignores the side.
    """

    black: tuple[int, ...]
    white: tuple[int, ...]

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Orientation-free form: the two vectors as an ordered pair."""
        return (min(self.black, self.white), max(self.black, self.white))

    def __str__(self) -> str:
        fmt = lambda v: "(" + ",".join(str(x) for x in v) + ")"
        return f"{fmt(self.black)}/{fmt(self.white)}"


def defining_vectors(graph: RegionGraph) -> DefiningVectors:
    black = tuple(sorted((graph.degrees[f] for f in graph.black_faces), reverse=True))
    white = tuple(sorted((graph.degrees[f] for f in graph.white_faces), reverse=True))
    if sum(black) != sum(white) or sum(black) != 2 * graph.n_points:
        raise InvalidArrangement("degree sums of the two colour classes disagree")
    return DefiningVectors(black=black, white=white)


# ----------------------------------------------------------------
# Matrix-level symmetry check (independent of the canonical module)
# ----------------------------------------------------------------


def _matrix_canon(matrix: tuple[tuple[int, ...], ...]) -> tuple:
    """Canonical form under row and column permutations.

    For each row order, sorting the columns minimises over all column
    permutations, so the minimum over row permutations is canonical.
    Row counts here are at most 6, so brute force over row orders is fine.
    """
    from itertools import permutations

    rows = [tuple(r) for r in matrix]
    best = None
    for perm in permutations(range(len(rows))):
        cols = sorted(zip(*(rows[i] for i in perm)))
        cand = tuple(cols)
        if best is None or cand < best:
            best = cand
    return best  # type: ignore[return-value]


def matrix_swap_symmetric(matrix: tuple[tuple[int, ...], ...]) -> bool:
    """True iff the matrix equals its negation up to row/column permutations
    and transposition, i.e. the region graph admits a curve-exchanging
    self-map (possibly recolouring the regions)."""
    neg = tuple(tuple(-x for x in row) for row in matrix)
    if _matrix_canon(matrix) == _matrix_canon(neg):
        return True
    negt = tuple(zip(*neg))
    if len(negt) == len(matrix) and len(negt[0]) == len(matrix[0]):
        return _matrix_canon(matrix) == _matrix_canon(negt)
    return False
