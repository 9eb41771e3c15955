"""Level-by-level enumeration of arrangement classes by the crossing operation.

A crossing pushes an arc of one curve across an arc of the other inside a
region both border, turning an arrangement with 2n intersection points
into one with 2n + 2: two new vertices with opposite crossing signs, four
new arcs (each crossed arc splits into three) and two new regions, one of
which is a bigon bounded by one arc of each curve.

A crossing site is an ordered (face, dart_a, dart_b) triple with dart_a
of curve 1 and dart_b of curve 2 on the same boundary walk; picking darts
rather than region pairs resolves how the split region's neighbours are
distributed between the two halves.  Enumerating every site of every class
at level 2n and deduplicating by configuration canonical key yields level
2n + 2; starting from the unique two-point arrangement this reproduces the
class counts 1, 1, 2, 4, 13 for 2, 4, 6, 8, 10 points.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .arrangement import Arrangement, GaussPairCode, decode, encode, format_gp1, parse_gp1
from .canonical import (
    CONFIGURATION_MODE,
    FLOW_MODE,
    SymmetryReport,
    canonical_key,
    symmetry,
)


class InvalidSite(ValueError):
    """Crossing site does not name a curve-1 and a curve-2 dart on the face."""


@dataclass(frozen=True)
class CrossingSite:
    face: int
    dart_a: int
    dart_b: int


def crossing_sites(arr: Arrangement) -> Iterator[CrossingSite]:
    """All sites in deterministic order: faces by id, darts in walk order."""
    for fid, walk in enumerate(arr.faces()):
        for da in walk:
            if arr.color[da] != 1:
                continue
            for db in walk:
                if arr.color[db] == 2:
                    yield CrossingSite(face=fid, dart_a=da, dart_b=db)


def crossing(arr: Arrangement, site: CrossingSite) -> Arrangement:
    """Map surgery realising one crossing at ``site``.

    The two crossed arcs A (through dart_a, ends a0/a1) and B (through
    dart_b, ends b0/b1) each split into three: A1 = a0..p, A2 = p..q,
    A3 = q..a1 and B1 = b0..q, B2 = q..p, B3 = p..b1.  Eight darts are
    appended: D..D+3 at the new vertex p in rotation order
    (toward-q-on-A, toward-q-on-B, toward-a0, toward-b1) and D+4..D+7 at
    q in order (toward-a1, toward-p-on-B, toward-p-on-A, toward-b0).
    p and q carry opposite crossing signs.  Untouched darts keep their
    rotation and colours; only a0, a1, b0, b1 change arc mates.
    """
    faces = arr.faces()
    if not 0 <= site.face < len(faces):
        raise InvalidSite(f"no face {site.face}")
    walk = faces[site.face]
    if site.dart_a not in walk or site.dart_b not in walk:
        raise InvalidSite("darts are not on the boundary walk of the face")
    if arr.color[site.dart_a] == arr.color[site.dart_b]:
        raise InvalidSite("darts must belong to different curves")
    if arr.color[site.dart_a] != 1:
        raise InvalidSite("dart_a must belong to curve 1")

    nd = arr.n_darts
    d_new = nd
    sigma = list(arr.sigma) + [0] * 8
    alpha = list(arr.alpha) + [0] * 8
    color = list(arr.color) + [0] * 8

    for base in (d_new, d_new + 4):
        for s in range(4):
            sigma[base + s] = base + (s + 1) % 4

    a0 = site.dart_a
    a1 = arr.alpha[a0]
    b0 = site.dart_b
    b1 = arr.alpha[b0]
    ca = arr.color[a0]
    cb = arr.color[b0]
    for i in range(8):
        color[d_new + i] = ca if i % 2 == 0 else cb

    pairs = (
        (a0, d_new + 2),        # A1
        (d_new, d_new + 6),     # A2
        (d_new + 4, a1),        # A3
        (b0, d_new + 7),        # B1
        (d_new + 5, d_new + 1), # B2
        (d_new + 3, b1),        # B3
    )
    for x, y in pairs:
        alpha[x] = y
        alpha[y] = x

    out = Arrangement(tuple(sigma), tuple(alpha), tuple(color))
    if len(out.faces()) != len(faces) + 2:
        raise InvalidSite("surgery did not add exactly two regions")
    return out


# ============================================================
# Levels
# ============================================================


@dataclass(frozen=True)
class LevelClass:
    """One configuration class: keys, representative, symmetry, provenance."""

    config_key: bytes
    flow_key: bytes
    code: GaussPairCode
    symmetry: SymmetryReport
    parent_key: bytes | None
    site: tuple[int, int, int] | None

    @property
    def symmetric(self) -> bool:
        return self.symmetry.has_swap_automorphism

    @property
    def gp1(self) -> str:
        return format_gp1(self.code)


@dataclass(frozen=True)
class Level:
    n_points: int
    classes: tuple[LevelClass, ...]

    def config_keys(self) -> frozenset[bytes]:
        return frozenset(c.config_key for c in self.classes)

    @property
    def n_symmetric(self) -> int:
        return sum(1 for c in self.classes if c.symmetric)

    @property
    def n_asymmetric(self) -> int:
        return len(self.classes) - self.n_symmetric

    @property
    def n_flows(self) -> int:
        return self.n_symmetric + 2 * self.n_asymmetric


SEED_GP1 = "GP1 2 1 2 + -"


def _build_class(
    key: bytes,
    gp1: str,
    parent_key: bytes | None,
    site: tuple[int, int, int] | None,
) -> LevelClass:
    arr = decode(parse_gp1(gp1))
    return LevelClass(
        config_key=key,
        flow_key=canonical_key(arr, FLOW_MODE).data,
        code=parse_gp1(gp1),
        symmetry=symmetry(arr),
        parent_key=parent_key,
        site=site,
    )


def seed_level() -> Level:
    """The unique two-point arrangement (the lens)."""
    arr = decode(parse_gp1(SEED_GP1))
    key = canonical_key(arr, CONFIGURATION_MODE).data
    return Level(n_points=2, classes=(_build_class(key, SEED_GP1, None, None),))


def _expand_parent(parent: LevelClass) -> list[tuple[bytes, str, bytes, tuple[int, int, int]]]:
    """All (config key, GP1, parent key, site) candidates from one class."""
    arr = decode(parent.code)
    out = []
    for site in crossing_sites(arr):
        child = crossing(arr, site)
        gp1 = format_gp1(encode(child))
        key = canonical_key(child, CONFIGURATION_MODE).data
        out.append((key, gp1, parent.config_key, (site.face, site.dart_a, site.dart_b)))
    return out


def enumerate_level(prev: Level, jobs: int = 1) -> Level:
    """All classes at ``prev.n_points + 2`` reachable by one crossing.

    Deduplicated by configuration key.  The stored representative is the
    lexicographically smallest GP1 encoding among the candidates of the
    class; ties on the provenance witness break by (parent key, site).
    The result does not depend on ``jobs``.
    """
    parents = sorted(prev.classes, key=lambda c: c.config_key)
    if jobs > 1 and len(parents) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_expand_parent, parents))
    else:
        chunks = [_expand_parent(p) for p in parents]

    best: dict[bytes, tuple[str, bytes, tuple[int, int, int]]] = {}
    for chunk in chunks:
        for key, gp1, pkey, site in chunk:
            cand = (gp1, pkey, site)
            if key not in best or cand < best[key]:
                best[key] = cand
    classes = tuple(
        _build_class(key, gp1, pkey, site)
        for key, (gp1, pkey, site) in sorted(best.items())
    )
    return Level(n_points=prev.n_points + 2, classes=classes)


def enumerate_up_to(max_points: int, jobs: int = 1) -> list[Level]:
    """Levels for 2, 4, ..., max_points; sizes (1, 1, 2, 4, 13) up to 10."""
    if max_points < 2 or max_points % 2 != 0:
        raise ValueError("max_points must be an even integer >= 2")
    levels = [seed_level()]
    while levels[-1].n_points < max_points:
        levels.append(enumerate_level(levels[-1], jobs=jobs))
    return levels
