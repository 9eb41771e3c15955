"""Combinatorial-map model of two circles embedded in the oriented 2-sphere.

An arrangement of two closed curves without self-intersections, meeting
transversally in ``2n`` points, is stored as an edge-coloured combinatorial
map on darts (arc-end incidences):

- every intersection point is a vertex of degree 4, carrying 4 darts;
- ``sigma`` is the rotation: the next dart counterclockwise around the
  vertex of the dart;
- ``alpha`` is the arc involution: the dart at the other end of the same
  arc (fixed-point free, colour preserving);
- ``color`` maps each dart to 1 or 2, the curve its arc belongs to.

With ``2n`` vertices there are ``8n`` darts and ``4n`` arcs.  Faces are
the cycles of ``phi = sigma o alpha`` (counterclockwise boundary walks),
so a spherical arrangement satisfies ``V - E + F = 2``, i.e.
``F = 2n + 2`` regions.

Text serialization is the Gauss-pair code: label the points 1..2n along
curve 1, record the order in which curve 2 visits them plus a crossing
sign per point.  Sign convention: ``+1`` at a point where the ordered
tangent frame (curve-1 direction, curve-2 direction) is positively
oriented, equivalently where the outgoing curve-2 dart is ``sigma`` of
the outgoing curve-1 dart.  Reflecting the sphere flips every sign.

The GP1 line format (bit-exact, one arrangement per line)::

    GP1 <2n> <p1 p2 ... p2n> <s1 s2 ... s2n>

with decimal labels and signs written ``+`` / ``-``, e.g. ``GP1 2 1 2 + -``.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from dataclasses import dataclass


class MalformedCode(ValueError):
    """Gauss-pair code is structurally invalid (bad permutation, lengths, labels)."""


class NotSpherical(ValueError):
    """Decoded map is connected but has genus > 0."""


class NotTransversal(ValueError):
    """Internal consistency failure while building the map (should not happen)."""


class Disconnected(ValueError):
    """Map is not connected."""


class InvalidArrangement(ValueError):
    """Operation received an arrangement that fails validation."""


# ============================================================
# Gauss-pair codes and the GP1 text format
# ============================================================


@dataclass(frozen=True)
class GaussPairCode:
    """Curve-2 visiting order over points labelled 1..2n along curve 1, plus signs.

    ``order`` is a permutation of 1..2n, ``signs`` holds +1/-1 per point,
    indexed by point label (``signs[i]`` belongs to point ``i + 1``).
    """

    order: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n2 = len(self.order)
        if n2 < 2 or n2 % 2 != 0:
            raise MalformedCode(f"number of points must be even and >= 2, got {n2}")
        if sorted(self.order) != list(range(1, n2 + 1)):
            raise MalformedCode(f"order is not a permutation of 1..{n2}: {self.order}")
        if len(self.signs) != n2:
            raise MalformedCode(f"expected {n2} signs, got {len(self.signs)}")
        if any(s not in (-1, 1) for s in self.signs):
            raise MalformedCode(f"signs must be +1/-1: {self.signs}")

    @property
    def n_points(self) -> int:
        return len(self.order)


def format_gp1(code: GaussPairCode) -> str:
    """Render a code as its canonical GP1 text line."""
    parts = ["GP1", str(code.n_points)]
    parts += [str(p) for p in code.order]
    parts += ["+" if s > 0 else "-" for s in code.signs]
    return " ".join(parts)


def parse_gp1(line: str) -> GaussPairCode:
    """Parse one GP1 line; raises MalformedCode with a reason on any defect."""
    tokens = line.split()
    if not tokens or tokens[0] != "GP1":
        raise MalformedCode("line does not start with 'GP1'")
    if len(tokens) < 2:
        raise MalformedCode("missing point count")
    try:
        n2 = int(tokens[1])
    except ValueError:
        raise MalformedCode(f"bad point count {tokens[1]!r}") from None
    if len(tokens) != 2 + 2 * n2:
        raise MalformedCode(f"expected {2 + 2 * n2} tokens for {n2} points, got {len(tokens)}")
    try:
        order = tuple(int(t) for t in tokens[2 : 2 + n2])
    except ValueError:
        raise MalformedCode("non-integer point label") from None
    signs = []
    for t in tokens[2 + n2 :]:
        if t == "+":
            signs.append(1)
        elif t == "-":
            signs.append(-1)
        else:
            raise MalformedCode(f"bad sign token {t!r}")
    return GaussPairCode(order=order, signs=tuple(signs))


def iter_gp1_lines(text: str):
    """Yield (line_number, GaussPairCode) for every non-comment line of a GP1 document.

    MalformedCode raised here carries the 1-based line number in its message.
    """
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield lineno, parse_gp1(line)
        except MalformedCode as exc:
            raise MalformedCode(f"line {lineno}: {exc}") from None


# ============================================================
# Arrangements
# ============================================================


def _sigma_cycles(sigma: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = [False] * len(sigma)
    cycles = []
    for d0 in range(len(sigma)):
        if seen[d0]:
            continue
        cyc = []
        d = d0
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = sigma[d]
        cycles.append(tuple(cyc))
    return cycles


@dataclass(frozen=True)
class Arrangement:
    """Immutable dart map (sigma, alpha, color) of a two-circle arrangement.

    Dart ids are arbitrary integers 0..8n-1; nothing may assume the
    decoder's slot layout, so every operation works on relabelled copies.
    """

    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    color: tuple[int, ...]

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    @property
    def n_points(self) -> int:
        """Number of intersection points 2n (vertices)."""
        return len(self.sigma) // 4

    @property
    def n_arcs(self) -> int:
        return len(self.sigma) // 2

    def sigma_inverse(self) -> tuple[int, ...]:
        inv = [0] * self.n_darts
        for d, e in enumerate(self.sigma):
            inv[e] = d
        return tuple(inv)

    def vertices(self) -> list[tuple[int, ...]]:
        """Vertices as sigma-cycles (each a tuple of darts, rotation order)."""
        return _sigma_cycles(self.sigma)

    def vertex_of(self) -> dict[int, int]:
        """Map dart -> vertex index (vertices numbered by their smallest dart)."""
        out = {}
        for cyc in self.vertices():
            v = min(cyc)
            for d in cyc:
                out[d] = v
        return out

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs as dart pairs (d, alpha(d)) with d < alpha(d)."""
        return [(d, self.alpha[d]) for d in range(self.n_darts) if d < self.alpha[d]]

    def faces(self) -> list[tuple[int, ...]]:
        """Boundary walks (cycles of phi = sigma o alpha), in dart-scan order.

        Works on non-spherical maps too; each dart appears in exactly one walk.
        """
        sigma, alpha = self.sigma, self.alpha
        seen = [False] * self.n_darts
        walks = []
        for d0 in range(self.n_darts):
            if seen[d0]:
                continue
            walk = []
            d = d0
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = sigma[alpha[d]]
            walks.append(tuple(walk))
        return walks

    def is_connected(self) -> bool:
        if self.n_darts == 0:
            return False
        seen = [False] * self.n_darts
        stack = [0]
        seen[0] = True
        count = 0
        while stack:
            d = stack.pop()
            count += 1
            for e in (self.sigma[d], self.alpha[d]):
                if not seen[e]:
                    seen[e] = True
                    stack.append(e)
        return count == self.n_darts

    def genus(self) -> int:
        """(2 - V + E - F) / 2 of the connected map; raises Disconnected."""
        if not self.is_connected():
            raise Disconnected("genus of a disconnected map is undefined here")
        v = len(self.vertices())
        e = self.n_darts // 2
        f = len(self.faces())
        chi = v - e + f
        if (2 - chi) % 2 != 0:
            raise NotTransversal(f"odd Euler defect (chi={chi})")
        return (2 - chi) // 2

    def straight_ahead_cycles(self, curve: int) -> list[tuple[int, ...]]:
        """Orbits of d -> sigma(sigma(alpha(d))) restricted to one colour class.

        For a valid arrangement each curve yields exactly two directed
        cycles of length 2n (the two traversal directions).
        """
        sigma, alpha = self.sigma, self.alpha
        seen = set()
        cycles = []
        for d0 in range(self.n_darts):
            if self.color[d0] != curve or d0 in seen:
                continue
            cyc = []
            d = d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = sigma[sigma[alpha[d]]]
            cycles.append(tuple(cyc))
        return cycles

    def vertex_signs(self) -> dict[int, int]:
        """Crossing sign per vertex for one fixed choice of curve directions.

        Curve directions start from the lowest dart of each colour.  Any
        other choice flips all signs of one curve at once, so the sign
        *sum* (and the opposite-sign relation between two vertices) does
        not depend on it.
        """
        sigma = self.sigma
        vertex_of = self.vertex_of()
        out1: dict[int, int] = {}
        d0 = min(d for d in range(self.n_darts) if self.color[d] == 1)
        d = d0
        while True:
            out1[vertex_of[d]] = d
            d = sigma[sigma[self.alpha[d]]]
            if d == d0:
                break
        out2: dict[int, int] = {}
        e0 = min(d for d in range(self.n_darts) if self.color[d] == 2)
        e = e0
        while True:
            out2[vertex_of[e]] = e
            e = sigma[sigma[self.alpha[e]]]
            if e == e0:
                break
        signs = {}
        for v, d1 in out1.items():
            signs[v] = 1 if out2.get(v) == sigma[d1] else -1
        return signs

    def relabel(self, perm: tuple[int, ...] | list[int]) -> "Arrangement":
        """Conjugate the map by a dart permutation (perm[old] = new)."""
        nd = self.n_darts
        sigma = [0] * nd
        alpha = [0] * nd
        color = [0] * nd
        for d in range(nd):
            sigma[perm[d]] = perm[self.sigma[d]]
            alpha[perm[d]] = perm[self.alpha[d]]
            color[perm[d]] = self.color[d]
        return Arrangement(tuple(sigma), tuple(alpha), tuple(color))

    def reflected(self) -> "Arrangement":
        """Mirror image: all rotations reversed."""
        return Arrangement(self.sigma_inverse(), self.alpha, self.color)

    def swapped(self) -> "Arrangement":
        """Same map with the two curves recoloured 1 <-> 2."""
        return Arrangement(self.sigma, self.alpha, tuple(3 - c for c in self.color))

    def validate(self) -> "ValidationReport":
        return validate(self)


# ============================================================
# Validation (diagnostics, not exceptions)
# ============================================================


@dataclass(frozen=True)
class ValidationReport:
    """Per-invariant diagnostics; ``ok`` iff every check passed."""

    checks: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failed(self) -> list[str]:
        return [name for name, passed, _ in self.checks if not passed]

    def __str__(self) -> str:
        return "\n".join(
            f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}" for name, passed, detail in self.checks
        )


def validate(arr: Arrangement) -> ValidationReport:
    """Check every Arrangement invariant; never raises on bad structure.

    The sign-sum check applies to spherical maps only (on higher genus the
    two curves need not be null-homologous), so it is reported as passing
    whenever the genus-0 check already failed.
    """
    checks: list[tuple[str, bool, str]] = []
    nd = arr.n_darts
    n2 = arr.n_points

    ok_perm = sorted(arr.sigma) == list(range(nd)) and sorted(arr.alpha) == list(range(nd))
    checks.append(("permutations", ok_perm, "sigma and alpha are permutations of the darts"))
    if not ok_perm:
        return ValidationReport(tuple(checks))

    vcycles = _sigma_cycles(arr.sigma)
    ok_deg = all(len(c) == 4 for c in vcycles) and nd == 4 * n2
    checks.append(("vertex-degree-4", ok_deg, f"{len(vcycles)} sigma-cycles, lengths {sorted(set(len(c) for c in vcycles))}"))

    ok_alt = all(arr.color[d] != arr.color[arr.sigma[d]] for d in range(nd)) and set(arr.color) <= {1, 2}
    checks.append(("colour-alternation", ok_alt, "colours alternate 1,2,1,2 around every vertex"))

    ok_inv = all(arr.alpha[arr.alpha[d]] == d and arr.alpha[d] != d for d in range(nd))
    ok_col = all(arr.color[arr.alpha[d]] == arr.color[d] for d in range(nd))
    checks.append(("arc-involution", ok_inv and ok_col, "alpha is a colour-preserving fixed-point-free involution"))

    if not (ok_deg and ok_alt and ok_inv and ok_col):
        return ValidationReport(tuple(checks))

    for curve in (1, 2):
        cyc = arr.straight_ahead_cycles(curve)
        ok_sa = len(cyc) == 2 and all(len(c) == n2 for c in cyc)
        checks.append(
            (f"curve-{curve}-single-circle", ok_sa, f"straight-ahead cycle lengths {sorted(len(c) for c in cyc)}")
        )

    connected = arr.is_connected()
    checks.append(("connected", connected, "the map is connected"))

    spherical = False
    if connected:
        g = arr.genus()
        spherical = g == 0
        checks.append(("genus-0", spherical, f"genus {g}, faces {len(arr.faces())} (want {n2 + 2})"))
    else:
        checks.append(("genus-0", False, "not evaluated: disconnected"))

    if spherical:
        total = sum(arr.vertex_signs().values())
        checks.append(("sign-sum-zero", total == 0, f"sum of crossing signs = {total}"))
    else:
        checks.append(("sign-sum-zero", True, "not applicable: map is not spherical"))

    return ValidationReport(tuple(checks))


# ============================================================
# decode / encode
# ============================================================

# Rotation slots at a vertex, counterclockwise, by crossing sign:
#   sign +1: (out1, out2, in1, in2)      sign -1: (out1, in2, in1, out2)
# where out/in are the outgoing/incoming darts of each curve at the vertex.
_OUT2_SLOT = {1: 1, -1: 3}
_IN2_SLOT = {1: 3, -1: 1}


def decode(code: GaussPairCode, require_sphere: bool = True) -> Arrangement:
    """Build the arrangement of a Gauss-pair code.

    Vertices are 0..2n-1 in curve-1 order; dart ``4v + s`` sits at vertex
    ``v`` in rotation slot ``s``.  Raises NotSpherical when the decoded map
    has genus > 0, unless ``require_sphere`` is False (useful to inspect
    the failing map's faces and diagnostics).
    """
    n2 = code.n_points
    nd = 4 * n2
    alpha = [-1] * nd
    for a in range(n2):
        b = (a + 1) % n2
        alpha[4 * a] = 4 * b + 2
        alpha[4 * b + 2] = 4 * a
    for j in range(n2):
        a = code.order[j] - 1
        b = code.order[(j + 1) % n2] - 1
        da = 4 * a + _OUT2_SLOT[code.signs[a]]
        db = 4 * b + _IN2_SLOT[code.signs[b]]
        alpha[da] = db
        alpha[db] = da
    if any(x < 0 for x in alpha):
        raise NotTransversal("incomplete arc involution")
    sigma = tuple((d & ~3) | ((d + 1) & 3) for d in range(nd))
    color = tuple(1 if d % 2 == 0 else 2 for d in range(nd))
    arr = Arrangement(sigma, tuple(alpha), color)
    if not arr.is_connected():
        raise NotTransversal("decoded map is disconnected")
    if require_sphere and arr.genus() != 0:
        raise NotSpherical(f"decoded map has genus {arr.genus()}")
    return arr


def encode_from(
    arr: Arrangement,
    start: int,
    reflect: bool = False,
    swap: bool = False,
    c2_forward: bool = True,
) -> GaussPairCode:
    """Gauss-pair code of ``arr`` read from an explicit seed.

    ``start`` must be a dart of effective colour 1 (after ``swap``); it
    fixes curve 1's base point and direction.  ``reflect`` reads the
    mirror image (rotations reversed), ``c2_forward`` picks which way
    curve 2 is traversed.  Used by :func:`encode` and by orbit-code
    generation in the oracle.
    """
    sigma = arr.sigma_inverse() if reflect else arr.sigma
    alpha = arr.alpha

    def eff_color(d: int) -> int:
        return 3 - arr.color[d] if swap else arr.color[d]

    if eff_color(start) != 1:
        raise InvalidArrangement("start dart must have effective colour 1")

    vertex_of = arr.vertex_of()
    n2 = arr.n_points

    label: dict[int, int] = {}
    out1: list[int] = []
    d = start
    for _ in range(n2):
        v = vertex_of[d]
        if v in label:
            raise InvalidArrangement("curve 1 revisits a vertex early")
        label[v] = len(out1) + 1
        out1.append(d)
        d = sigma[sigma[alpha[d]]]
    if d != start or len(label) != n2:
        raise InvalidArrangement("curve 1 does not close up through all points")

    e = sigma[start] if c2_forward else sigma[sigma[sigma[start]]]
    order: list[int] = []
    out2: dict[int, int] = {}
    for _ in range(n2):
        v = vertex_of[e]
        order.append(label[v])
        out2[v] = e
        e = sigma[sigma[alpha[e]]]
    if len(set(order)) != n2:
        raise InvalidArrangement("curve 2 does not pass through all points once")

    signs = [0] * n2
    for v, lab in label.items():
        signs[lab - 1] = 1 if out2[v] == sigma[out1[lab - 1]] else -1
    return GaussPairCode(order=tuple(order), signs=tuple(signs))


def encode(arr: Arrangement) -> GaussPairCode:
    """Deterministic normal-form code: start at the lowest colour-1 dart.

    Curve 2 starts at point 1 in the direction that makes ``signs[0] = +1``,
    so ``decode(encode(a))`` is dart-relabel isomorphic to ``a`` and
    ``encode(decode(c))`` is the normal form of ``c``.
    """
    start = min(d for d in range(arr.n_darts) if arr.color[d] == 1)
    return encode_from(arr, start)
