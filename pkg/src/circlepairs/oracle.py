"""Brute-force enumeration over Gauss-pair codes, independent of the generator.

Iterates every curve-2 visiting order times every sign vector, keeps the
codes that decode to spherical arrangements, and returns the set of
configuration canonical keys.  Deduplication relies on canonical keys
only; no defining-vector pre-filter is involved, so the oracle validates
both the generator's counts and its completeness.

Cost: 2n = 8 needs 7! * 2^8 ~ 1.3M decodes (seconds); 2n = 10 needs
9! * 2^10 ~ 3.7e8 and is gated behind ``allow_long``.  The gated run
prunes sign vectors with non-zero sum (such codes never decode to genus
0) and parallelises over prefixes of the visiting order.  Below the gate
no sign filter is applied: acceptance implies sign-sum zero, which is
asserted, never assumed.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .arrangement import Arrangement, encode_from
from .canonical import CONFIGURATION_MODE, canonical_key
from .generate import Level, enumerate_up_to

LONG_RUN_POINTS = 10


@dataclass(frozen=True)
class OracleResult:
    n_points: int
    class_keys: frozenset[bytes]
    raw_accepted: int
    elapsed: float


def _orbit_codes(arr: Arrangement) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every (order, signs) encoding of the class of ``arr``.

    Spans all curve-1 seeds, both curve-2 directions, the curve swap and
    the mirror image.  Used as an exact membership fast path: codes seen
    here need no canonicalisation of their own.  (Completeness of the
    orbit is an optimisation, not a correctness requirement: any missed
    code still canonicalises to the same key.)
    """
    out = set()
    for swap in (False, True):
        want = 2 if swap else 1
        starts = [d for d in range(arr.n_darts) if arr.color[d] == want]
        for reflect in (False, True):
            for start in starts:
                for c2_forward in (True, False):
                    code = encode_from(arr, start, reflect=reflect, swap=swap, c2_forward=c2_forward)
                    out.add((code.order, code.signs))
    return out


def _decoded(order0: tuple[int, ...], bits: int, n2: int) -> Arrangement:
    """Arrangement of a raw (0-based order, sign bitmask) pair; bit set = minus."""
    from .arrangement import GaussPairCode, decode

    signs = tuple(-1 if (bits >> v) & 1 else 1 for v in range(n2))
    order = tuple(p + 1 for p in order0)
    return decode(GaussPairCode(order=order, signs=signs))


def _scan(n2: int, prefixes: list[tuple[int, ...]], sign_masks: list[int] | None) -> tuple[set[bytes], int]:
    """Scan all orders extending the given prefixes (each starting with 0).

    Returns (canonical keys found, number of accepted codes).  The inner
    loop is deliberately low level: it rewrites the curve-2 entries of a
    single arc-involution table and counts face cycles with an integer
    bitmask; the curve-1 entries never change.
    """
    nd = 4 * n2
    alpha = [-1] * nd
    for a in range(n2):
        b = (a + 1) % n2
        alpha[4 * a] = 4 * b + 2
        alpha[4 * b + 2] = 4 * a

    if sign_masks is None:
        sign_masks = list(range(1 << n2))
    full = (1 << nd) - 1
    target = n2 + 2
    half = n2 // 2

    keys: set[bytes] = set()
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    accepted = 0

    for prefix in prefixes:
        rest = [x for x in range(n2) if x not in prefix]
        for tail in permutations(rest):
            order0 = prefix + tail
            for bits in sign_masks:
                for j in range(n2):
                    a = order0[j]
                    b = order0[(j + 1) % n2] if j + 1 < n2 else order0[0]
                    da = 4 * a + (3 if (bits >> a) & 1 else 1)
                    db = 4 * b + (1 if (bits >> b) & 1 else 3)
                    alpha[da] = db
                    alpha[db] = da
                mask = full
                nf = 0
                while mask:
                    d = (mask & -mask).bit_length() - 1
                    nf += 1
                    while mask & (1 << d):
                        mask ^= 1 << d
                        x = alpha[d]
                        d = (x & ~3) | ((x + 1) & 3)
                if nf != target:
                    continue
                accepted += 1
                assert bits.bit_count() == half, "accepted code with non-zero sign sum"
                signs = tuple(-1 if (bits >> v) & 1 else 1 for v in range(n2))
                raw = (tuple(p + 1 for p in order0), signs)
                if raw in seen:
                    continue
                arr = _decoded(order0, bits, n2)
                keys.add(canonical_key(arr, CONFIGURATION_MODE).data)
                seen |= _orbit_codes(arr)
    return keys, accepted


def _scan_task(args):
    return _scan(*args)


def brute_force(
    points: int,
    limit_mode: str = "symmetric-reduced",
    jobs: int = 1,
    allow_long: bool = False,
) -> OracleResult:
    """Exhaustive search at one level; see the module docstring for cost.

    ``symmetric-reduced`` fixes the first element of the visiting order
    (rotating the order is a no-op on the decoded map); ``full`` iterates
    every permutation and finds the same key set.
    """
    if points < 2 or points % 2 != 0 or points > 10:
        raise ValueError("points must be an even integer in [2, 10]")
    if limit_mode not in ("full", "symmetric-reduced"):
        raise ValueError(f"unknown limit_mode {limit_mode!r}")
    if points >= LONG_RUN_POINTS and not allow_long:
        raise ValueError(f"points={points} is a long run; pass allow_long=True")

    n2 = points
    t0 = time.perf_counter()

    if limit_mode == "symmetric-reduced":
        prefixes = [(0,)]
    else:
        prefixes = [(v,) for v in range(n2)]

    sign_masks = None
    if points >= LONG_RUN_POINTS:
        sign_masks = [m for m in range(1 << n2) if m.bit_count() == n2 // 2]

    if jobs > 1:
        # split on the next position of the order for load balance
        split: list[tuple[int, ...]] = []
        for p in prefixes:
            rest = [x for x in range(n2) if x not in p]
            for a in rest:
                for b in rest:
                    if b != a:
                        split.append(p + (a, b))
        tasks = [(n2, [pref], sign_masks) for pref in split]
        keys: set[bytes] = set()
        accepted = 0
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part_keys, part_acc in pool.map(_scan_task, tasks, chunksize=1):
                keys |= part_keys
                accepted += part_acc
    else:
        keys, accepted = _scan(n2, prefixes, sign_masks)

    return OracleResult(
        n_points=points,
        class_keys=frozenset(keys),
        raw_accepted=accepted,
        elapsed=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class CountRow:
    n_points: int
    n_configurations: int
    n_symmetric: int
    n_asymmetric: int
    n_flows: int


def count_table(max_points: int, levels: list[Level] | None = None) -> list[CountRow]:
    """Configuration and flow counts per level, flows = symmetric + 2 * asymmetric.

    Classes come from the generator (the fast path); ``brute_force`` stays
    the independent cross-check of exactly those class sets.
    """
    if levels is None:
        levels = enumerate_up_to(max_points)
    rows = []
    for level in levels:
        if level.n_points > max_points:
            break
        rows.append(
            CountRow(
                n_points=level.n_points,
                n_configurations=len(level.classes),
                n_symmetric=level.n_symmetric,
                n_asymmetric=level.n_asymmetric,
                n_flows=level.n_flows,
            )
        )
    return rows
