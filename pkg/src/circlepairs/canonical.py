"""Canonical labelling, equivalence, and symmetry of arrangements.

Equivalence of arrangements under sphere self-homeomorphism is decided by
a complete invariant: a minimal breadth-first code of the dart map taken
over every seed.  A seed is a (start dart, orientation, curve relabelling)
triple; the BFS visits the rotation neighbour before the arc mate and
emits ``(rotation-step, mate-step, colour)`` move codes.  Two valid
arrangements get equal keys under a mode iff they are equivalent under
that mode.

Modes: the configuration equivalence of the enumeration allows both curve
swap and reflection; flow equivalence distinguishes the curves (swap
disallowed) but still allows reflection.  A chirality experiment can
disable reflections; the defaults reproduce the published counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement, InvalidArrangement


@dataclass(frozen=True)
class EquivalenceMode:
    allow_swap: bool
    allow_reflection: bool


#: Equivalence used when counting configurations (curves interchangeable).
CONFIGURATION_MODE = EquivalenceMode(allow_swap=True, allow_reflection=True)
#: Equivalence used when counting flows (curves distinguished).
FLOW_MODE = EquivalenceMode(allow_swap=False, allow_reflection=True)


@dataclass(frozen=True)
class CanonicalKey:
    """Byte string identifying an equivalence class under ``mode``."""

    data: bytes
    mode: EquivalenceMode

    @property
    def hex(self) -> str:
        return self.data.hex()


def _bfs_code(
    sigma: tuple[int, ...],
    alpha: tuple[int, ...],
    color: tuple[int, ...],
    start: int,
    swap: bool,
) -> bytes:
    """Relabelling-independent move code of the BFS from ``start``."""
    nd = len(sigma)
    num = [-1] * nd
    num[start] = 0
    order = [start]
    nxt = 1
    code = bytearray()
    for d in order:  # grows while iterating: FIFO processing
        rd = sigma[d]
        ad = alpha[d]
        if num[rd] < 0:
            num[rd] = nxt
            nxt += 1
            order.append(rd)
        if num[ad] < 0:
            num[ad] = nxt
            nxt += 1
            order.append(ad)
        code.append(num[rd])
        code.append(num[ad])
        c = color[d]
        code.append((3 - c if swap else c) - 1)
    return bytes(code)


def _require_valid(arr: Arrangement) -> None:
    report = arr.validate()
    if not report.ok:
        raise InvalidArrangement("arrangement fails validation: " + ", ".join(report.failed()))


def _min_code(arr: Arrangement, reflects: tuple[bool, ...], swaps: tuple[bool, ...]) -> bytes:
    sigma_by_reflect = {False: arr.sigma}
    if True in reflects:
        sigma_by_reflect[True] = arr.sigma_inverse()
    best = None
    for reflect in reflects:
        sigma = sigma_by_reflect[reflect]
        for swap in swaps:
            for start in range(arr.n_darts):
                code = _bfs_code(sigma, arr.alpha, arr.color, start, swap)
                if best is None or code < best:
                    best = code
    assert best is not None
    return bytes([arr.n_points]) + best


def canonical_key(arr: Arrangement, mode: EquivalenceMode = CONFIGURATION_MODE) -> CanonicalKey:
    """Minimal BFS code over all seeds admitted by ``mode``.

    Deterministic and equal across all dart relabellings of ``arr``.
    """
    _require_valid(arr)
    reflects = (False, True) if mode.allow_reflection else (False,)
    swaps = (False, True) if mode.allow_swap else (False,)
    return CanonicalKey(_min_code(arr, reflects, swaps), mode)


def are_equivalent(a: Arrangement, b: Arrangement, mode: EquivalenceMode = CONFIGURATION_MODE) -> bool:
    """True iff some sphere homeomorphism admitted by ``mode`` maps a to b."""
    return canonical_key(a, mode) == canonical_key(b, mode)


@dataclass(frozen=True)
class SymmetryReport:
    """Self-equivalences of one arrangement.

    ``has_swap_automorphism``: some self-homeomorphism (orientation
    preserving or not) exchanges the two curves.  Symmetric configurations
    correspond to one flow, asymmetric ones to two.

    ``has_reflection_automorphism``: some orientation-reversing
    self-equivalence exists (curve swap permitted alongside).

    ``automorphism_count`` is the number of (start dart, orientation,
    swap) seeds realising the minimal code, i.e. the order of the full
    self-equivalence group; it divides 8n * 4.
    """

    has_swap_automorphism: bool
    has_reflection_automorphism: bool
    automorphism_count: int


def symmetry(arr: Arrangement) -> SymmetryReport:
    """Classify the self-equivalences of a valid arrangement."""
    _require_valid(arr)
    sigmas = {False: arr.sigma, True: arr.sigma_inverse()}
    codes: dict[tuple[bool, bool], bytes] = {}
    counts: dict[tuple[bool, bool], int] = {}
    for reflect in (False, True):
        for swap in (False, True):
            best = None
            n_best = 0
            for start in range(arr.n_darts):
                code = _bfs_code(sigmas[reflect], arr.alpha, arr.color, start, swap)
                if best is None or code < best:
                    best, n_best = code, 1
                elif code == best:
                    n_best += 1
            codes[(reflect, swap)] = best  # type: ignore[assignment]
            counts[(reflect, swap)] = n_best

    key_id = min(codes[(False, False)], codes[(True, False)])
    key_swap = min(codes[(False, True)], codes[(True, True)])
    key_keep = min(codes[(False, False)], codes[(False, True)])
    key_refl = min(codes[(True, False)], codes[(True, True)])

    overall = min(codes.values())
    n_aut = sum(counts[k] for k, c in codes.items() if c == overall)
    if (4 * arr.n_darts) % n_aut != 0:
        raise InvalidArrangement(f"automorphism count {n_aut} does not divide {4 * arr.n_darts}")
    return SymmetryReport(
        has_swap_automorphism=key_id == key_swap,
        has_reflection_automorphism=key_keep == key_refl,
        automorphism_count=n_aut,
    )
