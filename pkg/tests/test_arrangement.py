"""Core data model: Gauss-pair codes, decode/encode, faces, genus, validation."""

import itertools

import pytest

from circlepairs import (
    Arrangement,
    GaussPairCode,
    MalformedCode,
    NotSpherical,
    canonical_key,
    decode,
    encode,
    format_gp1,
    iter_gp1_lines,
    parse_gp1,
)

LENS = "GP1 2 1 2 + -"


def test_lens_structure():
    arr = decode(parse_gp1(LENS))
    assert arr.n_points == 2
    assert arr.n_arcs == 4
    assert arr.n_darts == 8
    faces = arr.faces()
    assert len(faces) == 4
    assert all(len(walk) == 2 for walk in faces)  # four bigons
    assert arr.genus() == 0
    assert arr.validate().ok


def test_lens_forced_signs():
    # with 2 points the visiting order is forced and the sign sum forces opposite signs
    assert decode(GaussPairCode((1, 2), (-1, 1))).validate().ok
    with pytest.raises(NotSpherical):
        decode(GaussPairCode((1, 2), (1, 1)))
    with pytest.raises(NotSpherical):
        decode(GaussPairCode((1, 2), (-1, -1)))


def test_torus_code_diagnostics():
    # face trace gives F=2, so V-E+F = 2-4+2 = 0 and the genus is 1
    arr = decode(parse_gp1("GP1 2 1 2 + +"), require_sphere=False)
    assert len(arr.faces()) == 2
    assert arr.genus() == 1
    report = arr.validate()
    assert not report.ok
    assert report.failed() == ["genus-0"]


def test_four_point_alternating_is_valid():
    arr = decode(parse_gp1("GP1 4 1 2 3 4 + - + -"))
    assert len(arr.faces()) == 6
    assert arr.validate().ok


def test_every_dart_in_exactly_one_face(levels10):
    for level in levels10:
        for cls in level.classes:
            arr = decode(cls.code)
            counts = {}
            for walk in arr.faces():
                for d in walk:
                    counts[d] = counts.get(d, 0) + 1
            assert counts == {d: 1 for d in range(arr.n_darts)}


def test_face_count_euler(levels10):
    for level in levels10:
        for cls in level.classes:
            arr = decode(cls.code)
            assert len(arr.faces()) == arr.n_points + 2
            assert arr.n_darts == 4 * arr.n_points
            assert arr.n_arcs == 2 * arr.n_points


def test_structure_invariants(levels10):
    for level in levels10:
        for cls in level.classes:
            arr = decode(cls.code)
            assert sum(arr.vertex_signs().values()) == 0
            for curve in (1, 2):
                cycles = arr.straight_ahead_cycles(curve)
                assert len(cycles) == 2
                assert all(len(c) == arr.n_points for c in cycles)
            assert arr.is_connected()


@pytest.mark.parametrize(
    "order,signs",
    [
        ((1, 1), (1, -1)),          # not a permutation
        ((1, 3), (1, -1)),          # labels out of range
        ((1, 2), (1,)),             # sign length mismatch
        ((1, 2, 3), (1, -1, 1)),    # odd point count
        ((), ()),                   # zero points rejected everywhere
    ],
)
def test_malformed_codes(order, signs):
    with pytest.raises(MalformedCode):
        GaussPairCode(order, signs)


def test_malformed_sign_value():
    with pytest.raises(MalformedCode):
        GaussPairCode((1, 2), (1, 0))


def test_gp1_parse_errors():
    for line in ["GP2 2 1 2 + -", "GP1", "GP1 x", "GP1 2 1 2 + *", "GP1 2 1 2 +"]:
        with pytest.raises(MalformedCode):
            parse_gp1(line)


def test_gp1_roundtrip_and_comments():
    text = "# header\n\nGP1 2 1 2 + -\nGP1 4 1 2 3 4 + - + -\n"
    parsed = list(iter_gp1_lines(text))
    assert [lineno for lineno, _ in parsed] == [3, 4]
    for _, code in parsed:
        assert parse_gp1(format_gp1(code)) == code


def test_gp1_error_carries_line_number():
    with pytest.raises(MalformedCode, match="line 2"):
        list(iter_gp1_lines("GP1 2 1 2 + -\nGP1 2 1 1 + -\n"))


def test_rotation_with_three_cycle_fails_validation():
    # two 3-cycles and a 2-cycle: not a two-circle map
    sigma = (1, 2, 0, 4, 5, 3, 7, 6)
    alpha = (4, 5, 6, 7, 0, 1, 2, 3)
    color = (1, 2, 1, 2, 1, 2, 1, 2)
    report = Arrangement(sigma, alpha, color).validate()
    assert not report.ok
    assert "vertex-degree-4" in report.failed()


def _all_valid_codes(n2):
    for order in itertools.permutations(range(1, n2 + 1)):
        for bits in range(1 << n2):
            signs = tuple(1 if (bits >> i) & 1 else -1 for i in range(n2))
            code = GaussPairCode(order, signs)
            try:
                yield code, decode(code)
            except NotSpherical:
                continue


def test_encode_decode_normal_form_small():
    # encode o decode is idempotent and never changes the configuration
    for code, arr in _all_valid_codes(4):
        normal = encode(arr)
        assert normal.order[0] == 1
        assert normal.signs[0] == 1
        again = decode(normal)
        assert encode(again) == normal
        assert canonical_key(arr).data == canonical_key(again).data


def test_decode_encode_roundtrip_catalog(levels10):
    for level in levels10:
        for cls in level.classes:
            arr = decode(cls.code)
            back = decode(encode(arr))
            assert canonical_key(arr).data == canonical_key(back).data


def test_lens_normal_form():
    assert format_gp1(encode(decode(parse_gp1(LENS)))) == LENS


def test_relabel_preserves_structure():
    import random

    rng = random.Random(7)
    arr = decode(parse_gp1("GP1 4 1 2 3 4 + - + -"))
    perm = list(range(arr.n_darts))
    rng.shuffle(perm)
    relabeled = arr.relabel(perm)
    assert relabeled.validate().ok
    assert len(relabeled.faces()) == len(arr.faces())
    assert canonical_key(relabeled).data == canonical_key(arr).data
