"""Crossing surgery and level-by-level enumeration."""

import pytest

from circlepairs import (
    CrossingSite,
    InvalidSite,
    are_equivalent,
    crossing,
    crossing_sites,
    decode,
    enumerate_level,
    enumerate_up_to,
    parse_gp1,
    seed_level,
)

LENS = "GP1 2 1 2 + -"


def _lens():
    return decode(parse_gp1(LENS))


def test_lens_has_four_sites():
    assert len(list(crossing_sites(_lens()))) == 4


def test_crossing_postconditions():
    arr = _lens()
    old_faces = len(arr.faces())
    for site in crossing_sites(arr):
        out = crossing(arr, site)
        assert out.validate().ok
        assert out.n_points == arr.n_points + 2
        assert out.n_arcs == arr.n_arcs + 4
        assert len(out.faces()) == old_faces + 2
        # exactly one face is a bigon made of two new darts, one per curve
        new = set(range(arr.n_darts, out.n_darts))
        bigons = [
            w
            for w in out.faces()
            if len(w) == 2 and set(w) <= new and {out.color[w[0]], out.color[w[1]]} == {1, 2}
        ]
        assert len(bigons) == 1
        # the two new vertices carry opposite crossing signs
        signs = out.vertex_signs()
        vertex_of = out.vertex_of()
        new_vertices = {vertex_of[d] for d in new}
        assert len(new_vertices) == 2
        sa, sb = (signs[v] for v in new_vertices)
        assert sa == -sb
        # untouched darts keep rotation and colour; alpha changes on 4 old darts
        assert all(out.sigma[d] == arr.sigma[d] for d in range(arr.n_darts))
        assert all(out.color[d] == arr.color[d] for d in range(arr.n_darts))
        changed = [d for d in range(arr.n_darts) if out.alpha[d] != arr.alpha[d]]
        assert sorted(changed) == sorted(
            {site.dart_a, arr.alpha[site.dart_a], site.dart_b, arr.alpha[site.dart_b]}
        )


def test_every_lens_crossing_gives_the_four_point_class():
    arr = _lens()
    children = [crossing(arr, site) for site in crossing_sites(arr)]
    for child in children[1:]:
        assert are_equivalent(children[0], child)


def test_invalid_sites():
    arr = _lens()
    walk = arr.faces()[0]
    da = next(d for d in walk if arr.color[d] == 1)
    with pytest.raises(InvalidSite):
        crossing(arr, CrossingSite(face=99, dart_a=0, dart_b=1))
    with pytest.raises(InvalidSite):
        crossing(arr, CrossingSite(face=0, dart_a=da, dart_b=da))
    other_face_dart = next(d for d in arr.faces()[1] if arr.color[d] == 2)
    with pytest.raises(InvalidSite):
        crossing(arr, CrossingSite(face=0, dart_a=da, dart_b=other_face_dart))


def test_level_sizes(levels10):
    assert [len(level.classes) for level in levels10] == [1, 1, 2, 4, 13]
    assert [level.n_points for level in levels10] == [2, 4, 6, 8, 10]


def test_enumerate_up_to_two():
    levels = enumerate_up_to(2)
    assert len(levels) == 1
    assert len(levels[0].classes) == 1


def test_enumerate_level_steps(levels10):
    assert len(enumerate_level(seed_level()).classes) == 1
    level4 = next(l for l in levels10 if l.n_points == 4)
    assert len(enumerate_level(level4).classes) == 2
    level8 = next(l for l in levels10 if l.n_points == 8)
    assert len(enumerate_level(level8).classes) == 13


def test_determinism(levels10):
    again = enumerate_up_to(10)
    for a, b in zip(levels10, again):
        assert a.config_keys() == b.config_keys()
        assert [c.gp1 for c in a.classes] == [c.gp1 for c in b.classes]
        assert [c.parent_key for c in a.classes] == [c.parent_key for c in b.classes]
        assert [c.site for c in a.classes] == [c.site for c in b.classes]


def test_every_representative_has_a_bigon(levels10):
    for level in levels10:
        for cls in level.classes:
            arr = decode(cls.code)
            assert any(len(w) == 2 for w in arr.faces())


def test_provenance_links_to_previous_level(levels10):
    for prev, level in zip(levels10, levels10[1:]):
        prev_keys = prev.config_keys()
        for cls in level.classes:
            assert cls.parent_key in prev_keys
            assert cls.site is not None
    seed = levels10[0].classes[0]
    assert seed.parent_key is None and seed.site is None


def test_jobs_do_not_change_the_result(levels10):
    level6 = next(l for l in levels10 if l.n_points == 6)
    serial = enumerate_level(level6, jobs=1)
    parallel = enumerate_level(level6, jobs=2)
    assert serial.config_keys() == parallel.config_keys()
    assert [c.gp1 for c in serial.classes] == [c.gp1 for c in parallel.classes]


def test_bad_max_points():
    with pytest.raises(ValueError):
        enumerate_up_to(3)
    with pytest.raises(ValueError):
        enumerate_up_to(0)
