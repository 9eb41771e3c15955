import pytest

from circlepairs import brute_force, decode, enumerate_up_to


@pytest.fixture(scope="session")
def levels10():
    """The full catalog, levels 2..10, computed once per test session."""
    return enumerate_up_to(10)


@pytest.fixture(scope="session")
def reps(levels10):
    """Decoded class representatives keyed by point count."""
    return {level.n_points: [decode(cls.code) for cls in level.classes] for level in levels10}


@pytest.fixture(scope="session")
def oracle_results():
    """Brute-force results for the mandatory levels 2, 4, 6, 8 (computed once)."""
    return {points: brute_force(points) for points in (2, 4, 6, 8)}
