import pytest

from multiserial import (
    DefiningPair,
    Presentation,
    Quiver,
    close_under_rotation,
)


@pytest.fixture
def loop_quiver() -> Quiver:
    return Quiver(["v"], [("a", "v", "v")])


@pytest.fixture
def loop_mu2_pair(loop_quiver) -> DefiningPair:
    return close_under_rotation(loop_quiver, [(loop_quiver.path(["a"]), 2)])


@pytest.fixture
def linear_quiver() -> Quiver:
    return Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])


@pytest.fixture
def linear_presentation(linear_quiver) -> Presentation:
    return Presentation(linear_quiver, (linear_quiver.path(["a", "b"]),), (), 2)


@pytest.fixture
def two_cycle_quiver() -> Quiver:
    return Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])


@pytest.fixture
def two_cycle_presentation(two_cycle_quiver) -> Presentation:
    q = two_cycle_quiver
    return Presentation(q, (q.path(["a", "b", "a"]), q.path(["b", "a", "b"])), (), 3)


@pytest.fixture
def two_cycle_mu3_pair(two_cycle_quiver) -> DefiningPair:
    q = two_cycle_quiver
    return close_under_rotation(q, [(q.path(["a", "b"]), 3)])
