import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multiserial import (
    Path,
    Quiver,
    canonical_rotation,
    compose,
    cycle_power,
    is_simple_cycle,
    lies_in,
    rotations,
)


def make_cycle(length: int, seed: int) -> Path:
    """A random simple cycle with fresh arrows over a small vertex pool."""
    rng = random.Random(seed)
    stops = [f"v{rng.randint(1, 4)}" for _ in range(length)]
    vertices = []
    for v in stops:
        if v not in vertices:
            vertices.append(v)
    arrows = [
        (f"a{i}", stops[i], stops[(i + 1) % length]) for i in range(length)
    ]
    quiver = Quiver(vertices, arrows)
    return quiver.path([name for name, _, _ in arrows])


class TestQuiverConstruction:
    def test_duplicate_vertex_rejected(self):
        with pytest.raises(ValueError, match="duplicate vertex"):
            Quiver(["1", "1"])

    def test_duplicate_arrow_rejected(self):
        with pytest.raises(ValueError, match="duplicate arrow"):
            Quiver(["1"], [("a", "1", "1"), ("a", "1", "1")])

    def test_undeclared_endpoint_rejected(self):
        with pytest.raises(ValueError, match="undeclared vertex '9'"):
            Quiver(["1"], [("a", "1", "9")])

    def test_parallel_arrows_allowed(self):
        q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
        assert len(q.arrows) == 2

    def test_path_construction_checks_composability(self):
        q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
        assert q.path(["a", "b"]).vertices == ("1", "2", "3")
        with pytest.raises(ValueError, match="do not compose"):
            q.path(["b", "a"])

    def test_connectivity(self):
        connected = Quiver(["1", "2"], [("a", "1", "2")])
        assert connected.is_connected()
        split = Quiver(["1", "2", "3"], [("a", "1", "2")])
        assert not split.is_connected()


class TestCompose:
    def test_composable(self):
        q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
        result = compose(q.path(["a"]), q.path(["b"]))
        assert result == q.path(["a", "b"])
        assert len(result) == 2

    def test_endpoint_mismatch_is_none(self):
        q = Quiver(["1", "2"], [("a", "1", "2")])
        assert compose(q.path(["a"]), q.path(["a"])) is None

    def test_trivial_paths_are_identities(self):
        q = Quiver(["1", "2"], [("a", "1", "2")])
        a = q.path(["a"])
        assert compose(q.trivial_path("1"), a) == a
        assert compose(a, q.trivial_path("2")) == a
        assert compose(q.trivial_path("2"), a) is None


class TestRotations:
    def test_two_cycle(self):
        q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
        rots = rotations(q.path(["a", "b"]))
        assert [r.arrows for r in rots] == [("a", "b"), ("b", "a")]
        assert rots[1].source == "2"

    def test_loop(self):
        q = Quiver(["v"], [("a", "v", "v")])
        assert [r.arrows for r in rotations(q.path(["a"]))] == [("a",)]

    def test_three_cycle(self):
        q = Quiver(
            ["1", "2", "3"],
            [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")],
        )
        rots = rotations(q.path(["a", "b", "c"]))
        assert [r.arrows for r in rots] == [
            ("a", "b", "c"),
            ("b", "c", "a"),
            ("c", "a", "b"),
        ]

    def test_rejects_non_cycles(self):
        q = Quiver(["1", "2"], [("a", "1", "2")])
        with pytest.raises(ValueError, match="not a simple cycle"):
            rotations(q.path(["a"]))


class TestLiesIn:
    def test_cycle_lies_in_itself(self):
        q = Quiver(["1", "2"], [("a", "1", "2"), ("abar", "2", "1")])
        c = q.path(["a", "abar"])
        assert lies_in(q.path(["a", "abar"]), c)

    def test_wrap_around_needs_a_power(self):
        q = Quiver(["1", "2"], [("a", "1", "2"), ("abar", "2", "1")])
        c = q.path(["a", "abar"])
        assert lies_in(q.path(["a", "abar", "a"]), c)

    def test_foreign_arrow_fails(self):
        q = Quiver(
            ["1", "2"],
            [("a", "1", "2"), ("abar", "2", "1"), ("b", "2", "1")],
        )
        c = q.path(["a", "abar"])
        assert not lies_in(q.path(["a", "b"]), c)

    def test_trivial_path_rejected(self):
        q = Quiver(["v"], [("a", "v", "v")])
        with pytest.raises(ValueError, match="trivial"):
            lies_in(q.trivial_path("v"), q.path(["a"]))

    def test_deviating_path_fails(self):
        q = Quiver(["v"], [("a", "v", "v"), ("b", "v", "v")])
        c = q.path(["a", "b"])
        assert lies_in(q.path(["b", "a"]), c)
        assert not lies_in(q.path(["a", "a"]), c)


class TestIsSimpleCycle:
    def test_examples(self):
        q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
        assert is_simple_cycle(q.path(["a", "b"]))
        assert not is_simple_cycle(q.path(["a", "b", "a", "b"]))
        assert not is_simple_cycle(q.path(["a"]))
        assert not is_simple_cycle(q.trivial_path("1"))

    def test_repeated_vertices_allowed(self):
        q = Quiver(["v"], [("a", "v", "v"), ("b", "v", "v")])
        assert is_simple_cycle(q.path(["a", "b"]))


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_rotation_count_and_closure(length, seed):
    cycle = make_cycle(length, seed)
    rots = rotations(cycle)
    assert len(rots) == length
    assert len({r.arrows for r in rots}) == length
    all_rotations = {r.arrows for r in rots}
    for r in rots:
        assert is_simple_cycle(r)
        for rr in rotations(r):
            assert rr.arrows in all_rotations


@given(st.integers(1, 5), st.integers(0, 10**6), st.integers(1, 12))
def test_lies_in_is_rotation_invariant(length, seed, cut):
    cycle = make_cycle(length, seed)
    walk = cycle_power(cycle, -(-cut // length) + 1)
    p = Path(walk.arrows[:cut], walk.vertices[: cut + 1])
    values = {lies_in(p, r) for r in rotations(cycle)}
    assert values == {True}


@given(st.integers(2, 6), st.integers(0, 10**6))
def test_compose_associative_and_additive(length, seed):
    cycle = make_cycle(length, seed)
    for i in range(1, length):
        for j in range(i + 1, length):
            p = Path(cycle.arrows[:i], cycle.vertices[: i + 1])
            q = Path(cycle.arrows[i:j], cycle.vertices[i : j + 1])
            r = Path(cycle.arrows[j:], cycle.vertices[j:])
            assert compose(compose(p, q), r) == compose(p, compose(q, r)) == cycle
            assert len(compose(p, q)) == len(p) + len(q)


def test_canonical_rotation_is_least():
    q = Quiver(["1", "2"], [("b", "1", "2"), ("a", "2", "1")])
    c = q.path(["b", "a"])
    assert canonical_rotation(c).arrows == ("a", "b")


def test_cycle_power_stitches_vertices():
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    squared = cycle_power(q.path(["a", "b"]), 2)
    assert squared.arrows == ("a", "b", "a", "b")
    assert squared.vertices == ("1", "2", "1", "2", "1")
    assert q.contains_path(squared)
