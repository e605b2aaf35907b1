import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiserial import (
    DefiningPair,
    Quiver,
    close_under_rotation,
    generate_relations,
    lies_in,
    nilpotency_bound,
    rotations,
    validate,
)
from multiserial.random_instances import random_defining_pair


def kronecker_pair():
    """Two back-and-forth classes through a shared middle vertex."""
    q = Quiver(
        ["1", "2", "3"],
        [("a", "1", "2"), ("abar", "2", "1"), ("b", "2", "3"), ("bbar", "3", "2")],
    )
    return close_under_rotation(
        q, [(q.path(["a", "abar"]), 2), (q.path(["b", "bbar"]), 2)]
    )


class TestValidate:
    def test_loop_with_multiplicity_one_fails(self, loop_quiver):
        pair = DefiningPair(
            loop_quiver, [loop_quiver.path(["a"])], {("a",): 1}
        )
        report = validate(pair)
        assert not report.check("loop-multiplicity").passed

    def test_missing_rotation_fails(self, two_cycle_quiver):
        q = two_cycle_quiver
        pair = DefiningPair(q, [q.path(["a", "b"])], {("a", "b"): 2})
        report = validate(pair)
        assert not report.check("rotation-closure").passed

    def test_shared_arrow_between_classes_fails(self):
        q = Quiver(
            ["1", "2", "3"],
            [("a", "1", "2"), ("b", "2", "1"), ("c", "2", "1")],
        )
        pair = close_under_rotation(
            q, [(q.path(["a", "b"]), 2), (q.path(["a", "c"]), 2)]
        )
        report = validate(pair)
        verdict = report.check("unique-class-per-arrow")
        assert not verdict.passed
        assert "a" in verdict.witness

    def test_uncovered_arrow_fails(self):
        q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1"), ("c", "1", "1")])
        pair = close_under_rotation(q, [(q.path(["a", "b"]), 2)])
        verdict = validate(pair).check("arrow-coverage")
        assert not verdict.passed and "c" in verdict.witness

    def test_uneven_multiplicity_fails(self, two_cycle_quiver):
        q = two_cycle_quiver
        pair = DefiningPair(
            q,
            [q.path(["a", "b"]), q.path(["b", "a"])],
            {("a", "b"): 2, ("b", "a"): 3},
        )
        assert not validate(pair).check("class-multiplicity").passed

    def test_valid_pair_passes(self, loop_mu2_pair):
        assert validate(loop_mu2_pair).passed

    def test_empty_system_on_arrowless_quiver_passes(self):
        pair = DefiningPair(Quiver(["v"]), [], {})
        assert validate(pair).passed


class TestCloseUnderRotation:
    def test_generates_all_rotations(self, two_cycle_quiver):
        q = two_cycle_quiver
        pair = close_under_rotation(q, [(q.path(["a", "b"]), 2)])
        assert {c.arrows for c in pair.cycles} == {("a", "b"), ("b", "a")}
        assert all(pair.mu(c) == 2 for c in pair.cycles)

    def test_loop(self, loop_quiver):
        pair = close_under_rotation(loop_quiver, [(loop_quiver.path(["a"]), 3)])
        assert [c.arrows for c in pair.cycles] == [("a",)]
        assert pair.mu(pair.cycles[0]) == 3

    def test_conflicting_multiplicities_fault(self, two_cycle_quiver):
        q = two_cycle_quiver
        with pytest.raises(ValueError, match="conflicting multiplicities"):
            close_under_rotation(
                q, [(q.path(["a", "b"]), 2), (q.path(["b", "a"]), 3)]
            )

    def test_representative_choice_is_irrelevant(self, two_cycle_quiver):
        q = two_cycle_quiver
        one = close_under_rotation(q, [(q.path(["a", "b"]), 3)])
        other = close_under_rotation(q, [(q.path(["b", "a"]), 3)])
        assert one == other
        assert generate_relations(one) == generate_relations(other)


class TestGenerateRelations:
    def test_loop_mu2(self, loop_mu2_pair):
        relations = generate_relations(loop_mu2_pair)
        assert relations.type1 == ()
        assert [p.arrows for p in relations.type2] == [("a", "a", "a")]
        assert relations.type3 == ()

    def test_shared_vertex_produces_binomial(self):
        relations = generate_relations(kronecker_pair())
        assert len(relations.type1) == 1
        left, right = relations.type1[0]
        assert {left.arrows, right.arrows} == {
            ("abar", "a", "abar", "a"),
            ("b", "bbar", "b", "bbar"),
        }
        assert left.source == right.source == "2"

    def test_off_cycle_quadratic_is_type3(self):
        q = Quiver(
            ["1", "2"],
            [("a", "1", "2"), ("b", "2", "1"), ("c", "1", "1")],
        )
        pair = close_under_rotation(
            q, [(q.path(["a", "b"]), 2), (q.path(["c"]), 2)]
        )
        relations = generate_relations(pair)
        # junctions between the two classes die; cc survives on its loop
        assert {p.arrows for p in relations.type3} == {("b", "c"), ("c", "a")}

    def test_type2_has_full_power_plus_first_arrow_length(self, two_cycle_mu3_pair):
        relations = generate_relations(two_cycle_mu3_pair)
        assert sorted(p.arrows for p in relations.type2) == [
            ("a", "b", "a", "b", "a", "b", "a"),
            ("b", "a", "b", "a", "b", "a", "b"),
        ]

    def test_invalid_system_is_rejected(self, loop_quiver):
        pair = DefiningPair(loop_quiver, [loop_quiver.path(["a"])], {("a",): 1})
        with pytest.raises(ValueError, match="fails validation"):
            generate_relations(pair)


class TestNilpotencyBound:
    def test_examples(self, loop_mu2_pair, two_cycle_mu3_pair):
        assert nilpotency_bound(loop_mu2_pair) == 3
        assert nilpotency_bound(two_cycle_mu3_pair) == 7

    def test_maximum_over_classes(self):
        q = Quiver(
            ["1", "2", "3", "4"],
            [
                ("a", "1", "2"), ("b", "2", "1"),
                ("c", "3", "4"), ("d", "4", "3"),
            ],
        )
        pair = close_under_rotation(
            q, [(q.path(["a", "b"]), 2), (q.path(["c", "d"]), 3)]
        )
        # full power lengths are 4 and 6
        assert nilpotency_bound(pair) == 7

    def test_empty_system(self):
        pair = DefiningPair(Quiver(["v"]), [], {})
        assert nilpotency_bound(pair) == 2


@given(st.integers(0, 10**9))
@settings(max_examples=80, deadline=None)
def test_every_arrow_starts_exactly_one_type2_relation(seed):
    pair = random_defining_pair(random.Random(seed))
    if not validate(pair).passed:
        return
    firsts = [p.arrows[0] for p in generate_relations(pair).type2]
    assert sorted(firsts) == sorted(pair.quiver.arrows)


@given(st.integers(0, 10**9))
@settings(max_examples=80, deadline=None)
def test_quadratics_split_into_on_cycle_and_type3(seed):
    pair = random_defining_pair(random.Random(seed))
    if not validate(pair).passed:
        return
    relations = generate_relations(pair)
    type3 = {p.arrows for p in relations.type3}
    on_cycle = {
        p.arrows
        for p in pair.quiver.length_two_paths()
        if any(lies_in(p, c) for c in pair.cycles)
    }
    everything = {p.arrows for p in pair.quiver.length_two_paths()}
    assert type3 | on_cycle == everything
    assert not (type3 & on_cycle)


@given(st.integers(0, 10**9))
@settings(max_examples=80, deadline=None)
def test_generated_systems_validate(seed):
    pair = random_defining_pair(random.Random(seed))
    report = validate(pair)
    loops_ok = all(len(c) > 1 or pair.mu(c) > 1 for c in pair.cycles)
    assert report.passed == loops_ok


@given(st.integers(0, 10**9))
@settings(max_examples=40, deadline=None)
def test_rotation_closure_is_rotation_invariant(seed):
    pair = random_defining_pair(random.Random(seed))
    rng = random.Random(seed + 1)
    representatives = [
        (rng.choice(rotations(c)), mult)
        for c, mult in pair.rotation_class_representatives()
    ]
    assert close_under_rotation(pair.quiver, representatives) == pair
