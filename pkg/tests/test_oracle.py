import pytest

from bp2cert import (
    CapacityError,
    bp1_oracle,
    bp2_oracle,
    deletion_depths,
    disconnected_vertex_cuts,
    enumerate_labeled,
    first_unsafe_prefix,
    make_graph,
    max_bp1_split,
    max_bp2_subset,
    named,
    part_is_biclique,
    partition_error,
    safe_check,
    star_biclique_oracle,
    star_witness_error,
)

C5 = named("cycle", 5)
C7 = named("cycle", 7)
TWO_C4 = named("disjoint_union_of_cycles", 4, 4)


def test_bp1_oracle_examples():
    # canonical order pins the smallest label into the left side
    assert bp1_oracle(named("path", 3)) == (frozenset({0, 2}), frozenset({1}))
    assert bp1_oracle(named("empty", 2)) is None
    assert bp1_oracle(named("cycle", 4)) == (frozenset({0, 2}), frozenset({1, 3}))
    assert bp1_oracle(make_graph(1)) == (frozenset({0}), frozenset())
    with pytest.raises(ValueError):
        bp1_oracle(make_graph(0))
    with pytest.raises(CapacityError):
        bp1_oracle(make_graph(17))
    assert bp1_oracle(named("complete", 17), cap=17) is not None


def test_bp2_oracle_examples():
    part = bp2_oracle(C5)
    assert part.part1 == {0, 1} and part.part2 == {2, 3, 4}
    assert part.sides1 == (frozenset({0}), frozenset({1}))
    assert part.sides2 == (frozenset({2, 4}), frozenset({3}))
    assert bp2_oracle(C7) is None
    assert bp2_oracle(named("empty", 3)) is None
    one_part = bp2_oracle(named("complete", 3))
    assert one_part.part2 is None and one_part.part1 == {0, 1, 2}


def test_oracle_witnesses_validate_under_part_predicates():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            part = bp2_oracle(g)
            if part is not None:
                assert partition_error(g, part) is None
                for p, _sides in part.parts:
                    assert part_is_biclique(g, p) is not None
            if n >= 2:
                w = star_biclique_oracle(g)
                if w is not None:
                    assert star_witness_error(g, w) is None


def test_star_biclique_oracle_examples():
    w = star_biclique_oracle(C5)
    assert w.star_part == {0, 1} and w.center == 0
    assert w.biclique_part == {2, 3, 4}
    assert w.biclique_sides == (frozenset({2, 4}), frozenset({3}))
    assert star_biclique_oracle(TWO_C4) is None
    assert star_biclique_oracle(named("empty", 3)) is None
    with pytest.raises(ValueError):
        star_biclique_oracle(make_graph(1))


def test_disconnected_vertex_cuts_examples():
    cuts = disconnected_vertex_cuts(C5)
    assert frozenset({0, 2}) in cuts
    assert disconnected_vertex_cuts(named("complete", 4)) == []
    assert disconnected_vertex_cuts(named("path", 4)) == [frozenset({0, 2}), frozenset({1, 3})]
    with pytest.raises(ValueError):
        disconnected_vertex_cuts(named("empty", 3))


def test_disconnected_vertex_cuts_find_first():
    cuts = disconnected_vertex_cuts(C5)
    assert disconnected_vertex_cuts(C5, find_first=True) == cuts[:1]


def test_disconnected_vertex_cuts_definition():
    for n in range(4, 6):
        for g in enumerate_labeled(n):
            if not g.is_connected():
                continue
            for x in disconnected_vertex_cuts(g):
                assert 2 <= len(x) <= n - 2
                assert len(g.induced(x).components()) > 1
                assert len(g.delete(x).components()) > 1


def test_max_bp2_subset_examples():
    assert max_bp2_subset(named("empty", 3)) == {0, 1}
    assert max_bp2_subset(C5) == {0, 1, 2, 3, 4}
    assert len(max_bp2_subset(C7)) == 6
    with pytest.raises(ValueError):
        max_bp2_subset(make_graph(1))


def test_max_bp1_split_examples():
    b, c = max_bp1_split(C5, set(range(5)))
    assert (b, c) == (frozenset({0, 1, 2}), frozenset({3, 4}))
    assert max_bp1_split(named("empty", 2), {0, 1}) == (frozenset({0}), frozenset({1}))
    b, c = max_bp1_split(TWO_C4, set(range(8)))
    assert (b, c) == (frozenset({0, 1, 2, 3}), frozenset({4, 5, 6, 7}))


def test_max_bp1_split_precondition():
    with pytest.raises(ValueError):
        max_bp1_split(named("complete", 3), {0, 1, 2})  # one-part coverable
    with pytest.raises(ValueError):
        max_bp1_split(named("empty", 3), {0, 1, 2})  # not two-part coverable
    with pytest.raises(ValueError):
        max_bp1_split(C5, set())


def test_safe_check_examples():
    assert safe_check(named("empty", 3), [], "not_bp2")
    assert not safe_check(C7, [0], "not_bp2")
    assert safe_check(TWO_C4, [0], "bp2_minus_bp1")
    with pytest.raises(ValueError):
        safe_check(C5, [0, 0], "not_bp2")
    with pytest.raises(ValueError):
        safe_check(C5, [9], "not_bp2")


def test_first_unsafe_prefix():
    assert first_unsafe_prefix(named("empty", 4), [3], "not_bp2") is None
    assert first_unsafe_prefix(C7, [0], "not_bp2") == 1
    assert first_unsafe_prefix(C5, [], "not_bp2") == 0


def test_deletion_depths_examples():
    assert deletion_depths(C5).uniform and deletion_depths(C5).min_depth == 0
    r = deletion_depths(named("empty", 2))
    assert (r.min_depth, r.max_depth, r.uniform) == (0, 0, True)
    r = deletion_depths(TWO_C4)
    assert (r.min_depth, r.max_depth, r.uniform) == (1, 1, True)


def test_deletion_depths_precondition():
    with pytest.raises(ValueError):
        deletion_depths(named("complete", 3))
    with pytest.raises(ValueError):
        deletion_depths(named("empty", 3))


def test_deletion_closure_of_split_free_graphs():
    # the smallest split-free two-part-only graph around is the double 4-cycle
    assert star_biclique_oracle(TWO_C4) is None
    for v in range(8):
        h = TWO_C4.delete({v})
        assert bp2_oracle(h) is not None and bp1_oracle(h) is None


def test_two_part_membership_matches_complement_cut_structure():
    for n in range(3, 6):
        for g in enumerate_labeled(n):
            cg = g.complement()
            if cg.is_connected():
                via_cuts = bool(cg.articulation_points()) or bool(
                    disconnected_vertex_cuts(cg, find_first=True)
                )
            else:
                via_cuts = True
            assert (bp2_oracle(g) is not None) == via_cuts
