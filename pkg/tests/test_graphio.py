import random

import networkx as nx
import pytest

from bp2cert import (
    CapacityError,
    canonical_g6,
    edgelist_emit,
    edgelist_parse,
    enumerate_labeled,
    g6_decode,
    g6_encode,
    graph_from_index,
    labeled_graph_count,
    make_graph,
    named,
    random_graph,
)


def test_g6_fixed_values():
    assert g6_encode(make_graph(2, [(0, 1)])) == "A_"
    assert g6_encode(make_graph(2)) == "A?"
    assert g6_decode("A_") == make_graph(2, [(0, 1)])
    assert g6_decode("A?") == make_graph(2)
    assert g6_encode(named("cycle", 5)) == "Dhc"


def test_g6_header_accepted_never_emitted():
    g = named("cycle", 5)
    assert g6_decode(">>graph6<<Dhc") == g
    assert not g6_encode(g).startswith(">>")


def test_g6_round_trip_enumerated():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            assert g6_decode(g6_encode(g)) == g


def test_g6_round_trip_random_large():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng.randint(0, 30), rng.random(), rng.randint(0, 10 ** 6))
        assert g6_decode(g6_encode(g)) == g


def test_g6_matches_networkx():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(0, 10)
        g = random_graph(n, rng.random(), rng.randint(0, 10 ** 6))
        h = nx.empty_graph(n)
        h.add_edges_from(g.edges())
        assert g6_encode(g) == nx.to_graph6_bytes(h, header=False).decode().strip()


def test_g6_errors():
    with pytest.raises(ValueError):
        g6_decode("")
    with pytest.raises(ValueError):
        g6_decode("A")  # missing body byte
    with pytest.raises(ValueError):
        g6_decode("A__")  # extra byte
    with pytest.raises(ValueError):
        g6_decode("~??")  # long form (>62 vertices) unsupported
    with pytest.raises(ValueError):
        g6_decode("A\x1f")  # byte below the printable offset
    with pytest.raises(CapacityError):
        g6_encode(make_graph(63))


def test_edgelist_round_trip():
    assert edgelist_parse("n 3\n0 1\n1 2") == named("path", 3)
    assert edgelist_emit(named("empty", 3)) == "n 3"
    for n in range(1, 5):
        for g in enumerate_labeled(n):
            assert edgelist_parse(edgelist_emit(g)) == g


def test_edgelist_whitespace_tolerant():
    assert edgelist_parse("  n   3 \n\n 0   1 \n") == make_graph(3, [(0, 1)])


def test_edgelist_errors():
    with pytest.raises(ValueError):
        edgelist_parse("n 2\n0 0")
    with pytest.raises(ValueError):
        edgelist_parse("2\n0 1")
    with pytest.raises(ValueError):
        edgelist_parse("n 2\n0 5")
    with pytest.raises(ValueError):
        edgelist_parse("n 2\n0 1 2")
    with pytest.raises(ValueError):
        edgelist_parse("")


def test_named_constructions():
    assert named("empty", 3) == make_graph(3)
    assert named("complete", 3).edge_count == 3
    assert named("path", 4).edges() == [(0, 1), (1, 2), (2, 3)]
    c7 = named("cycle", 7)
    assert set(c7.edges()) == {(i, (i + 1) % 7) if i < (i + 1) % 7 else ((i + 1) % 7, i) for i in range(7)}
    k23 = named("complete_bipartite", 2, 3)
    assert k23.n == 5
    assert all(k23.has_edge(i, j) for i in (0, 1) for j in (2, 3, 4))
    assert not k23.has_edge(0, 1) and not k23.has_edge(2, 3)
    assert named("star", 3) == named("complete_bipartite", 1, 3)
    cc = named("disjoint_union_of_cycles", 4, 4)
    assert cc.n == 8 and len(cc.components()) == 2


def test_named_cycles_are_2_regular_connected():
    for n in range(3, 10):
        g = named("cycle", n)
        assert g.is_connected()
        assert all(len(g.neighborhood(v)) == 2 for v in g.labels)


def test_named_errors():
    with pytest.raises(ValueError):
        named("petersen")
    with pytest.raises(ValueError):
        named("cycle", 2)
    with pytest.raises(ValueError):
        named("cycle", 3, 4)
    with pytest.raises(ValueError):
        named("complete_bipartite", 2)
    with pytest.raises(ValueError):
        named("disjoint_union_of_cycles")


def test_random_graph_determinism_and_extremes():
    assert random_graph(5, 0.0, 1).edge_count == 0
    assert random_graph(5, 1.0, 2) == named("complete", 5)
    assert random_graph(6, 0.5, 42) == random_graph(6, 0.5, 42)
    assert random_graph(6, 0.5, 42) != random_graph(6, 0.5, 43)
    with pytest.raises(ValueError):
        random_graph(4, 1.5, 0)


def test_enumerate_counts_and_uniqueness():
    assert labeled_graph_count(2) == 2
    assert labeled_graph_count(3) == 8
    assert labeled_graph_count(4) == 64
    seen = {g6_encode(g) for g in enumerate_labeled(4)}
    assert len(seen) == 64


def test_enumerate_range_split():
    whole = [g6_encode(g) for g in enumerate_labeled(4)]
    split = [g6_encode(g) for g in enumerate_labeled(4, 0, 32)]
    split += [g6_encode(g) for g in enumerate_labeled(4, 32, 64)]
    assert whole == split
    assert graph_from_index(4, 63) == named("complete", 4)


def test_enumerate_capacity():
    with pytest.raises(CapacityError):
        list(enumerate_labeled(9))
    with pytest.raises(CapacityError):
        list(enumerate_labeled(0))
    with pytest.raises(ValueError):
        list(enumerate_labeled(3, 5, 99))


def test_canonical_g6_invariant_under_relabeling():
    c5 = named("cycle", 5)
    relabeled = make_graph(5, [(1, 2), (2, 4), (4, 0), (0, 3), (3, 1)])
    assert canonical_g6(c5) == canonical_g6(relabeled)
    with pytest.raises(CapacityError):
        canonical_g6(make_graph(8))
