"""Exponential-time ground truth for biclique-partition questions.

Everything here decides membership straight from the definitions by subset
or bipartition enumeration, independent of the polynomial procedures in
:mod:`bp2cert.deciders`, so the two can be tested against each other.

Enumeration order is pinned everywhere: subsets are ranked by their binary
encoding over vertex positions, and a bipartition ``[A, B]`` always keeps
the smallest label in ``A``.  The first hit in that order is returned, which
makes every oracle deterministic across runs and platforms.

Each entry point refuses graphs above ``DEFAULT_CAP`` vertices unless the
caller raises ``cap`` explicitly; the search spaces grow as ``2**n`` or
worse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .graphs import CapacityError, Graph, mask_co_component_of, mask_connected
from .witnesses import StarBicliqueWitness, TwoBicliquePartition

DEFAULT_CAP = 16

Family = Literal["bp2_minus_bp1", "not_bp2"]


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapacityError(f"{what} is exponential; {g.n} vertices exceeds the cap of {cap}")


def _bit_list(mask: int) -> list[int]:
    """Set bits of ``mask`` as single-bit masks, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low)
        mask ^= low
    return out


def _bp1_sides_mask(rows: Sequence[int], mask: int) -> tuple[int, int] | None:
    """First bipartition ``(A, B)`` of ``mask`` with every A-B pair an edge.

    ``A`` contains the lowest position of ``mask``; candidates are scanned in
    ascending binary-encoding order.  A single vertex yields ``(mask, 0)``.

    The scan is table-driven: subsets of the non-pinned positions are indexed
    by a counter, and the running intersection of their adjacency rows is
    built by one AND per counter value, so each candidate costs a handful of
    mask operations regardless of its size.
    """
    if mask & (mask - 1) == 0:
        return mask, 0
    low = mask & -mask
    other = mask ^ low
    if other & (other - 1) == 0:
        if rows[low.bit_length() - 1] & other:
            return low, other
        return None
    rest = _bit_list(other)
    k = len(rest)
    rest_rows = [rows[b.bit_length() - 1] for b in rest]
    size = 1 << k
    spread = [0] * size
    inter = [-1] * size
    low_row = rows[low.bit_length() - 1]
    for c in range(size):
        if c:
            lb = c & -c
            prev = c ^ lb
            j = lb.bit_length() - 1
            spread[c] = spread[prev] | rest[j]
            inter[c] = inter[prev] & rest_rows[j]
        a = low | spread[c]
        b = mask ^ a
        if b and (low_row & inter[c]) & b == b:
            return a, b
    return None


def _bp2_present_mask(rows: Sequence[int], mask: int) -> bool:
    """Definitional membership test: can ``mask`` be split into <= 2 biclique parts?"""
    if mask == 0:
        return False
    if _bp1_sides_mask(rows, mask) is not None:
        return True
    low = mask & -mask
    rest = _bit_list(mask ^ low)
    size = 1 << len(rest)
    spread = [0] * size
    for c in range(size):
        if c:
            lb = c & -c
            spread[c] = spread[c ^ lb] | rest[lb.bit_length() - 1]
        p1 = low | spread[c]
        p2 = mask ^ p1
        if not p2:
            continue
        # Both parts must pass; probing the smaller one first fails cheaper.
        if p1.bit_count() > p2.bit_count():
            p1, p2 = p2, p1
        if _bp1_sides_mask(rows, p1) is not None and _bp1_sides_mask(rows, p2) is not None:
            return True
    return False


def _star_center_mask(rows: Sequence[int], mask: int) -> int | None:
    """Lowest position in ``mask`` adjacent to every other member, if any."""
    if mask & (mask - 1) == 0:
        return mask.bit_length() - 1
    m = mask
    while m:
        vb = m & -m
        i = vb.bit_length() - 1
        if rows[i] & mask == mask ^ vb:
            return i
        m ^= vb
    return None


def _biclique_part_mask(rows: Sequence[int], mask: int) -> tuple[int, int] | None:
    """Sides of a spanning complete bipartite subgraph on ``mask``, if one exists.

    Uses the complement-connectivity equivalence: a multi-vertex set is a
    biclique part exactly when the complement of its induced subgraph is
    disconnected.  The left side is the complement-component of the lowest
    position.
    """
    if mask == 0:
        return None
    if mask & (mask - 1) == 0:
        return mask, 0
    x = mask_co_component_of(rows, mask, mask & -mask)
    if x == mask:
        return None
    return x, mask ^ x


def _star_split_present_mask(rows: Sequence[int], mask: int) -> bool:
    """Does ``mask`` split into a star part plus a biclique part?

    Pure presence test over unordered complements of the star side; used by
    the deletion-depth tree where the witness itself is not needed.
    """
    if mask == 0 or mask & (mask - 1) == 0:
        return False
    sub = (mask - 1) & mask
    while sub:
        if _star_center_mask(rows, sub) is not None and _biclique_part_mask(rows, mask ^ sub) is not None:
            return True
        sub = (sub - 1) & mask
    return False


def bp1_oracle(g: Graph, cap: int = DEFAULT_CAP) -> tuple[frozenset[int], frozenset[int]] | None:
    """Sides of a spanning complete bipartite subgraph of ``g``, by brute force.

    Searches all ``2**(n-1) - 1`` bipartitions for one with every cross pair
    present; a one-vertex graph is witnessed by ``({v}, empty)``.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    _check_cap(g, cap, "bipartition search")
    sides = _bp1_sides_mask(g.rows, g.full_mask)
    if sides is None:
        return None
    return g._labels_of(sides[0]), g._labels_of(sides[1])


def bp2_oracle(g: Graph, cap: int = DEFAULT_CAP) -> TwoBicliquePartition | None:
    """First two-biclique partition of ``g`` in canonical order, by brute force.

    A one-part result is preferred when the whole graph is a biclique;
    otherwise every split ``[P1, P2]`` with the smallest label in ``P1`` is
    tried in ascending encoding order, testing both parts with the
    bipartition search above.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    _check_cap(g, cap, "two-part split search")
    rows = g.rows
    full = g.full_mask
    sides = _bp1_sides_mask(rows, full)
    if sides is not None:
        return TwoBicliquePartition(g._labels_of(full), (g._labels_of(sides[0]), g._labels_of(sides[1])))
    low = full & -full
    rest = _bit_list(full ^ low)
    size = 1 << len(rest)
    spread = [0] * size
    for c in range(size):
        if c:
            lb = c & -c
            spread[c] = spread[c ^ lb] | rest[lb.bit_length() - 1]
        p1 = low | spread[c]
        p2 = full ^ p1
        if not p2:
            continue
        if p1.bit_count() <= p2.bit_count():
            s1 = _bp1_sides_mask(rows, p1)
            s2 = _bp1_sides_mask(rows, p2) if s1 is not None else None
        else:
            s2 = _bp1_sides_mask(rows, p2)
            s1 = _bp1_sides_mask(rows, p1) if s2 is not None else None
        if s1 is None or s2 is None:
            continue
        return TwoBicliquePartition(
            g._labels_of(p1),
            (g._labels_of(s1[0]), g._labels_of(s1[1])),
            g._labels_of(p2),
            (g._labels_of(s2[0]), g._labels_of(s2[1])),
        )
    return None


def star_biclique_oracle(g: Graph, cap: int = DEFAULT_CAP) -> StarBicliqueWitness | None:
    """First star-part / biclique-part split of ``g`` in canonical order.

    Exhaustive over ordered splits: the candidate star part runs through all
    proper nonempty subsets by ascending encoding; its complement must carry
    a spanning complete bipartite subgraph.
    """
    if g.n < 2:
        raise ValueError(f"need at least two vertices, got {g.n}")
    _check_cap(g, cap, "star split search")
    rows = g.rows
    full = g.full_mask
    for p1 in range(1, full):
        center = _star_center_mask(rows, p1)
        if center is None:
            continue
        sides = _biclique_part_mask(rows, full ^ p1)
        if sides is None:
            continue
        return StarBicliqueWitness(
            g._labels_of(p1),
            g.labels[center],
            g._labels_of(full ^ p1),
            (g._labels_of(sides[0]), g._labels_of(sides[1])),
        )
    return None


def disconnected_vertex_cuts(
    g: Graph, find_first: bool = False, cap: int = DEFAULT_CAP
) -> list[frozenset[int]]:
    """All vertex cuts of connected ``g`` that induce a disconnected subgraph.

    A qualifying set ``X`` has ``2 <= |X| <= n-2``, removing it disconnects
    the graph, and ``X`` itself induces a disconnected subgraph.  Results are
    ordered by ascending subset encoding; ``find_first`` truncates after the
    first hit.
    """
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    _check_cap(g, cap, "vertex-cut enumeration")
    rows = g.rows
    full = g.full_mask
    out = []
    for x in range(1, full):
        k = x.bit_count()
        if k < 2 or k > g.n - 2:
            continue
        if not mask_connected(rows, full ^ x) and not mask_connected(rows, x):
            out.append(g._labels_of(x))
            if find_first:
                break
    return out


def max_bp2_subset(g: Graph, cap: int = DEFAULT_CAP) -> frozenset[int]:
    """Largest vertex set whose induced subgraph splits into <= 2 biclique parts.

    Scans cardinalities downward; within a cardinality, subsets go by
    ascending encoding.  Any 2-subset qualifies, so the search always
    succeeds for ``n >= 2``.
    """
    if g.n < 2:
        raise ValueError(f"need at least two vertices, got {g.n}")
    _check_cap(g, cap, "subset search")
    rows = g.rows
    full = g.full_mask
    for k in range(g.n, 1, -1):
        for mask in range(1, full + 1):
            if mask.bit_count() != k:
                continue
            if _bp2_present_mask(rows, mask):
                return g._labels_of(mask)
    raise AssertionError("unreachable: every 2-subset is two single-vertex bicliques")


def max_bp1_split(
    g: Graph, a: frozenset[int] | set[int], cap: int = DEFAULT_CAP
) -> tuple[frozenset[int], frozenset[int]]:
    """Split ``a`` into biclique parts ``(B, C)`` with ``B`` of largest cardinality.

    Requires the subgraph induced on ``a`` to be two-part but not one-part
    partitionable (checked here against the brute-force tests).  Both
    returned parts are nonempty biclique parts of ``g``.
    """
    amask = 0
    for v in a:
        amask |= 1 << g.position(v)
    if amask == 0:
        raise ValueError("empty vertex set")
    _check_cap(g, cap, "split search")
    rows = g.rows
    if _bp1_sides_mask(rows, amask) is not None or not _bp2_present_mask(rows, amask):
        raise ValueError("set must induce a two-part-only partitionable subgraph")
    size = amask.bit_count()
    for k in range(size - 1, 0, -1):
        for b in range(1, amask + 1):
            if b & ~amask or b.bit_count() != k:
                continue
            c = amask ^ b
            if _bp1_sides_mask(rows, b) is not None and _bp1_sides_mask(rows, c) is not None:
                return g._labels_of(b), g._labels_of(c)
    raise AssertionError("unreachable: a two-part split exists by precondition")


def _in_family_mask(rows: Sequence[int], mask: int, family: Family) -> bool:
    if mask == 0:
        return False
    if family == "not_bp2":
        return not _bp2_present_mask(rows, mask)
    return _bp2_present_mask(rows, mask) and _bp1_sides_mask(rows, mask) is None


def first_unsafe_prefix(
    g: Graph, seq: Sequence[int], family: Family, cap: int = DEFAULT_CAP
) -> int | None:
    """Smallest prefix length whose deletion leaves ``g`` outside ``family``.

    Prefix length 0 checks the graph itself.  ``None`` means every prefix
    stays inside the family.  Membership is decided by the brute-force
    oracles, never the polynomial deciders.
    """
    order = tuple(seq)
    if len(set(order)) != len(order):
        raise ValueError("sequence labels must be distinct")
    positions = [g.position(v) for v in order]
    _check_cap(g, cap, "family membership check")
    rows = g.rows
    mask = g.full_mask
    if not _in_family_mask(rows, mask, family):
        return 0
    for i, pos in enumerate(positions, start=1):
        mask ^= 1 << pos
        if not _in_family_mask(rows, mask, family):
            return i
    return None


def safe_check(g: Graph, seq: Sequence[int], family: Family, cap: int = DEFAULT_CAP) -> bool:
    """True when every prefix deletion of ``seq`` keeps the graph in ``family``."""
    return first_unsafe_prefix(g, seq, family, cap=cap) is None


@dataclass(frozen=True)
class DeletionDepthReport:
    """Depth statistics of the first star/biclique-splittable graph under deletions."""

    min_depth: int
    max_depth: int
    uniform: bool


def deletion_depths(g: Graph, cap: int = DEFAULT_CAP) -> DeletionDepthReport:
    """Explore all deletion orders until a star/biclique split first appears.

    The search tree is pruned at each subgraph admitting a split and memoized
    on surviving vertex sets, so the cost is ``O(2**n)`` subgraphs rather
    than factorial.  Requires the input to be two-part but not one-part
    partitionable; every two-vertex graph splits, so recursion grounds out.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    _check_cap(g, cap, "deletion tree search")
    rows = g.rows
    if _bp1_sides_mask(rows, g.full_mask) is not None or not _bp2_present_mask(rows, g.full_mask):
        raise ValueError("graph must be two-part-only partitionable")
    memo: dict[int, tuple[int, int]] = {}

    def depths(mask: int) -> tuple[int, int]:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        if _star_split_present_mask(rows, mask):
            memo[mask] = (0, 0)
            return 0, 0
        assert mask.bit_count() > 2, "two-vertex graphs always split"
        lo = None
        hi = None
        m = mask
        while m:
            vb = m & -m
            m ^= vb
            a, b = depths(mask ^ vb)
            lo = a if lo is None or a < lo else lo
            hi = b if hi is None or b > hi else hi
        assert lo is not None and hi is not None
        memo[mask] = (1 + lo, 1 + hi)
        return memo[mask]

    mn, mx = depths(g.full_mask)
    return DeletionDepthReport(mn, mx, mn == mx)
