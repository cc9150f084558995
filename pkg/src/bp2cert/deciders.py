"""Polynomial-time decision procedures for biclique vertex partitions.

The core facts used here:

* a multi-vertex graph is coverable by one biclique exactly when its
  complement is disconnected;
* a graph other than the one- and two-vertex edgeless graphs is coverable by
  two bicliques exactly when its complement is disconnected, has a cut
  vertex, or has a vertex cut that induces a disconnected subgraph.

The last clause has no known polynomial test and is delegated to the
exhaustive cut enumeration in :mod:`bp2cert.oracle`, so ``decide_bp2`` is
only polynomial in its first two clauses.
"""

from __future__ import annotations

from typing import Sequence

from . import oracle
from .graphs import CapacityError, Graph, mask_co_connected, mask_components
from .witnesses import StarBicliqueWitness


def _member_mask(g: Graph, p: frozenset[int] | set[int]) -> int:
    mask = 0
    for v in p:
        mask |= 1 << g.position(v)
    return mask


def part_is_biclique(
    g: Graph, p: frozenset[int] | set[int]
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Sides of a spanning complete bipartite subgraph on ``p``, or ``None``.

    Decided through the complement: a multi-vertex part qualifies exactly
    when the complement of its induced subgraph is disconnected, and the
    sides are one complement component against the rest.  A single vertex is
    witnessed by ``({v}, empty)``.
    """
    mask = _member_mask(g, p)
    if mask == 0:
        raise ValueError("empty part")
    sides = oracle._biclique_part_mask(g.rows, mask)
    if sides is None:
        return None
    return g._labels_of(sides[0]), g._labels_of(sides[1])


def part_is_star(g: Graph, p: frozenset[int] | set[int]) -> int | None:
    """Smallest label in ``p`` adjacent to every other member, or ``None``."""
    mask = _member_mask(g, p)
    if mask == 0:
        raise ValueError("empty part")
    center = oracle._star_center_mask(g.rows, mask)
    return None if center is None else g.labels[center]


def is_bp1(g: Graph) -> bool:
    """Can the whole vertex set be covered by a single biclique?"""
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        return True
    return not mask_co_connected(g.rows, g.full_mask)


def decide_bp2(g: Graph, cap: int = oracle.DEFAULT_CAP) -> bool:
    """Can the vertex set be covered by at most two bicliques?

    Characterization on the complement: disconnected, or connected with a
    cut vertex, or connected with a disconnected vertex cut.  The one- and
    two-vertex edgeless graphs are unconditional members.  The third clause
    enumerates cuts exhaustively and therefore refuses graphs above ``cap``
    vertices when it is reached.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1 or (g.n == 2 and g.edge_count == 0):
        return True
    cg = g.complement()
    if not cg.is_connected():
        return True
    if cg.articulation_points():
        return True
    if g.n > cap:
        raise CapacityError(
            f"disconnected-cut clause is exponential; {g.n} vertices exceeds the cap of {cap}"
        )
    return bool(oracle.disconnected_vertex_cuts(cg, find_first=True, cap=cap))


def nbp2_necessary(g: Graph) -> bool:
    """Fast necessary condition for needing more than two biclique parts.

    Checks, on the complement graph: every open neighborhood induces a
    connected subgraph on at least two vertices, every vertex reaches every
    other within two steps, and every nonadjacent pair has a common
    neighbor.  Graphs failing any of these are certainly two-part coverable,
    so this serves as a cheap pre-filter.
    """
    if g.n < 3:
        raise ValueError(f"need at least three vertices, got {g.n}")
    cg = g.complement()
    rows = cg.rows
    n = cg.n
    full = cg.full_mask
    for i in range(n):
        nbrs = rows[i]
        if nbrs.bit_count() < 2:
            return False
        if len(mask_components(rows, nbrs)) != 1:
            return False
        reach = nbrs | (1 << i)
        m = nbrs
        while m:
            low = m & -m
            reach |= rows[low.bit_length() - 1]
            m ^= low
        if reach != full:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            if not rows[i] >> j & 1 and not rows[i] & rows[j]:
                return False
    return True


def _star_biclique_split(rows: Sequence[int], mask: int) -> tuple[int, int, int] | None:
    """Case analysis for a star-part / biclique-part split of ``mask``.

    Returns ``(star_mask, center_position, biclique_mask)`` or ``None``.
    Scans candidate centers in ascending position order; for each center the
    cases below are tried in order, so the first hit is deterministic.

    disconnected graph
        Two components only; the center's own component must be spanned by a
        star around it and the other component must be a biclique part.
    connected graph, center ``v``
        (1) the rest of the graph is one biclique part: star ``{v}``;
        (2) the non-neighbors of ``v`` form a biclique part: star ``N[v]``;
        (3) otherwise move the neighbors of ``v`` that have a non-neighbor
            among ``v``'s non-neighbors into the star; this succeeds exactly
            when that set is a nonempty proper subset of the neighborhood.
    """
    comps = mask_components(rows, mask)
    if len(comps) > 2:
        return None
    if len(comps) == 2:
        first, second = comps
        m = mask
        while m:
            vb = m & -m
            m ^= vb
            own, other = (first, second) if vb & first else (second, first)
            i = vb.bit_length() - 1
            if rows[i] & own != own ^ vb:
                continue
            if oracle._biclique_part_mask(rows, other) is not None:
                return own, i, other
        return None
    m = mask
    while m:
        vb = m & -m
        m ^= vb
        i = vb.bit_length() - 1
        rest = mask ^ vb
        if rest & (rest - 1) == 0 or not mask_co_connected(rows, rest):
            return vb, i, rest
        nbrs = rows[i] & mask
        outside = mask & ~nbrs & ~vb
        if not outside:
            # Center dominates the graph but its removal leaves no biclique
            # part; no split centered here remains possible.
            continue
        if oracle._biclique_part_mask(rows, outside) is not None:
            return vb | nbrs, i, outside
        moved = 0
        nm = nbrs
        while nm:
            ub = nm & -nm
            nm ^= ub
            if ~rows[ub.bit_length() - 1] & outside:
                moved |= ub
        if moved == nbrs:
            continue
        if moved == 0:
            raise AssertionError("no boundary neighbors, yet deleting the center left no biclique part")
        return vb | moved, i, mask ^ vb ^ moved
    return None


def star_biclique_poly(g: Graph) -> StarBicliqueWitness | None:
    """Find a star-part / biclique-part split of the vertex set, if one exists.

    Polynomial case analysis per candidate center (see
    :func:`_star_biclique_split`).  Complete for graphs that are two-part but
    not one-part partitionable; on other inputs it may miss a split but any
    witness it returns is structurally valid.
    """
    if g.n < 2:
        raise ValueError(f"need at least two vertices, got {g.n}")
    split = _star_biclique_split(g.rows, g.full_mask)
    if split is None:
        return None
    star, center, biclique = split
    sides = oracle._biclique_part_mask(g.rows, biclique)
    assert sides is not None
    return StarBicliqueWitness(
        g._labels_of(star),
        g.labels[center],
        g._labels_of(biclique),
        (g._labels_of(sides[0]), g._labels_of(sides[1])),
    )
