"""Witness records for one- and two-part biclique partitions.

A *biclique part* is a vertex set whose induced subgraph carries a spanning
complete bipartite subgraph (sides ``X``/``Y``), or is a single vertex, in
which case the right side is recorded empty.  The validators here re-check a
witness against a concrete graph and return a rejection reason instead of
raising, so they can serve as adversarial-input checkers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

Sides = tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class StarBicliqueWitness:
    """A partition of the vertex set into a star part and a biclique part."""

    star_part: frozenset[int]
    center: int
    biclique_part: frozenset[int]
    biclique_sides: Sides


@dataclass(frozen=True)
class TwoBicliquePartition:
    """One or two biclique parts covering the vertex set.

    ``part2 is None`` encodes a one-part cover (the whole graph is a single
    biclique).
    """

    part1: frozenset[int]
    sides1: Sides
    part2: frozenset[int] | None = None
    sides2: Sides | None = None

    @property
    def parts(self) -> list[tuple[frozenset[int], Sides]]:
        out = [(self.part1, self.sides1)]
        if self.part2 is not None:
            assert self.sides2 is not None
            out.append((self.part2, self.sides2))
        return out


def _sides_error(g: Graph, part: frozenset[int], sides: Sides) -> str | None:
    """Check that ``sides`` witness a spanning complete bipartite subgraph on ``part``."""
    x, y = sides
    if x | y != part or x & y:
        return f"sides {sorted(x)} / {sorted(y)} do not partition part {sorted(part)}"
    if len(part) == 1:
        if not y and len(x) == 1:
            return None
        return f"single-vertex part {sorted(part)} must have sides ({sorted(part)}, empty)"
    if not x or not y:
        return f"empty side in multi-vertex part {sorted(part)}"
    for u in x:
        for v in y:
            if not g.has_edge(u, v):
                return f"pair ({u}, {v}) is not an edge"
    return None


def partition_error(g: Graph, cert: TwoBicliquePartition) -> str | None:
    """Reason the partition is not a valid biclique cover of ``g``, else ``None``.

    Polynomial: one pass over the recorded parts and side pairs.
    """
    seen: set[int] = set()
    vertices = g.vertex_set
    for part, sides in cert.parts:
        if not part:
            return "empty part"
        if not part <= vertices:
            return f"labels {sorted(part - vertices)} outside the graph"
        if part & seen:
            return f"parts overlap on {sorted(part & seen)}"
        seen |= part
        err = _sides_error(g, part, sides)
        if err is not None:
            return err
    if seen != vertices:
        return f"vertices {sorted(vertices - seen)} not covered"
    return None


def star_witness_error(g: Graph, w: StarBicliqueWitness) -> str | None:
    """Reason the star-biclique witness is invalid for ``g``, else ``None``."""
    vertices = g.vertex_set
    if not w.star_part or not w.biclique_part:
        return "empty part"
    if w.star_part & w.biclique_part:
        return "parts overlap"
    if w.star_part | w.biclique_part != vertices:
        return "parts do not cover the vertex set"
    if w.center not in w.star_part:
        return f"center {w.center} outside the star part"
    for v in w.star_part:
        if v != w.center and not g.has_edge(w.center, v):
            return f"center {w.center} not adjacent to star member {v}"
    return _sides_error(g, w.biclique_part, w.biclique_sides)
