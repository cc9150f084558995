"""Immutable labeled simple undirected graphs on at most 64 vertices.

A graph built by :func:`make_graph` carries labels ``0..n-1``.  Deleting
vertices or taking induced subgraphs keeps the surviving *original* labels,
so a vertex stays addressable by the same label throughout a run of
deletions.  Adjacency is stored as one bitmask row per vertex position;
positions index the ascending label tuple.

All operations are pure and all values hashable, so graphs can be shared
freely between threads or worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class CapacityError(Exception):
    """An input exceeds a hard size cap of this build."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_components(rows: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as masks.

    Components come out ordered by their smallest member position.
    """
    comps = []
    todo = mask
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def mask_connected(rows: Sequence[int], mask: int) -> bool:
    """True when the subgraph induced on ``mask`` is connected (and nonempty)."""
    if mask == 0:
        return False
    seed = mask & -mask
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def mask_co_connected(rows: Sequence[int], mask: int) -> bool:
    """True when the *complement* of the subgraph induced on ``mask`` is connected."""
    if mask == 0:
        return False
    seed = mask & -mask
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= ~rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def mask_co_component_of(rows: Sequence[int], mask: int, seed: int) -> int:
    """Complement-component of ``mask`` containing the single-bit mask ``seed``."""
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= ~rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp


@dataclass(frozen=True)
class Graph:
    """A labeled simple graph: ascending ``labels`` plus bitmask adjacency ``rows``.

    ``rows[i]`` holds one bit per *position* (index into ``labels``), never a
    self-loop bit.  Instances compare equal exactly when they have the same
    labels and the same edges.
    """

    labels: tuple[int, ...]
    rows: tuple[int, ...]

    @cached_property
    def _posmap(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.labels)}

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def position(self, v: int) -> int:
        try:
            return self._posmap[v]
        except KeyError:
            raise ValueError(f"unknown vertex label {v}") from None

    def _labels_of(self, mask: int) -> frozenset[int]:
        labels = self.labels
        return frozenset(labels[i] for i in _bits(mask))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[self.position(u)] >> self.position(v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted label pairs, ascending."""
        out = []
        labels = self.labels
        for i, row in enumerate(self.rows):
            high = row >> (i + 1) << (i + 1)
            for j in _bits(high):
                out.append((labels[i], labels[j]))
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def complement(self) -> "Graph":
        full = self.full_mask
        rows = tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.rows))
        return Graph(self.labels, rows)

    def induced(self, members: Iterable[int]) -> "Graph":
        """Subgraph induced on ``members``; original labels are kept."""
        keep = sorted(set(members))
        pos = [self.position(v) for v in keep]
        rows = []
        for i in pos:
            old = self.rows[i]
            row = 0
            for nj, j in enumerate(pos):
                if old >> j & 1:
                    row |= 1 << nj
            rows.append(row)
        return Graph(tuple(keep), tuple(rows))

    def delete(self, members: Iterable[int]) -> "Graph":
        """Graph with ``members`` removed; equivalent to inducing on the rest."""
        gone = set(members)
        for v in gone:
            self.position(v)
        return self.induced(v for v in self.labels if v not in gone)

    def components(self) -> list[frozenset[int]]:
        """Vertex sets of the connected components, ordered by smallest label."""
        return [self._labels_of(m) for m in mask_components(self.rows, self.full_mask)]

    def is_connected(self) -> bool:
        return mask_connected(self.rows, self.full_mask)

    def neighborhood(self, v: int, closed: bool = False) -> frozenset[int]:
        i = self.position(v)
        mask = self.rows[i]
        if closed:
            mask |= 1 << i
        return self._labels_of(mask)

    def articulation_points(self) -> frozenset[int]:
        """Vertices whose removal splits their own component.

        Classic DFS low-point computation, run once per component, so the
        result is meaningful for disconnected graphs as well.
        """
        n = len(self.labels)
        rows = self.rows
        disc = [-1] * n
        low = [0] * n
        found: set[int] = set()
        clock = 0

        def visit(u: int, parent: int) -> None:
            nonlocal clock
            disc[u] = low[u] = clock
            clock += 1
            children = 0
            for w in _bits(rows[u]):
                if disc[w] < 0:
                    children += 1
                    visit(w, u)
                    low[u] = min(low[u], low[w])
                    if parent >= 0 and low[w] >= disc[u]:
                        found.add(u)
                elif w != parent:
                    low[u] = min(low[u], disc[w])
            if parent < 0 and children > 1:
                found.add(u)

        for s in range(n):
            if disc[s] < 0:
                visit(s, -1)
        return frozenset(self.labels[i] for i in found)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(labels={list(self.labels)}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph on labels ``0..n-1`` from an edge list.

    Duplicate and reversed pairs collapse to a single undirected edge.
    Rejects self-loops, out-of-range endpoints and ``n`` beyond the
    64-vertex cap.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"at most {MAX_VERTICES} vertices supported, got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(tuple(range(n)), tuple(rows))
