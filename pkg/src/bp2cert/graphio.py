"""Graph serialization, named constructors, random and exhaustive generation.

The interchange format is graph6 (short form, up to 62 vertices): a size
byte ``n + 63`` followed by the upper-triangle adjacency bits in column
order ``(0,1), (0,2), (1,2), (0,3), ...``, packed big-endian into 6-bit
groups, each offset by 63 into the printable range.  Serialization is
positional: original labels of derived graphs are not retained.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from .graphs import CapacityError, Graph, make_graph

G6_MAX = 62
ENUMERATION_MAX = 8
_HEADER = ">>graph6<<"


@lru_cache(maxsize=None)
def _pair_order(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def g6_encode(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header)."""
    n = g.n
    if n > G6_MAX:
        raise CapacityError(f"graph6 short form supports at most {G6_MAX} vertices, got {n}")
    rows = g.rows
    out = [chr(n + 63)]
    group = 0
    width = 0
    for i, j in _pair_order(n):
        group = group << 1 | (rows[i] >> j & 1)
        width += 1
        if width == 6:
            out.append(chr(group + 63))
            group = 0
            width = 0
    if width:
        out.append(chr((group << (6 - width)) + 63))
    return "".join(out)


def g6_decode(text: str) -> Graph:
    """Decode a graph6 string; a leading ``>>graph6<<`` header is accepted."""
    data = text.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise ValueError("empty graph6 string")
    size = ord(data[0]) - 63
    if size < 0 or ord(data[0]) > 126:
        raise ValueError(f"malformed graph6 size byte {data[0]!r}")
    if size > G6_MAX:
        raise ValueError(f"graph6 inputs beyond {G6_MAX} vertices are not supported")
    pairs = _pair_order(size)
    want = (len(pairs) + 5) // 6
    body = data[1:]
    if len(body) != want:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {want} for n={size}")
    rows = [0] * size
    for k, (i, j) in enumerate(pairs):
        val = ord(body[k // 6]) - 63
        if val < 0 or val > 63:
            raise ValueError(f"malformed graph6 byte {body[k // 6]!r}")
        if val >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(tuple(range(size)), tuple(rows))


def edgelist_emit(g: Graph) -> str:
    """Emit ``n <count>`` followed by one sorted ``u v`` line per edge."""
    lines = [f"n {g.n}"]
    pos = {v: i for i, v in enumerate(g.labels)}
    for u, v in g.edges():
        lines.append(f"{pos[u]} {pos[v]}")
    return "\n".join(lines)


def edgelist_parse(text: str) -> Graph:
    """Parse the edge-list format produced by :func:`edgelist_emit`."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"first line must be 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ValueError(f"bad vertex count {head[1]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad edge line {ln!r}") from None
        edges.append((u, v))
    return make_graph(n, edges)


def _cycle_edges(offset: int, length: int) -> list[tuple[int, int]]:
    return [(offset + i, offset + (i + 1) % length) for i in range(length)]


def named(name: str, *params: int) -> Graph:
    """Standard constructions with ascending labels.

    ``empty(n)``, ``complete(n)``, ``path(n)``, ``cycle(n)``,
    ``complete_bipartite(m, k)`` with sides ``0..m-1`` and ``m..m+k-1``,
    ``star(k)`` = ``complete_bipartite(1, k)``, and
    ``disjoint_union_of_cycles(l1, l2, ...)``.
    """

    def arity(k: int) -> None:
        if len(params) != k:
            raise ValueError(f"{name} takes {k} parameter(s), got {len(params)}")

    if name == "empty":
        arity(1)
        return make_graph(params[0])
    if name == "complete":
        arity(1)
        n = params[0]
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if name == "path":
        arity(1)
        n = params[0]
        if n < 1:
            raise ValueError("path needs at least one vertex")
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        arity(1)
        n = params[0]
        if n < 3:
            raise ValueError("cycle needs at least three vertices")
        return make_graph(n, _cycle_edges(0, n))
    if name == "complete_bipartite":
        arity(2)
        m, k = params
        if m < 1 or k < 1:
            raise ValueError("complete_bipartite needs two positive side sizes")
        return make_graph(m + k, [(i, m + j) for i in range(m) for j in range(k)])
    if name == "star":
        arity(1)
        if params[0] < 1:
            raise ValueError("star needs at least one leaf")
        return named("complete_bipartite", 1, params[0])
    if name == "disjoint_union_of_cycles":
        if not params:
            raise ValueError("disjoint_union_of_cycles needs at least one cycle length")
        edges = []
        offset = 0
        for length in params:
            if length < 3:
                raise ValueError("cycle needs at least three vertices")
            edges.extend(_cycle_edges(offset, length))
            offset += length
        return make_graph(offset, edges)
    raise ValueError(f"unknown graph name {name!r}")


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Independent-edge random graph; identical for identical ``(n, p, seed)``.

    Pairs are drawn in row order ``(0,1), (0,2), ..., (n-2,n-1)`` from a
    dedicated Mersenne generator, which Python keeps platform-stable.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    return make_graph(n, edges)


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def labeled_graph_count(n: int) -> int:
    return 1 << pair_count(n)


def graph_from_index(n: int, index: int) -> Graph:
    """The ``index``-th labeled graph on ``n`` vertices.

    Bit ``k`` of ``index`` switches the ``k``-th pair of the graph6 column
    order, so enumeration index and graph6 bit pattern agree.
    """
    rows = [0] * n
    for k, (i, j) in enumerate(_pair_order(n)):
        if index >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(tuple(range(n)), tuple(rows))


def enumerate_labeled(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Stream every labeled graph on ``n`` vertices in ascending index order.

    ``start``/``stop`` select an index range so the stream can be split
    across workers; splits are independent and together cover each graph
    exactly once.
    """
    if not 1 <= n <= ENUMERATION_MAX:
        raise CapacityError(f"enumeration supports 1..{ENUMERATION_MAX} vertices, got {n}")
    total = labeled_graph_count(n)
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad index range [{start}, {stop}) for n={n}")
    for index in range(start, stop):
        yield graph_from_index(n, index)


def canonical_g6(g: Graph) -> str:
    """Minimum graph6 encoding over all vertex relabelings.

    Factorial-time dedupe helper for small orders only; the audit pipeline
    does not use it by default.
    """
    from itertools import permutations

    if g.n > 7:
        raise CapacityError(f"canonical form supported up to 7 vertices, got {g.n}")
    base = sorted(g.labels)
    edges = g.edges()
    best = None
    for perm in permutations(range(g.n)):
        relabel = {base[i]: perm[i] for i in range(g.n)}
        h = make_graph(g.n, [(relabel[u], relabel[v]) for u, v in edges])
        enc = g6_encode(h)
        if best is None or enc < best:
            best = enc
    assert best is not None
    return best
