"""Certificates of two-biclique partitionability and of its impossibility.

Membership is witnessed by a :class:`TwoBicliquePartition`.  Non-membership
is witnessed by a deletion order of ``n - 3`` vertices every prefix of which
leaves a graph that still needs more than two biclique parts; such an order
always ends at the three-vertex edgeless graph, and :func:`verify_nbp2`
checks it in polynomial time by watching for star/biclique splits along the
way.

``gen_safe_sequence`` builds a candidate order by a fixed greedy recipe and
then *validates it against the brute-force oracles*; when validation fails
the failure is reported instead of trusted, because the recipe is not sound
for every input (the 7-cycle already defeats it: deleting any vertex leaves
a 6-path, which splits into two paths of three).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from . import oracle
from .deciders import _star_biclique_split, is_bp1
from .graphs import CapacityError, Graph
from .witnesses import TwoBicliquePartition, partition_error


@dataclass(frozen=True)
class SafeSequence:
    """Deletion order certifying that a graph needs more than two biclique parts."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class SafeSequenceFailure:
    """Why sequence construction failed; ``prefix`` holds the deletions up to the first bad graph."""

    reason: str
    prefix: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Member:
    partition: TwoBicliquePartition


@dataclass(frozen=True)
class NonMember:
    sequence: SafeSequence


@dataclass(frozen=True)
class Uncertifiable:
    reason: str


Certificate = Union[Member, NonMember, Uncertifiable]


class VerifyResult(NamedTuple):
    accepted: bool
    reason: str | None

    @staticmethod
    def accept() -> "VerifyResult":
        return VerifyResult(True, None)

    @staticmethod
    def reject(reason: str) -> "VerifyResult":
        return VerifyResult(False, reason)


def check_bp2_cert(g: Graph, cert: TwoBicliquePartition) -> bool:
    """Polynomial check that ``cert`` is a valid biclique cover of ``g``.

    Adversarial input is rejected (with a reason available through
    :func:`bp2cert.witnesses.partition_error`), never raised on.
    """
    return partition_error(g, cert) is None


def verify_nbp2(g: Graph, seq: SafeSequence | Sequence[int]) -> VerifyResult:
    """Polynomial verifier for more-than-two-biclique-parts certificates.

    Accepts exactly when ``g`` needs more than two biclique parts and
    ``seq`` is a safe deletion order of ``n - 3`` vertices.  Total on
    adversarial input: every failure mode is a rejection with a reason.

    The loop runs at most ``n - 3`` deletions; each round first rejects if
    the current graph splits into a star part and a biclique part, then
    accepts if the current graph is the three-vertex edgeless graph, then
    deletes the next vertex of the sequence.
    """
    order = tuple(seq.order) if isinstance(seq, SafeSequence) else tuple(seq)
    n = g.n
    if n < 3:
        return VerifyResult.reject("graph has fewer than three vertices")
    if len(order) != n - 3:
        return VerifyResult.reject(f"sequence has {len(order)} vertices, expected {n - 3}")
    if len(set(order)) != len(order):
        return VerifyResult.reject("duplicate vertex label in sequence")
    posmap = g._posmap
    try:
        positions = [posmap[v] for v in order]
    except KeyError as exc:
        return VerifyResult.reject(f"unknown vertex label {exc.args[0]}")
    if is_bp1(g):
        return VerifyResult.reject("graph is coverable by a single biclique")
    rows = g.rows
    alive = g.full_mask
    cursor = 0
    while True:
        if _star_biclique_split(rows, alive) is not None:
            return VerifyResult.reject("star-biclique partition found")
        if alive.bit_count() == 3:
            m = alive
            edgeless = True
            while m:
                low = m & -m
                if rows[low.bit_length() - 1] & alive:
                    edgeless = False
                    break
                m ^= low
            if edgeless:
                return VerifyResult.accept()
        if cursor >= len(positions):
            # Unreachable when the length check above passed, but kept as a
            # hard stop against any counting mistake.
            return VerifyResult.reject("sequence exhausted before reaching three vertices")
        alive ^= 1 << positions[cursor]
        cursor += 1


def gen_safe_sequence(
    g: Graph, cap: int = oracle.DEFAULT_CAP
) -> SafeSequence | SafeSequenceFailure:
    """Construct and validate a safe deletion order of ``n - 3`` vertices.

    Recipe: take a largest subset ``A`` whose induced subgraph is two-part
    coverable and the smallest label ``v`` outside it; delete everything
    else first (ascending).  Split ``A`` into biclique parts ``(B, C)`` with
    ``B`` largest; delete ``C``-members adjacent to ``v`` then the rest of
    ``C`` except its smallest non-neighbor ``u``; delete ``B``-members
    adjacent to ``v`` or ``u`` then the rest of ``B`` except the smallest
    survivor.  All ties break toward smaller labels.

    The result is checked prefix-by-prefix against the oracles; an unsafe
    prefix or an impossible construction step yields a
    :class:`SafeSequenceFailure` instead of an unchecked certificate.
    """
    if g.n < 3:
        raise ValueError(f"need at least three vertices, got {g.n}")
    if oracle.bp2_oracle(g, cap=cap) is not None:
        raise ValueError("graph is coverable by at most two bicliques")
    a = oracle.max_bp2_subset(g, cap=cap)
    outside = sorted(g.vertex_set - a)
    anchor = outside[0]
    head = [x for x in outside if x != anchor]
    b, c = oracle.max_bp1_split(g, a, cap=cap)
    c_adjacent = sorted(x for x in c if g.has_edge(x, anchor))
    c_free = sorted(x for x in c if not g.has_edge(x, anchor))
    if not c_free:
        return SafeSequenceFailure(
            "every vertex of the smaller split part is adjacent to the outside anchor"
        )
    mid = c_adjacent + c_free[1:]
    keeper = c_free[0]
    b_adjacent = sorted(x for x in b if g.has_edge(x, anchor) or g.has_edge(x, keeper))
    b_free = sorted(x for x in b if not (g.has_edge(x, anchor) or g.has_edge(x, keeper)))
    if not b_free:
        return SafeSequenceFailure(
            "every vertex of the larger split part is adjacent to the anchor pair"
        )
    tail = b_adjacent + b_free[1:]
    order = tuple(head + mid + tail)
    assert len(order) == g.n - 3
    bad = oracle.first_unsafe_prefix(g, order, "not_bp2", cap=cap)
    if bad is not None:
        return SafeSequenceFailure(
            f"deleting the first {bad} vertices leaves a two-biclique-coverable graph",
            prefix=order[:bad],
        )
    return SafeSequence(order)


def dual_certify(g: Graph, cap: int = oracle.DEFAULT_CAP) -> Certificate:
    """Produce a membership or non-membership certificate, or say why neither worked.

    Membership comes straight from the brute-force partition search.
    Non-membership goes through construction *and* the polynomial verifier;
    anything that fails either stage is reported as uncertifiable.
    """
    if g.n < 3:
        raise ValueError(f"need at least three vertices, got {g.n}")
    if g.n > cap:
        raise CapacityError(f"certification capped at {cap} vertices, got {g.n}")
    partition = oracle.bp2_oracle(g, cap=cap)
    if partition is not None:
        return Member(partition)
    built = gen_safe_sequence(g, cap=cap)
    if isinstance(built, SafeSequenceFailure):
        return Uncertifiable(built.reason)
    outcome = verify_nbp2(g, built)
    if not outcome.accepted:
        return Uncertifiable(f"constructed sequence rejected: {outcome.reason}")
    return NonMember(built)


def _labels_text(values: frozenset[int] | tuple[int, ...]) -> str:
    return " ".join(str(v) for v in sorted(values))


def format_certificate(cert: Certificate) -> str:
    """Render a certificate in the line-oriented text format."""
    if isinstance(cert, Member):
        lines = ["kind: bp2"]
        for part, (x, y) in cert.partition.parts:
            lines.append(f"part: {_labels_text(part)} | sides: {_labels_text(x)} / {_labels_text(y)}")
        return "\n".join(lines)
    if isinstance(cert, NonMember):
        ordered = " ".join(str(v) for v in cert.sequence.order)
        return f"kind: nbp2\n{f'sequence: {ordered}'.rstrip()}"
    return f"uncertifiable: {cert.reason}"


def _parse_labels(text: str, context: str) -> tuple[int, ...]:
    out = []
    for token in text.split():
        try:
            out.append(int(token))
        except ValueError:
            raise ValueError(f"bad vertex label {token!r} in {context}") from None
    return tuple(out)


def _parse_part_line(value: str) -> tuple[frozenset[int], tuple[frozenset[int], frozenset[int]]]:
    if "|" not in value:
        raise ValueError(f"part line needs '| sides:', got {value!r}")
    left, right = value.split("|", 1)
    right = right.strip()
    if not right.startswith("sides:"):
        raise ValueError(f"expected 'sides:' after '|', got {right!r}")
    sides_text = right[len("sides:"):]
    if "/" not in sides_text:
        raise ValueError(f"sides need an X / Y split, got {right!r}")
    x_text, y_text = sides_text.split("/", 1)
    part = frozenset(_parse_labels(left, "part"))
    x = frozenset(_parse_labels(x_text, "sides"))
    y = frozenset(_parse_labels(y_text, "sides"))
    if not part:
        raise ValueError("empty part in certificate")
    return part, (x, y)


def parse_certificate(text: str) -> Certificate:
    """Parse the text format back into a certificate.

    Whitespace-tolerant; blank lines are skipped; unknown keys are rejected.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty certificate")
    entries = []
    for ln in lines:
        if ":" not in ln:
            raise ValueError(f"expected 'key: value' lines, got {ln!r}")
        key, value = ln.split(":", 1)
        entries.append((key.strip(), value.strip()))
    kind_key, kind = entries[0]
    if kind_key != "kind":
        raise ValueError(f"certificate must start with 'kind:', got {kind_key!r}")
    if kind == "bp2":
        parts = []
        for key, value in entries[1:]:
            if key != "part":
                raise ValueError(f"unknown key {key!r} in bp2 certificate")
            parts.append(_parse_part_line(value))
        if not 1 <= len(parts) <= 2:
            raise ValueError(f"bp2 certificate needs one or two parts, got {len(parts)}")
        if len(parts) == 1:
            return Member(TwoBicliquePartition(parts[0][0], parts[0][1]))
        return Member(TwoBicliquePartition(parts[0][0], parts[0][1], parts[1][0], parts[1][1]))
    if kind == "nbp2":
        if len(entries) != 2 or entries[1][0] != "sequence":
            raise ValueError("nbp2 certificate needs exactly one 'sequence:' line")
        order = _parse_labels(entries[1][1], "sequence")
        if len(set(order)) != len(order):
            raise ValueError("duplicate vertex label in sequence")
        return NonMember(SafeSequence(order))
    raise ValueError(f"unknown certificate kind {kind!r}")
