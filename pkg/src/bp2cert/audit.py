"""Exhaustive small-graph audit of the partition claims and certificate system.

Every labeled graph of each requested order is streamed through the
polynomial deciders and the brute-force oracles, and each claim below is
tallied as agreements versus explicit graph6 counterexamples:

=================  ==========================================================
L1                 one-part decider agrees with the bipartition search
L2/L3              two-part decider agrees with the split search
L4/C5              graphs needing >2 parts pass the complement pre-filter
L-del              split-free two-part-only graphs stay so under any deletion
T-depth            first-split depth is the same along every deletion order
T-seq              sequence construction succeeds on every >2-parts graph
T-verify-sound     no <=2-parts graph gets any sequence accepted
T-verify-complete  every >2-parts graph has some accepted sequence
=================  ==========================================================

The first five lines of defense (L1 through T-verify-sound) are expected to
hold; the remaining claims are measurements, and their counterexample lists
are the point of the audit.  ``T-verify-sound`` is exhaustive over all
``(n-3)``-sequences up to 6 vertices and samples a fixed deterministic
handful beyond; ``T-verify-complete`` searches all sequences up to 6
vertices and falls back to construction-plus-verification beyond.

Work is split into index ranges per order and distributed over processes;
partial tallies merge associatively and counterexamples are sorted, so the
report is identical for any worker count.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from itertools import islice, permutations
from typing import Callable, Iterable, Iterator

from . import oracle
from .certificates import SafeSequence, gen_safe_sequence, verify_nbp2
from .deciders import decide_bp2, is_bp1, nbp2_necessary, part_is_biclique, part_is_star, star_biclique_poly
from .graphs import CapacityError, Graph
from .graphio import g6_encode, graph_from_index, labeled_graph_count
from .witnesses import star_witness_error

CLAIM_IDS = (
    "L1",
    "L2/L3",
    "L4/C5",
    "L-del",
    "T-depth",
    "T-seq",
    "T-verify-sound",
    "T-verify-complete",
)

EXHAUSTIVE_SEQUENCE_MAX = 6
SOUNDNESS_SAMPLES = 6
AUDIT_MAX = 8
_CHUNK = 1 << 14


@dataclass(frozen=True)
class ClaimResult:
    checked: int
    agreements: int
    counterexamples: tuple[str, ...]


@dataclass(frozen=True)
class AuditReport:
    n_min: int
    n_max: int
    claims: dict[str, ClaimResult]
    wall_time: float


def _sampled_sequences(g: Graph, rng_seed: int) -> Iterator[tuple[int, ...]]:
    """Deterministic sequence sample for orders where exhaustion is too wide."""
    k = g.n - 3
    yield from islice(permutations(g.labels, k), 3)
    rng = random.Random(rng_seed)
    for _ in range(SOUNDNESS_SAMPLES - 3):
        yield tuple(rng.sample(g.labels, k))


def _deletions_stay_two_part_only(g: Graph) -> bool:
    for v in g.labels:
        h = g.delete({v})
        if oracle.bp2_oracle(h) is None or oracle.bp1_oracle(h) is not None:
            return False
    return True


def _audit_graph(g: Graph, index: int) -> list[tuple[str, bool]]:
    """Evaluate every applicable claim on one graph."""
    out = []
    in_bp1 = oracle.bp1_oracle(g) is not None
    in_bp2 = in_bp1 or oracle.bp2_oracle(g) is not None
    out.append(("L1", is_bp1(g) == in_bp1))
    out.append(("L2/L3", decide_bp2(g) == in_bp2))
    if not in_bp2:
        out.append(("L4/C5", nbp2_necessary(g)))
        built = gen_safe_sequence(g)
        constructed = isinstance(built, SafeSequence)
        out.append(("T-seq", constructed))
        if g.n <= EXHAUSTIVE_SEQUENCE_MAX:
            found = any(
                verify_nbp2(g, seq).accepted for seq in permutations(g.labels, g.n - 3)
            )
        else:
            found = constructed and verify_nbp2(g, built).accepted
        out.append(("T-verify-complete", found))
    else:
        if g.n >= 3:
            if g.n <= EXHAUSTIVE_SEQUENCE_MAX:
                seqs: Iterable[tuple[int, ...]] = permutations(g.labels, g.n - 3)
            else:
                seqs = _sampled_sequences(g, rng_seed=index)
            sound = not any(verify_nbp2(g, seq).accepted for seq in seqs)
            out.append(("T-verify-sound", sound))
        if not in_bp1:
            if oracle.star_biclique_oracle(g) is None:
                out.append(("L-del", _deletions_stay_two_part_only(g)))
            out.append(("T-depth", oracle.deletion_depths(g).uniform))
    return out


def _audit_chunk(task: tuple[int, int, int]) -> dict[str, tuple[int, int, list[str]]]:
    n, start, stop = task
    tally: dict[str, tuple[int, int, list[str]]] = {}
    for index in range(start, stop):
        g = graph_from_index(n, index)
        for claim, ok in _audit_graph(g, index):
            checked, agreed, bad = tally.setdefault(claim, (0, 0, []))
            if ok:
                tally[claim] = (checked + 1, agreed + 1, bad)
            else:
                bad.append(g6_encode(g))
                tally[claim] = (checked + 1, agreed, bad)
    return tally


def _merge(
    total: dict[str, tuple[int, int, list[str]]],
    part: dict[str, tuple[int, int, list[str]]],
) -> None:
    for claim, (checked, agreed, bad) in part.items():
        t_checked, t_agreed, t_bad = total.setdefault(claim, (0, 0, []))
        t_bad.extend(bad)
        total[claim] = (t_checked + checked, t_agreed + agreed, t_bad)


def _tasks(n_min: int, n_max: int) -> list[tuple[int, int, int]]:
    tasks = []
    for n in range(n_min, n_max + 1):
        total = labeled_graph_count(n)
        for start in range(0, total, _CHUNK):
            tasks.append((n, start, min(start + _CHUNK, total)))
    return tasks


def _run_tasks(
    tasks: list[tuple[int, int, int]],
    worker: Callable,
    parallelism: int | None,
    progress: Callable[[str], None] | None,
) -> Iterator:
    workers = parallelism if parallelism else os.cpu_count() or 1
    done = 0
    if workers <= 1:
        for task in tasks:
            yield worker(task)
            done += 1
            if progress and done % 16 == 0:
                progress(f"{done}/{len(tasks)} chunks")
    else:
        import multiprocessing

        with multiprocessing.Pool(processes=workers) as pool:
            for part in pool.imap(worker, tasks):
                yield part
                done += 1
                if progress and done % 16 == 0:
                    progress(f"{done}/{len(tasks)} chunks")


def audit(
    n_min: int,
    n_max: int,
    parallelism: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> AuditReport:
    """Run every claim over all labeled graphs of orders ``n_min..n_max``.

    ``parallelism`` defaults to the CPU count; the report is byte-for-byte
    independent of it.  ``progress`` (if given) receives occasional human
    lines and must not be relied on for results.
    """
    if n_min < 1 or n_max > AUDIT_MAX:
        raise CapacityError(f"audit supports orders 1..{AUDIT_MAX}, got {n_min}..{n_max}")
    if n_min > n_max:
        raise ValueError(f"empty order range {n_min}..{n_max}")
    started = time.perf_counter()
    total: dict[str, tuple[int, int, list[str]]] = {}
    for part in _run_tasks(_tasks(n_min, n_max), _audit_chunk, parallelism, progress):
        _merge(total, part)
    claims = {}
    for claim in CLAIM_IDS:
        checked, agreed, bad = total.get(claim, (0, 0, []))
        claims[claim] = ClaimResult(checked, agreed, tuple(sorted(bad)))
    return AuditReport(n_min, n_max, claims, time.perf_counter() - started)


@dataclass(frozen=True)
class StarCrossCheck:
    """Polynomial split finder versus the exhaustive split search.

    ``scope_*`` fields restrict to graphs that are two-part but not one-part
    coverable, where the polynomial procedure promises completeness;
    ``outside_disagreements`` records presence mismatches on all other
    graphs, which are informational only.  ``invalid_witnesses`` must always
    be empty.
    """

    graphs_checked: int
    scope_checked: int
    invalid_witnesses: tuple[str, ...]
    scope_missed: tuple[str, ...]
    scope_spurious: tuple[str, ...]
    outside_disagreements: tuple[str, ...]


def _star_cross_chunk(task: tuple[int, int, int]) -> tuple[int, int, list[str], list[str], list[str], list[str]]:
    n, start, stop = task
    checked = scope = 0
    invalid: list[str] = []
    missed: list[str] = []
    spurious: list[str] = []
    outside: list[str] = []
    for index in range(start, stop):
        g = graph_from_index(n, index)
        checked += 1
        witness = star_biclique_poly(g)
        if witness is not None:
            bad = (
                star_witness_error(g, witness) is not None
                or part_is_star(g, witness.star_part) is None
                or part_is_biclique(g, witness.biclique_part) is None
            )
            if bad:
                invalid.append(g6_encode(g))
        present_oracle = oracle.star_biclique_oracle(g) is not None
        in_scope = oracle.bp1_oracle(g) is None and oracle.bp2_oracle(g) is not None
        if in_scope:
            scope += 1
            if witness is None and present_oracle:
                missed.append(g6_encode(g))
            elif witness is not None and not present_oracle:
                spurious.append(g6_encode(g))
        elif (witness is None) != (not present_oracle):
            outside.append(g6_encode(g))
    return checked, scope, invalid, missed, spurious, outside


def star_poly_cross_check(
    n_min: int,
    n_max: int,
    parallelism: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> StarCrossCheck:
    """Compare the polynomial split finder against the exhaustive search.

    Runs on every labeled graph of the given orders (at least 2 vertices).
    """
    if n_min < 2 or n_max > AUDIT_MAX:
        raise CapacityError(f"cross-check supports orders 2..{AUDIT_MAX}, got {n_min}..{n_max}")
    if n_min > n_max:
        raise ValueError(f"empty order range {n_min}..{n_max}")
    checked = scope = 0
    invalid: list[str] = []
    missed: list[str] = []
    spurious: list[str] = []
    outside: list[str] = []
    for part in _run_tasks(_tasks(n_min, n_max), _star_cross_chunk, parallelism, progress):
        checked += part[0]
        scope += part[1]
        invalid.extend(part[2])
        missed.extend(part[3])
        spurious.extend(part[4])
        outside.extend(part[5])
    return StarCrossCheck(
        checked,
        scope,
        tuple(sorted(invalid)),
        tuple(sorted(missed)),
        tuple(sorted(spurious)),
        tuple(sorted(outside)),
    )


@dataclass(frozen=True)
class SafeAcceptanceCheck:
    """Every oracle-safe full-length sequence must be accepted by the verifier."""

    graphs_checked: int
    safe_sequences_checked: int
    rejections: tuple[str, ...]


def _safe_acceptance_chunk(task: tuple[int, int, int]) -> tuple[int, int, list[str]]:
    n, start, stop = task
    graphs = sequences = 0
    rejections: list[str] = []
    for index in range(start, stop):
        g = graph_from_index(n, index)
        rows = g.rows
        full = g.full_mask
        if oracle._bp2_present_mask(rows, full):
            continue
        graphs += 1
        # Membership of prefix graphs repeats across permutations; memoize it
        # on the surviving-vertex mask.
        needs_more: dict[int, bool] = {full: True}

        def still_outside(mask: int) -> bool:
            known = needs_more.get(mask)
            if known is None:
                known = not oracle._bp2_present_mask(rows, mask)
                needs_more[mask] = known
            return known

        for seq in permutations(range(n), n - 3):
            alive = full
            safe = True
            for pos in seq:
                alive ^= 1 << pos
                if not still_outside(alive):
                    safe = False
                    break
            if not safe:
                continue
            sequences += 1
            if not verify_nbp2(g, seq).accepted:
                rejections.append(f"{g6_encode(g)} {' '.join(map(str, seq))}")
    return graphs, sequences, rejections


def safe_acceptance_check(
    n_min: int,
    n_max: int,
    parallelism: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> SafeAcceptanceCheck:
    """Exhaustively confirm the verifier accepts every oracle-safe sequence.

    Only practical through 6 vertices; the sequence space is factorial.
    """
    if n_min < 3 or n_max > EXHAUSTIVE_SEQUENCE_MAX:
        raise CapacityError(
            f"exhaustive acceptance check supports orders 3..{EXHAUSTIVE_SEQUENCE_MAX}, "
            f"got {n_min}..{n_max}"
        )
    if n_min > n_max:
        raise ValueError(f"empty order range {n_min}..{n_max}")
    graphs = sequences = 0
    rejections: list[str] = []
    for part in _run_tasks(_tasks(n_min, n_max), _safe_acceptance_chunk, parallelism, progress):
        graphs += part[0]
        sequences += part[1]
        rejections.extend(part[2])
    return SafeAcceptanceCheck(graphs, sequences, tuple(sorted(rejections)))


def format_report(report: AuditReport) -> str:
    """Deterministic summary table, one line per claim."""
    lines = [f"audit orders {report.n_min}..{report.n_max}"]
    width = max(len(c) for c in CLAIM_IDS)
    for claim in CLAIM_IDS:
        r = report.claims[claim]
        lines.append(
            f"{claim:<{width}}  checked={r.checked}  agreements={r.agreements}"
            f"  counterexamples={len(r.counterexamples)}"
        )
    return "\n".join(lines)


def format_counterexamples(report: AuditReport) -> str:
    """Per-claim graph6 counterexample lists, for the report file."""
    lines = []
    for claim in CLAIM_IDS:
        r = report.claims[claim]
        lines.append(f"# {claim}: {len(r.counterexamples)} counterexample(s)")
        lines.extend(r.counterexamples)
    return "\n".join(lines)
