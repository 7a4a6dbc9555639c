"""Ground-truth enumeration and the criterion cross-validation harness.

The oracle decides realizability by enumerating every edge subset of the
complete graph as a bitmask and testing whether its degree vector lies in
the box.  It never consults the criteria module, which is what makes the
agreement sweeps meaningful.  Precomputed per-size degree tables keep the
enumeration fast; rows are grouped by edge count so a sweep can skip
subsets whose total degree cannot fall inside the box.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

from . import criteria as _criteria
from . import realize as _realize
from .errors import TooLarge, UnknownCriterion
from .sequences import IntervalSequencePair

MAX_EXHAUSTIVE_N = 7
MAX_MATRIX_N = 6
_CHUNK = 1 << 15

ALL_CRITERIA = dict(_criteria.CHECKERS)
ALL_CRITERIA["ryser_interval"] = _realize.check_ryser_interval
ALL_CRITERIA["fulkerson_exists"] = _criteria.check_fulkerson_exists

# Default sweep set: the aggregated report plus the bipartite interval test.
DEFAULT_SWEEP_CRITERIA = tuple(_criteria.REPORT_ORDER) + ("ryser_interval",)

# Arrows with an expected-zero violation count.  "necessity" flags
# oracle-realizable instances failing the criterion; "sufficiency" flags
# criterion-holding instances the oracle rejects.
GATED_DIRECTIONS = {
    "cdz": ("necessity", "sufficiency"),
    "cdz_reduced": ("necessity", "sufficiency"),
    "berge_necessary": ("necessity",),
    "berge_sufficient": ("sufficiency",),
    "fulkerson": ("necessity",),
    "fulkerson_exists": ("necessity",),
    "bollobas": ("necessity",),
    "grunbaum": ("necessity",),
    "hasselbarth": ("necessity",),
    "ryser_interval": ("necessity",),
}


class OracleResult(NamedTuple):
    realizable: bool
    witness_count: int


@lru_cache(maxsize=None)
def _degree_table(n: int):
    """Degree vectors of all edge subsets of K_n, rows grouped by edge count.

    Returns (table, offsets): table[r] is the degree vector of the r-th
    subset after sorting by popcount; offsets[p] is the first row with p
    edges (offsets has length E+2).
    """
    edges = list(itertools.combinations(range(n), 2))
    m = len(edges)
    idx = np.arange(1 << m, dtype=np.uint32)
    table = np.zeros((1 << m, n), dtype=np.int8)
    pc = np.zeros(1 << m, dtype=np.int8)
    for e, (u, v) in enumerate(edges):
        bit = ((idx >> e) & 1).astype(np.int8)
        table[:, u] += bit
        table[:, v] += bit
        pc += bit
    order = np.argsort(pc, kind="stable")
    table = table[order]
    offsets = np.searchsorted(pc[order], np.arange(m + 2))
    return table, offsets


def _edge_count_window(pair: IntervalSequencePair) -> tuple[int, int]:
    """Feasible subset sizes: total degree is twice the edge count."""
    m = pair.n * (pair.n - 1) // 2
    lo = (sum(pair.a) + 1) // 2
    hi = min(sum(pair.b) // 2, m)
    return lo, hi


def oracle_realizable(pair: IntervalSequencePair) -> OracleResult:
    """Exhaustive decision plus the number of witnessing edge subsets."""
    if pair.n > MAX_EXHAUSTIVE_N:
        raise TooLarge(f"oracle enumerates up to n = {MAX_EXHAUSTIVE_N}, got {pair.n}")
    table, offsets = _degree_table(pair.n)
    lo, hi = _edge_count_window(pair)
    if lo > hi:
        return OracleResult(False, 0)
    a = np.asarray(pair.a, dtype=np.int8)
    b = np.asarray(pair.b, dtype=np.int8)
    count = 0
    for start in range(offsets[lo], offsets[hi + 1], _CHUNK):
        rows = table[start : min(start + _CHUNK, offsets[hi + 1])]
        count += int(np.count_nonzero(np.all((rows >= a) & (rows <= b), axis=1)))
    return OracleResult(count > 0, count)


def oracle_decide(pair: IntervalSequencePair) -> bool:
    """Decision-only oracle with early exit; same verdict as oracle_realizable.

    Scans edge-count groups nearest the box's average total degree first,
    since witnesses cluster there.
    """
    if pair.n > MAX_EXHAUSTIVE_N:
        raise TooLarge(f"oracle enumerates up to n = {MAX_EXHAUSTIVE_N}, got {pair.n}")
    table, offsets = _degree_table(pair.n)
    lo, hi = _edge_count_window(pair)
    if lo > hi:
        return False
    a = np.asarray(pair.a, dtype=np.int8)
    b = np.asarray(pair.b, dtype=np.int8)
    mid = (sum(pair.a) + sum(pair.b)) // 4
    for p in sorted(range(lo, hi + 1), key=lambda p: (abs(p - mid), p)):
        for start in range(offsets[p], offsets[p + 1], _CHUNK):
            rows = table[start : min(start + _CHUNK, offsets[p + 1])]
            if np.any(np.all((rows >= a) & (rows <= b), axis=1)):
                return True
    return False


def _cells(n: int) -> list[tuple[int, int]]:
    """All bound cells (a, b) with 0 <= a <= b <= n-1, largest first."""
    cells = [(a, b) for b in range(n) for a in range(b + 1)]
    cells.sort(key=lambda c: (-c[0], -c[1]))
    return cells


def instance_space_size(n: int) -> int:
    """Number of good-ordered pairs on n vertices: multisets of bound cells."""
    if n <= 0:
        return 1 if n == 0 else 0
    return comb(n * (n + 1) // 2 + n - 1, n)


def enumerate_instances(n: int) -> Iterator[IntervalSequencePair]:
    """Every good-ordered pair with clamped bounds, each exactly once.

    Order is deterministic: cell multisets in lexicographic order over
    cells listed largest-first, so within each instance the cells are
    already good-ordered.
    """
    if n > MAX_EXHAUSTIVE_N:
        raise TooLarge(f"exhaustive instance space supports n <= {MAX_EXHAUSTIVE_N}")
    for combo in itertools.combinations_with_replacement(_cells(n), n):
        yield IntervalSequencePair(
            tuple(c[0] for c in combo), tuple(c[1] for c in combo)
        )


def unrank_instance(n: int, rank: int) -> IntervalSequencePair:
    """The rank-th pair of enumerate_instances(n), computed directly."""
    cells = _cells(n)
    total = instance_space_size(n)
    if not 0 <= rank < total:
        raise IndexError(f"rank {rank} not in [0, {total})")
    combo = []
    c = 0
    for pos in range(n):
        remaining = n - pos - 1
        while True:
            # tails: multisets of size `remaining` drawn from cells c..end
            tails = comb(len(cells) - c + remaining - 1, remaining)
            if rank < tails:
                break
            rank -= tails
            c += 1
        combo.append(cells[c])
    return IntervalSequencePair(
        tuple(x[0] for x in combo), tuple(x[1] for x in combo)
    )


def sample_instances(n: int, count: int, seed: int) -> list[IntervalSequencePair]:
    """Uniform sample without replacement from the good-ordered instance space."""
    total = instance_space_size(n)
    if count >= total:
        cells = _cells(n)
        return [
            IntervalSequencePair(tuple(c[0] for c in combo), tuple(c[1] for c in combo))
            for combo in itertools.combinations_with_replacement(cells, n)
        ]
    rng = random.Random(seed)
    if total <= 1 << 62:
        ranks = sorted(rng.sample(range(total), count))
    else:  # len() of a huge range overflows; fall back to rejection sampling
        picked: set[int] = set()
        while len(picked) < count:
            picked.add(rng.randrange(total))
        ranks = sorted(picked)
    return [unrank_instance(n, r) for r in ranks]


def random_instances(
    count: int, max_n: int, seed: int
) -> Iterator[IntervalSequencePair]:
    """Seeded stream of good-ordered pairs with 1 <= n <= max_n.

    Sizes and cells are drawn uniformly; cells are sorted into good order.
    Used by the randomized equivalence suites where exhaustion is out of
    reach.
    """
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        cells = []
        for _ in range(n):
            hi = rng.randint(0, n - 1)
            cells.append((rng.randint(0, hi), hi))
        cells.sort(key=lambda c: (-c[0], -c[1]))
        yield IntervalSequencePair(
            tuple(c[0] for c in cells), tuple(c[1] for c in cells)
        )


def _resolve_criteria(names: Optional[Sequence[str]]) -> tuple[str, ...]:
    if names is None:
        return DEFAULT_SWEEP_CRITERIA
    for name in names:
        if name not in ALL_CRITERIA:
            raise UnknownCriterion(
                f"unknown criterion {name!r}; available: {', '.join(sorted(ALL_CRITERIA))}"
            )
    return tuple(names)


@dataclass
class SweepReport:
    """Aggregate of one oracle-vs-criteria sweep.

    ``cells[name]`` is a 2x2 tally keyed oracle outcome x criterion
    outcome; ``violations`` lists, verbatim, every instance breaking a
    gated arrow, in enumeration order.  ``elapsed`` is informational and
    excluded from the canonical JSON so reports stay byte-reproducible.
    """

    n: int
    mode: str
    sample_size: Optional[int]
    seed: Optional[int]
    criteria: tuple[str, ...]
    instance_count: int = 0
    oracle_used: bool = True
    oracle_yes: int = 0
    cells: dict = field(default_factory=dict)
    holds_counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    cdz_oracle_disagreements: Optional[int] = None
    cdz_reduced_disagreements: Optional[int] = None
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "schema": "degreebox.sweep/1",
            "n": self.n,
            "mode": self.mode,
            "sample_size": self.sample_size,
            "seed": self.seed,
            "criteria": list(self.criteria),
            "instance_count": self.instance_count,
            "oracle_used": self.oracle_used,
            "oracle_yes": self.oracle_yes if self.oracle_used else None,
            "cells": self.cells,
            "holds_counts": self.holds_counts,
            "violations": self.violations,
            "cdz_oracle_disagreements": self.cdz_oracle_disagreements,
            "cdz_reduced_disagreements": self.cdz_reduced_disagreements,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def gated_violation_count(self) -> int:
        return len(self.violations)

    def to_text(self) -> str:
        lines = [
            f"sweep n={self.n} mode={self.mode}"
            + (f" sample={self.sample_size} seed={self.seed}" if self.mode == "sample" else ""),
            f"instances: {self.instance_count}"
            + (f", oracle-realizable: {self.oracle_yes}" if self.oracle_used else " (oracle skipped)"),
        ]
        if self.oracle_used:
            header = f"{'criterion':<18}{'yes/holds':>10}{'yes/fails':>10}{'no/holds':>10}{'no/fails':>10}"
            lines.append(header)
            for name in self.criteria:
                c = self.cells[name]
                lines.append(
                    f"{name:<18}{c['oracle_yes_holds']:>10}{c['oracle_yes_fails']:>10}"
                    f"{c['oracle_no_holds']:>10}{c['oracle_no_fails']:>10}"
                )
            lines.append(f"cdz vs oracle disagreements: {self.cdz_oracle_disagreements}")
        else:
            for name in self.criteria:
                lines.append(f"{name:<18} holds on {self.holds_counts[name]} instances")
        if self.cdz_reduced_disagreements is not None:
            lines.append(f"cdz vs cdz_reduced disagreements: {self.cdz_reduced_disagreements}")
        lines.append(f"gated violations: {len(self.violations)}")
        for v in self.violations[:20]:
            lines.append(f"  {v}")
        if len(self.violations) > 20:
            lines.append(f"  ... {len(self.violations) - 20} more")
        lines.append(f"elapsed: {self.elapsed:.2f}s")
        return "\n".join(lines) + "\n"


def cross_validate(
    n: int,
    criteria: Optional[Sequence[str]] = None,
    sample: Optional[int] = None,
    seed: int = 0,
) -> SweepReport:
    """Evaluate criteria against the oracle over the instance space at size n.

    Exhaustive for n <= 7; a seeded uniform sample is required beyond that
    (where the oracle is unavailable and only criterion-vs-criterion
    tallies are reported).  Reports are deterministic given (n, criteria,
    sample, seed).
    """
    names = _resolve_criteria(criteria)
    if "cdz" not in names:
        names = ("cdz",) + names
    if sample is None:
        if n > MAX_EXHAUSTIVE_N:
            raise TooLarge(
                f"exhaustive sweep supports n <= {MAX_EXHAUSTIVE_N}; pass sample="
            )
        instances: Iterable[IntervalSequencePair] = enumerate_instances(n)
        report = SweepReport(n=n, mode="exhaustive", sample_size=None, seed=None, criteria=names)
    else:
        instances = sample_instances(n, sample, seed)
        report = SweepReport(n=n, mode="sample", sample_size=sample, seed=seed, criteria=names)
    report.oracle_used = n <= MAX_EXHAUSTIVE_N
    report.cells = {
        name: {
            "oracle_yes_holds": 0,
            "oracle_yes_fails": 0,
            "oracle_no_holds": 0,
            "oracle_no_fails": 0,
        }
        for name in names
    }
    report.holds_counts = dict.fromkeys(names, 0)
    track_reduced = "cdz_reduced" in names
    if report.oracle_used:
        report.cdz_oracle_disagreements = 0
    if track_reduced:
        report.cdz_reduced_disagreements = 0

    start = time.perf_counter()
    for index, pair in enumerate(instances):
        report.instance_count += 1
        verdicts = {name: ALL_CRITERIA[name](pair) for name in names}
        if track_reduced and verdicts["cdz"] != verdicts["cdz_reduced"]:
            report.cdz_reduced_disagreements += 1
            report.violations.append(
                _violation(index, pair, "cdz_reduced", "reduced-vs-full", verdicts["cdz_reduced"])
            )
        if not report.oracle_used:
            for name in names:
                if verdicts[name].holds:
                    report.holds_counts[name] += 1
            continue
        realizable = oracle_decide(pair)
        report.oracle_yes += int(realizable)
        for name in names:
            verdict = verdicts[name]
            if verdict.holds:
                report.holds_counts[name] += 1
            key = (
                "oracle_yes_holds" if realizable and verdict.holds
                else "oracle_yes_fails" if realizable
                else "oracle_no_holds" if verdict.holds
                else "oracle_no_fails"
            )
            report.cells[name][key] += 1
            gated = GATED_DIRECTIONS.get(name, ())
            if realizable and not verdict.holds and "necessity" in gated:
                report.violations.append(_violation(index, pair, name, "necessity", verdict))
            elif not realizable and verdict.holds and "sufficiency" in gated:
                report.violations.append(_violation(index, pair, name, "sufficiency", verdict))
        if report.cdz_oracle_disagreements is not None:
            if verdicts["cdz"].holds != realizable:
                report.cdz_oracle_disagreements += 1
    report.elapsed = time.perf_counter() - start
    return report


def _violation(index, pair, name, direction, verdict) -> dict:
    return {
        "instance_index": index,
        "a": list(pair.a),
        "b": list(pair.b),
        "criterion": name,
        "direction": direction,
        "witness_t": verdict.witness_t,
        "witness_m": verdict.witness_m,
    }


@dataclass
class ImplicationMatrix:
    """Pairwise criterion implication tallies over a set of instances.

    ``counts[(x, y)]`` is the number of instances where x holds and y
    fails; a zero cell supports "x implies y".  Each nonzero cell stores
    the first counterexample encountered.
    """

    criteria: tuple[str, ...]
    instance_count: int
    counts: dict
    examples: dict

    def cell(self, x: str, y: str) -> int:
        return self.counts[(x, y)]

    def example(self, x: str, y: str):
        return self.examples.get((x, y))

    def to_json_dict(self) -> dict:
        return {
            "schema": "degreebox.matrix/1",
            "criteria": list(self.criteria),
            "instance_count": self.instance_count,
            "cells": {
                f"{x}->{y}": c for (x, y), c in sorted(self.counts.items()) if c
            },
            "examples": {
                f"{x}->{y}": {"a": list(p.a), "b": list(p.b)}
                for (x, y), p in sorted(self.examples.items())
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        width = max(len(c) for c in self.criteria) + 2
        lines = [f"implication matrix over {self.instance_count} instances"]
        lines.append("cells count instances where ROW holds and COLUMN fails")
        header = " " * width + "".join(f"{c:>{width}}" for c in self.criteria)
        lines.append(header)
        for x in self.criteria:
            row = f"{x:<{width}}"
            for y in self.criteria:
                row += f"{'-' if x == y else self.counts[(x, y)]:>{width}}"
            lines.append(row)
        return "\n".join(lines) + "\n"


def implication_matrix(
    n: Optional[int] = None,
    pairs: Optional[Iterable[IntervalSequencePair]] = None,
    criteria: Optional[Sequence[str]] = None,
) -> ImplicationMatrix:
    """Tally x-holds/y-fails over the exhaustive space at n, or explicit pairs."""
    names = _resolve_criteria(criteria)
    if pairs is None:
        if n is None:
            raise ValueError("pass either n or pairs")
        if n > MAX_MATRIX_N:
            raise TooLarge(f"implication matrix supports n <= {MAX_MATRIX_N}")
        pairs = enumerate_instances(n)
    counts = {(x, y): 0 for x in names for y in names if x != y}
    examples: dict = {}
    total = 0
    for pair in pairs:
        total += 1
        holds = {name: ALL_CRITERIA[name](pair).holds for name in names}
        if all(holds.values()):
            continue
        for x in names:
            if not holds[x]:
                continue
            for y in names:
                if x != y and not holds[y]:
                    counts[(x, y)] += 1
                    examples.setdefault((x, y), pair)
    return ImplicationMatrix(
        criteria=names, instance_count=total, counts=counts, examples=examples
    )
