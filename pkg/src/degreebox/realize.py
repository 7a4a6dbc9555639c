"""Witness construction: simple graphs meeting bound pairs, bipartite interval graphs.

The simple-graph route searches for an in-box graphic degree vector and
realizes it with Havel-Hakimi; the bipartite route reduces per-vertex
degree intervals to a feasible-flow problem with lower bounds.  Both
routes are exact and are cross-validated against brute-force enumeration
at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .criteria import CriterionVerdict
from .errors import (
    LengthMismatch,
    LowerExceedsUpper,
    NegativeEntry,
    SearchBudgetExceeded,
)
from .sequences import (
    IntervalSequencePair,
    _tilde_unchecked,
    require_good_order,
    require_non_increasing,
)

DEFAULT_SEARCH_BUDGET = 1_000_000


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless undirected graph on vertices 0..n-1 with a set of sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def to_edge_list(self) -> str:
        """One 'u v' line per edge, vertices printed 1-based, sorted."""
        lines = [f"{u + 1} {v + 1}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_dot(self) -> str:
        """Undirected DOT document with vertices labeled 1..n."""
        deg = self.degrees()
        lines = ["graph witness {"]
        lines += [f"  {i + 1};" for i in range(self.n) if deg[i] == 0]
        lines += [f"  {u + 1} -- {v + 1};" for u, v in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph: edges are (left index, right index) pairs, both 0-based."""

    left_n: int
    right_n: int
    edges: frozenset[tuple[int, int]]

    def left_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.left_n
        for i, _ in self.edges:
            deg[i] += 1
        return tuple(deg)

    def right_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.right_n
        for _, j in self.edges:
            deg[j] += 1
        return tuple(deg)


def havel_hakimi_realize(d: Sequence[int]) -> Optional[SimpleGraph]:
    """Realize a non-increasing degree sequence, or return None if not graphic.

    Each round connects the largest remaining residual to the next-largest
    ones; ties break by original vertex index, so the witness is
    deterministic.  Success agrees exactly with check_erdos_gallai_fixed.
    """
    require_non_increasing(d)
    for x in d:
        if x < 0:
            raise NegativeEntry(f"degree {x} is negative")
    edges = _havel_hakimi(list(enumerate(d)))
    if edges is None:
        return None
    return SimpleGraph(len(d), frozenset(edges))


def _havel_hakimi(targets: list[tuple[int, int]]) -> Optional[set[tuple[int, int]]]:
    """Core loop on (vertex, degree) items; returns edge set or None."""
    work = [[deg, vertex] for vertex, deg in targets]
    edges: set[tuple[int, int]] = set()
    for _ in range(len(work)):
        work.sort(key=lambda item: (-item[0], item[1]))
        head = work[0]
        need, u = head[0], head[1]
        if need == 0:
            break
        if need > len(work) - 1:
            return None
        for item in work[1 : need + 1]:
            if item[0] == 0:
                return None
            item[0] -= 1
            v = item[1]
            edges.add((min(u, v), max(u, v)))
        head[0] = 0
    return edges


def graphic_vector_in_box(
    pair: IntervalSequencePair, budget: int = DEFAULT_SEARCH_BUDGET
) -> Optional[tuple[int, ...]]:
    """Find an in-box degree vector whose multiset is graphic, positionwise.

    Explores candidate degree multisets in descending order (so the first
    hit starts from the upper bounds), assigning each value greedily to
    the unused box with the largest lower bound.  Pruning:

    * a branch dies when the tightest unused box can no longer be filled
      by the remaining (smaller) values;
    * partial multisets are discarded when the graphicality prefix
      inequality already fails under the most optimistic completion;
    * a lookahead discards branches whose unused lower bounds force a
      future prefix to overshoot the inequality no matter how the values
      are completed (any feasible completion dominates the unused lower
      bounds pointwise after sorting);
    * leaves additionally require an even sum.

    The greedy box choice is exchange-safe, so the search is complete:
    None is returned only when no in-box graphic vector exists.  A node
    budget guards against pathological blowup and raises
    SearchBudgetExceeded instead of returning a wrong answer.
    """
    require_good_order(pair)
    n = pair.n
    a, b = pair.a, pair.b
    if n == 0:
        return ()

    used = [False] * n
    assign = [0] * n
    prefix = [0]
    # tail_min[k'] accumulates sum(min(m_i, k') for placed i > k'), 1-based k'.
    tail_min = [0] * (n + 1)
    # cap_count[x] counts unused boxes with upper bound exactly x.
    cap_count = [0] * n
    for hi in b:
        cap_count[hi] += 1
    nodes = 0

    def cap_sums() -> list[int]:
        # S[c] = sum(min(b_i, c) for unused boxes i); the largest tail any
        # completion capped at c can contribute to an inequality.
        geq = 0
        out = [0] * (n + 1)
        for c in range(n, 0, -1):
            if c <= n - 1:
                geq += cap_count[c]
            out[c] = geq
        for c in range(1, n + 1):
            out[c] += out[c - 1]
        return out

    def place(v: int) -> int:
        first = -1
        for i in range(n):
            if not used[i]:
                if first < 0:
                    first = i
                    if a[i] > v:
                        return -2  # tightest box unfillable: smaller v also fails
                if b[i] >= v:
                    return i
        return -1

    def prefix_ok(k: int, v: int, sums: list[int]) -> bool:
        remaining = n - k
        for kp in range(1, k + 1):
            cut = min(v, kp)
            bound = kp * (kp - 1) + tail_min[kp] + min(remaining * cut, sums[cut])
            if prefix[kp] > bound:
                return False
        return True

    def lookahead_ok(k: int, cap: int, sums: list[int]) -> bool:
        # Sorted descending, any feasible completion dominates the unused
        # lower bounds pointwise, so the prefix sum at depth k+j is at
        # least prefix[k] plus the j largest unused lower bounds, while
        # the tail beyond contributes at most min(cap, box cap, depth)
        # per slot.  Both sides are monotone in cap, so a failure rules
        # out every smaller value as well.
        r = n - k
        run = prefix[k]
        j = 0
        for i in range(n):
            if used[i]:
                continue
            j += 1
            run += a[i]
            depth = k + j
            cut = min(cap, depth)
            if run > depth * (depth - 1) + min((r - j) * cut, sums[cut]):
                return False
        return True

    def dfs(k: int, prev: int) -> bool:
        nonlocal nodes
        if k == n:
            return prefix[n] % 2 == 0
        sums = cap_sums()
        for v in range(min(prev, n - 1), -1, -1):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(
                    f"witness search exceeded {budget} nodes at n = {n}"
                )
            if not lookahead_ok(k, v, sums):
                break
            spot = place(v)
            if spot == -2:
                break
            if spot < 0:
                continue
            used[spot] = True
            assign[spot] = v
            cap_count[b[spot]] -= 1
            prefix.append(prefix[-1] + v)
            for kp in range(1, k + 1):
                tail_min[kp] += min(v, kp)
            tail_min[k + 1] = 0
            if prefix_ok(k + 1, v, cap_sums()) and dfs(k + 1, v):
                return True
            for kp in range(1, k + 1):
                tail_min[kp] -= min(v, kp)
            prefix.pop()
            cap_count[b[spot]] += 1
            assign[spot] = 0
            used[spot] = False
        return False

    if dfs(0, n - 1):
        return tuple(assign)
    return None


def find_graphic_in_box(
    pair: IntervalSequencePair, budget: int = DEFAULT_SEARCH_BUDGET
) -> Optional[tuple[int, ...]]:
    """Non-increasing graphic sequence assignable into the boxes, or None."""
    vec = graphic_vector_in_box(pair, budget=budget)
    if vec is None:
        return None
    return tuple(sorted(vec, reverse=True))


def realize_pair(
    pair: IntervalSequencePair,
    perm: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> Optional[SimpleGraph]:
    """Build a simple graph meeting the bounds, relabeled through perm.

    ``perm`` maps normalized positions to original positions (as produced
    by normalize_good_order); identity when omitted.  Returns None exactly
    when the pair is not realizable.
    """
    vec = graphic_vector_in_box(pair, budget=budget)
    if vec is None:
        return None
    if perm is None:
        perm = range(pair.n)
    items = sorted(enumerate(vec), key=lambda iv: (-iv[1], iv[0]))
    edges = _havel_hakimi([(i, v) for i, v in items])
    if edges is None:  # cannot happen: the search only returns graphic vectors
        raise AssertionError("graphic vector failed to realize")
    relabeled = frozenset(
        (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges
    )
    return SimpleGraph(pair.n, relabeled)


def verify_witness(g: SimpleGraph, a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff g is simple and every degree lies within the original bounds."""
    if len(a) != len(b):
        raise LengthMismatch(f"lower has length {len(a)}, upper has length {len(b)}")
    if g.n != len(a):
        raise LengthMismatch(f"graph has {g.n} vertices, bounds have {len(a)}")
    for u, v in g.edges:
        if not (0 <= u < v < g.n):
            return False
    deg = g.degrees()
    return all(lo <= deg[i] <= hi for i, (lo, hi) in enumerate(zip(a, b)))


class _Dinic:
    """Plain max-flow used only for small feasibility networks."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap: int) -> int:
        idx = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.adj[u].append(idx)
        self.to.append(u)
        self.cap.append(0)
        self.adj[v].append(idx + 1)
        return idx

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                for idx in self.adj[u]:
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def push(u: int, limit: int) -> int:
                if u == t:
                    return limit
                while it[u] < len(self.adj[u]):
                    idx = self.adj[u][it[u]]
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] == level[u] + 1:
                        got = push(v, min(limit, self.cap[idx]))
                        if got > 0:
                            self.cap[idx] -= got
                            self.cap[idx ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                got = push(s, 1 << 60)
                if got == 0:
                    break
                flow += got


def _feasible_flow(
    n_nodes: int, arcs: list[tuple[int, int, int, int]], source: int, sink: int
) -> Optional[list[int]]:
    """Flow meeting [lower, upper] on every arc, or None.

    Standard reduction: close the network with a sink->source arc, strip
    lower bounds into node imbalances, and saturate them from a super
    source/sink pair.
    """
    big = 1 + sum(hi for _, _, _, hi in arcs)
    all_arcs = arcs + [(sink, source, 0, big)]
    excess = [0] * n_nodes
    net = _Dinic(n_nodes + 2)
    arc_idx = []
    for u, v, lo, hi in all_arcs:
        if lo > hi:
            raise LowerExceedsUpper(f"arc bounds [{lo}, {hi}] are inverted")
        arc_idx.append(net.add_edge(u, v, hi - lo))
        excess[v] += lo
        excess[u] -= lo
    super_s, super_t = n_nodes, n_nodes + 1
    need = 0
    for v, e in enumerate(excess):
        if e > 0:
            net.add_edge(super_s, v, e)
            need += e
        elif e < 0:
            net.add_edge(v, super_t, -e)
    if net.max_flow(super_s, super_t) < need:
        return None
    flows = []
    for (u, v, lo, hi), idx in zip(all_arcs, arc_idx):
        flows.append(lo + (hi - lo) - net.cap[idx])
    return flows[: len(arcs)]


def interval_bipartite_realize(
    left: Sequence[tuple[int, int]], right: Sequence[tuple[int, int]]
) -> Optional[BipartiteGraph]:
    """Bipartite graph with each vertex degree inside its interval, or None.

    Source->left and right->sink arcs carry the degree intervals as flow
    bounds; left-right arcs have capacity one.  The decision is exact, and
    bounds beyond the opposite part size simply make the system infeasible
    (a lower bound) or slack (an upper bound).
    """
    ln, rn = len(left), len(right)
    for side, bounds in (("left", left), ("right", right)):
        for i, (lo, hi) in enumerate(bounds):
            if lo < 0:
                raise NegativeEntry(f"{side}[{i}] lower bound {lo} is negative")
            if lo > hi:
                raise LowerExceedsUpper(f"{side}[{i}] bounds [{lo}, {hi}] are inverted")
    source = 0
    sink = 1 + ln + rn
    arcs: list[tuple[int, int, int, int]] = []
    for i, (lo, hi) in enumerate(left):
        arcs.append((source, 1 + i, lo, hi))
    pair_start = len(arcs)
    for i in range(ln):
        for j in range(rn):
            arcs.append((1 + i, 1 + ln + j, 0, 1))
    for j, (lo, hi) in enumerate(right):
        arcs.append((1 + ln + j, sink, lo, hi))
    flows = _feasible_flow(sink + 1, arcs, source, sink)
    if flows is None:
        return None
    edges = set()
    k = pair_start
    for i in range(ln):
        for j in range(rn):
            if flows[k]:
                edges.add((i, j))
            k += 1
    return BipartiteGraph(ln, rn, frozenset(edges))


def ryser_interval_system(
    pair: IntervalSequencePair,
) -> list[tuple[int, int]]:
    """Per-vertex intervals [tilde(a)_i, tilde(b)_i], each side of the test below."""
    require_good_order(pair)
    ta = _tilde_unchecked(pair.a)
    tb = _tilde_unchecked(pair.b)
    return list(zip(ta, tb))


def check_ryser_interval(pair: IntervalSequencePair) -> CriterionVerdict:
    """Necessary condition: the tilde interval system is bipartite realizable.

    Applies the tilde lift to a and b separately (each with its own
    crossing index) and decides feasibility of the symmetric bipartite
    interval system.  Realizable pairs always pass; the converse fails.
    No witness indices apply, so a failing verdict carries none.
    """
    system = ryser_interval_system(pair)
    witness = interval_bipartite_realize(system, system)
    return CriterionVerdict(witness is not None)
