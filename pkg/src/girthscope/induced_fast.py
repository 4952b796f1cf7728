"""Fast connected-induced-subgraph enumerator with incremental candidate maintenance.

Instead of re-testing girth from scratch, each iteration keeps two tables for
the current solution S:

  dist[x][y]    shortest-path length between x and y in the induced graph on
                S + {x, y} ("pair graph"), kept for x, y in S | cand;
  second[u][w]  length of the best u-w path in the pair graph once the first
                edge of a shortest path is removed, kept for u, w in cand.

A candidate u stays valid after adding v iff dist[u][v] + second[u][v] >= k:
any cycle through both decomposes into two paths no shorter than those two
values, and all other cycles were already certified. Tables are updated
Floyd-Warshall style (dist) and by a constant-time case split with an
O(|S|) fallback (second). Entries for vertices outside the table's scope are
INFINITE by convention.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .enum_core import SolutionSink, _Emitter, validate_threshold
from .errors import ValidationError
from .graph import Graph, INFINITE, Length

IN_SOLUTION = "in-solution"
CANDIDATE = "candidate"
GIRTH_EXCLUDED = "girth-excluded"
DONE_EXCLUDED = "done-excluded"
UNREACHED = "unreached"


@dataclass
class InducedRunStats:
    """Counters for one enumeration run (work accounting and case coverage)."""

    iterations: int = 0
    max_depth: int = 0
    candidate_pairs: int = 0
    fast_old_path_shorter: int = 0  # constant-time update, old shortest beats the via-v path
    fast_via_path_shorter: int = 0  # constant-time update, via-v path at least ties
    full_recomputes: int = 0


class InducedEnumState:
    """Per-iteration state: solution, candidate set, exclusion sets, both tables.

    Tables are dicts of dicts holding finite entries only; get_dist/get_second
    report INFINITE for anything absent, which covers out-of-scope vertices.
    """

    __slots__ = ("g", "k", "solution", "cand", "done_blocked", "girth_blocked", "dist", "second")

    def __init__(self, g, k, solution, cand, done_blocked, girth_blocked, dist, second):
        self.g = g
        self.k = k
        self.solution = solution
        self.cand = cand
        self.done_blocked = done_blocked
        self.girth_blocked = girth_blocked
        self.dist = dist
        self.second = second

    def status(self, v: int) -> str:
        if v in self.solution:
            return IN_SOLUTION
        if v in self.cand:
            return CANDIDATE
        if v in self.done_blocked:
            return DONE_EXCLUDED
        if v in self.girth_blocked:
            return GIRTH_EXCLUDED
        return UNREACHED

    def get_dist(self, x: int, y: int) -> Length:
        row = self.dist.get(x)
        if row is None:
            return INFINITE
        return row.get(y, INFINITE)

    def get_second(self, u: int, w: int) -> Length:
        row = self.second.get(u)
        if row is None:
            return INFINITE
        return row.get(w, INFINITE)


def initial_state(g: Graph, k: Length) -> InducedEnumState:
    """State for the empty solution: every vertex is a candidate.

    Pair graphs contain just the two query vertices, so dist is 1 on edges and
    the second distance is nowhere finite.
    """
    dist: dict[int, dict[int, Length]] = {}
    for v in range(g.n):
        row: dict[int, Length] = {v: 0}
        for nb in g.neighbors(v):
            row[nb] = 1
        dist[v] = row
    second: dict[int, dict[int, Length]] = {v: {} for v in range(g.n)}
    return InducedEnumState(g, k, set(), set(range(g.n)), set(), set(), dist, second)


def _split_old_candidates(state: InducedEnumState, v: int):
    """Partition cand - {v} for the move to S + {v}: (survivors, girth_dropped, detached)."""
    survivors: set[int] = set()
    girth_dropped: set[int] = set()
    detached: set[int] = set()
    k = state.k
    dist = state.dist
    second = state.second
    for u in state.cand:
        if u == v:
            continue
        duv = dist[u].get(v)
        if duv is None:
            # only possible while S is empty: u has no edge to v, so the
            # one-vertex solution {v} cannot reach it yet
            detached.add(u)
        elif duv + second[u].get(v, INFINITE) >= k:
            survivors.add(u)
        else:
            girth_dropped.add(u)
    return survivors, girth_dropped, detached


def filter_old_candidates(state: InducedEnumState, v: int) -> set[int]:
    """Old candidates still valid for S + {v}, decided in O(1) per candidate.

    A candidate u survives iff dist[u][v] + second[u][v] >= k (and, from the
    root only, iff it is attached at all).
    """
    return _split_old_candidates(state, v)[0]


def adopt_new_candidates(state: InducedEnumState, v: int) -> set[int]:
    """Unreached neighbors of v: they attach to S + {v} through v alone.

    A cycle through such a vertex would need two of its neighbors inside the
    new solution, so girth is preserved automatically and no test is needed.
    """
    sol = state.solution
    cand = state.cand
    done = state.done_blocked
    girth = state.girth_blocked
    return {
        w
        for w in state.g.neighbors(v)
        if w not in sol and w not in cand and w not in done and w not in girth
    }


def update_dist(state: InducedEnumState, v: int, newcand: set[int]) -> dict[int, dict[int, Length]]:
    """Distance table for S + {v}: relax old pairs through v, then add adopted rows.

    Old pairs use min(dist[x][y], dist[x][v] + dist[v][y]); a vertex adopted
    through v sits at dist[·][v] + 1 from everything already reached, or at 1
    from a direct neighbor.
    """
    old = state.dist
    adopted = [w for w in newcand if w not in old]
    kept = sorted((state.solution | {v} | newcand) - set(adopted))
    dv = old[v]
    new: dict[int, dict[int, Length]] = {}
    for x in kept:
        rowx = old[x]
        dxv = rowx.get(v)
        nrow: dict[int, Length] = {}
        if dxv is None:
            for y in kept:
                d = rowx.get(y)
                if d is not None:
                    nrow[y] = d
        else:
            for y in kept:
                d = rowx.get(y, INFINITE)
                dvy = dv.get(y)
                if dvy is not None and dxv + dvy < d:
                    d = dxv + dvy
                if d != INFINITE:
                    nrow[y] = d
        new[x] = nrow
    nv = new[v]
    for w in sorted(adopted):
        adj_w = state.g.neighbor_set(w)
        roww: dict[int, Length] = {w: 0}
        for x in kept:
            d = nv[x] + 1
            if x in adj_w:
                d = 1
            roww[x] = d
            new[x][w] = d
        for w2 in adopted:
            if w2 in new:  # processed earlier
                d = 1 if w2 in adj_w else nv[w2] + 1
                roww[w2] = d
                new[w2][w] = d
        new[w] = roww
    return new


def update_second(
    state: InducedEnumState,
    v: int,
    newcand: set[int],
    new_dist: dict[int, dict[int, Length]],
    stats: InducedRunStats | None = None,
) -> dict[int, dict[int, Length]]:
    """Second-distance table for S + {v} over the new candidate pairs.

    When the old dist + second sum is below k the new value follows in O(1)
    from (old dist, via-v dist, old second): min(max(p1, p2), p3). Otherwise
    it is recomputed as the best first hop from u into the new solution that
    does not reuse the shortest path's first edge.
    """
    g = state.g
    k = state.k
    old_dist = state.dist
    old_second = state.second
    sol2 = state.solution | {v}
    new: dict[int, dict[int, Length]] = {}
    pairs = 0
    for u in newcand:
        old_row = old_dist.get(u)
        old_sec = old_second.get(u)
        du = new_dist[u]
        duv = du[v]
        hops = [y for y in g.neighbors(u) if y in sol2]  # ascending
        nrow: dict[int, Length] = {}
        for w in newcand:
            if w == u:
                continue
            pairs += 1
            p1 = old_row.get(w, INFINITE) if old_row is not None else INFINITE
            p3 = old_sec.get(w, INFINITE) if old_sec is not None else INFINITE
            if p1 + p3 < k:
                p2 = duv + new_dist[v][w]
                if stats is not None:
                    if p1 < p2:
                        stats.fast_old_path_shorter += 1
                    else:
                        stats.fast_via_path_shorter += 1
                val = min(p2 if p1 < p2 else p1, p3)
            else:
                if stats is not None:
                    stats.full_recomputes += 1
                target = du[w]
                row_w_dist = new_dist[w]
                first_hop_found = False
                val = INFINITE
                if w in g.neighbor_set(u):
                    scan = sorted(hops + [w])
                else:
                    scan = hops
                for y in scan:
                    dyw1 = (row_w_dist.get(y, INFINITE) if y != w else 0) + 1
                    if not first_hop_found and dyw1 == target:
                        first_hop_found = True  # this edge is the removed one
                        continue
                    if dyw1 < val:
                        val = dyw1
            if val != INFINITE:
                nrow[w] = val
        new[u] = nrow
    if stats is not None:
        stats.candidate_pairs += pairs
    return new


def advance(state: InducedEnumState, v: int, stats: InducedRunStats | None = None) -> InducedEnumState:
    """Child state for solution S + {v}; the parent is left untouched."""
    survivors, girth_dropped, _ = _split_old_candidates(state, v)
    newcand = survivors | adopt_new_candidates(state, v)
    child = InducedEnumState(
        state.g,
        state.k,
        state.solution | {v},
        newcand,
        set(state.done_blocked),
        state.girth_blocked | girth_dropped,
        {},
        {},
    )
    child.dist = update_dist(state, v, newcand)
    child.second = update_second(state, v, newcand, child.dist, stats)
    return child


def exclude_candidate(state: InducedEnumState, v: int) -> None:
    """Drop v from this iteration's remaining subtree (the done-set step)."""
    state.cand.discard(v)
    state.done_blocked.add(v)
    state.dist.pop(v, None)
    state.second.pop(v, None)
    for row in state.dist.values():
        row.pop(v, None)
    for row in state.second.values():
        row.pop(v, None)


def enumerate_induced_fast(
    g: Graph,
    k: Length,
    sink: SolutionSink | None = None,
    *,
    include_empty: bool = True,
    limit: int | None = None,
    on_state: Callable[[InducedEnumState], object] | None = None,
    stats: InducedRunStats | None = None,
) -> int:
    """Enumerate all connected induced subgraphs with girth >= k, each exactly once.

    Same solution set as the baseline engine in connected induced mode, but
    candidate sets are maintained incrementally. Each recursion level owns an
    independent state copy, so backtracking needs no undo. Returns the number
    of solutions emitted.
    """
    validate_threshold(k)
    if g.weighted:
        raise ValidationError("fast enumeration is unweighted; use the baseline engine")
    emitter = _Emitter(sink, limit)
    root = initial_state(g, k)
    if stats is not None:
        stats.iterations += 1
        stats.max_depth = max(stats.max_depth, 1)
    if on_state is not None:
        on_state(root)
    if include_empty and not emitter.emit(frozenset()):
        return emitter.count
    stack = [[root, sorted(root.cand), 0]]
    while stack:
        frame = stack[-1]
        state, order, i = frame
        if i == len(order):
            stack.pop()
            continue
        frame[2] += 1
        v = order[i]
        child = advance(state, v, stats)
        exclude_candidate(state, v)
        if stats is not None:
            stats.iterations += 1
            depth = len(stack) + 1
            if depth > stats.max_depth:
                stats.max_depth = depth
        if on_state is not None:
            on_state(child)
        if not emitter.emit(frozenset(child.solution)):
            break
        stack.append([child, sorted(child.cand), 0])
    return emitter.count
