"""Fast connected-edge-subgraph enumerator.

Candidate edges are split against the current solution's vertex set into
inner (both endpoints inside) and outer (exactly one endpoint inside).
Branching takes all inner candidates before any outer one; together with the
done-set exclusions this keeps the inner candidate set no larger than the
solution's vertex count, which is what bounds the per-solution work.

The only table kept is dist[x][y]: shortest-path length between x and y using
solution edges only. Adding an edge never needs a fresh girth computation:
every cycle a candidate edge f could close passes through f, so its length
follows from dist in O(1).
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .enum_core import SolutionSink, _Emitter, validate_threshold
from .errors import ValidationError
from .graph import Graph, INFINITE, Length


@dataclass
class EdgeRunStats:
    iterations: int = 0
    max_depth: int = 0
    inner_picks: int = 0
    outer_picks: int = 0
    pair_checks: int = 0


class EdgeEnumState:
    """Per-iteration state: edge solution, inner/outer candidates, within-solution distances.

    dist covers all vertices of the current solution subgraph (sol_verts), not
    just those touching a candidate; a shortest path may run through vertices
    that no candidate is incident to.
    """

    __slots__ = ("g", "k", "solution", "sol_verts", "inner_cand", "outer_cand", "blocked", "dist")

    def __init__(self, g, k, solution, sol_verts, inner_cand, outer_cand, blocked, dist):
        self.g = g
        self.k = k
        self.solution = solution
        self.sol_verts = sol_verts
        self.inner_cand = inner_cand
        self.outer_cand = outer_cand
        self.blocked = blocked
        self.dist = dist

    @property
    def cand(self) -> set[int]:
        return self.inner_cand | self.outer_cand

    @property
    def attachment(self) -> set[int]:
        """Solution vertices incident to at least one candidate edge."""
        out: set[int] = set()
        for eid in self.inner_cand:
            u, v = self.g.endpoints(eid)
            out.add(u)
            out.add(v)
        for eid in self.outer_cand:
            u, v = self.g.endpoints(eid)
            if u in self.sol_verts:
                out.add(u)
            if v in self.sol_verts:
                out.add(v)
        return out

    def get_dist(self, x: int, y: int) -> Length:
        row = self.dist.get(x)
        if row is None:
            return INFINITE
        return row.get(y, INFINITE)


def seed_state(g: Graph, k: Length, eid: int, blocked: set[int]) -> EdgeEnumState:
    """State for the single-edge solution {eid}.

    Every non-blocked edge sharing an endpoint is a candidate (two edges never
    close a cycle) and is outer, since a simple graph has no second edge on
    the same endpoint pair.
    """
    u, v = g.endpoints(eid)
    outer = set()
    for x in (u, v):
        for _, fid in g.adj[x]:
            if fid != eid and fid not in blocked:
                outer.add(fid)
    dist = {u: {u: 0, v: 1}, v: {u: 1, v: 0}}
    return EdgeEnumState(g, k, {eid}, {u, v}, set(), outer, set(blocked), dist)


def select_edge(state: EdgeEnumState) -> int:
    """Next edge to branch on: lowest-id inner candidate, else lowest-id outer."""
    if state.inner_cand:
        return min(state.inner_cand)
    if state.outer_cand:
        return min(state.outer_cand)
    raise ValueError("select_edge on empty candidate sets")


def pair_girth_ok(state: EdgeEnumState, e: int, f: int) -> bool:
    """Does adding both e (the chosen edge) and f (a candidate) keep girth >= k?

    Evaluated in O(1): cycles not through f are already certified because e is
    a valid candidate, and the shortest cycle through f follows from the
    within-solution distances. For an inner e = {u, v} and f = {x, y} that is
    1 + min(d[x][y], d[x][u]+1+d[v][y], d[x][v]+1+d[u][y]); for an outer e
    attaching new vertex v and f = {v, w} the cycle must run through both
    edges, giving 2 + d[u][w].
    """
    g = state.g
    d = state.dist
    u, v = g.endpoints(e)
    x, y = g.endpoints(f)
    if u in state.sol_verts and v in state.sol_verts:
        dx = d[x]
        dy = d[y]
        shortest = min(dx[y], dx[u] + 1 + dy[v], dx[v] + 1 + dy[u])
        return 1 + shortest >= state.k
    if u not in state.sol_verts:
        u, v = v, u
    w = x if y == v else y
    return 2 + d[u][w] >= state.k


def update_dist_s(state: EdgeEnumState, e: int) -> dict[int, dict[int, Length]]:
    """Within-solution distance table after adding edge e.

    Inner edge: three-way min over all vertex pairs (a simple path uses the
    new edge at most once). Outer edge: the new vertex hangs off u, so it just
    gains a row/column at d[x][u] + 1.
    """
    g = state.g
    old = state.dist
    u, v = g.endpoints(e)
    if u in state.sol_verts and v in state.sol_verts:
        du = old[u]
        dv = old[v]
        new: dict[int, dict[int, Length]] = {}
        for x, rowx in old.items():
            xu = rowx[u] + 1
            xv = rowx[v] + 1
            nrow: dict[int, Length] = {}
            for y, d in rowx.items():
                alt = xu + dv[y]
                if alt < d:
                    d = alt
                alt = xv + du[y]
                if alt < d:
                    d = alt
                nrow[y] = d
            new[x] = nrow
        return new
    if u not in state.sol_verts:
        u, v = v, u
    new = {}
    vrow: dict[int, Length] = {v: 0}
    for x, rowx in old.items():
        nrow = dict(rowx)
        d = rowx[u] + 1
        nrow[v] = d
        vrow[x] = d
        new[x] = nrow
    new[v] = vrow
    return new


def update_edge_cand(state: EdgeEnumState, e: int) -> tuple[set[int], set[int]]:
    """(inner, outer) candidate sets after adding edge e.

    Inner e: outer candidates stay valid untouched (their loose endpoint still
    has degree one, so they close no cycle) and the remaining inner ones are
    re-validated in O(1) each. Outer e with new endpoint v: old candidates
    survive as they are, and every non-excluded edge at v is classified; edges
    back into the solution become inner if their cycle is long enough, edges
    to fresh vertices become outer.
    """
    g = state.g
    u, v = g.endpoints(e)
    if u in state.sol_verts and v in state.sol_verts:
        inner = {f for f in state.inner_cand if f != e and pair_girth_ok(state, e, f)}
        return inner, set(state.outer_cand)
    if u not in state.sol_verts:
        u, v = v, u
    inner = set(state.inner_cand)
    outer = set(state.outer_cand)
    outer.discard(e)
    for w, fid in g.adj[v]:
        if fid == e or fid in state.blocked:
            continue
        if w in state.sol_verts:
            outer.discard(fid)
            if pair_girth_ok(state, e, fid):
                inner.add(fid)
        else:
            outer.add(fid)
    return inner, outer


def advance(state: EdgeEnumState, e: int, stats: EdgeRunStats | None = None) -> EdgeEnumState:
    """Child state for solution S + {e}; the parent is left untouched."""
    g = state.g
    u, v = g.endpoints(e)
    is_inner = u in state.sol_verts and v in state.sol_verts
    if stats is not None:
        if is_inner:
            stats.inner_picks += 1
        else:
            stats.outer_picks += 1
        stats.pair_checks += len(state.inner_cand) if is_inner else g.degree(v if v not in state.sol_verts else u)
    inner, outer = update_edge_cand(state, e)
    dist = update_dist_s(state, e)
    sol_verts = state.sol_verts if is_inner else state.sol_verts | ({u, v} - state.sol_verts)
    return EdgeEnumState(
        g,
        state.k,
        state.solution | {e},
        set(sol_verts),
        inner,
        outer,
        set(state.blocked),
        dist,
    )


def exclude_candidate(state: EdgeEnumState, e: int) -> None:
    """Drop e from this iteration's remaining subtree (the done-set step)."""
    state.inner_cand.discard(e)
    state.outer_cand.discard(e)
    state.blocked.add(e)


def enumerate_edges_fast(
    g: Graph,
    k: Length,
    sink: SolutionSink | None = None,
    *,
    include_empty: bool = True,
    limit: int | None = None,
    on_state: Callable[[EdgeEnumState], object] | None = None,
    prune: Callable[[EdgeEnumState], bool] | None = None,
    stats: EdgeRunStats | None = None,
) -> int:
    """Enumerate all connected subgraphs (edge subsets) with girth >= k, each once.

    Same solution set as the baseline engine in connected edge mode. The root
    branches on every single edge in ascending id order; below that, inner
    candidates are taken before outer ones. `prune` may cut a subtree after
    its root solution was emitted (used by the extremal search). Returns the
    number of solutions emitted.
    """
    validate_threshold(k)
    if g.weighted:
        raise ValidationError("fast enumeration is unweighted; use the baseline engine")
    emitter = _Emitter(sink, limit)
    if stats is not None:
        stats.iterations += 1
        stats.max_depth = max(stats.max_depth, 1)
    if include_empty and not emitter.emit(frozenset()):
        return emitter.count
    root_blocked: set[int] = set()
    stack: list[list] = []
    next_root = 0
    while True:
        if stack:
            frame = stack[-1]
            state, order, i = frame
            if i == len(order):
                stack.pop()
                continue
            frame[2] += 1
            e = order[i]
            child = advance(state, e, stats)
            exclude_candidate(state, e)
            depth = len(stack) + 2
        elif next_root < g.m:
            e = next_root
            next_root += 1
            child = seed_state(g, k, e, root_blocked)
            root_blocked.add(e)
            depth = 2
        else:
            break
        if stats is not None:
            stats.iterations += 1
            if depth > stats.max_depth:
                stats.max_depth = depth
        if on_state is not None:
            on_state(child)
        if not emitter.emit(frozenset(child.solution)):
            break
        if prune is not None and prune(child):
            continue
        stack.append([child, sorted(child.inner_cand) + sorted(child.outer_cand), 0])
    return emitter.count
