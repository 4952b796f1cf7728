"""Binary-partition baseline enumerator and the exhaustive brute-force reference.

Both engines emit every qualifying subgraph exactly once: each iteration
outputs its solution, then branches on every candidate element in ascending
id order, excluding already-branched elements from the remaining subtree.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .errors import BudgetExceededError, ValidationError
from .girth import girth_of_adjacency, girth_weighted
from .graph import EdgeSet, Graph, INFINITE, Length, VertexSet, edge_subgraph, induced_subgraph

#: Streaming consumer: called as sink(solution, ordinal) with ordinals counting
#: up from 0; returning False stops the run cleanly with a partial count.
SolutionSink = Callable[[frozenset[int], int], object]

MODES = ("induced", "edge")
CONNECTIVITIES = ("connected", "any")


@dataclass
class EnumConfig:
    """What to enumerate: girth threshold, element kind, and problem variant."""

    k: Length
    mode: str = "induced"
    connectivity: str = "connected"
    include_empty: bool = True
    limit: int | None = None
    weighted: bool = False

    def validate(self, g: Graph) -> None:
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}")
        if self.connectivity not in CONNECTIVITIES:
            raise ValidationError(f"connectivity must be one of {CONNECTIVITIES}")
        validate_threshold(self.k)
        if self.limit is not None and self.limit < 0:
            raise ValidationError("limit must be >= 0")
        if self.weighted and not g.weighted:
            raise ValidationError("weighted enumeration requires a weighted graph")


def validate_threshold(k: Length) -> None:
    if k != INFINITE and not (isinstance(k, int) and k >= 3):
        raise ValidationError("girth threshold must be an integer >= 3, or INFINITE")


@dataclass
class BaselineState:
    """One iteration of the baseline engine: current solution plus the done-set mask."""

    solution: set[int]
    excluded: set[int]


class Collector:
    """Sink that stores every solution in order."""

    def __init__(self):
        self.solutions: list[frozenset[int]] = []

    def __call__(self, solution: frozenset[int], ordinal: int):
        self.solutions.append(solution)


class _Emitter:
    __slots__ = ("sink", "limit", "count", "stopped")

    def __init__(self, sink: SolutionSink | None, limit: int | None):
        self.sink = sink
        self.limit = limit
        self.count = 0
        self.stopped = False

    def emit(self, solution: frozenset[int]) -> bool:
        if self.limit is not None and self.count >= self.limit:
            self.stopped = True
            return False
        keep_going = True
        if self.sink is not None:
            keep_going = self.sink(solution, self.count) is not False
        self.count += 1
        if not keep_going or (self.limit is not None and self.count >= self.limit):
            self.stopped = True
        return not self.stopped


# --- from-scratch feasibility checks ---------------------------------------

def _vertices_connected(g: Graph, members: VertexSet) -> bool:
    if len(members) <= 1:
        return True
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in members and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(members)


def _edges_connected(g: Graph, eids: EdgeSet) -> bool:
    if not eids:
        return True
    verts: set[int] = set()
    adj: dict[int, list[int]] = {}
    for eid in eids:
        u, v = g.endpoints(eid)
        verts.add(u)
        verts.add(v)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def _induced_girth_ok(g: Graph, members: set[int], cfg: EnumConfig) -> bool:
    if cfg.weighted:
        return girth_weighted(induced_subgraph(g, members)) >= cfg.k
    order = sorted(members)
    index = {v: i for i, v in enumerate(order)}
    adj = [[index[y] for y in g.neighbors(v) if y in members] for v in order]
    return girth_of_adjacency(adj) >= cfg.k


def _edge_girth_ok(g: Graph, eids: set[int], cfg: EnumConfig) -> bool:
    if cfg.weighted:
        return girth_weighted(edge_subgraph(g, eids)) >= cfg.k
    index: dict[int, int] = {}
    adj: list[list[int]] = []
    for eid in eids:
        u, v = g.endpoints(eid)
        for x in (u, v):
            if x not in index:
                index[x] = len(adj)
                adj.append([])
        adj[index[u]].append(index[v])
        adj[index[v]].append(index[u])
    return girth_of_adjacency(adj) >= cfg.k


def _solution_ok(g: Graph, members: set[int], cfg: EnumConfig) -> bool:
    if cfg.mode == "induced":
        if cfg.connectivity == "connected" and not _vertices_connected(g, members):
            return False
        return _induced_girth_ok(g, members, cfg)
    if cfg.connectivity == "connected" and not _edges_connected(g, members):
        return False
    return _edge_girth_ok(g, members, cfg)


def candidate_set_naive(g: Graph, state: BaselineState, cfg: EnumConfig) -> set[int]:
    """Elements whose addition to the current solution yields another solution.

    Connectivity and girth are re-checked from scratch for every non-excluded
    element; in the non-connected variant only the girth condition applies.
    """
    total = g.n if cfg.mode == "induced" else g.m
    out: set[int] = set()
    for x in range(total):
        if x in state.solution or x in state.excluded:
            continue
        if _solution_ok(g, state.solution | {x}, cfg):
            out.add(x)
    return out


def enumerate_baseline(
    g: Graph,
    cfg: EnumConfig,
    sink: SolutionSink | None = None,
    *,
    prune: Callable[[set[int], list[int]], bool] | None = None,
) -> int:
    """Enumerate every solution exactly once with from-scratch candidate checks.

    Candidates are processed in ascending id; each branch excludes the
    candidates already branched on at the same level, which is what prevents
    duplicates. The empty solution is emitted first when configured. Returns
    the number of solutions emitted (partial if the sink stopped the run).

    `prune` is consulted with (solution, candidates) before a subtree is
    expanded; returning True skips the subtree but keeps its root solution.
    """
    cfg.validate(g)
    emitter = _Emitter(sink, cfg.limit)
    root = BaselineState(set(), set())
    if cfg.include_empty and not emitter.emit(frozenset()):
        return emitter.count
    root_cands = sorted(candidate_set_naive(g, root, cfg))
    stack = []
    if prune is None or not prune(root.solution, root_cands):
        stack.append([root, root_cands, 0])
    while stack:
        frame = stack[-1]
        state, order, i = frame
        if i == len(order):
            stack.pop()
            continue
        frame[2] += 1
        x = order[i]
        child = BaselineState(state.solution | {x}, state.excluded | set(order[:i]))
        if not emitter.emit(frozenset(child.solution)):
            break
        child_cands = sorted(candidate_set_naive(g, child, cfg))
        if prune is None or not prune(child.solution, child_cands):
            stack.append([child, child_cands, 0])
    return emitter.count


def brute_force_enumerate(
    g: Graph,
    cfg: EnumConfig,
    *,
    max_exponent: int = 20,
) -> list[frozenset[int]]:
    """All solutions by filtering every subset; the correctness oracle for the engines.

    Refuses to run past 2**max_exponent subsets. Honors cfg.limit by stopping
    after that many solutions (in subset-mask order). Returns a canonically
    sorted list.
    """
    cfg.validate(g)
    total = g.n if cfg.mode == "induced" else g.m
    if total > max_exponent:
        raise BudgetExceededError(
            f"brute force over 2**{total} subsets exceeds the 2**{max_exponent} budget"
        )
    out: list[frozenset[int]] = []
    limit = cfg.limit
    for mask in range(1 << total):
        members = {i for i in range(total) if mask >> i & 1}
        if not members and not cfg.include_empty:
            continue
        if _solution_ok(g, members, cfg):
            out.append(frozenset(members))
            if limit is not None and len(out) >= limit:
                break
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out
