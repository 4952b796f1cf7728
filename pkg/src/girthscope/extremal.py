"""Problem variants on the baseline engine, and densest girth-k graph search.

The weighted and non-connected variants only change the candidate test, so
they run on the baseline binary-partition engine. The extremal search runs
the fast edge enumerator over a complete graph, pruning subtrees that cannot
reach the best edge count seen so far.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .edges_fast import EdgeEnumState, enumerate_edges_fast
from .enum_core import EnumConfig, SolutionSink, enumerate_baseline, validate_threshold
from .errors import ValidationError
from .graph import Graph, INFINITE, Length, complete_graph


def enumerate_variant(g: Graph, cfg: EnumConfig, sink: SolutionSink | None = None) -> int:
    """Enumerate under the weighted and/or non-connected problem variants.

    Weighted graphs use the weighted girth (cycle weight = sum of edge
    weights) in the candidate test; connectivity="any" drops the
    connectivity requirement, leaving girth as the only condition (the girth
    of a disconnected graph is the minimum over its components, which the
    whole-graph girth computation already reports).
    """
    return enumerate_baseline(g, cfg, sink)


@dataclass
class ExtremalResult:
    """Densest n-vertex graphs of girth >= k found by the search."""

    n: int
    k: Length
    max_edges: int
    witnesses: list[tuple[tuple[int, int], ...]] = field(default_factory=list)
    explored: int = 0
    complete: bool = True
    connected_only: bool = True


def densest_girth_graphs(
    n: int,
    k: Length,
    *,
    limit: int | None = None,
    connected_only: bool = True,
    reduce_isomorphic: bool = False,
) -> ExtremalResult:
    """Maximum edge count over n-vertex graphs of girth >= k, with all witnesses.

    Enumerates subgraphs of the complete graph on n vertices, skipping any
    subtree whose solution plus remaining candidates cannot beat the current
    maximum (ties are still explored, so every witness is found). `limit`
    caps the number of solutions explored; hitting it flags the result
    incomplete. Witnesses are distinct labelings unless reduce_isomorphic.
    """
    if n < 1:
        raise ValidationError("need at least one vertex")
    if reduce_isomorphic and n > 8:
        raise ValidationError("isomorphism reduction is only supported for n <= 8")
    validate_threshold(k)
    g = complete_graph(n)
    best_size = -1
    witnesses: list[frozenset[int]] = []
    explored = 0
    hit_limit = False

    def sink(solution: frozenset[int], ordinal: int):
        nonlocal best_size, witnesses, explored, hit_limit
        explored += 1
        size = len(solution)
        if size > best_size:
            best_size = size
            witnesses = [solution]
        elif size == best_size:
            witnesses.append(solution)
        if limit is not None and explored >= limit:
            hit_limit = True
            return False
        return True

    if connected_only:
        def prune(state: EdgeEnumState) -> bool:
            # Optimistic reachable size: current solution, live candidates, and
            # edges not yet touching the solution (an outer step can still turn
            # those into candidates; edges that touched and dropped out are
            # dead for good, since girth only decreases along a branch).
            reachable = len(state.solution) + len(state.inner_cand) + len(state.outer_cand)
            sol_verts = state.sol_verts
            for eid, (u, v, _) in enumerate(g.edges):
                if u not in sol_verts and v not in sol_verts and eid not in state.blocked:
                    reachable += 1
            return reachable < best_size

        enumerate_edges_fast(g, k, sink, prune=prune)
    else:
        cfg = EnumConfig(k=k, mode="edge", connectivity="any")

        def prune_any(solution: set[int], candidates: list[int]) -> bool:
            return len(solution) + len(candidates) < best_size

        enumerate_baseline(g, cfg, sink, prune=prune_any)

    pair_witnesses = [tuple(g.endpoints(e) for e in sorted(w)) for w in witnesses]
    pair_witnesses.sort()
    if reduce_isomorphic:
        pair_witnesses = reduce_up_to_isomorphism(pair_witnesses, n)
    return ExtremalResult(
        n=n,
        k=k,
        max_edges=max(best_size, 0),
        witnesses=pair_witnesses,
        explored=explored,
        complete=not hit_limit,
        connected_only=connected_only,
    )


def reduce_up_to_isomorphism(
    witnesses: list[tuple[tuple[int, int], ...]], n: int
) -> list[tuple[tuple[int, int], ...]]:
    """Keep one representative per isomorphism class (brute-force, n <= 8).

    Witnesses are bucketed by degree sequence first; within a bucket, all n!
    vertex permutations decide isomorphism.
    """
    if n > 8:
        raise ValidationError("isomorphism reduction is only supported for n <= 8")

    def degree_sequence(edges):
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(sorted(deg))

    def isomorphic(e1, e2):
        s2 = set(e2)
        for perm in permutations(range(n)):
            mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in e1}
            if mapped == s2:
                return True
        return False

    kept: list[tuple[tuple[int, int], ...]] = []
    buckets: dict[tuple, list[tuple[tuple[int, int], ...]]] = {}
    for w in witnesses:
        sig = degree_sequence(w)
        group = buckets.setdefault(sig, [])
        if not any(isomorphic(w, seen) for seen in group):
            group.append(w)
            kept.append(w)
    return kept


def format_extremal_report(result: ExtremalResult) -> str:
    """Structured text report: parameters, max edges, witnesses, exploration summary."""
    k_text = "inf" if result.k == INFINITE else str(result.k)
    lines = [
        f"n={result.n}",
        f"k={k_text}",
        f"max_edges={result.max_edges}",
        f"explored={result.explored}",
        f"complete={'true' if result.complete else 'false'}",
        f"connected_only={'true' if result.connected_only else 'false'}",
        f"witnesses={len(result.witnesses)}",
    ]
    for w in result.witnesses:
        lines.append("witness: " + " ".join(f"{u}-{v}" for u, v in w))
    return "\n".join(lines)
