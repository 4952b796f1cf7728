"""From-scratch state validation shared by the fast-engine tests and acceptance.

Each checker compares one live enumerator state against the reference
oracles: distance tables entry-wise, candidate sets against the naive
classification.
"""

from __future__ import annotations

from collections import deque

from girthscope import INFINITE, pair_distance, second_distance
from girthscope.enum_core import BaselineState, EnumConfig, candidate_set_naive


def check_induced_state(g, k, state):
    scope = state.solution | state.cand
    for x in scope:
        for y in state.cand:
            if x == y:
                continue
            expected = pair_distance(g, state.solution, x, y)
            assert state.get_dist(x, y) == expected, (
                f"dist[{x}][{y}] = {state.get_dist(x, y)} != {expected} at S={sorted(state.solution)}"
            )
    for u in state.cand:
        for w in state.cand:
            if u == w:
                continue
            expected = second_distance(g, state.solution, u, w)
            assert state.get_second(u, w) == expected, (
                f"second[{u}][{w}] = {state.get_second(u, w)} != {expected} at S={sorted(state.solution)}"
            )
    naive = candidate_set_naive(
        g, BaselineState(set(state.solution), set(state.done_blocked)), EnumConfig(k=k)
    )
    assert state.cand == naive, f"cand {sorted(state.cand)} != {sorted(naive)} at S={sorted(state.solution)}"


def solution_bfs_levels(g, edge_ids, source):
    adj: dict[int, list[int]] = {}
    for eid in edge_ids:
        u, v = g.endpoints(eid)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    levels = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in levels:
                levels[y] = levels[x] + 1
                queue.append(y)
    return levels


def check_edge_state(g, k, state):
    for x in state.sol_verts:
        levels = solution_bfs_levels(g, state.solution, x)
        for y in state.sol_verts:
            expected = levels.get(y, INFINITE)
            assert state.get_dist(x, y) == expected, (
                f"dist[{x}][{y}] = {state.get_dist(x, y)} != {expected} at S={sorted(state.solution)}"
            )
    naive = candidate_set_naive(
        g,
        BaselineState(set(state.solution), set(state.blocked)),
        EnumConfig(k=k, mode="edge"),
    )
    inner = {e for e in naive if all(p in state.sol_verts for p in g.endpoints(e))}
    assert state.inner_cand == inner, (
        f"inner {sorted(state.inner_cand)} != {sorted(inner)} at S={sorted(state.solution)}"
    )
    assert state.outer_cand == naive - inner, (
        f"outer {sorted(state.outer_cand)} != {sorted(naive - inner)} at S={sorted(state.solution)}"
    )
    assert len(state.inner_cand) <= len(state.sol_verts)
    assert state.attachment <= state.sol_verts
