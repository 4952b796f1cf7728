"""Fast edge-subgraph enumerator: selection rule, O(1) girth tests, table updates."""

from __future__ import annotations

import random

import pytest

from girthscope import (
    Collector,
    EnumConfig,
    Graph,
    INFINITE,
    EdgeRunStats,
    ValidationError,
    brute_force_enumerate,
    complete_graph,
    cycle_graph,
    enumerate_baseline,
    enumerate_edges_fast,
    path_graph,
    petersen_graph,
)
from girthscope.edges_fast import (
    advance,
    exclude_candidate,
    pair_girth_ok,
    seed_state,
    select_edge,
    update_dist_s,
    update_edge_cand,
)
from girthscope.verify import random_corpus
from _state_checks import check_edge_state


def drive(g, k, edge_ids):
    """Seed on the first edge id, then advance through the rest."""
    st = seed_state(g, k, edge_ids[0], set())
    for e in edge_ids[1:]:
        st = advance(st, e)
    return st


def test_seed_state_bootstrap():
    k3 = complete_graph(3)  # edge ids: (0,1)=0, (0,2)=1, (1,2)=2
    st = seed_state(k3, 4, 0, set())
    assert st.solution == {0} and st.sol_verts == {0, 1}
    assert st.inner_cand == set() and st.outer_cand == {1, 2}
    assert st.get_dist(0, 1) == 1
    st2 = seed_state(k3, 4, 0, {1})
    assert st2.outer_cand == {2}


def test_select_edge_rule():
    k3 = complete_graph(3)
    st = seed_state(k3, 3, 0, set())
    assert select_edge(st) == 1  # lowest-id outer: the edge (0,2)
    st.inner_cand.add(2)
    assert select_edge(st) == 2  # inner takes priority
    st.inner_cand.clear()
    st.outer_cand.clear()
    with pytest.raises(ValueError):
        select_edge(st)


def test_pair_girth_ok_examples():
    k3 = complete_graph(3)
    st = seed_state(k3, 4, 0, set())  # S={e01}; adding e12 makes e02 close a triangle
    assert not pair_girth_ok(st, 2, 1)  # cycle length 3 < 4
    st3 = seed_state(k3, 3, 0, set())
    assert pair_girth_ok(st3, 2, 1)  # 3 >= 3

    c4 = cycle_graph(4)  # edge ids: (0,1)=0, (1,2)=1, (2,3)=2, (0,3)=3
    st = drive(c4, 4, [0, 1])  # S={e01,e12}; adding e23 turns e30 inner
    assert pair_girth_ok(st, 2, 3)  # cycle length 4 >= 4


def test_pair_girth_ok_inner_choice():
    # diamond: 4-cycle plus chord; with the cycle in the solution the chord is
    # an inner candidate whose shortest closed cycle has length 3
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    st = drive(g, 3, [0, 1, 2])
    assert st.inner_cand == {3, 4}
    assert pair_girth_ok(st, 3, 4)  # adding e03: chord cycle 0-2 stays length 3
    st4 = drive(g, 4, [0, 1, 2])
    assert st4.inner_cand == {3}  # the chord died as soon as 0..3 all joined


def test_update_dist_s_examples():
    k3 = complete_graph(3)
    st = drive(k3, 3, [0, 2])  # S = {e01, e12}
    assert st.get_dist(0, 2) == 2
    newdist = update_dist_s(st, 1)  # add the inner edge (0,2)
    assert newdist[0][2] == 1

    p3 = path_graph(3)
    st = seed_state(p3, 4, 0, set())
    newdist = update_dist_s(st, 1)  # outer edge (1,2)
    assert newdist[0][2] == 2 and newdist[2][2] == 0


def test_update_dist_s_monotone_on_inner():
    g = complete_graph(4)
    st = drive(g, 3, [0, 1, 3])  # S = {(0,1), (0,2), (1,2)}
    for e in sorted(st.inner_cand):
        nd = update_dist_s(st, e)
        for x in st.sol_verts:
            for y in st.sol_verts:
                assert nd[x][y] <= st.get_dist(x, y)


def test_update_edge_cand_examples():
    k3 = complete_graph(3)
    st4 = seed_state(k3, 4, 0, set())
    inner, outer = update_edge_cand(st4, 1)  # outer edge (0,2) joins vertex 2
    assert inner == set() and outer == set()  # e12 dies: triangle too short
    st3 = seed_state(k3, 3, 0, set())
    inner, outer = update_edge_cand(st3, 1)
    assert inner == {2} and outer == set()

    p3 = path_graph(3)
    inner, outer = update_edge_cand(seed_state(p3, 4, 0, set()), 1)
    assert inner == set() and outer == set()

    c4 = cycle_graph(4)
    st = drive(c4, 4, [0, 1, 2])
    assert st.inner_cand == {3} and st.outer_cand == set()


def test_enumerate_counts():
    k3 = complete_graph(3)
    assert enumerate_edges_fast(k3, 3) == 8
    assert enumerate_edges_fast(k3, 4) == 7
    assert enumerate_edges_fast(cycle_graph(4), 4) == 14
    assert enumerate_edges_fast(cycle_graph(4), 5) == 13
    assert enumerate_edges_fast(Graph(0, []), 3) == 1
    assert enumerate_edges_fast(path_graph(2), 3) == 2


def test_matches_oracles_on_corpus():
    corpus = random_corpus(25, 6, seed=707, max_m=7)
    for g in corpus:
        for k in (3, 4, 5, INFINITE):
            fast, base = Collector(), Collector()
            enumerate_edges_fast(g, k, fast)
            cfg = EnumConfig(k=k, mode="edge")
            enumerate_baseline(g, cfg, base)
            brute = brute_force_enumerate(g, cfg)
            assert set(fast.solutions) == set(base.solutions) == set(brute)


def test_k5_full_equivalence():
    g = complete_graph(5)
    for k in (4, 5):
        fast, base = Collector(), Collector()
        enumerate_edges_fast(g, k, fast)
        enumerate_baseline(g, EnumConfig(k=k, mode="edge"), base)
        brute = brute_force_enumerate(g, EnumConfig(k=k, mode="edge"))
        assert set(fast.solutions) == set(base.solutions) == set(brute)


def test_truncated_prefix_counts_agree():
    # differing branch orders make prefix sets incomparable, but identical
    # solution limits must truncate both engines at the same count
    g = complete_graph(6)
    limit = 400
    fast = enumerate_edges_fast(g, 4, limit=limit)
    base = enumerate_baseline(g, EnumConfig(k=4, mode="edge", limit=limit))
    assert fast == base == limit


def test_state_fidelity_on_random_corpus():
    rng = random.Random(73)
    for _ in range(20):
        n = rng.randint(1, 6)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.55]
        g = Graph(n, edges)
        if g.m > 8:
            continue
        for k in (3, 4, 5, INFINITE):
            enumerate_edges_fast(g, k, on_state=lambda st: check_edge_state(g, k, st))


def mini_dfs(g, k, on_transition):
    """Reimplement the branching loop on the public ops, reporting each transition."""
    blocked: set[int] = set()
    stack = []
    for root_edge in range(g.m):
        child = seed_state(g, k, root_edge, blocked)
        blocked.add(root_edge)
        stack.append([child, sorted(child.inner_cand) + sorted(child.outer_cand), 0])
        while stack:
            frame = stack[-1]
            state, order, i = frame
            if i == len(order):
                stack.pop()
                continue
            frame[2] += 1
            e = order[i]
            was_inner = e in state.inner_cand
            nxt = advance(state, e)
            on_transition(state, e, was_inner, nxt)
            exclude_candidate(state, e)
            stack.append([nxt, sorted(nxt.inner_cand) + sorted(nxt.outer_cand), 0])


@pytest.mark.parametrize("g,k", [
    (complete_graph(4), 3),
    (complete_graph(4), 4),
    (cycle_graph(5), 4),
    (petersen_graph(), 5),
    (Graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5)]), 4),
])
def test_transition_invariants(g, k):
    def on_transition(state, e, was_inner, nxt):
        # inner pick: outer candidates untouched, inner set strictly shrinks
        if was_inner:
            assert nxt.outer_cand == state.outer_cand
            assert nxt.inner_cand < state.inner_cand
            assert nxt.sol_verts == state.sol_verts
        else:
            assert len(nxt.sol_verts) == len(state.sol_verts) + 1
        # inner candidates never outnumber the solution's vertices
        assert len(nxt.inner_cand) <= len(nxt.sol_verts)
        # removed outer candidates all touch the new solution's vertex set
        removed = state.outer_cand - nxt.outer_cand
        assert len(removed) <= len(nxt.sol_verts)
        added = nxt.outer_cand - state.outer_cand
        if added:
            (new_vertex,) = nxt.sol_verts - state.sol_verts
            assert len(added) <= g.degree(new_vertex)

    mini_dfs(g, k, on_transition)


def test_deterministic_output():
    g = petersen_graph()
    a, b = Collector(), Collector()
    enumerate_edges_fast(g, 5, a, limit=500)
    enumerate_edges_fast(g, 5, b, limit=500)
    assert a.solutions == b.solutions


def test_stats_and_stop():
    g = complete_graph(5)
    stats = EdgeRunStats()
    count = enumerate_edges_fast(g, 4, stats=stats)
    assert stats.iterations == count
    assert stats.inner_picks > 0 and stats.outer_picks > 0

    def stopper(sol, ordinal):
        return False if ordinal == 3 else None

    assert enumerate_edges_fast(g, 4, stopper) == 4
    assert enumerate_edges_fast(g, 4, include_empty=False) == count - 1


def test_rejects_weighted_and_bad_k():
    g = Graph(2, [(0, 1, 2)], weighted=True)
    with pytest.raises(ValidationError):
        enumerate_edges_fast(g, 4)
    with pytest.raises(ValidationError):
        enumerate_edges_fast(path_graph(2), 1)
