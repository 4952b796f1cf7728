"""Cross-engine verification: equivalence of all enumerators on small corpora.

Also home to the corpus builders (exhaustive connected graphs up to
isomorphism, seeded random graphs) used by the verification command and the
test suite.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from itertools import combinations, permutations

from .enum_core import Collector, EnumConfig, brute_force_enumerate, enumerate_baseline
from .edges_fast import enumerate_edges_fast
from .graph import Graph, INFINITE, Length
from .induced_fast import enumerate_induced_fast


def all_connected_graphs(max_n: int) -> list[Graph]:
    """Every connected graph with 1..max_n vertices, one per isomorphism class.

    Generated by filtering all labeled graphs; the canonical form is the
    minimum edge list over all vertex permutations. Intended for small max_n
    (31 graphs at max_n=5).
    """
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen: set[tuple] = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = Graph(n, edges)
            if not _connected(g):
                continue
            canon = min(
                tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
                for p in permutations(range(n))
            )
            if canon in seen:
                continue
            seen.add(canon)
            out.append(g)
    return out


def _connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


def random_graph(rng: random.Random, n: int, p: float, weighted: bool = False) -> Graph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                w = rng.randint(1, 4) if weighted else 1
                edges.append((u, v, w))
    return Graph(n, edges, weighted=weighted)


def random_corpus(
    count: int,
    max_n: int,
    seed: int,
    max_m: int | None = None,
    weighted: bool = False,
) -> list[Graph]:
    """`count` seeded random graphs with n <= max_n (and m <= max_m if given)."""
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        p = rng.choice([0.2, 0.35, 0.5, 0.7])
        g = random_graph(rng, n, p, weighted=weighted)
        if max_m is not None and g.m > max_m:
            continue
        out.append(g)
    return out


def run_verification(
    *,
    random_count: int = 50,
    seed: int = 2024,
    max_n: int = 6,
    max_m: int = 7,
    thresholds: tuple[Length, ...] = (3, 4, 5, INFINITE),
    report: Callable[[str], object] | None = None,
) -> list[str]:
    """Full oracle-equivalence matrix; returns a list of discrepancy strings.

    Corpus: every connected graph on <= 5 vertices plus `random_count` random
    graphs with n <= max_n. For each graph and threshold, the baseline engine
    is checked against the brute-force filter in all four mode/connectivity
    combinations, and the fast engines against both on the connected modes
    (edge mode restricted to graphs with m <= max_m).
    """
    say = report or (lambda _msg: None)
    corpus = all_connected_graphs(5) + random_corpus(random_count, max_n, seed)
    failures: list[str] = []

    def check(name: str, got, expected):
        if set(got) != set(expected):
            failures.append(name)
            say(f"FAIL {name}: {len(got)} vs {len(expected)} solutions")

    for idx, g in enumerate(corpus):
        tag = f"graph#{idx}(n={g.n},m={g.m})"
        for k in thresholds:
            for mode in ("induced", "edge"):
                if mode == "edge" and g.m > max_m:
                    continue
                for connectivity in ("connected", "any"):
                    cfg = EnumConfig(k=k, mode=mode, connectivity=connectivity)
                    expected = brute_force_enumerate(g, cfg)
                    sink = Collector()
                    enumerate_baseline(g, cfg, sink)
                    check(f"{tag} k={k} {mode}/{connectivity} baseline", sink.solutions, expected)
                    if connectivity == "connected":
                        fast = Collector()
                        if mode == "induced":
                            enumerate_induced_fast(g, k, fast)
                        else:
                            enumerate_edges_fast(g, k, fast)
                        check(f"{tag} k={k} {mode}/{connectivity} fast", fast.solutions, expected)
    say(f"verified {len(corpus)} graphs x {len(thresholds)} thresholds; {len(failures)} failure(s)")
    return failures
