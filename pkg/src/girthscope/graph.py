"""Immutable simple-graph core: construction, parsing, subgraph views, connectivity.

Vertices are dense ints 0..n-1 and edges dense ints 0..m-1, assigned in input
order. All enumeration determinism downstream keys off ascending id order, so
adjacency lists are kept sorted.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Set as AbstractSet

from .errors import ParseError, ValidationError

#: Sentinel for the length of a nonexistent path / the girth of an acyclic
#: graph. math.inf saturates under addition and sorts above every int, which
#: is exactly the Length contract.
INFINITE = math.inf

Length = int | float

VertexSet = AbstractSet[int]
EdgeSet = AbstractSet[int]


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Immutable after construction; the enumerators realize "vertex/edge
    removal" with exclusion masks, never by mutating a Graph, so one instance
    can be shared freely across runs.

    Attributes:
        n: vertex count.
        edges: tuple of (u, v, weight) with u < v, indexed by edge id.
        adj: per-vertex tuple of (neighbor, edge id), sorted by neighbor.
        weighted: whether edge weights are meaningful (all 1 otherwise).
    """

    __slots__ = ("n", "edges", "adj", "weighted", "_neighbors", "_neighbor_sets", "_pair_ids")

    def __init__(self, n: int, edges: Iterable[tuple] = (), weighted: bool = False):
        if n < 0:
            raise ValidationError("vertex count must be non-negative")
        norm: list[tuple[int, int, int]] = []
        pair_ids: dict[tuple[int, int], int] = {}
        for item in edges:
            if len(item) == 2:
                u, v = item
                w = 1
            else:
                u, v, w = item
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in pair_ids:
                raise ValidationError(f"duplicate edge ({u}, {v})")
            if not isinstance(w, int) or w < 1:
                raise ValidationError(f"edge ({u}, {v}) has weight {w}; weights must be integers >= 1")
            if not weighted and w != 1:
                raise ValidationError("non-unit weight on an unweighted graph")
            pair_ids[(u, v)] = len(norm)
            norm.append((u, v, w))

        adj_lists: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v, _) in enumerate(norm):
            adj_lists[u].append((v, eid))
            adj_lists[v].append((u, eid))
        for lst in adj_lists:
            lst.sort()

        self.n = n
        self.edges = tuple(norm)
        self.adj = tuple(tuple(lst) for lst in adj_lists)
        self.weighted = weighted
        self._neighbors = tuple(tuple(nb for nb, _ in lst) for lst in adj_lists)
        self._neighbor_sets = tuple(frozenset(t) for t in self._neighbors)
        self._pair_ids = pair_ids

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbor ids of v in ascending order."""
        return self._neighbors[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.edges[eid]
        return u, v

    def weight(self, eid: int) -> int:
        return self.edges[eid][2]

    def edge_id(self, u: int, v: int) -> int | None:
        """Edge id joining u and v, or None if they are not adjacent."""
        if u > v:
            u, v = v, u
        return self._pair_ids.get((u, v))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges and self.weighted == other.weighted

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.weighted))

    def __repr__(self) -> str:
        tag = ", weighted" if self.weighted else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"


def parse_edge_list(text: str, weighted: bool = False) -> Graph:
    """Parse "u v" / "u v w" lines into a Graph.

    '#' starts a comment. Vertex labels are arbitrary tokens, renumbered to
    0..n-1 in order of first appearance. Self-loops, duplicate edges and
    weights < 1 are rejected.
    """
    ids: dict[str, int] = {}
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if weighted:
            if len(parts) not in (2, 3):
                raise ParseError("expected 'u v' or 'u v w'", lineno)
        elif len(parts) != 2:
            raise ParseError("expected 'u v' (pass weighted=True for 'u v w' lines)", lineno)
        u = ids.setdefault(parts[0], len(ids))
        v = ids.setdefault(parts[1], len(ids))
        if len(parts) == 3:
            try:
                w = int(parts[2])
            except ValueError:
                raise ParseError(f"weight {parts[2]!r} is not an integer", lineno) from None
        else:
            w = 1
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop on {parts[0]!r}")
        if w < 1:
            raise ValidationError(f"line {lineno}: weight {w} < 1")
        a, b = (u, v) if u < v else (v, u)
        if (a, b) in seen:
            raise ValidationError(f"line {lineno}: duplicate edge {parts[0]!r} {parts[1]!r}")
        seen.add((a, b))
        edges.append((a, b, w))
    return Graph(len(ids), edges, weighted=weighted)


def parse_dimacs(text: str, weighted: bool = False) -> Graph:
    """Parse a DIMACS graph ("p edge n m" header, "e u v [w]" lines, 1-based ids).

    Validation matches parse_edge_list; the declared edge count must match.
    """
    n = None
    declared_m = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer vertex/edge count", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) not in (3, 4) or (len(parts) == 4 and not weighted):
                raise ParseError("expected 'e u v'" + (" or 'e u v w'" if weighted else ""), lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
                w = int(parts[3]) if len(parts) == 4 else 1
            except ValueError:
                raise ParseError("non-integer edge fields", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValidationError(f"line {lineno}: vertex outside 1..{n}")
            if u == v:
                raise ValidationError(f"line {lineno}: self-loop on {u}")
            if w < 1:
                raise ValidationError(f"line {lineno}: weight {w} < 1")
            a, b = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if (a, b) in seen:
                raise ValidationError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add((a, b))
            edges.append((a, b, w))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' problem line")
    if declared_m != len(edges):
        raise ValidationError(f"problem line declares {declared_m} edges, found {len(edges)}")
    return Graph(n, edges, weighted=weighted)


def to_edge_list(g: Graph) -> str:
    """Serialize as edge-list text; re-parsing yields an equal Graph."""
    lines = []
    for u, v, w in g.edges:
        lines.append(f"{u} {v} {w}" if g.weighted else f"{u} {v}")
    return "\n".join(lines) + ("\n" if lines else "")


def induced_subgraph(g: Graph, vertices: VertexSet) -> Graph:
    """Subgraph on `vertices` with every edge of g internal to it, relabeled to 0..|S|-1.

    Relabeling follows ascending source id, so induced_subgraph(g, range(g.n)) == g.
    """
    order = sorted(vertices)
    if order and not (0 <= order[0] and order[-1] < g.n):
        raise ValidationError("vertex id out of range")
    index = {v: i for i, v in enumerate(order)}
    sub = [
        (index[u], index[v], w)
        for (u, v, w) in g.edges
        if u in index and v in index
    ]
    return Graph(len(order), sub, weighted=g.weighted)


def edge_subgraph(g: Graph, edge_ids: EdgeSet) -> Graph:
    """Subgraph whose edges are exactly `edge_ids` and whose vertices are their endpoints."""
    eids = sorted(edge_ids)
    if eids and not (0 <= eids[0] and eids[-1] < g.m):
        raise ValidationError("edge id out of range")
    verts = sorted({x for eid in eids for x in g.endpoints(eid)})
    index = {v: i for i, v in enumerate(verts)}
    sub = [(index[g.edges[eid][0]], index[g.edges[eid][1]], g.edges[eid][2]) for eid in eids]
    return Graph(len(verts), sub, weighted=g.weighted)


def is_connected(g: Graph) -> bool:
    """True iff every vertex pair is joined by a path. Graphs with <= 1 vertex count as connected."""
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.n


# --- standard test-bench graphs -------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int, weights: Iterable[int] | None = None) -> Graph:
    """Cycle 0-1-...-(n-1)-0; optional per-edge weights in that order."""
    if n < 3:
        raise ValidationError("a cycle needs at least 3 vertices")
    pairs = [(i, (i + 1) % n) for i in range(n)]
    if weights is None:
        return Graph(n, pairs)
    ws = list(weights)
    if len(ws) != n:
        raise ValidationError("need one weight per cycle edge")
    return Graph(n, [(u, v, w) for (u, v), w in zip(pairs, ws)], weighted=True)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)
