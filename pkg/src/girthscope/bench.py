"""Benchmark harness: fast enumerator vs the exhaustive subset filter.

The comparison baseline is subset generation (2^m / 2^n candidates filtered
one by one), which is what the fast engines are supposed to beat; both sides
run serially on one core so ratios stay comparable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .edges_fast import EdgeRunStats, enumerate_edges_fast
from .enum_core import EnumConfig, brute_force_enumerate
from .errors import ValidationError
from .graph import Graph, INFINITE, Length
from .induced_fast import InducedRunStats, enumerate_induced_fast


@dataclass
class BenchReport:
    graph_desc: str
    k: Length
    mode: str
    limit: int | None
    fast_count: int
    fast_seconds: float
    fast_max_delay: float  # longest gap between consecutive solutions
    fast_max_depth: int
    brute_count: int
    brute_seconds: float
    speedup: float
    ok: bool

    @property
    def fast_per_solution(self) -> float:
        return self.fast_seconds / self.fast_count if self.fast_count else 0.0

    @property
    def brute_per_solution(self) -> float:
        return self.brute_seconds / self.brute_count if self.brute_count else 0.0

    def to_kv_lines(self) -> list[str]:
        k_text = "inf" if self.k == INFINITE else str(self.k)
        return [
            f"graph={self.graph_desc}",
            f"k={k_text}",
            f"mode={self.mode}",
            f"limit={self.limit if self.limit is not None else 'none'}",
            f"fast_count={self.fast_count}",
            f"fast_seconds={self.fast_seconds:.6f}",
            f"fast_per_solution_us={self.fast_per_solution * 1e6:.3f}",
            f"fast_max_delay_us={self.fast_max_delay * 1e6:.3f}",
            f"fast_max_depth={self.fast_max_depth}",
            f"brute_count={self.brute_count}",
            f"brute_seconds={self.brute_seconds:.6f}",
            f"brute_per_solution_us={self.brute_per_solution * 1e6:.3f}",
            f"speedup={self.speedup:.2f}",
            f"status={'OK' if self.ok else 'FAILED'}",
        ]


def bench_compare(
    g: Graph,
    k: Length,
    mode: str = "edge",
    limit: int | None = None,
    graph_desc: str | None = None,
    max_exponent: int = 28,
) -> BenchReport:
    """Run the fast engine and the brute-force filter on identical input.

    Counts are cross-checked (a mismatch marks the report FAILED: that is a
    correctness alarm, not a measurement artifact). With a limit, both sides
    stop after the same number of solutions.
    """
    if mode not in ("induced", "edge"):
        raise ValidationError("mode must be 'induced' or 'edge'")
    desc = graph_desc or repr(g)

    max_delay = 0.0
    last_emit = time.perf_counter()

    def delay_probe(solution, ordinal):
        nonlocal max_delay, last_emit
        now = time.perf_counter()
        if now - last_emit > max_delay:
            max_delay = now - last_emit
        last_emit = now

    t0 = time.perf_counter()
    if mode == "edge":
        stats = EdgeRunStats()
        fast_count = enumerate_edges_fast(g, k, delay_probe, limit=limit, stats=stats)
    else:
        stats = InducedRunStats()
        fast_count = enumerate_induced_fast(g, k, delay_probe, limit=limit, stats=stats)
    fast_seconds = time.perf_counter() - t0

    cfg = EnumConfig(k=k, mode=mode, limit=limit)
    t0 = time.perf_counter()
    brute = brute_force_enumerate(g, cfg, max_exponent=max_exponent)
    brute_seconds = time.perf_counter() - t0

    return BenchReport(
        graph_desc=desc,
        k=k,
        mode=mode,
        limit=limit,
        fast_count=fast_count,
        fast_seconds=fast_seconds,
        fast_max_delay=max_delay,
        fast_max_depth=stats.max_depth,
        brute_count=len(brute),
        brute_seconds=brute_seconds,
        speedup=brute_seconds / fast_seconds if fast_seconds > 0 else float("inf"),
        ok=fast_count == len(brute),
    )
