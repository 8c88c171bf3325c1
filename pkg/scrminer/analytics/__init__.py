from scrminer.analytics.benchmark import (
    BENCH_COLUMNS,
    BenchRow,
    BenchSweep,
    PruningBenchmark,
    bench_frame,
    generate,
)

__all__ = [
    "BENCH_COLUMNS",
    "BenchRow",
    "BenchSweep",
    "PruningBenchmark",
    "bench_frame",
    "generate",
]
