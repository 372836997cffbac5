"""Wall-clock benchmarks of the sweep over generated families, CSV output."""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import dataclass, fields
from typing import IO, Iterable, Sequence

from .generate import GenConfig, dag_from_config
from .sweep import compute_frontiers

CSV_COLUMNS = (
    "family",
    "k",
    "n",
    "m",
    "seed",
    "wall_time_ns",
    "max_frontier_count",
    "max_support_size",
    "width_found",
)


@dataclass(frozen=True)
class BenchRecord:
    family: str
    k: int
    n: int
    m: int
    seed: int
    wall_time_ns: int
    max_frontier_count: int
    max_support_size: int
    width_found: int


def bench_run(configs: Iterable[GenConfig], repeats: int = 5) -> list[BenchRecord]:
    """Run each config; the median wall time over ``repeats`` identical runs
    on the monotonic clock. Generation happens once, outside the timing."""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    records = []
    for cfg in configs:
        g = dag_from_config(cfg)
        times = []
        result = None
        for _ in range(repeats):
            start = time.perf_counter_ns()
            result = compute_frontiers(g)
            times.append(time.perf_counter_ns() - start)
        assert result is not None
        records.append(
            BenchRecord(
                family=cfg.family,
                k=cfg.k,
                n=g.n,
                m=g.m,
                seed=cfg.seed,
                wall_time_ns=int(statistics.median(times)),
                max_frontier_count=result.stats.max_frontier_count,
                max_support_size=result.stats.max_support_size,
                width_found=len(result.best),
            )
        )
    return records


def write_csv(records: Sequence[BenchRecord], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([getattr(r, column) for column in CSV_COLUMNS])


def records_to_csv(records: Sequence[BenchRecord]) -> str:
    buffer = io.StringIO()
    write_csv(records, buffer)
    return buffer.getvalue()


def load_configs(source: str | IO[str]) -> list[GenConfig]:
    """Read a JSON array of GenConfig objects (unknown keys rejected)."""
    data = json.loads(source if isinstance(source, str) else source.read())
    if not isinstance(data, list):
        raise ValueError("bench config must be a JSON array of objects")
    known = {f.name for f in fields(GenConfig)}
    configs = []
    for i, obj in enumerate(data):
        if not isinstance(obj, dict) or "family" not in obj:
            raise ValueError(f"config #{i} must be an object with a 'family' key")
        unknown = set(obj) - known
        if unknown:
            raise ValueError(f"config #{i} has unknown keys: {sorted(unknown)}")
        configs.append(GenConfig(**obj))
    return configs
