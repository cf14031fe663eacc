"""Benchmark harness: seeded cells, median-of-repeats, CSV rows.

A cell is one (n, shape, algo) combination. The tree pair for a cell
depends only on (seed, n, shape), never on the algorithm, so distances
within a column are comparable and engine agreement is visible in the
sanity-echo column. Pairs use jittered times on a shared topology, which
also keeps per-pair time differences bounded by the jitter step.

Only the distance call is timed; generation, validation and any engine
warmup happen outside the clock.
"""

from __future__ import annotations

import statistics
import sys
import time
from dataclasses import dataclass

from .distance import mixture_distance
from .errors import InvalidSpecError
from .generate import SHAPES, GenSpec, random_comparable_pair
from .newick import ticks_to_decimal
from .nodal import nodal_distance
from .rng import SplitMix64

CSV_HEADER = "n,shape,algo,repeats,seconds_median,distance"

BENCH_ALGOS = ("naive", "coloring", "fast", "nodal")
NAIVE_CAP = 2**13  # quadratic pair walk; anything bigger needs an explicit override

_JITTER = 999_983  # < one tick-unit so times stay strictly increasing


@dataclass(frozen=True)
class BenchRecord:
    n: int
    shape: str
    algo: str
    repeats: int
    seconds_median: float
    distance: str  # decimal time units (sanity echo)

    def csv_row(self) -> str:
        return f"{self.n},{self.shape},{self.algo},{self.repeats},{self.seconds_median:.9f},{self.distance}"


def cell_seed(seed: int, n: int, shape: str) -> int:
    """Pair seed for a cell; a documented SplitMix64 derivation so any
    implementation regenerates the same trees."""
    base = SplitMix64(seed).next_u64()
    salt = n ^ (SHAPES.index(shape) << 48)
    return SplitMix64(base ^ salt).next_u64()


def cell_pair(seed: int, n: int, shape: str):
    spec = GenSpec(
        n=n,
        seed=cell_seed(seed, n, shape),
        shape=shape,
        time_model="uniform_jitter",
        max_step=_JITTER,
    )
    return random_comparable_pair(spec, "same_topology_jittered_times")


def run_cell(n: int, shape: str, algo: str, repeats: int, seed: int, verbose: bool = False) -> BenchRecord:
    """Generate the cell's pair, run the engine `repeats` times, report the median."""
    if repeats < 3:
        raise InvalidSpecError("benchmark repeats must be >= 3")
    t1, t2 = cell_pair(seed, n, shape)
    if algo == "nodal":
        run = lambda: nodal_distance(t1, t2)
    else:
        run = lambda: mixture_distance(t1, t2, algo)
    seconds = []
    distance = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        distance = run()
        seconds.append(time.perf_counter() - t0)
    if verbose:
        spelled = " ".join(f"{s:.6f}" for s in seconds)
        print(f"# {n},{shape},{algo} repeats: {spelled}", file=sys.stderr)
    echo = str(distance) if algo == "nodal" else ticks_to_decimal(distance)
    return BenchRecord(
        n=n,
        shape=shape,
        algo=algo,
        repeats=repeats,
        seconds_median=statistics.median(seconds),
        distance=echo,
    )


def warm_up(algos) -> None:
    """Trigger one tiny run per engine so JIT compilation stays off the clock."""
    t1, t2 = cell_pair(1, 8, "random")
    for algo in algos:
        if algo == "nodal":
            nodal_distance(t1, t2)
        else:
            mixture_distance(t1, t2, algo)


def run_grid(
    shapes,
    algos,
    min_exp: int,
    max_exp: int,
    repeats: int,
    seed: int,
    allow_big_naive: bool = False,
    verbose: bool = False,
) -> list[BenchRecord]:
    """All cells of the grid, rows sorted by (shape, algo, n).

    naive cells above n = 2^13 are skipped (with a note on the diagnostic
    stream) unless explicitly allowed; complete-shape cells require
    power-of-two n, which 2^exp always is.
    """
    if min_exp > max_exp:
        raise InvalidSpecError(f"empty exponent range {min_exp}..{max_exp}")
    warm_up(algos)
    records = []
    for shape in shapes:
        for algo in algos:
            for exp in range(min_exp, max_exp + 1):
                n = 1 << exp
                if algo == "naive" and n > NAIVE_CAP and not allow_big_naive:
                    print(
                        f"# skipping naive at n={n} (cap {NAIVE_CAP}; pass --allow-big-naive to force)",
                        file=sys.stderr,
                    )
                    continue
                records.append(run_cell(n, shape, algo, repeats, seed, verbose))
    records.sort(key=lambda r: (r.shape, r.algo, r.n))
    return records


def format_csv(records) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in records]) + "\n"
