"""Wall-clock comparison of sequential and chunked accumulation."""

from __future__ import annotations

import statistics
import time
from dataclasses import asdict, dataclass

import numpy as np

from .accumulate import PowerSums, accumulate, accumulate_parallel
from .fit import generate_synthetic

DEVIATION_TOL = 1e-9


@dataclass(frozen=True)
class BenchReport:
    n_points: int
    degree: int
    chunks: int
    repetitions: int
    sequential_median: float
    sequential_min: float
    parallel_median: float
    parallel_min: float
    speedup: float
    max_relative_deviation: float

    @property
    def valid(self) -> bool:
        return self.max_relative_deviation <= DEVIATION_TOL

    def to_dict(self) -> dict:
        return {**asdict(self), "valid": self.valid}


def relative_deviation(a: PowerSums, b: PowerSums) -> float:
    """Largest |a - b| / max(|a|, |b|) over all power and moment sums."""
    x = np.concatenate([a.s, a.t])
    y = np.concatenate([b.s, b.t])
    denom = np.maximum(np.abs(x), np.abs(y))
    diff = np.abs(x - y)
    ratio = np.divide(diff, denom, out=np.zeros_like(diff), where=denom > 0)
    return float(ratio.max())


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - start, out


def run_benchmark(n: int, degree: int, chunks: int, repetitions: int = 5,
                  seed: int = 0) -> BenchReport:
    if repetitions < 3:
        raise ValueError("repetitions must be >= 3")
    data = generate_synthetic(n, degree, 0.1, seed)
    seq_times, par_times, deviation = [], [], 0.0
    for _ in range(repetitions):
        dt_seq, seq = _timed(accumulate, data, degree)
        dt_par, par = _timed(accumulate_parallel, data, degree, chunks)
        seq_times.append(dt_seq)
        par_times.append(dt_par)
        deviation = max(deviation, relative_deviation(seq, par))
    seq_med = statistics.median(seq_times)
    par_med = statistics.median(par_times)
    return BenchReport(
        n_points=n,
        degree=degree,
        chunks=chunks,
        repetitions=repetitions,
        sequential_median=seq_med,
        sequential_min=min(seq_times),
        parallel_median=par_med,
        parallel_min=min(par_times),
        speedup=seq_med / par_med if par_med > 0 else float("inf"),
        max_relative_deviation=deviation,
    )
