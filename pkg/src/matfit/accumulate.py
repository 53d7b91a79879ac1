"""Power sums and moment sums feeding the normal equations.

``s[k] = sum(x**k)`` for ``k = 0..2m`` and ``t[j] = sum(x**j * y)`` for
``j = 0..m``.  Powers are built by repeated multiplication, one pass per
power, and each sum is a numpy reduction over the slice.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import Overflow
from .model import Dataset


@dataclass(frozen=True, eq=False)
class PowerSums:
    degree: int
    s: np.ndarray
    t: np.ndarray
    n: int

    def __post_init__(self):
        if self.s.shape != (2 * self.degree + 1,) or self.t.shape != (self.degree + 1,):
            raise ValueError("power-sum vector lengths do not match the degree")

    def __add__(self, other: PowerSums) -> PowerSums:
        if other.degree != self.degree:
            raise ValueError("cannot combine power sums of different degree")
        return PowerSums(self.degree, self.s + other.s, self.t + other.t, self.n + other.n)


def _sums(x: np.ndarray, y: np.ndarray, degree: int) -> PowerSums:
    s = np.empty(2 * degree + 1)
    t = np.empty(degree + 1)
    p = np.ones_like(x)
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(2 * degree + 1):
            if k:
                p *= x
            s[k] = p.sum()
            if k <= degree:
                t[k] = (p * y).sum()
    if not (np.isfinite(s).all() and np.isfinite(t).all()):
        raise Overflow(f"power sums overflow at degree {degree}; rescale x or lower the degree")
    return PowerSums(degree, s, t, int(x.size))


def accumulate(dataset: Dataset, degree: int) -> PowerSums:
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return _sums(dataset.x, dataset.y, degree)


def chunk_bounds(n: int, chunks: int) -> list[tuple[int, int]]:
    """Contiguous [start, stop) slices whose sizes differ by at most one."""
    base, extra = divmod(n, chunks)
    bounds, start = [], 0
    for i in range(chunks):
        stop = start + base + (i < extra)
        bounds.append((start, stop))
        start = stop
    return bounds


def accumulate_parallel(dataset: Dataset, degree: int, chunks: int,
                        max_workers: int | None = None) -> PowerSums:
    """Chunked version of :func:`accumulate`.

    Slices are reduced concurrently on a thread pool (numpy releases the GIL
    inside the reductions) and the partials are added in ascending slice
    order, so a fixed ``chunks`` value is bit-reproducible.
    """
    if chunks < 1:
        raise ValueError("chunks must be >= 1")
    if degree < 0:
        raise ValueError("degree must be non-negative")
    x, y = dataset.x, dataset.y
    bounds = chunk_bounds(x.size, chunks)
    if chunks == 1:
        return _sums(x, y, degree)
    workers = min(chunks, max_workers or chunks)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        partials = list(pool.map(lambda b: _sums(x[b[0]:b[1]], y[b[0]:b[1]], degree), bounds))
    total = partials[0]
    for part in partials[1:]:
        total = total + part
    return total
