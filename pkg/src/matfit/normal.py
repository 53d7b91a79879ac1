"""Normal-equation backend: Hankel system from power sums, Gaussian elimination."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .accumulate import PowerSums, accumulate, accumulate_parallel
from .errors import DegreeTooHigh, SingularSystem
from .model import MAX_DEGREE, Backend, Dataset, FitReport, Polynomial, make_report

PIVOT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class NormalSystem:
    a: np.ndarray
    b: np.ndarray
    degree: int


def build_normal_system(sums: PowerSums) -> NormalSystem:
    idx = np.arange(sums.degree + 1)
    a = sums.s[idx[:, None] + idx[None, :]]
    return NormalSystem(a=a, b=sums.t.copy(), degree=sums.degree)


def back_substitute(u: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Solve ``u @ x = c`` for upper-triangular ``u``."""
    n = c.size
    x = np.zeros(n)
    for k in range(n - 1, -1, -1):
        x[k] = (c[k] - u[k, k + 1:] @ x[k + 1:]) / u[k, k]
    return x


def gauss_solve(a, b, tol: float = PIVOT_TOL) -> np.ndarray:
    """Gaussian elimination with partial (row) pivoting.

    Raises :class:`SingularSystem` when the best available pivot falls below
    ``tol * max|a|``.
    """
    a = np.array(a, dtype=np.float64)
    b = np.array(b, dtype=np.float64)
    n = b.size
    if a.shape != (n, n):
        raise ValueError(f"matrix shape {a.shape} does not match rhs length {n}")
    threshold = tol * np.abs(a).max()
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if not abs(a[p, k]) > threshold:
            raise SingularSystem(f"pivot {abs(a[p, k]):.3e} below {threshold:.3e} at step {k}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        factors = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= factors[:, None] * a[k, k:]
        b[k + 1:] -= factors * b[k]
    return back_substitute(a, b)


def solve_gaussian(system: NormalSystem) -> Polynomial:
    return Polynomial(gauss_solve(system.a, system.b))


def check_degree(degree: int) -> None:
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree > MAX_DEGREE:
        raise DegreeTooHigh(f"degree {degree} exceeds the supported maximum of {MAX_DEGREE}")


def fit_normal(dataset: Dataset, degree: int, chunks: int = 1) -> FitReport:
    check_degree(degree)
    distinct = np.unique(dataset.x).size
    if distinct < degree + 1:
        raise SingularSystem(f"degree {degree} needs {degree + 1} distinct x values, got {distinct}")
    sums = accumulate(dataset, degree) if chunks == 1 else accumulate_parallel(dataset, degree, chunks)
    poly = solve_gaussian(build_normal_system(sums))
    return make_report(dataset, poly, Backend.NORMAL)
