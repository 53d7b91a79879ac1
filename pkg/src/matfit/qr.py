"""Vandermonde / Householder-QR backend.

The reflections are applied to the right-hand side as the factorization
proceeds, so Q is never formed on the solve path.  Each reflector uses the
cancellation-free sign choice; the affected row is then negated so that
R has a nonnegative diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Overflow, RankDeficient
from .model import Backend, Dataset, FitReport, Polynomial, make_report
from .normal import back_substitute, check_degree

RANK_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class VandermondeSystem:
    v: np.ndarray
    y: np.ndarray
    degree: int


def build_vandermonde(dataset: Dataset, degree: int) -> VandermondeSystem:
    if degree < 0:
        raise ValueError("degree must be non-negative")
    v = np.empty((dataset.n, degree + 1))
    v[:, 0] = 1.0
    with np.errstate(over="ignore", invalid="ignore"):
        for j in range(1, degree + 1):
            v[:, j] = v[:, j - 1] * dataset.x
    if not np.isfinite(v).all():
        raise Overflow(f"Vandermonde entries overflow at degree {degree}")
    return VandermondeSystem(v=v, y=dataset.y.copy(), degree=degree)


def householder_triangularize(v, rhs=None, tol: float = RANK_TOL):
    """Reduce ``v`` (n x p, n >= p) to upper-triangular form in place of a copy.

    Returns ``(r, qty, reflectors, signs)`` where ``r`` is the leading p x p
    triangle, ``qty`` the first p entries of the reflected ``rhs`` (or None),
    ``reflectors[k]`` the unit Householder vector for column k (None when the
    column was already reduced) and ``signs[k]`` the row flip applied after it.
    """
    work = np.array(v, dtype=np.float64)
    n, p = work.shape
    if n < p:
        raise RankDeficient(f"{n} rows cannot determine {p} coefficients")
    qty = None if rhs is None else np.array(rhs, dtype=np.float64)
    scale = np.linalg.norm(work, axis=0).max()
    reflectors, signs = [], np.ones(p)
    for k in range(p):
        col = work[k:, k]
        alpha = np.linalg.norm(col)
        u = col.copy()
        u[0] += alpha if col[0] >= 0 else -alpha
        unorm = np.linalg.norm(u)
        if alpha == 0.0 or unorm == 0.0:
            reflectors.append(None)
        else:
            u /= unorm
            work[k:, k:] -= 2.0 * np.outer(u, u @ work[k:, k:])
            if qty is not None:
                qty[k:] -= 2.0 * u * (u @ qty[k:])
            reflectors.append(u)
        if work[k, k] < 0:
            signs[k] = -1.0
            work[k, k:] *= -1.0
            if qty is not None:
                qty[k] = -qty[k]
        if not abs(work[k, k]) >= tol * scale:
            raise RankDeficient(f"|r[{k}][{k}]| = {abs(work[k, k]):.3e} below {tol * scale:.3e}")
    r = np.triu(work[:p])
    return r, (None if qty is None else qty[:p]), reflectors, signs


def householder_qr(v):
    """Explicit thin factorization ``v = q @ r`` built from the same reflections."""
    r, _, reflectors, signs = householder_triangularize(v)
    n, p = np.shape(v)
    q = np.eye(n, p) * signs
    for k in range(p - 1, -1, -1):
        u = reflectors[k]
        if u is not None:
            q[k:] -= 2.0 * np.outer(u, u @ q[k:])
    return q, r


def householder_lstsq(v, y) -> tuple[np.ndarray, np.ndarray]:
    """Least-squares solution of ``v @ p ~ y``; returns ``(p, r)``."""
    r, qty, _, _ = householder_triangularize(v, y)
    return back_substitute(r, qty), r


def solve_qr(system: VandermondeSystem) -> Polynomial:
    coef, _ = householder_lstsq(system.v, system.y)
    return Polynomial(coef)


def fit_qr(dataset: Dataset, degree: int) -> FitReport:
    check_degree(degree)
    distinct = np.unique(dataset.x).size
    if distinct < degree + 1:
        raise RankDeficient(f"degree {degree} needs {degree + 1} distinct x values, got {distinct}")
    poly = solve_qr(build_vandermonde(dataset, degree))
    return make_report(dataset, poly, Backend.QR)
