"""Backend dispatch and seeded synthetic data."""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import BackendDisagreement
from .model import Dataset, FitReport, Polynomial, evaluate
from .normal import check_degree, fit_normal
from .qr import fit_qr

DISAGREEMENT_TOL = 1e-4


class BackendChoice(enum.Enum):
    NORMAL = "normal"
    QR = "qr"
    BOTH = "both"


@dataclass(frozen=True)
class FitRequest:
    degree: int
    backend: BackendChoice = BackendChoice.NORMAL
    chunks: int = 1

    def __post_init__(self):
        object.__setattr__(self, "backend", BackendChoice(self.backend))
        check_degree(self.degree)
        if self.chunks < 1:
            raise ValueError("chunks must be >= 1")


@dataclass(frozen=True)
class BothReport:
    normal: FitReport
    qr: FitReport
    max_coef_discrepancy: float

    def __iter__(self):
        return iter((self.normal, self.qr))


def coefficient_discrepancy(a: Polynomial, b: Polynomial) -> float:
    """max_k |a_k - b_k| / (1 + |b_k|)"""
    ca, cb = a.coefficients, b.coefficients
    return float(np.max(np.abs(ca - cb) / (1.0 + np.abs(cb))))


def fit(dataset: Dataset, request: FitRequest) -> FitReport | BothReport:
    if request.backend is BackendChoice.NORMAL:
        return fit_normal(dataset, request.degree, request.chunks)
    if request.backend is BackendChoice.QR:
        return fit_qr(dataset, request.degree)
    normal = fit_normal(dataset, request.degree, request.chunks)
    qr = fit_qr(dataset, request.degree)
    gap = coefficient_discrepancy(normal.polynomial, qr.polynomial)
    if gap > DISAGREEMENT_TOL:
        warnings.warn(f"backends disagree: max scaled coefficient gap {gap:.3e}",
                      BackendDisagreement, stacklevel=2)
    return BothReport(normal, qr, gap)


def _rng(seed: int) -> np.random.Generator:
    # PCG64 with a fixed seed is reproducible across platforms.
    return np.random.Generator(np.random.PCG64(seed))


def true_polynomial(degree: int, seed: int) -> Polynomial:
    """The ground truth behind :func:`generate_synthetic` for the same arguments."""
    return Polynomial(_rng(seed).uniform(-10.0, 10.0, degree + 1))


def generate_synthetic(n: int, degree: int, noise_sigma: float, seed: int) -> Dataset:
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = _rng(seed)
    truth = Polynomial(rng.uniform(-10.0, 10.0, degree + 1))
    x = rng.uniform(0.0, 1.0, n)
    y = evaluate(truth, x)
    if noise_sigma > 0:
        y = y + rng.normal(0.0, noise_sigma, n)
    return Dataset(x, y)
