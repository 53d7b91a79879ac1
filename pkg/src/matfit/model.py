"""Domain types, polynomial evaluation and fit diagnostics."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidDataset

MAX_DEGREE = 12

R_DEFINITION = "r = sqrt(max(0, 1 - sse/sst)), sst = sum((y - mean(y))**2)"


def _frozen(values, name) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Dataset:
    """Ordered (x, y) samples held as two read-only float64 arrays."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = _frozen(self.x, "x")
        y = _frozen(self.y, "y")
        if x.shape != y.shape:
            raise InvalidDataset(f"x and y lengths differ ({x.size} != {y.size})")
        if x.size < 2:
            raise InvalidDataset(f"need at least 2 points, got {x.size}")
        if not (np.isfinite(x).all() and np.isfinite(y).all()):
            raise InvalidDataset("coordinates must be finite")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_pairs(cls, pairs) -> Dataset:
        pts = np.asarray(list(pairs), dtype=np.float64).reshape(-1, 2)
        return cls(pts[:, 0], pts[:, 1])

    @property
    def n(self) -> int:
        return int(self.x.size)

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist()))

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.y, other.y)

    __hash__ = None


@dataclass(frozen=True)
class Polynomial:
    """Coefficients a_0..a_m in ascending powers."""

    coefficients: np.ndarray

    def __post_init__(self):
        c = _frozen(self.coefficients, "coefficients")
        if c.size == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        if not np.isfinite(c).all():
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self) -> int:
        return int(self.coefficients.size) - 1

    def __call__(self, x):
        return evaluate(self, x)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.coefficients, other.coefficients)

    __hash__ = None


class Backend(enum.Enum):
    NORMAL = "normal"
    QR = "qr"


@dataclass(frozen=True, eq=False)
class FitReport:
    polynomial: Polynomial
    backend: Backend
    residuals: np.ndarray = field(repr=False)
    sse: float
    r: float
    n_points: int

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def coefficients(self) -> np.ndarray:
        return self.polynomial.coefficients


def evaluate(poly: Polynomial, x):
    """Horner evaluation; ``x`` may be a scalar or an array."""
    c = poly.coefficients
    acc = c[-1] * np.ones_like(x, dtype=np.float64) if np.ndim(x) else float(c[-1])
    with np.errstate(over="ignore", invalid="ignore"):
        for a in c[-2::-1]:
            acc = acc * x + a
    return acc if np.ndim(x) else float(acc)


def residuals(dataset: Dataset, poly: Polynomial) -> np.ndarray:
    return dataset.y - evaluate(poly, dataset.x)


def sum_squared_error(res) -> float:
    res = np.asarray(res, dtype=np.float64)
    return float(np.dot(res, res))


def correlation_coefficient(dataset: Dataset, sse: float) -> float:
    """Square root of the coefficient of determination, clipped to [0, 1].

    Constant ``y`` (zero total variance) gives 1 for an exact fit, else 0.
    """
    dev = dataset.y - dataset.y.mean()
    sst = float(np.dot(dev, dev))
    if sst == 0.0:
        return 1.0 if sse <= 1e-12 * dataset.n else 0.0
    return float(np.sqrt(max(0.0, 1.0 - sse / sst)))


def make_report(dataset: Dataset, poly: Polynomial, backend: Backend) -> FitReport:
    res = residuals(dataset, poly)
    res.flags.writeable = False
    sse = sum_squared_error(res)
    return FitReport(
        polynomial=poly,
        backend=backend,
        residuals=res,
        sse=sse,
        r=correlation_coefficient(dataset, sse),
        n_points=dataset.n,
    )
