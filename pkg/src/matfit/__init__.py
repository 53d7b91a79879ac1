"""Polynomial least squares via power sums and Gaussian elimination, with a Householder-QR cross-check."""

from .accumulate import PowerSums, accumulate, accumulate_parallel
from .bench import BenchReport, run_benchmark
from .errors import (BackendDisagreement, CsvParseError, DegreeTooHigh, EmptyDataset, FitError,
                     InvalidDataset, Overflow, RankDeficient, SingularSystem)
from .fit import BackendChoice, BothReport, FitRequest, fit, generate_synthetic, true_polynomial
from .io import emit_report, format_csv, parse_csv
from .model import (Backend, Dataset, FitReport, Polynomial, correlation_coefficient, evaluate,
                    residuals, sum_squared_error)
from .normal import NormalSystem, build_normal_system, fit_normal, solve_gaussian
from .qr import VandermondeSystem, build_vandermonde, fit_qr, solve_qr

__all__ = [
    "Backend", "BackendChoice", "BackendDisagreement", "BenchReport", "BothReport", "CsvParseError",
    "Dataset", "DegreeTooHigh", "EmptyDataset", "FitError", "FitReport", "FitRequest", "InvalidDataset",
    "NormalSystem", "Overflow", "PowerSums", "Polynomial", "RankDeficient", "SingularSystem",
    "VandermondeSystem", "accumulate", "accumulate_parallel", "build_normal_system", "build_vandermonde",
    "correlation_coefficient", "emit_report", "evaluate", "fit", "fit_normal", "fit_qr", "format_csv",
    "generate_synthetic", "parse_csv", "residuals", "run_benchmark", "solve_gaussian", "solve_qr",
    "sum_squared_error", "true_polynomial",
]
