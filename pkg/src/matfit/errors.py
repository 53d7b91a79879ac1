"""Exception types raised by the fitting pipeline."""


class FitError(Exception):
    """Base class for numerical failures (CLI exit code 3)."""


class SingularSystem(FitError):
    pass


class RankDeficient(FitError):
    pass


class Overflow(FitError):
    """A power, power sum or Vandermonde entry became non-finite."""


class DegreeTooHigh(FitError):
    pass


class InvalidDataset(ValueError):
    pass


class EmptyDataset(InvalidDataset):
    pass


class CsvParseError(ValueError):
    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


class BackendDisagreement(UserWarning):
    """Normal-equation and QR coefficients differ by more than the warning threshold."""
