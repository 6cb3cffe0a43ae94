"""Exception types shared across the package."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for every error raised by this package."""


class ProbabilityError(EngineError, ValueError):
    """A probability value lies outside the closed unit interval."""


class ArityMismatch(EngineError, ValueError):
    """A tuple, probability list, or weight list has the wrong length for its check kind."""


class RoleOrderMismatch(EngineError, ValueError):
    """Role labels do not match the canonical role sequence of the check kind."""


class MissingQuestion(EngineError, ValueError):
    """A tuple slot does not hold a forecasting question."""


class UnsupportedKind(EngineError, ValueError):
    """The requested operation has no implementation for this check kind."""


class DomainError(EngineError, ValueError):
    """An input is outside the numeric domain of the operation (e.g. a price of exactly 0 or 1)."""


class SolverDidNotConverge(EngineError, RuntimeError):
    """The numeric arbitrage solver exceeded its iteration budget.

    Carries best-so-far diagnostics so callers can inspect how close the
    solver got before giving up.
    """

    def __init__(self, message: str, *, iterations: int | None = None,
                 best_violation: float | None = None,
                 diagnostics: dict | None = None) -> None:
        super().__init__(message)
        self.iterations = iterations
        self.best_violation = best_violation
        self.diagnostics = dict(diagnostics or {})


class MissingTrueProb(EngineError, LookupError):
    """A simulated forecaster has no true probability for a question id."""


class HttpError(EngineError, RuntimeError):
    """An HTTP forecaster backend failed at the transport or status level."""

    def __init__(self, message: str, *, status: int | None = None,
                 payload: str | None = None) -> None:
        super().__init__(message)
        self.status = status
        self.payload = payload


class ParseError(EngineError, ValueError):
    """Input text could not be parsed; carries the raw payload and, for files, the line number."""

    def __init__(self, message: str, *, line: int | None = None,
                 payload: str | None = None) -> None:
        super().__init__(message)
        self.line = line
        self.payload = payload


class SamplerFailure(EngineError, LookupError):
    """A tuple sampler could not instantiate a tuple for the given question."""


class BudgetExceeded(EngineError, RuntimeError):
    """A recursive forecaster exceeded its base-forecast call budget."""


class EmptyInput(EngineError, ValueError):
    """An aggregation was asked to summarize zero items."""


class DegenerateInput(EngineError, ValueError):
    """A statistic is undefined for this input (too short, or zero variance)."""


class SchemaError(EngineError, ValueError):
    """A serialized record is missing or misusing a field; names the field."""

    def __init__(self, field: str, message: str | None = None, *,
                 line: int | None = None) -> None:
        super().__init__(message or f"invalid or missing field: {field!r}")
        self.field = field
        self.line = line


class DuplicateId(EngineError, ValueError):
    """Two records in one dataset share an id."""


class IoError(EngineError, OSError):
    """A filesystem operation failed."""


class IntegrityWarning(UserWarning):
    """A loaded record is internally inconsistent (e.g. a stored score does not match its inputs)."""
