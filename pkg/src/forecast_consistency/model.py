"""Core domain types: questions, check kinds, tuples, and forecast assignments.

Probabilities are plain double-precision floats validated at the boundaries;
the engine never truncates digits a backend emitted.  All record types are
immutable value objects and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Mapping, Optional, Sequence

from .errors import (
    ArityMismatch,
    MissingQuestion,
    ProbabilityError,
    RoleOrderMismatch,
    SchemaError,
)

#: A probability is a float in the closed unit interval.
Probability = float

#: A resolution is True, False, or None (unresolved conditional).
Resolution = Optional[bool]

QUESTION_TYPES = ("binary", "conditional-binary")

#: Roles whose underlying condition can fail, leaving them unresolved.
CONDITIONAL_ROLES = frozenset({
    "Q_given_P", "R_given_P_and_Q", "P_given_Q", "P_given_not_Q",
})


def validate_probability(value: float) -> float:
    """Return ``value`` as a float, raising ProbabilityError unless 0 <= value <= 1."""
    p = float(value)
    if math.isnan(p) or p < 0.0 or p > 1.0:
        raise ProbabilityError(f"probability out of range [0, 1]: {value!r}")
    return p


class CheckKind(Enum):
    """The ten supported consistency checks, with their canonical tuple roles."""

    NEGATION = "Negation"
    PARAPHRASE = "Paraphrase"
    CONSEQUENCE = "Consequence"
    ANDOR = "AndOr"
    AND = "And"
    OR = "Or"
    BUT = "But"
    COND = "Cond"
    CONDCOND = "CondCond"
    EXPEVIDENCE = "ExpEvidence"

    @property
    def roles(self) -> tuple[str, ...]:
        return _ROLES[self]

    @property
    def arity(self) -> int:
        return len(_ROLES[self])

    def __str__(self) -> str:  # pragma: no cover - display convenience
        return self.value


_ROLES: dict[CheckKind, tuple[str, ...]] = {
    CheckKind.NEGATION: ("P", "not_P"),
    CheckKind.PARAPHRASE: ("P", "Q"),
    CheckKind.CONSEQUENCE: ("P", "Q"),
    CheckKind.ANDOR: ("P", "Q", "P_and_Q", "P_or_Q"),
    CheckKind.AND: ("P", "Q", "P_and_Q"),
    CheckKind.OR: ("P", "Q", "P_or_Q"),
    CheckKind.BUT: ("P", "not_P_and_Q", "P_or_Q"),
    CheckKind.COND: ("P", "Q_given_P", "P_and_Q"),
    CheckKind.CONDCOND: ("P", "Q_given_P", "R_given_P_and_Q", "P_and_Q_and_R"),
    CheckKind.EXPEVIDENCE: ("P", "Q", "P_given_Q", "P_given_not_Q"),
}

#: Report row order: the canonical listing order of the checks.
CHECK_ORDER: tuple[CheckKind, ...] = (
    CheckKind.NEGATION,
    CheckKind.PARAPHRASE,
    CheckKind.CONSEQUENCE,
    CheckKind.ANDOR,
    CheckKind.AND,
    CheckKind.OR,
    CheckKind.BUT,
    CheckKind.COND,
    CheckKind.CONDCOND,
    CheckKind.EXPEVIDENCE,
)


def check_kind(name: str) -> CheckKind:
    """Look up a CheckKind by its canonical name, raising SchemaError on unknown names."""
    for kind in CheckKind:
        if kind.value == name:
            return kind
    raise SchemaError("kind", f"unknown check kind: {name!r}")


@dataclass(frozen=True)
class ForecastingQuestion:
    """A binary forecasting question, optionally carrying its ground-truth resolution."""

    id: str
    title: str
    body: str
    resolution_date: datetime
    question_type: str = "binary"
    data_source: str = "synthetic"
    created_date: Optional[datetime] = None
    url: Optional[str] = None
    metadata: Mapping[str, Any] = field(default_factory=dict)
    resolution: Optional[bool] = None

    def __post_init__(self) -> None:
        if self.question_type not in QUESTION_TYPES:
            raise SchemaError(
                "question_type",
                f"question_type must be one of {QUESTION_TYPES}, got {self.question_type!r}",
            )
        if not isinstance(self.resolution_date, datetime):
            raise SchemaError("resolution_date", "resolution_date must be a datetime")


@dataclass(frozen=True)
class CheckTuple:
    """An ordered tuple of questions instantiating one consistency check."""

    kind: CheckKind
    questions: tuple[ForecastingQuestion, ...]
    tuple_id: str
    roles: tuple[str, ...] = ()
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "questions", tuple(self.questions))
        roles = tuple(self.roles) if self.roles else self.kind.roles
        object.__setattr__(self, "roles", roles)


@dataclass(frozen=True)
class ForecastAssignment:
    """Probabilities aligned to a tuple's roles, with provenance metadata."""

    tuple_id: str
    probs: tuple[Probability, ...]
    forecaster_id: str
    reasoning: Optional[tuple[Optional[str], ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "probs", tuple(validate_probability(p) for p in self.probs)
        )
        if self.reasoning is not None:
            object.__setattr__(self, "reasoning", tuple(self.reasoning))
            if len(self.reasoning) != len(self.probs):
                raise ArityMismatch(
                    f"reasoning has {len(self.reasoning)} entries for {len(self.probs)} probs"
                )


def validate_tuple(t: CheckTuple) -> CheckTuple:
    """Return ``t`` unchanged if its arity, role order, and questions are all in order.

    Raises ArityMismatch, RoleOrderMismatch, or MissingQuestion naming the
    offending field; misordered tuples must fail here rather than silently
    mis-score downstream.
    """
    expected = t.kind.roles
    if len(t.questions) != t.kind.arity:
        raise ArityMismatch(
            f"tuple {t.tuple_id!r}: kind {t.kind.value} expects {t.kind.arity} "
            f"questions, got {len(t.questions)}"
        )
    if tuple(t.roles) != expected:
        raise RoleOrderMismatch(
            f"tuple {t.tuple_id!r}: roles must be {list(expected)} in order, "
            f"got {list(t.roles)}"
        )
    for role, q in zip(expected, t.questions):
        if not isinstance(q, ForecastingQuestion):
            raise MissingQuestion(f"tuple {t.tuple_id!r}: role {role!r} holds no question")
    return t


def require_arity(kind: CheckKind, values: Sequence, what: str = "probs") -> None:
    """Raise ArityMismatch unless ``values`` has exactly ``kind.arity`` entries."""
    if len(values) != kind.arity:
        raise ArityMismatch(
            f"{kind.value} expects {kind.arity} {what}, got {len(values)}"
        )
