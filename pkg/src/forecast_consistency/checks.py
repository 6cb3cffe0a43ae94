"""Logical structure of each check: consistent outcome sets and forecast conditions.

Every check pairs a relation on question tuples with a condition on forecast
tuples.  The relation determines the set of outcome vectors (over
True/False/None) that a coherent world can produce; the condition is the
equality or inequality chain that any coherent probability assignment must
satisfy.  Outcome sets are generated once by brute-force enumeration over
{True, False, None}^n filtered by a per-kind logical predicate, then cached;
hand-written tables would risk transcription errors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

from .errors import UnsupportedKind
from .model import CheckKind, Resolution, require_arity

_TRIVALENT = (True, False, None)

# Each kind's roles are formulas over a small set of hidden base variables.
# A role is (value, condition): the role resolves to value(world) when
# condition(world) holds and to None otherwise.  ``world_ok`` restricts the
# admissible base worlds (used by Consequence, where P => Q by construction).
_World = tuple[bool, ...]


@dataclass(frozen=True)
class _KindLogic:
    n_base: int
    values: tuple[Callable[[_World], bool], ...]
    conditions: tuple[Optional[Callable[[_World], bool]], ...]
    world_ok: Optional[Callable[[_World], bool]] = None


def _logic() -> dict[CheckKind, _KindLogic]:
    p = lambda w: w[0]
    q = lambda w: w[1]
    r = lambda w: w[2]
    always = None
    return {
        CheckKind.NEGATION: _KindLogic(
            1, (p, lambda w: not w[0]), (always, always)),
        CheckKind.PARAPHRASE: _KindLogic(
            1, (p, p), (always, always)),
        CheckKind.CONSEQUENCE: _KindLogic(
            2, (p, q), (always, always),
            world_ok=lambda w: (not w[0]) or w[1]),
        CheckKind.ANDOR: _KindLogic(
            2, (p, q, lambda w: w[0] and w[1], lambda w: w[0] or w[1]),
            (always, always, always, always)),
        CheckKind.AND: _KindLogic(
            2, (p, q, lambda w: w[0] and w[1]), (always, always, always)),
        CheckKind.OR: _KindLogic(
            2, (p, q, lambda w: w[0] or w[1]), (always, always, always)),
        CheckKind.BUT: _KindLogic(
            2, (p, lambda w: (not w[0]) and w[1], lambda w: w[0] or w[1]),
            (always, always, always)),
        CheckKind.COND: _KindLogic(
            2, (p, q, lambda w: w[0] and w[1]),
            (always, lambda w: w[0], always)),
        CheckKind.CONDCOND: _KindLogic(
            3, (p, q, r, lambda w: w[0] and w[1] and w[2]),
            (always, lambda w: w[0], lambda w: w[0] and w[1], always)),
        CheckKind.EXPEVIDENCE: _KindLogic(
            2, (p, q, p, p),
            (always, always, lambda w: w[1], lambda w: not w[1])),
    }


_LOGIC = _logic()


def _relation_holds(kind: CheckKind, states: Sequence[Resolution]) -> bool:
    """True iff ``states`` is the resolution vector of some admissible base world."""
    logic = _LOGIC[kind]
    for world in itertools.product((True, False), repeat=logic.n_base):
        if logic.world_ok is not None and not logic.world_ok(world):
            continue
        for state, value, cond in zip(states, logic.values, logic.conditions):
            if cond is not None and not cond(world):
                if state is not None:
                    break
            elif state != value(world):
                break
        else:
            return True
    return False


@dataclass(frozen=True)
class OutcomeVector:
    """A resolution vector permitted by a check's relation.

    Membership in the consistent outcome set is verified at construction;
    None appears only where a conditional's condition failed.
    """

    kind: CheckKind
    states: tuple[Resolution, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        require_arity(self.kind, self.states, "states")
        if not _relation_holds(self.kind, self.states):
            raise ValueError(
                f"{self.kind.value}: {self.states} is not a consistent outcome"
            )

    def __iter__(self):
        return iter(self.states)

    def __len__(self) -> int:
        return len(self.states)


def _sort_key(states: tuple[Resolution, ...]) -> tuple[int, ...]:
    order = {True: 0, False: 1, None: 2}
    return tuple(order[s] for s in states)


@lru_cache(maxsize=None)
def consistent_outcomes(kind: CheckKind) -> tuple[OutcomeVector, ...]:
    """All resolution vectors over {True, False, None} satisfying the kind's relation."""
    found = [
        states
        for states in itertools.product(_TRIVALENT, repeat=kind.arity)
        if _relation_holds(kind, states)
    ]
    found.sort(key=_sort_key)
    return tuple(OutcomeVector(kind, states) for states in found)


def resolution_consistent(kind: CheckKind, states: Sequence[Resolution]) -> bool:
    """Membership test for ``states`` in the kind's consistent outcome set."""
    require_arity(kind, states, "states")
    return _relation_holds(kind, tuple(states))


#: Kinds whose condition is a single equality on the forecasts.
EQUALITY_KINDS = frozenset({
    CheckKind.NEGATION, CheckKind.PARAPHRASE, CheckKind.ANDOR, CheckKind.BUT,
    CheckKind.COND, CheckKind.CONDCOND, CheckKind.EXPEVIDENCE,
})

#: Kinds whose condition is a chain of inequalities.
INEQUALITY_KINDS = frozenset({
    CheckKind.CONSEQUENCE, CheckKind.AND, CheckKind.OR,
})


def condition_form(kind: CheckKind) -> str:
    """Return "equality" or "inequality-chain" for the kind's consistency condition."""
    return "equality" if kind in EQUALITY_KINDS else "inequality-chain"


def equality_residual(kind: CheckKind, probs: Sequence[float]) -> float:
    """Signed residual of the kind's equality condition; zero iff the condition holds.

    Only defined for equality kinds.  Residuals read probabilities in the
    canonical role order of the kind.
    """
    require_arity(kind, probs)
    if kind is CheckKind.NEGATION:
        return probs[0] + probs[1] - 1.0
    if kind is CheckKind.PARAPHRASE:
        return probs[0] - probs[1]
    if kind is CheckKind.ANDOR:
        return probs[0] + probs[1] - probs[3] - probs[2]
    if kind is CheckKind.BUT:
        return probs[2] - probs[0] - probs[1]
    if kind is CheckKind.COND:
        return probs[0] * probs[1] - probs[2]
    if kind is CheckKind.CONDCOND:
        return probs[0] * probs[1] * probs[2] - probs[3]
    if kind is CheckKind.EXPEVIDENCE:
        return probs[2] * probs[1] + probs[3] * (1.0 - probs[1]) - probs[0]
    raise UnsupportedKind(f"{kind.value} has no equality residual")


def inequality_slacks(kind: CheckKind, probs: Sequence[float]) -> tuple[float, ...]:
    """Slack of each inequality in the kind's chain; all nonnegative iff consistent.

    Only defined for inequality kinds.
    """
    require_arity(kind, probs)
    if kind is CheckKind.CONSEQUENCE:
        return (probs[1] - probs[0],)
    if kind is CheckKind.AND:
        a, b, c = probs
        return (c - max(a + b - 1.0, 0.0), min(a, b) - c)
    if kind is CheckKind.OR:
        a, b, c = probs
        return (c - max(a, b), min(1.0, a + b) - c)
    raise UnsupportedKind(f"{kind.value} has no inequality chain")


def is_consistent(kind: CheckKind, probs: Sequence[float], tol: float = 0.0) -> bool:
    """True iff the kind's consistency condition holds within absolute tolerance ``tol``.

    For inequality kinds each inequality may be violated by at most ``tol``.
    """
    require_arity(kind, probs)
    if tol < 0.0:
        raise ValueError("tol must be nonnegative")
    if kind in EQUALITY_KINDS:
        return abs(equality_residual(kind, probs)) <= tol
    return all(s >= -tol for s in inequality_slacks(kind, probs))
