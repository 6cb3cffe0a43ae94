"""Frequentist violation statistic: hypothesis tests against a Gaussian sampling null.

The null model is a forecaster that reports true probabilities perturbed by
independent Gaussian noise of variance sigma^2 * p * (1 - p) per question,
i.e. a Monte Carlo forecaster averaging 1/sigma^2 world samples.  For each
check, the statistic is

    v = |residual| / sqrt(variance_proxy + beta_min)

where the residual is the deviation of the forecasts from the check's exact
condition, and the variance proxy is the leading-order variance of that
residual under the null, with the (unknown) true probabilities replaced by
the forecasts themselves.  ``beta_min`` regularizes the denominator against
forecasts pinned at 0 or 1.  A violation is flagged when v exceeds
gamma * sigma; the statistic itself does not depend on sigma.

Inequality checks (Consequence, And, Or) are gated: a forecast tuple that
already satisfies an inequality strictly contributes zero on that branch, and
only violated branches are tested for pseudo-equality.  Ties yield v = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .model import CheckKind, require_arity


@dataclass(frozen=True)
class FrequentistConfig:
    """Hyperparameters for the hypothesis test.

    gamma = 2.58 gives a two-sided 99% confidence interval; sigma = 0.05
    corresponds to a 400-sample Monte Carlo null; beta_min = 1e-3 matches
    backends that emit at most 3 digits of precision.  The resulting default
    flag threshold is gamma * sigma = 0.129.
    """

    gamma: float = 2.58
    sigma: float = 0.05
    beta_min: float = 1e-3

    def __post_init__(self) -> None:
        if self.gamma <= 0 or self.sigma <= 0 or self.beta_min <= 0:
            raise ValueError("gamma, sigma, and beta_min must all be positive")

    @property
    def threshold(self) -> float:
        return self.gamma * self.sigma


DEFAULT_CONFIG = FrequentistConfig()


@dataclass(frozen=True)
class FrequentistResult:
    violation: float
    threshold: float

    @property
    def flagged(self) -> bool:
        """Violation strictly above the threshold rejects the consistency null."""
        return self.violation > self.threshold


def _stat(residual: float, variance: float, beta_min: float) -> float:
    return abs(residual) / math.sqrt(variance + beta_min)


def _var(*ps: float) -> float:
    return sum(p * (1.0 - p) for p in ps)


def frequentist_violation(
    kind: CheckKind,
    probs: Sequence[float],
    cfg: FrequentistConfig = DEFAULT_CONFIG,
) -> FrequentistResult:
    """Violation statistic for one forecast tuple, read in canonical role order."""
    require_arity(kind, probs)
    beta = cfg.beta_min

    if kind is CheckKind.NEGATION:
        a, b = probs
        v = _stat(a + b - 1.0, _var(a, b), beta)

    elif kind is CheckKind.PARAPHRASE:
        a, b = probs
        v = _stat(a - b, _var(a, b), beta)

    elif kind is CheckKind.CONSEQUENCE:
        a, b = probs
        v = _stat(a - b, _var(a, b), beta) if a > b else 0.0

    elif kind is CheckKind.ANDOR:
        a, b, c, d = probs  # (P, Q, P_and_Q, P_or_Q)
        v = _stat(a + b - d - c, _var(a, b, c, d), beta)

    elif kind is CheckKind.AND:
        a, b, c = probs
        v_lhs = (
            _stat(a + b - 1.0 - c, _var(a, b, c), beta)
            if a + b - 1.0 > c else 0.0
        )
        m = min(a, b)
        v_rhs = _stat(c - m, _var(c, m), beta) if m < c else 0.0
        v = max(v_lhs, v_rhs)

    elif kind is CheckKind.OR:
        a, b, c = probs
        s = max(a, b)
        v_lhs = _stat(s - c, _var(s, c), beta) if s > c else 0.0
        v_rhs = _stat(c - a - b, _var(c, a, b), beta) if a + b < c else 0.0
        v = max(v_lhs, v_rhs)

    elif kind is CheckKind.BUT:
        a, e, d = probs  # (P, not_P_and_Q, P_or_Q)
        v = _stat(d - a - e, _var(d, a, e), beta)

    elif kind is CheckKind.COND:
        a, b, c = probs  # (P, Q_given_P, P_and_Q)
        variance = a * b * (a * (1.0 - b) + b * (1.0 - a)) + c * (1.0 - c)
        v = _stat(a * b - c, variance, beta)

    elif kind is CheckKind.CONDCOND:
        a, b, c, d = probs  # (P, Q|P, R|P_and_Q, P_and_Q_and_R)
        cyc = b * c * (1.0 - a) + c * a * (1.0 - b) + a * b * (1.0 - c)
        variance = a * b * c * cyc + d * (1.0 - d)
        v = _stat(a * b * c - d, variance, beta)

    elif kind is CheckKind.EXPEVIDENCE:
        # Roles are (P, Q, P|Q, P|not_Q); the statistic uses
        # (a, b, c, d) = (F(P), F(P|Q), F(P|not_Q), F(Q)).
        a, d, b, c = probs
        residual = b * d + c * (1.0 - d) - a
        variance = (
            a * (1.0 - a)
            + d * d * b * (1.0 - b)
            + (1.0 - d) * (1.0 - d) * c * (1.0 - c)
            + (b - c) * (b - c) * d * (1.0 - d)
        )
        v = _stat(residual, variance, beta)

    else:  # pragma: no cover - CheckKind is exhaustive above
        raise AssertionError(kind)

    return FrequentistResult(violation=v, threshold=cfg.threshold)
