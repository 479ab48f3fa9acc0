"""Finite discrete probability distributions and their basic comparisons."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyVector,
    LengthMismatch,
    NegativeWeight,
    NotAbsolutelyContinuous,
    SumOutOfTolerance,
)

#: Inputs are accepted when |sum(w) - 1| is at most this, then renormalized.
SUM_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Distribution:
    """A point on the probability simplex: nonnegative weights summing to one.

    Construct through :func:`validate_distribution`; the stored array is
    renormalized and marked read-only.
    """

    weights: np.ndarray

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Distribution({np.array2string(self.weights, separator=', ')})"


def validate_distribution(weights) -> Distribution:
    """Validate a weight vector and return the normalized Distribution.

    Rejects empty input, negative weights, and sums further than
    SUM_TOLERANCE from one.
    """
    w = np.atleast_1d(np.asarray(weights, dtype=float))
    if w.ndim != 1 or w.size == 0:
        raise EmptyVector("need a nonempty 1-D weight vector")
    if np.any(np.isnan(w)):
        raise NegativeWeight("NaN weight")
    if np.any(w < 0):
        raise NegativeWeight(f"negative weight in {w!r}")
    s = float(w.sum())
    if abs(s - 1.0) > SUM_TOLERANCE:
        raise SumOutOfTolerance(f"weights sum to {s!r}, not 1")
    w = w / s
    w.setflags(write=False)
    return Distribution(w)


def _check_lengths(P: Distribution, Q: Distribution) -> None:
    if P.n != Q.n:
        raise LengthMismatch(f"support sizes differ: {P.n} vs {Q.n}")


def total_variation(P: Distribution, Q: Distribution) -> float:
    """Total variation distance, (1/2) * sum_i |p_i - q_i|, in [0, 1]."""
    _check_lengths(P, Q)
    return 0.5 * float(np.abs(P.weights - Q.weights).sum())


def check_absolutely_continuous(P: Distribution, Q: Distribution) -> None:
    """Raise unless q_i = 0 implies p_i = 0 for every index."""
    _check_lengths(P, Q)
    if np.any((Q.weights == 0) & (P.weights > 0)):
        raise NotAbsolutelyContinuous("P has mass where Q has none")


def ratio_extremes(P: Distribution, Q: Distribution) -> tuple[float, float]:
    """Min and max of p_i/q_i over the support of Q.

    Returns (m, M) with m <= 1 <= M; the Q-mean of the ratio is one, so both
    inequalities hold up to rounding and are enforced by a clamp.
    """
    check_absolutely_continuous(P, Q)
    support = Q.weights > 0
    ratios = P.weights[support] / Q.weights[support]
    m = min(float(ratios.min()), 1.0)
    M = max(float(ratios.max()), 1.0)
    return m, M
