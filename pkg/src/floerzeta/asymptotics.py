"""Growth rates of Floer-dimension sequences and torus entropy.

``grow(a_n) = max(1, limsup |a_n|^(1/n))`` is bracketed by the largest value
of ``log|a_n| / n`` over the tail window ``[ceil(h/2), h]``. No extrapolation
is attempted: a bounded sequence reports a value slightly above 1 that decays
with the horizon. Periodic Nielsen data is the one exception, since its
sequence takes finitely many values and the limit is known exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .periodic import NielsenData, expand_counts
from .subshift import SignedSubshiftFamily, trace_formula_sequence
from .torus import TorusMap, floer_dimension

MIN_HORIZON = 4


@dataclass(frozen=True)
class GrowthEstimate:
    value: float
    horizon: int
    per_n_logs: tuple[float, ...] = field(repr=False)
    exact: bool = False

    @property
    def window(self) -> tuple[int, int]:
        return tail_window(self.horizon)


def tail_window(horizon: int) -> tuple[int, int]:
    return (horizon + 1) // 2, horizon


def big_log(n: int) -> float:
    """Natural log of a positive integer of any size (``-inf`` for 0)."""
    n = abs(int(n))
    if n == 0:
        return -math.inf
    # CPython's math.log splits ints into leading bits and exponent; no overflow
    return math.log(n)


def _check_horizon(horizon: int) -> None:
    if horizon < MIN_HORIZON:
        raise ValueError(f"horizon must be >= {MIN_HORIZON}, got {horizon}")


def growth_from_values(values: list[int], horizon: int) -> GrowthEstimate:
    """Same estimator as :func:`growth_rate` for a precomputed ``a_1..a_horizon``."""
    _check_horizon(horizon)
    lo, hi = tail_window(horizon)
    logs = tuple(big_log(values[n - 1]) / n for n in range(lo, hi + 1))
    top = max(logs)
    value = 1.0 if top == -math.inf else max(1.0, math.exp(top))
    return GrowthEstimate(value=value, horizon=horizon, per_n_logs=logs)


def growth_rate(a: Callable[[int], int], horizon: int) -> GrowthEstimate:
    _check_horizon(horizon)
    lo, hi = tail_window(horizon)
    values = [0] * (lo - 1) + [a(n) for n in range(lo, hi + 1)]
    return growth_from_values(values, horizon)


def torus_entropy(t) -> float:
    """``log |lambda_1| = log((|tr| + sqrt(tr^2 - 4)) / 2)``."""
    t = t if isinstance(t, TorusMap) else TorusMap(t)
    t.require_hyperbolic()
    tr = abs(t.trace)
    return math.log((tr + math.sqrt(tr * tr - 4)) / 2)


def spectral_radius(matrix) -> float:
    return float(max(abs(np.linalg.eigvals(np.asarray(matrix, dtype=float)))))


def asymptotic_invariant(obj, horizon: int) -> GrowthEstimate:
    """Growth rate of the Floer-dimension sequence of a torus map, periodic data or subshift family."""
    _check_horizon(horizon)
    if isinstance(obj, TorusMap):
        obj.require_hyperbolic()
        return growth_rate(lambda n: floer_dimension(obj, n), horizon)
    if isinstance(obj, NielsenData):
        est = growth_from_values(expand_counts(obj, horizon), horizon)
        # a periodic sequence has finitely many values, so limsup |a_n|^(1/n) <= 1
        return GrowthEstimate(1.0, horizon, est.per_n_logs, exact=True)
    if isinstance(obj, SignedSubshiftFamily):
        values = [abs(x) for x in trace_formula_sequence(obj, horizon)]
        return growth_from_values(values, horizon)
    raise TypeError(f"no Floer-dimension sequence for {type(obj).__name__}")

