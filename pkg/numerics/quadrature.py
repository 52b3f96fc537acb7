"""
Adaptive quadrature on a finite interval.

Each panel is integrated with a fixed-order Gauss-Legendre rule; a panel's
error is the gap between its one-panel value and the sum over its two
halves. The panel with the largest error is bisected until the summed error
meets the tolerance or the evaluation budget runs out.
"""
import heapq
import logging
import math
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np

from models.errors import ConvergenceError, DomainError
from models.numerics_model import QuadratureResult

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 10
DEFAULT_RTOL = 1e-9
DEFAULT_MAX_EVALUATIONS = 200_000
# Below this many ulps of the absolute integral the error estimate is roundoff.
_ROUNDOFF_ULPS = 100.0

Integrand = Callable[[np.ndarray], np.ndarray]


@lru_cache(maxsize=8)
def _gauss_legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def _evaluate(f: Integrand, x: np.ndarray) -> np.ndarray:
    y = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
    if not np.all(np.isfinite(y)):
        raise DomainError("integrand is not finite on the integration interval")
    return y


class _Panel:
    """Interval with its one-panel estimate and the refined two-half estimate."""

    __slots__ = ("lo", "hi", "left", "right", "abs_left", "abs_right")

    def __init__(self, lo, hi, left, right, abs_left, abs_right):
        self.lo = lo
        self.hi = hi
        self.left = left
        self.right = right
        self.abs_left = abs_left
        self.abs_right = abs_right


def integrate(
    f: Integrand,
    lo: float,
    hi: float,
    abs_tol: Optional[float] = None,
    rel_tol: float = 0.0,
    order: int = DEFAULT_ORDER,
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS,
) -> QuadratureResult:
    """
    Integrate f over [lo, hi].

    f is called with numpy arrays of abscissae and must return values of the
    same shape (a scalar is broadcast).

    Args:
        f: Vectorized integrand
        lo: Lower limit
        hi: Upper limit, finite and >= lo
        abs_tol: Absolute error target, defaults to 1e-9 times the integral of |f|
        rel_tol: Relative error target, used when larger than abs_tol
        order: Gauss-Legendre points per panel
        max_evaluations: Integrand evaluation budget

    Returns:
        QuadratureResult with the value, error estimate and evaluation count

    Raises:
        DomainError: For invalid limits, tolerances or a non-finite integrand
        ConvergenceError: If the budget is exhausted before the tolerance is met
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError(f"integration limits must be finite, got [{lo}, {hi}]")
    if lo > hi:
        raise DomainError(f"integration needs lo <= hi, got [{lo}, {hi}]")
    if abs_tol is not None and abs_tol <= 0.0:
        raise DomainError(f"abs_tol must be positive, got {abs_tol}")
    if lo == hi:
        _evaluate(f, np.array([lo], dtype=float))
        return QuadratureResult(value=0.0, error_estimate=0.0, evaluations=1)

    nodes, weights = _gauss_legendre(order)
    evaluations = 0

    def rule(a: float, b: float) -> Tuple[float, float]:
        nonlocal evaluations
        half = 0.5 * (b - a)
        y = _evaluate(f, 0.5 * (a + b) + half * nodes)
        evaluations += order
        return half * float(weights @ y), half * float(weights @ np.abs(y))

    def refine(a: float, b: float, whole: Optional[float] = None) -> Tuple[_Panel, float]:
        if whole is None:
            whole, _ = rule(a, b)
        mid = 0.5 * (a + b)
        left, abs_left = rule(a, mid)
        right, abs_right = rule(mid, b)
        return _Panel(a, b, left, right, abs_left, abs_right), abs(left + right - whole)

    panel, error = refine(lo, hi)
    if abs_tol is None:
        abs_tol = DEFAULT_RTOL * max(panel.abs_left + panel.abs_right, np.finfo(float).tiny)

    heap = [(-error, 0, panel)]
    counter = 1
    total_error = error
    while True:
        value = math.fsum(p.left + p.right for _, _, p in heap)
        abs_value = math.fsum(p.abs_left + p.abs_right for _, _, p in heap)
        target = max(abs_tol, rel_tol * abs(value), _ROUNDOFF_ULPS * np.finfo(float).eps * abs_value)
        if total_error <= target:
            return QuadratureResult(value=value, error_estimate=total_error, evaluations=evaluations)
        if evaluations + 4 * order > max_evaluations:
            logger.warning(
                "Quadrature on [%g, %g] stopped after %d evaluations with error %.3e > %.3e",
                lo, hi, evaluations, total_error, target,
            )
            raise ConvergenceError(
                f"quadrature on [{lo}, {hi}] did not reach {target:.3e} within {max_evaluations} "
                f"evaluations (estimate {value}, error {total_error:.3e})"
            )
        neg_error, _, worst = heapq.heappop(heap)
        total_error += neg_error
        mid = 0.5 * (worst.lo + worst.hi)
        for a, b, whole in ((worst.lo, mid, worst.left), (mid, worst.hi, worst.right)):
            child, child_error = refine(a, b, whole)
            heapq.heappush(heap, (-child_error, counter, child))
            counter += 1
            total_error += child_error
        total_error = max(total_error, 0.0)
