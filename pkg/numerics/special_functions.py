"""
Special functions used by the offload analytics.

log_gamma uses the Lanczos approximation (g = 7, nine terms) with the
reflection formula below 1/2. reg_inc_beta evaluates the continued fraction
of the regularized incomplete beta with the modified Lentz method, switching
to the symmetric form above x = (a + 1) / (a + b + 2).
"""
import math

from models.errors import ConvergenceError, DomainError

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITERATIONS = 10_000

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_FPMIN = 1e-300
# Lentz steps stop this far below the requested accuracy.
_CF_SAFETY = 1e-4


def log_gamma(x: float) -> float:
    """
    Natural logarithm of the gamma function for x > 0.

    Args:
        x: Positive argument

    Returns:
        ln Gamma(x)

    Raises:
        DomainError: If x is not a finite positive number
    """
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"log_gamma needs a finite x > 0, got {x}")
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    series = _LANCZOS_COEFFS[0]
    for k, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        series += coeff / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(series)


def log_beta(a: float, b: float) -> float:
    """ln B(a, b)."""
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b)


def _beta_continued_fraction(x: float, a: float, b: float, eps: float, max_iterations: int) -> float:
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, max_iterations + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    raise ConvergenceError(
        f"incomplete beta continued fraction did not converge in {max_iterations} steps "
        f"(x={x}, a={a}, b={b})"
    )


def reg_inc_beta(
    x: float,
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> float:
    """
    Regularized incomplete beta function I_x(a, b), the Beta(a, b) CDF at x.

    Args:
        x: Evaluation point in [0, 1]
        a: First shape parameter, > 0
        b: Second shape parameter, > 0
        tol: Target absolute accuracy
        max_iterations: Continued-fraction step budget

    Returns:
        I_x(a, b) in [0, 1]

    Raises:
        DomainError: If an argument is outside its domain
        ConvergenceError: If the continued fraction exhausts its budget
    """
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"reg_inc_beta needs 0 <= x <= 1, got x={x}")
    if not (math.isfinite(a) and a > 0.0 and math.isfinite(b) and b > 0.0):
        raise DomainError(f"reg_inc_beta needs finite a > 0 and b > 0, got a={a}, b={b}")
    if tol <= 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0

    eps = max(tol * _CF_SAFETY, 4.0 * 2.0 ** -52)
    log_front = a * math.log(x) + b * math.log1p(-x) - log_beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        value = math.exp(log_front) * _beta_continued_fraction(x, a, b, eps, max_iterations) / a
    else:
        value = 1.0 - math.exp(log_front) * _beta_continued_fraction(1.0 - x, b, a, eps, max_iterations) / b
    return min(1.0, max(0.0, value))
