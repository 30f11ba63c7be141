import math

from analytic.precision import get_backend
from analytic.solver import f_of
from errors import DomainError

# Below this argument the alternating series of log1p_tail is used
_SERIES_CUTOFF = 0.05
_SERIES_TERMS = 24


def log1p_tail(t):
    """log(1+t) - t + t^2/2 without cancellation for small |t|.

    Args:
        t: float with |t| < 1

    Returns:
        float: sum over k >= 3 of (-1)^(k+1) t^k / k
    """
    if abs(t) >= _SERIES_CUTOFF:
        return math.log1p(t) - t + t * t / 2
    total = 0.0
    power = t * t * t
    # Smallest terms first
    terms = []
    for k in range(3, 3 + _SERIES_TERMS):
        terms.append((1 if k % 2 else -1) * power / k)
        power *= t
    for term in reversed(terms):
        total += term
    return total


def b_of(x, backend="standard"):
    """b_x with x^(1 + 1/b_x) = x + log x, i.e. log(x) / log(1 + log(x)/x).

    Raises:
        DomainError: x <= 1
    """
    x = float(x)
    if not x > 1 or not math.isfinite(x):
        raise DomainError(f"b_x is defined for x > 1, got {x!r}")
    backend = get_backend(backend)
    with backend.workprec():
        bx = backend.num(x)
        log_x = backend.log(bx)
        return float(log_x / backend.log1p(log_x / bx))


def h_of(x, backend="standard"):
    """h(x) = exp(f(x) - x), so that x + log h(x) = f(x)."""
    result = f_of(x, backend=backend)
    return math.exp(result.f - result.x)
