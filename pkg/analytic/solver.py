import math
import logging
from dataclasses import dataclass

import config
from analytic.precision import get_backend
from errors import DomainError, NonConvergenceError


@dataclass
class FSolveResult:
    x: float
    f: float
    residual: float
    iterations: int


def residual_tolerance(x):
    return 1e-12 * max(1.0, abs(math.log(x)))


def _g(y, log_x, backend):
    # log(y)(1 - 1/y) - log x, written with y - 1 so it stays accurate near y = 1
    d = y - 1
    return backend.log1p(d) * (d / y) - log_x


def _dg(y, backend):
    d = y - 1
    return (d + backend.log1p(d)) / (y * y)


def _bracket(x, log_x, backend):
    if x >= 7:
        return backend.num(x), x + log_x + 1
    lo = 1 + backend.num(backend.eps)
    return lo, 2 * backend.num(x) + 2


def _initial_guess(x, log_x, backend):
    # f(x) ~ x + log x - log^2 x / (2x) for large x, f(x) ~ 1 + sqrt(log x) near 1
    asymptotic = x + log_x - log_x * log_x / (2 * x)
    near_one = 1 + log_x ** backend.num(0.5)
    return max(asymptotic, near_one)


def _safeguarded_newton(x, backend, max_iterations):
    """Newton on g with a maintained sign bracket; bisects when a step leaves it."""
    log_x = backend.log(x)
    lo, hi = _bracket(x, log_x, backend)
    y = _initial_guess(x, log_x, backend)
    if not lo < y < hi:
        y = (lo + hi) / 2

    for iteration in range(1, max_iterations + 1):
        gy = _g(y, log_x, backend)
        if gy == 0:
            return y, iteration
        if gy < 0:
            lo = y
        else:
            hi = y

        step = gy / _dg(y, backend)
        y_new = y - step
        if not lo < y_new < hi:
            y_new = (lo + hi) / 2

        if abs(y_new - y) <= 2 * backend.eps * y or hi - lo <= 2 * backend.eps * y:
            return y_new, iteration
        y = y_new

    raise NonConvergenceError(f"f-solver did not converge for x={x!r} in {max_iterations} iterations")


def f_of(x, backend="standard", max_iterations=config.F_MAX_ITERATIONS):
    """Solve log(y)(1 - 1/y) = log x for the unique y > 1.

    y -> log(y)(1 - 1/y) is strictly increasing on (1, inf), so the highest
    solution is the only one there.

    Args:
        x: Abscissa, x >= 1
        backend: 'standard' (float) or 'extended' (mpmath)
        max_iterations: Newton/bisection step limit

    Returns:
        FSolveResult: Solution, residual and step count

    Raises:
        DomainError: x < 1 or not finite
        NonConvergenceError: The solver ran out of iterations
    """
    x = float(x)
    if not math.isfinite(x) or x < 1:
        raise DomainError(f"f(x) has no solution y > 1 for x={x!r}; x must be >= 1")
    if x == 1:
        return FSolveResult(x=1.0, f=1.0, residual=0.0, iterations=0)

    backend = get_backend(backend)
    with backend.workprec():
        bx = backend.num(x)
        y, iterations = _safeguarded_newton(bx, backend, max_iterations)
        residual = _g(y, backend.log(bx), backend)

    result = FSolveResult(x=x, f=float(y), residual=float(residual), iterations=iterations)
    if abs(result.residual) >= residual_tolerance(x):
        raise NonConvergenceError(f"f-solver residual {result.residual!r} too large at x={x!r}")
    logging.debug(f"f({x!r}) = {result.f!r} after {iterations} steps, residual {result.residual!r}")
    return result


def f_native(x, backend, max_iterations=config.F_MAX_ITERATIONS):
    """f(x) as a backend number. Call inside backend.workprec()."""
    if x == 1:
        return backend.num(1)
    if not x > 1:
        raise DomainError(f"f(x) has no solution y > 1 for x={x!r}; x must be >= 1")
    y, _ = _safeguarded_newton(backend.num(x), backend, max_iterations)
    return y


def iterate_f(x0, k, backend="standard"):
    """Return [y(x0,0), ..., y(x0,k)] where y(x0,0) = x0 and y(x0,j) = f(y(x0,j-1))."""
    if k < 0:
        raise DomainError(f"iteration count must be >= 0, got {k}")
    if not x0 >= 1:
        raise DomainError(f"iteration start must be >= 1, got {x0!r}")
    values = [float(x0)]
    for _ in range(k):
        values.append(f_of(values[-1], backend=backend).f)
    return values
