"""Residuals of the limit statements about b_x, f and their expansions.

    E1(x) = x^(1 + 1/g) - x - log x    for g = b_x, g = f(x) - 1, and the
                                        variant with exponent 1 - 1/(f(x) - 1)
    E2(x) = x(x log(1 + log x / x) - log x) + log^2 x / 2
    E3(x) = log(x)/2 - b_x + x
    E4(x) = f(x) - x - log x

All of them tend to zero except the minus variant of E1, which is reported
alongside for comparison.
"""
import math
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from analytic.auxiliary import log1p_tail
from analytic.precision import STANDARD, get_backend
from analytic.solver import f_native
from errors import DomainError, NicolasError

LEMMA_IDS = ("L1-b", "L1-f-plus", "L1-f-minus", "L2", "L3", "L4")
COLUMNS = ("lemma_id", "x", "residual")
# log(1 + log x / x) and b_x need x > 1
_NEED_X_ABOVE_ONE = ("L1-b", "L2", "L3")


@dataclass
class ResidualSample:
    lemma_id: str
    x: float
    residual: float

    def as_row(self):
        return (self.lemma_id, self.x, self.residual)


@dataclass
class ResidualReport:
    samples: List[ResidualSample] = field(default_factory=list)
    missing: List[Tuple[str, float, str]] = field(default_factory=list)

    def by_lemma(self, lemma_id):
        return [s for s in self.samples if s.lemma_id == lemma_id]


def geometric_grid(lo, hi, per_decade=1):
    """lo * 10^(k/per_decade) for k = 0, 1, ... up to hi."""
    if not 0 < lo <= hi:
        raise DomainError(f"grid bounds must satisfy 0 < lo <= hi, got {lo!r}, {hi!r}")
    if per_decade < 1:
        raise DomainError(f"per_decade must be >= 1, got {per_decade}")
    steps = int(round(math.log10(hi / lo) * per_decade))
    return [lo * 10.0 ** (k / per_decade) for k in range(steps + 1)]


def _check_domain(lemma_id, x):
    if not x > 0:
        raise DomainError(f"residuals need x > 0, got {x!r}")
    if lemma_id in _NEED_X_ABOVE_ONE and not x > 1:
        raise DomainError(f"{lemma_id} is defined for x > 1, got {x!r}")


def _standard_residual(lemma_id, x):
    _check_domain(lemma_id, x)
    log_x = math.log(x)
    if lemma_id == "L2":
        # x^2 * (log1p(t) - t + t^2/2) with t = log x / x
        return x * x * log1p_tail(log_x / x)
    if lemma_id == "L3":
        t = log_x / x
        psi = log1p_tail(t)
        return log_x * (psi * (1 + t / 2) - t * t * t / 4) / (t * math.log1p(t))
    if lemma_id == "L1-b":
        g = log_x / math.log1p(log_x / x)
        return x * math.expm1(log_x / g) - log_x

    big_f = f_native(x, get_backend(STANDARD))
    if lemma_id == "L4":
        return big_f - x - log_x
    if not big_f > 1:
        raise DomainError(f"f(x) - 1 vanishes at x={x!r}")
    if lemma_id == "L1-f-plus":
        return x * math.expm1(log_x / (big_f - 1)) - log_x
    if lemma_id == "L1-f-minus":
        return x * math.expm1(-log_x / (big_f - 1)) - log_x
    raise DomainError(f"unknown lemma id {lemma_id!r}")


def _extended_residual(lemma_id, x, backend):
    _check_domain(lemma_id, x)
    with backend.workprec():
        bx = backend.num(x)
        log_x = backend.log(bx)
        if lemma_id == "L2":
            value = bx * (bx * backend.log1p(log_x / bx) - log_x) + log_x * log_x / 2
        elif lemma_id in ("L3", "L1-b"):
            b = log_x / backend.log1p(log_x / bx)
            if lemma_id == "L3":
                value = log_x / 2 - b + bx
            else:
                value = bx * backend.expm1(log_x / b) - log_x
        else:
            big_f = f_native(x, backend)
            if lemma_id == "L4":
                value = big_f - bx - log_x
            elif not big_f > 1:
                raise DomainError(f"f(x) - 1 vanishes at x={x!r}")
            elif lemma_id == "L1-f-plus":
                value = bx * backend.expm1(log_x / (big_f - 1)) - log_x
            elif lemma_id == "L1-f-minus":
                value = bx * backend.expm1(-log_x / (big_f - 1)) - log_x
            else:
                raise DomainError(f"unknown lemma id {lemma_id!r}")
        return float(value)


def residual(lemma_id, x, backend=STANDARD):
    """Evaluate one residual expression at x."""
    backend = get_backend(backend)
    if backend.name == STANDARD:
        return _standard_residual(lemma_id, float(x))
    return _extended_residual(lemma_id, float(x), backend)


def lemma_residuals(grid, which=None, backend=STANDARD):
    """Evaluate the requested residuals on an increasing grid.

    Samples that fail with a domain or solver error are logged and recorded
    in ResidualReport.missing; they do not abort the run.

    Args:
        grid: Increasing abscissae, each > 1
        which: Lemma ids to evaluate, all of LEMMA_IDS when omitted
        backend: 'standard' or 'extended'

    Returns:
        ResidualReport: Samples ordered by lemma id, then by x
    """
    grid = [float(x) for x in grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("residual grid must be strictly increasing")
    which = set(LEMMA_IDS if which is None else which)
    unknown = which - set(LEMMA_IDS)
    if unknown:
        raise DomainError(f"unknown lemma ids {sorted(unknown)}; expected a subset of {LEMMA_IDS}")

    report = ResidualReport()
    for lemma_id in LEMMA_IDS:
        if lemma_id not in which:
            continue
        for x in grid:
            try:
                value = residual(lemma_id, x, backend)
            except NicolasError as e:
                logging.warning(f"Missing {lemma_id} sample at x={x!r}: {e}")
                report.missing.append((lemma_id, x, str(e)))
                continue
            if not math.isfinite(value):
                logging.warning(f"Non-finite {lemma_id} residual at x={x!r}")
                report.missing.append((lemma_id, x, "non-finite residual"))
                continue
            report.samples.append(ResidualSample(lemma_id, x, value))
    return report
