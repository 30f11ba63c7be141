import math
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from errors import BracketError, DomainError
from verifier.residuals import residual

COLUMNS = ("x", "e4")


def e4(x, backend="standard"):
    """f(x) - x - log x."""
    return residual("L4", x, backend)


@dataclass
class CrossoverResult:
    """Point estimate of the sign change of E4 plus a sampled sign check.

    certificate holds (x, E4(x)) samples above x_star; all_negative is True
    when every sample is negative. It is evidence over the samples only.
    """
    x_star: float
    e4_at_x_star: float
    tol: float
    iterations: int
    certificate: List[Tuple[float, float]] = field(default_factory=list)
    all_negative: bool = True

    def rows(self):
        return list(self.certificate)


def gym_crossover_search(lo=math.e, hi=100.0, tol=1e-6, backend="standard"):
    """Bisect E4 for its sign change between lo and hi.

    Returns:
        float: Midpoint of the final bracket, of width <= tol

    Raises:
        BracketError: E4(lo) > 0 > E4(hi) does not hold
    """
    if not 1 < lo < hi:
        raise DomainError(f"crossover bracket must satisfy 1 < lo < hi, got {lo!r}, {hi!r}")
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    e_lo, e_hi = e4(lo, backend), e4(hi, backend)
    if not (e_lo > 0 > e_hi):
        raise BracketError(f"E4 does not change sign on [{lo!r}, {hi!r}]: {e_lo!r}, {e_hi!r}")

    while hi - lo > tol:
        mid = (lo + hi) / 2
        if e4(mid, backend) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def sign_certificate(x_star, upto=1e6, per_decade=10, backend="standard"):
    """Sample E4 above x_star: a geometric grid plus every power of ten up to upto."""
    points = set()
    k = 1
    while True:
        x = x_star * 10.0 ** (k / per_decade)
        if x > upto:
            break
        points.add(x)
        k += 1
    decade = 10.0
    while decade <= upto:
        if decade > x_star:
            points.add(decade)
        decade *= 10
    return [(x, e4(x, backend)) for x in sorted(points)]


def crossover_report(lo=math.e, hi=100.0, tol=1e-6, certify_upto=1e6, backend="standard"):
    x_star = gym_crossover_search(lo, hi, tol, backend)
    iterations = max(0, math.ceil(math.log2((hi - lo) / tol)))
    certificate = sign_certificate(x_star, certify_upto, backend=backend)
    result = CrossoverResult(
        x_star=x_star,
        e4_at_x_star=e4(x_star, backend),
        tol=tol,
        iterations=iterations,
        certificate=certificate,
        all_negative=all(value < 0 for _, value in certificate),
    )
    if not result.all_negative:
        positives = [x for x, value in certificate if value >= 0]
        logging.warning(f"E4 is non-negative above the crossover at {positives}")
    logging.info(f"E4 crossover at x*={x_star!r} ({iterations} bisections, {len(certificate)} sampled points)")
    return result
