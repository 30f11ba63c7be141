import math
import bisect
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from analytic.constants import EXP_NEG_GAMMA
from analytic.qvalues import q_from_abscissa, q_from_state
from analytic.solver import f_of, iterate_f
from engine.sieve import SieveConfig
from engine.stream import PrimeStream
from errors import DomainError

PNT_COLUMNS = ("n", "p_n", "theta", "ratio")
GAP_COLUMNS = ("x", "mean_gap", "f_gap", "ratio")
MERTENS_COLUMNS = ("n", "p_n", "mertens_product", "log_p_product", "gap")
QSEQ_COLUMNS = ("n", "p_n", "theta", "q", "exponent", "q_pi_reading")


def _sorted_indices(grid, name):
    values = sorted(set(int(n) for n in grid))
    if not values or values[0] < 1:
        raise DomainError(f"{name} grid must be non-empty with every index >= 1")
    return values


def decade_indices(n_max, start=10):
    """10, 100, ... up to n_max, with n_max itself appended."""
    grid = []
    n = start
    while n <= n_max:
        grid.append(n)
        n *= 10
    if not grid or grid[-1] != n_max:
        grid.append(n_max)
    return grid


@dataclass
class PntRow:
    n: int
    p_n: int
    theta: float
    ratio: float

    def as_row(self):
        return (self.n, self.p_n, self.theta, self.ratio)


@dataclass
class PntReport:
    rows: List[PntRow] = field(default_factory=list)
    last_ratio: Optional[float] = None
    max_top_decade_deviation: Optional[float] = None


def pnt_ratio_sweep(stream, n_grid):
    """theta(p_n) / p_n at each grid index.

    The summary holds the last ratio and the largest |ratio - 1| over grid
    points in the top decade (n >= n_max / 10).
    """
    targets = _sorted_indices(n_grid, "pnt")
    report = PntReport()
    pending = iter(targets)
    target = next(pending)
    for state in stream.states(targets[-1]):
        if state.n != target:
            continue
        theta = state.theta_value
        report.rows.append(PntRow(state.n, state.p_n, theta, theta / state.p_n))
        target = next(pending, None)
        if target is None:
            break

    if report.rows:
        n_max = report.rows[-1].n
        report.last_ratio = report.rows[-1].ratio
        report.max_top_decade_deviation = max(
            abs(row.ratio - 1) for row in report.rows if row.n * 10 >= n_max
        )
        logging.info(f"theta(p_n)/p_n at n={n_max}: {report.last_ratio!r}")
    return report


@dataclass
class GapComparison:
    """Mean prime gap below x against f(x) - x.

    iterates are y(x, 0..k); iterate_span = y(x, k) - x telescopes the
    iterate steps, prime_span = p_pi(x) - 2 telescopes the prime gaps.
    """
    x: float
    mean_gap: float
    f_gap: float
    ratio: float
    prime_count: int = 0
    largest_prime: int = 0
    prime_span: int = 0
    iterates: List[float] = field(default_factory=list)
    iterate_span: float = 0.0

    def as_row(self):
        return (self.x, self.mean_gap, self.f_gap, self.ratio)


def synth_gap_compare(x_grid, iterations=3, backend="standard", segment_size=None):
    """Compare the mean prime gap below each x with f(x) - x.

    Args:
        x_grid: Cutoffs, each >= 10
        iterations: Steps of the f iteration reported alongside
        backend: Precision backend for f

    Returns:
        list: GapComparison per cutoff, in increasing x
    """
    cutoffs = sorted(float(x) for x in x_grid)
    if not cutoffs:
        raise DomainError("gap comparison needs at least one cutoff")
    if cutoffs[0] < 10:
        raise DomainError(f"gap comparison cutoffs must be >= 10, got {cutoffs[0]!r}")

    sieve_config = SieveConfig(limit=int(math.floor(cutoffs[-1])))
    if segment_size:
        sieve_config.segment_size = segment_size
    stream = PrimeStream(sieve_config)

    counts = []
    largest = []
    pending = list(cutoffs)
    count, last = 0, 0
    for state in stream.states():
        while pending and state.p_n > pending[0]:
            counts.append(count)
            largest.append(last)
            pending.pop(0)
        count, last = state.n, state.p_n
    for _ in pending:
        counts.append(count)
        largest.append(last)

    results = []
    for x, pi_x, p_last in zip(cutoffs, counts, largest):
        mean_gap = (p_last - 2) / (pi_x - 1)
        f_gap = f_of(x, backend=backend).f - x
        iterates = iterate_f(x, iterations, backend=backend)
        results.append(GapComparison(
            x=x,
            mean_gap=mean_gap,
            f_gap=f_gap,
            ratio=mean_gap / f_gap,
            prime_count=pi_x,
            largest_prime=p_last,
            prime_span=p_last - 2,
            iterates=iterates,
            iterate_span=iterates[-1] - x,
        ))
        logging.debug(f"Gap comparison at x={x!r}: mean gap {mean_gap!r}, f gap {f_gap!r}")
    return results


@dataclass
class MertensRow:
    n: int
    p_n: int
    mertens_product: float
    log_p_product: float
    gap: float

    def as_row(self):
        return (self.n, self.p_n, self.mertens_product, self.log_p_product, self.gap)


def mertens_sweep(stream, n_grid):
    """log(p_n) * prod_{k<=n}(1 - 1/p_k) against its limit e^-gamma."""
    targets = set(_sorted_indices(n_grid, "mertens"))
    rows = []
    for state in stream.states(max(targets)):
        if state.n not in targets:
            continue
        product = math.exp(state.mertens_value)
        scaled = math.log(state.p_n) * product
        rows.append(MertensRow(state.n, state.p_n, product, scaled, EXP_NEG_GAMMA - scaled))
    return rows


@dataclass
class QRow:
    """q under both readings of the product index.

    q uses the first n primes; q_pi_reading uses the primes <= theta(p_n).
    """
    n: int
    p_n: int
    theta: float
    q: float
    exponent: float
    q_pi_reading: float

    def as_row(self):
        return (self.n, self.p_n, self.theta, self.q, self.exponent, self.q_pi_reading)


def q_sequence(stream, n_values):
    if stream.state.n:
        raise DomainError("q_sequence needs a stream that starts at the first prime")
    targets = set(_sorted_indices(n_values, "qseq"))
    primes = []
    mertens_prefix = []
    rows = []
    for state in stream.states(max(targets)):
        primes.append(state.p_n)
        mertens_prefix.append(state.mertens_value)
        if state.n not in targets:
            continue
        qvalue = q_from_state(state)
        below = bisect.bisect_right(primes, qvalue.theta)
        mertens_below = mertens_prefix[below - 1] if below else 0.0
        rows.append(QRow(
            n=state.n,
            p_n=state.p_n,
            theta=qvalue.theta,
            q=qvalue.q,
            exponent=qvalue.exponent,
            q_pi_reading=q_from_abscissa(qvalue.theta, mertens_below),
        ))
    return rows
