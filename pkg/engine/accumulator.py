import math
from dataclasses import dataclass, field

from errors import IndexGapError


@dataclass
class CompensatedSum:
    """Neumaier running sum.

    The represented value is sum + compensation; the compensation collects
    the low-order bits each addition rounds away.
    """
    sum: float = 0.0
    compensation: float = 0.0

    def add(self, term):
        total = self.sum + term
        if abs(self.sum) >= abs(term):
            self.compensation += (self.sum - total) + term
        else:
            self.compensation += (term - total) + self.sum
        self.sum = total

    def fold(self, terms):
        for term in terms:
            self.add(term)
        return self

    def value(self):
        return self.sum + self.compensation

    def copy(self):
        return CompensatedSum(self.sum, self.compensation)


def mertens_term(p):
    """log(1 - 1/p), via log1p to avoid cancellation for large p."""
    return math.log1p(-1.0 / p)


@dataclass
class ThetaMertensState:
    """Running theta(p_n) and log of the Mertens product over the first n primes.

    log N_n is theta(p_n) and log(N_n / phi(N_n)) is -mertens_log, so the
    primorial is never materialized.
    """
    n: int = 0
    p_n: int = 0
    theta: CompensatedSum = field(default_factory=CompensatedSum)
    mertens_log: CompensatedSum = field(default_factory=CompensatedSum)

    def fold(self, p):
        """Fold one prime in place. The prime must be p_{n+1}."""
        self.theta.add(math.log(p))
        self.mertens_log.add(mertens_term(p))
        self.n += 1
        self.p_n = p

    @property
    def theta_value(self):
        return self.theta.value()

    @property
    def mertens_value(self):
        return self.mertens_log.value()

    def copy(self):
        return ThetaMertensState(self.n, self.p_n, self.theta.copy(), self.mertens_log.copy())


def extend(state, block):
    """Fold a prime block into a copy of the state.

    Primes are folded one at a time, so the result does not depend on how the
    primes were split into blocks.

    Args:
        state: ThetaMertensState after p_n
        block: PrimeBlock starting at index n + 1

    Returns:
        ThetaMertensState: The advanced state

    Raises:
        IndexGapError: The block does not continue the state
    """
    if block.first_index != state.n + 1:
        raise IndexGapError(
            f"block starts at index {block.first_index} but state is at n={state.n}"
        )
    new_state = state.copy()
    for p in block.primes:
        new_state.fold(p)
    return new_state
