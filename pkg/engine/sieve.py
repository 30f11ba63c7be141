import math
import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

import config
from engine.checkpoint import Checkpoint
from errors import ExhaustedRange


def simple_sieve(limit: int) -> np.ndarray:
    """Return all primes <= limit with a plain sieve of Eratosthenes."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


@dataclass
class SieveConfig:
    """Sieve settings.

    Args:
        segment_size: Count of integers covered by one segment
        limit: Inclusive upper bound on prime values, None for unbounded streaming
        start_checkpoint: Checkpoint to resume from
    """
    segment_size: int = config.SEGMENT_SIZE
    limit: Optional[int] = None
    start_checkpoint: Optional[Checkpoint] = None

    def __post_init__(self):
        if self.segment_size < config.MIN_SEGMENT_SIZE:
            raise ValueError(f"segment_size must be >= {config.MIN_SEGMENT_SIZE}, got {self.segment_size}")
        if self.limit is not None and self.limit < 2:
            raise ValueError(f"limit must be >= 2, got {self.limit}")


@dataclass
class PrimeBlock:
    first_index: int
    primes: List[int] = field(default_factory=list)

    def __len__(self):
        return len(self.primes)

    @property
    def last_index(self):
        return self.first_index + len(self.primes) - 1


@dataclass
class SieveCursor:
    """Position of a sieve: next integer to examine and index of the next prime."""
    low: int = 2
    next_index: int = 1

    @classmethod
    def after(cls, n, p_n):
        """Cursor positioned right after the n-th prime p_n."""
        if n == 0:
            return cls()
        return cls(low=p_n + 1, next_index=n + 1)


class PrimeSieve:
    """Segmented odd-only sieve of Eratosthenes.

    Base primes are grown on demand, so the sieve also works without a limit.
    """

    def __init__(self):
        self._base = np.array([], dtype=np.int64)
        self._base_bound = 1

    def _ensure_base(self, bound):
        if bound <= self._base_bound:
            return
        new_bound = max(bound, 2 * self._base_bound, 1024)
        self._base = simple_sieve(new_bound)
        self._base_bound = new_bound
        logging.debug(f"Base primes extended to {new_bound} ({len(self._base)} primes)")

    def base_primes(self, high):
        """Base primes needed to sieve integers below high (exclusive)."""
        root = math.isqrt(max(high - 1, 0))
        self._ensure_base(root)
        return self._base[: np.searchsorted(self._base, root, side="right")]

    def segment(self, low, high, base=None):
        """Return the primes in [low, high) as a list of Python ints.

        Args:
            low: First integer of the segment
            high: End of the segment (exclusive)
            base: Base primes covering sqrt(high), computed when omitted

        Returns:
            list: Primes in increasing order
        """
        if high <= low:
            return []
        if base is None:
            base = self.base_primes(high)

        primes = []
        if low <= 2 < high:
            primes.append(2)

        first_odd = max(low, 3)
        if first_odd % 2 == 0:
            first_odd += 1
        if first_odd >= high:
            return primes

        odd_count = (high - first_odd + 1) // 2
        mask = np.ones(odd_count, dtype=bool)
        for p in base:
            p = int(p)
            if p == 2:
                continue
            p2 = p * p
            if p2 >= high:
                break
            start = max(p2, ((first_odd + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - first_odd) // 2::p] = False

        idx = np.flatnonzero(mask)
        primes.extend((first_odd + 2 * idx).tolist())
        return primes


def segment_bounds(sieve_config, cursor):
    """Return the [low, high) range the next segment covers.

    Raises:
        ExhaustedRange: The cursor is already past the limit
    """
    low = cursor.low
    if sieve_config.limit is not None and low > sieve_config.limit:
        raise ExhaustedRange(f"sieve limit {sieve_config.limit} reached")
    high = low + sieve_config.segment_size
    if sieve_config.limit is not None:
        high = min(high, sieve_config.limit + 1)
    return low, high


_default_sieve = PrimeSieve()


def next_block(sieve_config, cursor, sieve=None):
    """Sieve the next segment and advance the cursor.

    Args:
        sieve_config: SieveConfig
        cursor: SieveCursor, advanced in place
        sieve: PrimeSieve holding the base primes, shared default when omitted

    Returns:
        PrimeBlock: The primes of the segment with their starting index

    Raises:
        ExhaustedRange: The limit was reached
    """
    sieve = sieve or _default_sieve
    low, high = segment_bounds(sieve_config, cursor)
    primes = sieve.segment(low, high)
    block = PrimeBlock(first_index=cursor.next_index, primes=primes)
    cursor.low = high
    cursor.next_index += len(primes)
    return block
