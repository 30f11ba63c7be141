import logging
from concurrent.futures import ThreadPoolExecutor, as_completed

import config
from engine.accumulator import ThetaMertensState
from engine.checkpoint import load_checkpoint
from engine.sieve import PrimeBlock, PrimeSieve, SieveConfig, SieveCursor, segment_bounds
from errors import ExhaustedRange
from utils.handoff import BlockQueue


class PrimeStream:
    """Ordered source of prime blocks and of the accumulator state they drive.

    Segments may be sieved by a worker pool; blocks are handed to the
    accumulator in index order, so results are identical for any worker count.
    """

    def __init__(self, sieve_config=None, workers=config.SIEVE_WORKERS, state=None):
        self.config = sieve_config or SieveConfig()
        self.workers = max(1, int(workers))
        self.sieve = PrimeSieve()

        if state is None and self.config.start_checkpoint is not None:
            state = load_checkpoint(self.config.start_checkpoint)
            logging.info(f"Resuming prime stream at n={state.n} (p_n={state.p_n})")
        self.state = state or ThetaMertensState()
        self.cursor = SieveCursor.after(self.state.n, self.state.p_n)

    def _next_ranges(self, count):
        ranges = []
        low = self.cursor.low
        for _ in range(count):
            lookahead = SieveCursor(low=low, next_index=0)
            try:
                bounds = segment_bounds(self.config, lookahead)
            except ExhaustedRange:
                break
            ranges.append(bounds)
            low = bounds[1]
        return ranges

    def _sieve_batch(self, executor, ranges):
        # Base primes are computed once, before any worker touches them
        base = self.sieve.base_primes(ranges[-1][1])
        queue = BlockQueue()
        futures = {
            executor.submit(self.sieve.segment, low, high, base): seq
            for seq, (low, high) in enumerate(ranges)
        }
        for future in as_completed(futures):
            queue.put(futures[future], future.result())
        return list(queue.drain())

    def blocks(self):
        """Yield PrimeBlocks in index order until the limit is reached."""
        if self.workers == 1:
            while True:
                ranges = self._next_ranges(1)
                if not ranges:
                    return
                yield self._emit(ranges[0], self.sieve.segment(*ranges[0]))

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            while True:
                ranges = self._next_ranges(self.workers)
                if not ranges:
                    return
                for bounds, primes in zip(ranges, self._sieve_batch(executor, ranges)):
                    yield self._emit(bounds, primes)

    def _emit(self, bounds, primes):
        block = PrimeBlock(first_index=self.cursor.next_index, primes=primes)
        self.cursor.low = bounds[1]
        self.cursor.next_index += len(primes)
        logging.debug(f"Sieved [{bounds[0]}, {bounds[1]}): {len(primes)} primes from index {block.first_index}")
        return block

    def _rewind(self):
        # Blocks are emitted whole; the cursor must follow the folded state
        resume = SieveCursor.after(self.state.n, self.state.p_n)
        self.cursor.low = resume.low
        self.cursor.next_index = resume.next_index

    def states(self, n_max=None):
        """Fold primes one at a time and yield the live state after each.

        The same state object is yielded every time; copy it to keep a snapshot.
        Stopping early (break or an exception in the caller) leaves the stream
        positioned right after the last folded prime.

        Args:
            n_max: Stop once the state reaches this prime index

        Yields:
            ThetaMertensState: The state after folding p_n
        """
        if n_max is not None and self.state.n >= n_max:
            return
        self._rewind()
        blocks = self.blocks()
        try:
            for block in blocks:
                for p in block.primes:
                    self.state.fold(p)
                    yield self.state
                    if n_max is not None and self.state.n >= n_max:
                        return
        finally:
            blocks.close()
            self._rewind()

    def advance_to(self, n_max):
        """Fold primes until the state reaches index n_max and return it."""
        for _ in self.states(n_max):
            pass
        if self.state.n < n_max:
            raise ExhaustedRange(f"stream ended at n={self.state.n} before n={n_max}")
        return self.state
