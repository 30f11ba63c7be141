"""Tests for the segmented sieve and the ordered prime stream."""

import pytest

from engine.sieve import (
    PrimeSieve,
    SieveConfig,
    SieveCursor,
    next_block,
    simple_sieve,
)
from errors import ExhaustedRange

FIRST_TEN = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestSimpleSieve:

    def test_small_limits(self):
        assert simple_sieve(1).tolist() == []
        assert simple_sieve(2).tolist() == [2]
        assert simple_sieve(29).tolist() == FIRST_TEN

    def test_prime_count_to_a_million(self):
        primes = simple_sieve(10**6)
        assert len(primes) == 78498
        assert int(primes[-1]) == 999983


class TestSegment:

    def test_matches_trial_division(self, trial_division):
        sieve = PrimeSieve()
        assert sieve.segment(2, 2001) == trial_division(2000)

    def test_inner_segment(self, trial_division):
        sieve = PrimeSieve()
        expected = [p for p in trial_division(5000) if 3000 <= p < 5000]
        assert sieve.segment(3000, 5000) == expected

    def test_edges(self):
        sieve = PrimeSieve()
        assert sieve.segment(2, 3) == [2]
        assert sieve.segment(3, 4) == [3]
        assert sieve.segment(4, 5) == []
        assert sieve.segment(10, 10) == []
        assert sieve.segment(0, 12) == [2, 3, 5, 7, 11]

    def test_odd_squares_are_removed(self):
        sieve = PrimeSieve()
        segment = sieve.segment(1_000_000, 1_010_000)
        assert 1_002_001 not in segment  # 1001^2
        assert all(p % 2 for p in segment)


class TestSieveConfig:

    def test_rejects_tiny_segments(self):
        with pytest.raises(ValueError):
            SieveConfig(segment_size=10)

    def test_rejects_limit_below_two(self):
        with pytest.raises(ValueError):
            SieveConfig(limit=1)


class TestNextBlock:

    def test_blocks_are_indexed_consecutively(self):
        sieve_config = SieveConfig(segment_size=1024)
        cursor = SieveCursor()
        first = next_block(sieve_config, cursor)
        second = next_block(sieve_config, cursor)

        assert first.first_index == 1
        assert first.primes[:10] == FIRST_TEN
        assert second.first_index == first.last_index + 1
        assert second.primes[0] > first.primes[-1]
        assert cursor.next_index == second.last_index + 1

    def test_limit_exhausts_the_range(self):
        sieve_config = SieveConfig(segment_size=1024, limit=100)
        cursor = SieveCursor()
        block = next_block(sieve_config, cursor)
        assert len(block) == 25
        assert block.primes[-1] == 97
        with pytest.raises(ExhaustedRange):
            next_block(sieve_config, cursor)

    def test_cursor_after_a_prime(self):
        cursor = SieveCursor.after(10, 29)
        assert (cursor.low, cursor.next_index) == (30, 11)
        assert SieveCursor.after(0, 0) == SieveCursor()


class TestPrimeStream:

    def test_first_primes(self, make_stream):
        stream = make_stream()
        primes = [state.p_n for state in stream.states(11)]
        assert primes[:10] == FIRST_TEN
        assert primes[10] == 31
        assert stream.state.n == 11

    def test_stops_exactly_at_n_max_and_continues(self, make_stream):
        stream = make_stream()
        stream.advance_to(100)
        assert stream.state.p_n == 541
        stream.advance_to(101)
        assert stream.state.p_n == 547

    @pytest.mark.parametrize("workers", [1, 3])
    def test_break_mid_block_keeps_the_partition(self, make_stream, workers):
        stream = make_stream(workers=workers)
        for state in stream.states():
            if state.n == 5:
                break
        assert stream.cursor == SieveCursor(low=12, next_index=6)
        assert stream.advance_to(6).p_n == 13
        assert [state.p_n for state in stream.states(9)] == [17, 19, 23]

    def test_error_in_caller_keeps_the_partition(self, make_stream):
        stream = make_stream()
        with pytest.raises(RuntimeError):
            for state in stream.states():
                if state.n == 4:
                    raise RuntimeError("stop")
        assert [state.p_n for state in stream.states(7)] == [11, 13, 17]

    def test_resume_from_state(self, make_stream):
        start = make_stream()
        start.advance_to(10)
        resumed = make_stream(state=start.state.copy())
        assert [state.p_n for state in resumed.states(13)] == [31, 37, 41]

    def test_limit_ends_the_stream(self, make_stream):
        stream = make_stream(limit=100)
        assert sum(1 for _ in stream.states()) == 25
        with pytest.raises(ExhaustedRange):
            make_stream(limit=100).advance_to(26)

    @pytest.mark.parametrize("workers", [2, 3, 4])
    def test_worker_count_does_not_change_the_primes(self, make_stream, workers):
        serial = [state.p_n for state in make_stream().states(3000)]
        parallel = [state.p_n for state in make_stream(workers=workers).states(3000)]
        assert parallel == serial

    def test_prime_count_to_a_million(self, make_stream):
        stream = make_stream(segment_size=65536, limit=10**6)
        for _ in stream.states():
            pass
        assert stream.state.n == 78498
        assert stream.state.p_n == 999983
