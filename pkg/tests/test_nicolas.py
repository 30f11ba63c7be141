"""Tests for Nicolas margin records and sweeps."""

import pytest

from verifier.nicolas import SweepSummary, nicolas_record, nicolas_sweep


class TestNicolasRecord:

    def test_first_prime(self, make_stream):
        record = nicolas_record(make_stream().advance_to(1))
        assert record.lhs == pytest.approx(-0.1832565, abs=1e-6)
        assert record.margin == pytest.approx(0.7447160, abs=1e-6)
        assert record.ratio_form_margin is None
        assert record.q > 0

    def test_second_prime(self, make_stream):
        record = nicolas_record(make_stream().advance_to(2))
        assert record.margin == pytest.approx(0.3670598, abs=1e-6)
        assert record.ratio_form_margin == pytest.approx(1.060625, abs=1e-5)

    def test_tenth_prime(self, make_stream):
        record = nicolas_record(make_stream().advance_to(10))
        assert (record.n, record.p_n) == (10, 29)
        assert record.margin == pytest.approx(0.0690551, abs=1e-5)
        assert record.q == pytest.approx(12.388, abs=2e-3)


class TestNicolasSweep:

    def test_no_violations(self, make_stream):
        sweep = nicolas_sweep(make_stream(), 2000, 100)
        records = list(sweep)
        summary = sweep.summary

        assert (summary.n_first, summary.n_last) == (1, 2000)
        assert summary.nonpositive_margins == 0
        assert summary.sign_mismatches == 0
        assert summary.ratio_form_mismatches == 0
        assert summary.records_emitted == len(records)
        assert all(record.margin > 0 and record.q > 0 for record in records)

    def test_emits_strides_and_new_minima(self, make_stream):
        records = list(nicolas_sweep(make_stream(), 1000, 100))
        indices = [record.n for record in records]
        assert indices == sorted(indices)
        assert all(n in indices for n in range(100, 1001, 100))

        running = float("inf")
        for record in records:
            if record.n % 100:
                assert record.margin < running
            running = min(running, record.margin)

    def test_summary_tracks_the_minimum(self, make_stream):
        sweep = nicolas_sweep(make_stream(), 500, 1)
        records = list(sweep)
        smallest = min(records, key=lambda record: record.margin)
        assert sweep.summary.min_margin == smallest.margin
        assert sweep.summary.min_margin_n == smallest.n

    def test_resumed_sweep_matches_one_shot(self, make_stream):
        one_shot = [record.as_row() for record in nicolas_sweep(make_stream(), 1000, 50)]

        stream = make_stream()
        first = nicolas_sweep(stream, 400, 50)
        rows = [record.as_row() for record in first]
        summary = SweepSummary.from_annotations(first.summary.annotations())
        resumed = make_stream(state=stream.state.copy())
        rows += [record.as_row() for record in nicolas_sweep(resumed, 1000, 50, summary=summary)]

        assert rows == one_shot

    def test_rejects_bad_arguments(self, make_stream):
        with pytest.raises(ValueError):
            nicolas_sweep(make_stream(), 0, 1)
        with pytest.raises(ValueError):
            nicolas_sweep(make_stream(), 10, 0)

    @pytest.mark.slow
    def test_million_primes(self, make_stream):
        sweep = nicolas_sweep(make_stream(segment_size=1 << 18), 10**6, 10**5)
        for _ in sweep:
            pass
        assert sweep.summary.n_last == 10**6
        assert sweep.summary.nonpositive_margins == 0
        assert sweep.summary.sign_mismatches == 0
        assert sweep.summary.min_margin > 0
