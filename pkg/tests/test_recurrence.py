"""Tests for the two-path q recurrence check."""

import pytest

from errors import DomainError
from verifier.recurrence import recurrence_check, recurrence_check_sweep


class TestRecurrenceCheck:

    def test_single_step(self, make_stream):
        stream = make_stream()
        state_u = stream.advance_to(10).copy()
        row = recurrence_check(state_u, stream.advance_to(11))
        assert row.u == 10
        assert row.direct_q_next == pytest.approx(13.354, abs=5e-3)
        assert abs(row.residual_literal) < 1e-9 * row.scale
        assert abs(row.residual_paths) < 1e-9 * row.scale

    def test_sweep(self, make_stream):
        report = recurrence_check_sweep(make_stream(), 2, 300)
        assert [row.u for row in report.rows] == list(range(2, 301))
        assert report.max_rel_residual_literal < 1e-9
        assert report.max_rel_residual_paths < 1e-9

    def test_stream_already_at_u_min(self, make_stream):
        stream = make_stream()
        stream.advance_to(5)
        report = recurrence_check_sweep(stream, 5, 20)
        assert report.rows[0].u == 5
        assert report.rows[-1].u == 20

    def test_extended_backend(self, make_stream):
        report = recurrence_check_sweep(make_stream(), 2, 50, backend="extended")
        assert report.max_rel_residual_literal < 1e-9

    def test_invalid_range(self, make_stream):
        with pytest.raises(DomainError):
            recurrence_check_sweep(make_stream(), 1, 10)
        with pytest.raises(DomainError):
            recurrence_check_sweep(make_stream(), 10, 5)

    @pytest.mark.slow
    def test_ten_thousand(self, make_stream):
        report = recurrence_check_sweep(make_stream(), 2, 10**4)
        assert len(report.rows) == 10**4 - 1
        assert report.max_rel_residual_literal < 1e-9
        assert report.max_rel_residual_paths < 1e-9
