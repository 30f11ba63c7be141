"""Tests for the E4 sign-change search."""

import math

import pytest

from errors import BracketError, DomainError
from verifier.crossover import crossover_report, e4, gym_crossover_search, sign_certificate


class TestCrossoverSearch:

    def test_default_bracket(self):
        x_star = gym_crossover_search()
        assert 6.5 < x_star < 7.0
        assert e4(x_star - 1e-5) > 0 > e4(x_star + 1e-5)

    def test_tolerance(self):
        coarse = gym_crossover_search(tol=1e-2)
        fine = gym_crossover_search(tol=1e-8)
        assert abs(coarse - fine) < 1e-2

    def test_no_sign_change(self):
        with pytest.raises(BracketError):
            gym_crossover_search(10.0, 100.0)

    def test_invalid_bracket(self):
        with pytest.raises(DomainError):
            gym_crossover_search(0.5, 10.0)
        with pytest.raises(DomainError):
            gym_crossover_search(tol=0)


class TestCrossoverReport:

    def test_certificate_is_negative(self):
        result = crossover_report(certify_upto=1e4)
        assert result.all_negative
        assert result.iterations == math.ceil(math.log2((100 - math.e) / 1e-6))
        assert all(x > result.x_star and value < 0 for x, value in result.certificate)
        assert max(x for x, _ in result.certificate) <= 1e4

    def test_certificate_includes_powers_of_ten(self):
        xs = [x for x, _ in sign_certificate(6.8, upto=1e5)]
        for decade in (10.0, 100.0, 1e3, 1e4, 1e5):
            assert decade in xs
        assert xs == sorted(xs)

    def test_negative_at_every_decade_to_a_million(self):
        result = crossover_report(certify_upto=1e6)
        assert result.all_negative
        values = dict(result.certificate)
        for decade in (10.0, 100.0, 1e3, 1e4, 1e5, 1e6):
            assert values[decade] < 0
