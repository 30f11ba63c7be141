import pytest

from engine.sieve import SieveConfig
from engine.stream import PrimeStream
from runner import SweepRunner
from commands import EXTENSIONS


def _trial_division_primes(limit):
    primes = []
    for n in range(2, limit + 1):
        if all(n % p for p in primes if p * p <= n):
            primes.append(n)
    return primes


@pytest.fixture
def trial_division():
    return _trial_division_primes


@pytest.fixture
def make_stream():
    """Factory for prime streams with a small segment size."""
    def factory(segment_size=1024, workers=1, limit=None, state=None):
        return PrimeStream(SieveConfig(segment_size=segment_size, limit=limit), workers=workers, state=state)
    return factory


@pytest.fixture
def runner(tmp_path):
    """SweepRunner writing into a temporary directory, all commands loaded."""
    sweep_runner = SweepRunner(output_dir=str(tmp_path / "reports"), checkpoint_dir=str(tmp_path / "checkpoints"))
    for name in EXTENSIONS:
        sweep_runner.load_extension(name)
    return sweep_runner
