from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Tuple, Union

from engine.sieve import SieveConfig
from engine.stream import PrimeStream


@dataclass
class CommandResult:
    """What a command hands back to the runner.

    rows may be a generator; summary and meta may be callables, which the
    runner evaluates only after every row has been written.
    """
    columns: Tuple[str, ...]
    rows: Iterable[tuple]
    summary: Union[str, Callable[[], str]] = ""
    meta: Optional[Callable[[], dict]] = None
    on_complete: Optional[Callable[[], Any]] = field(default=None, repr=False)


def command(name, description):
    """Mark a CommandGroup method as the handler of a command."""
    def decorator(func):
        func.__command__ = (name, description)
        return func
    return decorator


class CommandGroup:
    """Base class for all command groups."""

    def __init__(self, runner):
        self.runner = runner

    def get_commands(self):
        for attr in dir(type(self)):
            func = getattr(type(self), attr)
            spec = getattr(func, "__command__", None)
            if spec:
                yield spec[0], spec[1], getattr(self, attr)

    def open_stream(self, run_config, limit=None, start_checkpoint=None):
        sieve_config = SieveConfig(
            segment_size=run_config.segment_size,
            limit=limit,
            start_checkpoint=start_checkpoint,
        )
        return PrimeStream(sieve_config, workers=run_config.workers)
