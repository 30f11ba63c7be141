"""Exceptions raised by the toolkit and the exit codes they map to."""

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_IO = 3


class NicolasError(Exception):
    """Base class for all toolkit errors."""

    exit_code = EXIT_DOMAIN


class DomainError(NicolasError, ValueError):
    """An argument lies outside the domain of the requested function."""


class NonConvergenceError(NicolasError):
    """An iterative solver ran out of iterations."""


class BracketError(NicolasError, ValueError):
    """A root bracket does not show a sign change."""


class IndexGapError(NicolasError):
    """A prime block does not continue the accumulator state."""


class ExhaustedRange(NicolasError):
    """The sieve reached its configured limit. Signals normal termination."""


class UnknownCommandError(NicolasError, KeyError):
    """No command is registered under the requested name."""


class CheckpointError(NicolasError):
    exit_code = EXIT_IO


class CheckpointVersionError(CheckpointError):
    pass


class CorruptCheckpointError(CheckpointError):
    pass


class ReportError(NicolasError):
    exit_code = EXIT_IO


def exit_code_for(error):
    """Map an exception to the process exit status.

    Args:
        error: The exception that ended a command

    Returns:
        int: 2 for domain-type errors, 3 for I/O-type errors
    """
    if isinstance(error, NicolasError):
        return error.exit_code
    if isinstance(error, OSError):
        return EXIT_IO
    return EXIT_DOMAIN
