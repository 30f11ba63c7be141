import re
import math

from errors import DomainError

# 1000000, 1_000_000, 1e6, 10**6, 10^6
_COUNT_PATTERNS = [
    (re.compile(r"^\d+$"), lambda m: int(m.group(0))),
    (re.compile(r"^(\d+)(?:e|E)(\d+)$"), lambda m: int(m.group(1)) * 10 ** int(m.group(2))),
    (re.compile(r"^(\d+)(?:\*\*|\^)(\d+)$"), lambda m: int(m.group(1)) ** int(m.group(2))),
]


def parse_count(text):
    """
    Parse a non-negative integer written plainly or as a power.

    Args:
        text (str): e.g. '1000000', '1_000_000', '1e6', '10**6' or '10^6'

    Returns:
        int: The parsed count
    """
    text = str(text).strip().replace("_", "")
    for pattern, convert in _COUNT_PATTERNS:
        match = pattern.match(text)
        if match:
            return convert(match)
    raise ValueError(f"not a count: {text!r}")


def validate_run_config(run_config, commands):
    """
    Check a RunConfig before any work starts.

    Args:
        run_config: The RunConfig to check
        commands: Names of the registered commands

    Raises:
        DomainError: The first violated constraint
    """
    if run_config.command not in commands:
        raise DomainError(f"unknown command {run_config.command!r}; expected one of {sorted(commands)}")
    if run_config.n_max is not None and run_config.n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {run_config.n_max}")
    if run_config.stride < 1:
        raise DomainError(f"stride must be >= 1, got {run_config.stride}")
    if run_config.output_format not in ("csv", "json"):
        raise DomainError(f"output format must be csv or json, got {run_config.output_format!r}")
    if run_config.emit_plot and run_config.output_format != "csv":
        raise DomainError("plot scripts read CSV reports; use --format csv with --plot")
    if run_config.precision_backend not in ("standard", "extended"):
        raise DomainError(f"precision backend must be standard or extended, got {run_config.precision_backend!r}")
    if run_config.workers < 1:
        raise DomainError(f"workers must be >= 1, got {run_config.workers}")
    return True


def parse_real(text):
    """
    Parse a real abscissa. 'e' stands for Euler's number.

    Args:
        text (str): e.g. '100', '1e6', 'e'

    Returns:
        float: The parsed value
    """
    text = str(text).strip().replace("_", "")
    if text.lower() == "e":
        return math.e
    return float(text)
