from .formatters import format_float, format_cell, format_duration
from .validators import parse_count, parse_real, validate_run_config
from .handoff import BlockQueue
