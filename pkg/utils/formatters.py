import math

import config


def format_float(value, digits=config.FLOAT_DIGITS):
    """
    Format a float with a fixed count of significant digits.

    17 digits round-trip every IEEE double, so a report can be read back
    bit-exactly.

    Args:
        value (float): The value to format
        digits (int): Significant digits

    Returns:
        str: The formatted value; 'nan', 'inf' and '-inf' for non-finite input
    """
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.{digits - 1}e}"


def format_cell(value):
    """Format one report cell: ints as is, floats at 17 digits, None as empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def format_duration(seconds: float) -> str:
    """
    Format an elapsed time for log messages.

    Args:
        seconds (float): Duration in seconds

    Returns:
        str: Formatted duration string (HH:MM:SS.mmm or MM:SS.mmm)
    """
    millis = int(round(seconds * 1000))
    seconds, millis = divmod(millis, 1000)
    minutes, seconds = divmod(seconds, 60)
    hours, minutes = divmod(minutes, 60)

    if hours > 0:
        return f"{hours:02d}:{minutes:02d}:{seconds:02d}.{millis:03d}"
    else:
        return f"{minutes:02d}:{seconds:02d}.{millis:03d}"
