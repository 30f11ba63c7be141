import os
import csv
import json
import math
import logging

import config
from errors import ReportError
from utils.formatters import format_cell

FORMATS = ("csv", "json")


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


class ReportWriter:
    """Writes command reports as CSV or JSON."""

    def __init__(self, output_dir=config.OUTPUT_DIR):
        """Initialize the report writer.

        Args:
            output_dir: Directory for reports without an explicit path
        """
        self.output_dir = output_dir

    def resolve(self, command, output_format, output_path=None):
        """Get the path of a command's report."""
        if output_path:
            return output_path
        return os.path.join(self.output_dir, f"{command}.{output_format}")

    def write(self, path, columns, rows, output_format="csv", meta=None):
        """Write a report atomically.

        Rows may be a generator; CSV output streams it.

        Args:
            path: Destination file
            columns: Column names, in order
            rows: Iterable of tuples matching columns
            output_format: 'csv' or 'json'
            meta: Callable returning extra JSON fields, evaluated after the rows

        Returns:
            int: Number of rows written
        """
        if output_format not in FORMATS:
            raise ReportError(f"unknown output format {output_format!r}; expected one of {FORMATS}")
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)

        # Create a temporary file first
        temp_path = path + ".tmp"
        try:
            with open(temp_path, "w", encoding="utf-8", newline="") as f:
                if output_format == "csv":
                    count = self._write_csv(f, columns, rows)
                else:
                    count = self._write_json(f, columns, rows, meta)
            os.replace(temp_path, path)
        except Exception:
            if os.path.exists(temp_path):
                try:
                    os.remove(temp_path)
                except OSError:
                    pass
            raise
        logging.info(f"Wrote {count} rows to {path}")
        return count

    @staticmethod
    def _write_csv(f, columns, rows):
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        count = 0
        for row in rows:
            if len(row) != len(columns):
                raise ReportError(f"row has {len(row)} fields, header has {len(columns)}")
            writer.writerow([format_cell(value) for value in row])
            count += 1
        return count

    @staticmethod
    def _write_json(f, columns, rows, meta):
        records = []
        for row in rows:
            if len(row) != len(columns):
                raise ReportError(f"row has {len(row)} fields, header has {len(columns)}")
            records.append(dict(zip(columns, (_json_value(v) for v in row))))
        document = {"columns": list(columns), "rows": records}
        if meta is not None:
            document.update(_json_value(meta()))
        json.dump(document, f, indent=2, ensure_ascii=False)
        f.write("\n")
        return len(records)


def read_csv_header(path):
    """Column names of a CSV report."""
    with open(path, "r", encoding="utf-8", newline="") as f:
        return next(csv.reader(f), [])
