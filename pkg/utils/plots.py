import os
import csv
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from errors import ReportError
from utils.reports import read_csv_header


@dataclass(frozen=True)
class PlotSpec:
    x: str
    ys: Tuple[str, ...]
    title: str
    logx: bool = True
    group_by: Optional[str] = None


PLOT_SPECS = {
    "sweep": PlotSpec("n", ("margin",), "Nicolas margin e^-gamma - log(theta) prod(1-1/p)"),
    "qseq": PlotSpec("n", ("q", "q_pi_reading"), "q offset, both index readings"),
    "fsolve": PlotSpec("x", ("residual",), "f-solver residual"),
    "diagnostics": PlotSpec("x", ("residual",), "Limit residuals", group_by="lemma_id"),
    "crossover": PlotSpec("x", ("e4",), "f(x) - x - log x above the crossover"),
    "recurrence": PlotSpec("u", ("res_literal", "res_paths"), "q recurrence residuals"),
    "pnt": PlotSpec("n", ("ratio",), "theta(p_n) / p_n"),
    "gaps": PlotSpec("x", ("ratio",), "mean prime gap / (f(x) - x)"),
    "mertens": PlotSpec("n", ("gap",), "e^-gamma - log(p_n) prod(1-1/p)"),
}


def _quote(text):
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _group_values(report_path, column):
    values = []
    with open(report_path, "r", encoding="utf-8", newline="") as f:
        for row in csv.DictReader(f):
            value = row.get(column)
            if value and value not in values:
                values.append(value)
    return values


def render_plot_script(report_path, command, spec, groups=None):
    """Gnuplot script text plotting the chosen columns of a CSV report."""
    data = os.path.basename(report_path)
    image = os.path.splitext(data)[0] + ".png"
    lines = [
        f"# {command} report: {data}",
        "set terminal pngcairo size 1000,700",
        f"set output {_quote(image)}",
        'set datafile separator ","',
        "set key autotitle columnhead",
        "set key outside right",
        "set grid",
        f"set title {_quote(spec.title)}",
        f"set xlabel {_quote(spec.x)}",
        f"set ylabel {_quote(', '.join(spec.ys))}",
    ]
    if spec.logx:
        lines.append("set logscale x")

    if spec.group_by:
        y = spec.ys[0]
        lines.append(f"groups = {_quote(' '.join(groups or []))}")
        lines.append(
            f"plot for [g in groups] {_quote(data)} using {_quote(spec.x)}:"
            f"(strcol({_quote(spec.group_by)}) eq g ? column({_quote(y)}) : 1/0) "
            f"with linespoints title g"
        )
    else:
        curves = [
            f"{_quote(data)} using {_quote(spec.x)}:{_quote(y)} with linespoints title {_quote(y)}"
            for y in spec.ys
        ]
        lines.append("plot " + ", \\\n     ".join(curves))
    return "\n".join(lines) + "\n"


def emit_plot_script(report_path, command, script_path=None):
    """Write a gnuplot script next to a CSV report.

    Args:
        report_path: Existing CSV report
        command: Command that produced the report
        script_path: Destination, <report>.gp when omitted

    Returns:
        str: Path of the script

    Raises:
        ReportError: Unknown command, missing report, or columns absent from it
    """
    spec = PLOT_SPECS.get(command)
    if spec is None:
        raise ReportError(f"no plot layout for command {command!r}")
    if not os.path.isfile(report_path):
        raise ReportError(f"report {report_path} does not exist")

    header = read_csv_header(report_path)
    needed = [spec.x, *spec.ys] + ([spec.group_by] if spec.group_by else [])
    absent = [column for column in needed if column not in header]
    if absent:
        raise ReportError(f"report {report_path} lacks columns {absent}")

    groups = _group_values(report_path, spec.group_by) if spec.group_by else None
    script = render_plot_script(report_path, command, spec, groups)
    script_path = script_path or os.path.splitext(report_path)[0] + ".gp"
    with open(script_path, "w", encoding="utf-8") as f:
        f.write(script)
    logging.info(f"Wrote plot script {script_path}")
    return script_path
