import argparse

import config
from analytic.precision import BACKENDS
from runner.run_config import RunConfig
from utils.reports import FORMATS
from utils.validators import parse_count, parse_real
from verifier.residuals import LEMMA_IDS


def _add_sieve_options(parser):
    parser.add_argument("--segment-size", type=parse_count, default=config.SEGMENT_SIZE)
    parser.add_argument("--workers", type=int, default=config.SIEVE_WORKERS)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="main.py",
        description="Numerical checks of Nicolas' prime-product inequality and its auxiliary functions",
    )
    ap.add_argument("--output", dest="output_path", default=None, help="report path (default <output dir>/<command>.<format>)")
    ap.add_argument("--format", dest="output_format", choices=FORMATS, default="csv")
    ap.add_argument("--plot", dest="emit_plot", action="store_true", help="also write a gnuplot script next to the report")
    ap.add_argument("--precision", dest="precision_backend", choices=BACKENDS, default="standard")
    ap.add_argument("--log-level", default=config.LOG_LEVEL)

    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("sweep", help="Nicolas margin sweep with running minimum")
    p.add_argument("--n-max", type=parse_count, default=1000)
    p.add_argument(
        "--stride", type=parse_count, default=1,
        help="also emit every stride-th index; new running minima are always emitted, and the margin falls at "
             "nearly every index, so most rows come from minima",
    )
    p.add_argument("--checkpoint", dest="checkpoint_path", default=None)
    p.add_argument("--resume", dest="resume_path", default=None)
    _add_sieve_options(p)

    p = sub.add_parser("qseq", help="q offsets at chosen prime indices")
    p.add_argument("--n", dest="n_values", type=parse_count, nargs="+", default=[])
    _add_sieve_options(p)

    p = sub.add_parser("fsolve", help="Solve for f(x) and report h(x) and b_x")
    p.add_argument("--x", dest="x_values", type=parse_real, nargs="+", default=[])

    p = sub.add_parser("diagnostics", help="Limit residuals on a geometric grid")
    p.add_argument("--lemmas", nargs="+", choices=LEMMA_IDS, default=None)
    p.add_argument("--lo", type=parse_real, default=10.0)
    p.add_argument("--hi", type=parse_real, default=1e8)
    p.add_argument("--per-decade", type=int, default=1)

    p = sub.add_parser("crossover", help="Locate the sign change of f(x) - x - log x")
    p.add_argument("--lo", type=parse_real, default=None)
    p.add_argument("--hi", type=parse_real, default=100.0)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--certify-upto", type=parse_real, default=1e6)

    p = sub.add_parser("recurrence", help="Check the q recurrence by two evaluation paths")
    p.add_argument("--u-min", type=parse_count, default=2)
    p.add_argument("--u-max", type=parse_count, default=10**4)
    _add_sieve_options(p)

    p = sub.add_parser("pnt", help="theta(p_n)/p_n over decades")
    p.add_argument("--n-max", type=parse_count, default=10**6)
    _add_sieve_options(p)

    p = sub.add_parser("gaps", help="Mean prime gap against f(x) - x")
    p.add_argument("--x", dest="x_values", type=parse_real, nargs="+", default=[])
    p.add_argument("--iterations", type=int, default=3)
    _add_sieve_options(p)

    p = sub.add_parser("mertens", help="log(p_n) prod(1 - 1/p) against e^-gamma")
    p.add_argument("--n-max", type=parse_count, default=10**6)
    _add_sieve_options(p)

    return ap


def parse_run_config(argv=None):
    """Parse command-line arguments.

    Returns:
        tuple: (RunConfig, log level name)
    """
    args = vars(build_parser().parse_args(argv))
    log_level = args.pop("log_level")
    fields = set(RunConfig.__dataclass_fields__)
    return RunConfig(**{k: v for k, v in args.items() if k in fields}), log_level
