import sys
import logging

import config
from analytic.constants import check_constants
from runner import SweepRunner
from runner.cli import parse_run_config
from commands import EXTENSIONS


def configure_logging(level):
    # Summary lines go to stdout, logs to stderr and the log file
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(config.LOG_FILE),
            logging.StreamHandler(sys.stderr)
        ]
    )


def main(argv=None):
    run_config, log_level = parse_run_config(argv)
    configure_logging(log_level)

    check_constants()

    runner = SweepRunner()

    # Load command groups
    for name in EXTENSIONS:
        runner.load_extension(name)

    return runner.run(run_config)


if __name__ == "__main__":
    sys.exit(main())
