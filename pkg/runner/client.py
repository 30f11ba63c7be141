import time
import logging
import importlib

import config
from errors import EXIT_OK, NicolasError, UnknownCommandError, exit_code_for
from utils import format_duration, validate_run_config
from utils.checkpoints import CheckpointManager
from utils.plots import emit_plot_script
from utils.reports import ReportWriter


class SweepRunner:
    def __init__(self, output_dir=None, checkpoint_dir=None):
        # Command registry
        self.commands = {}

        # Persistence
        self.reports = ReportWriter(output_dir or config.OUTPUT_DIR)
        self.checkpoints = CheckpointManager(checkpoint_dir or config.CHECKPOINT_DIR)

    def load_extension(self, name):
        """Import a command module and let its setup() register its group."""
        module = importlib.import_module(name)
        module.setup(self)
        logging.debug(f"Loaded extension {name}")

    def add_command_group(self, group):
        for name, _description, handler in group.get_commands():
            if name in self.commands:
                raise ValueError(f"command {name!r} registered twice")
            self.commands[name] = handler

    def execute(self, run_config):
        """Run one command and write its report.

        Returns:
            tuple: (report path, summary line)

        Raises:
            UnknownCommandError: No command has that name
        """
        handler = self.commands.get(run_config.command)
        if handler is None:
            raise UnknownCommandError(run_config.command)
        validate_run_config(run_config, self.commands)

        started = time.perf_counter()
        logging.info(f"Running {run_config.command}")
        result = handler(run_config)

        path = self.reports.resolve(run_config.command, run_config.output_format, run_config.output_path)
        self.reports.write(path, result.columns, result.rows, run_config.output_format, meta=result.meta)
        if result.on_complete is not None:
            result.on_complete()
        if run_config.emit_plot:
            emit_plot_script(path, run_config.command)

        summary = result.summary() if callable(result.summary) else result.summary
        logging.info(f"{run_config.command} finished in {format_duration(time.perf_counter() - started)}")
        return path, summary

    def run(self, run_config):
        """Execute a command, print its summary line and return the exit status.

        Returns:
            int: 0 on success, 2 on domain errors, 3 on I/O errors
        """
        try:
            path, summary = self.execute(run_config)
        except (NicolasError, OSError, ValueError, ArithmeticError) as e:
            logging.error(f"{run_config.command} failed ({type(e).__name__}): {e}")
            return exit_code_for(e)
        print(f"{run_config.command}: {summary} [{path}]")
        return EXIT_OK
