from dataclasses import asdict

from commands.command_base import CommandGroup, CommandResult, command
from engine.checkpoint import save_checkpoint
from verifier.nicolas import COLUMNS as SWEEP_COLUMNS
from verifier.nicolas import SweepSummary, nicolas_sweep
from verifier.primes import (
    MERTENS_COLUMNS,
    PNT_COLUMNS,
    QSEQ_COLUMNS,
    decade_indices,
    mertens_sweep,
    pnt_ratio_sweep,
    q_sequence,
)

DEFAULT_SWEEP_N_MAX = 1000
DEFAULT_PNT_N_MAX = 10**6
DEFAULT_Q_INDICES = (10, 100)


class Sweeps(CommandGroup):
    """Commands that walk the prime stream."""

    @command("sweep", "Nicolas margin sweep with running minimum")
    def sweep(self, run_config):
        checkpoint, summary = None, None
        if run_config.resume_path:
            checkpoint = self.runner.checkpoints.load(run_config.resume_path)
            summary = SweepSummary.from_annotations(checkpoint.annotations)

        stream = self.open_stream(run_config, start_checkpoint=checkpoint)
        n_max = run_config.n_max or DEFAULT_SWEEP_N_MAX
        sweep = nicolas_sweep(stream, n_max, run_config.stride, summary=summary)

        def save():
            if run_config.checkpoint_path:
                checkpoint = save_checkpoint(stream.state, sweep.summary.annotations())
                self.runner.checkpoints.save(run_config.checkpoint_path, checkpoint)

        def summary_line():
            s = sweep.summary
            line = f"min margin {s.min_margin!r} at n={s.min_margin_n}"
            if s.n_first:
                line += f"; swept n={s.n_first}..{s.n_last}"
            if s.nonpositive_margins or s.sign_mismatches or s.ratio_form_mismatches:
                line += (
                    f"; {s.nonpositive_margins} non-positive margins, {s.sign_mismatches} sign-law "
                    f"mismatches, {s.ratio_form_mismatches} ratio-form mismatches"
                )
            else:
                line += "; margin > 0 and q > 0 at every index"
            return line

        return CommandResult(
            columns=SWEEP_COLUMNS,
            rows=(record.as_row() for record in sweep),
            summary=summary_line,
            meta=lambda: {"summary": asdict(sweep.summary)},
            on_complete=save,
        )

    @command("qseq", "q offsets at chosen prime indices")
    def qseq(self, run_config):
        indices = run_config.n_values or list(DEFAULT_Q_INDICES)
        rows = q_sequence(self.open_stream(run_config), indices)
        return CommandResult(
            columns=QSEQ_COLUMNS,
            rows=[row.as_row() for row in rows],
            summary=", ".join(f"q(n={row.n})={row.q:.6f}" for row in rows),
        )

    @command("pnt", "theta(p_n)/p_n over decades")
    def pnt(self, run_config):
        n_max = run_config.n_max or DEFAULT_PNT_N_MAX
        report = pnt_ratio_sweep(self.open_stream(run_config), decade_indices(n_max))
        return CommandResult(
            columns=PNT_COLUMNS,
            rows=[row.as_row() for row in report.rows],
            summary=(
                f"theta/p_n={report.last_ratio!r} at n={n_max}; "
                f"max |ratio - 1| over top decade {report.max_top_decade_deviation!r}"
            ),
            meta=lambda: {
                "last_ratio": report.last_ratio,
                "max_top_decade_deviation": report.max_top_decade_deviation,
            },
        )

    @command("mertens", "log(p_n) prod(1 - 1/p) against e^-gamma")
    def mertens(self, run_config):
        n_max = run_config.n_max or DEFAULT_PNT_N_MAX
        rows = mertens_sweep(self.open_stream(run_config), decade_indices(n_max))
        last = rows[-1]
        return CommandResult(
            columns=MERTENS_COLUMNS,
            rows=[row.as_row() for row in rows],
            summary=f"log(p_n) prod(1-1/p)={last.log_p_product!r} at n={last.n}, gap to e^-gamma {last.gap!r}",
        )


def setup(runner):
    runner.add_command_group(Sweeps(runner))
