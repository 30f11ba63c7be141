import math

from commands.command_base import CommandGroup, CommandResult, command
from verifier.crossover import COLUMNS as CROSSOVER_COLUMNS
from verifier.crossover import crossover_report
from verifier.primes import GAP_COLUMNS, synth_gap_compare
from verifier.recurrence import COLUMNS as RECURRENCE_COLUMNS
from verifier.recurrence import recurrence_check_sweep
from verifier.residuals import COLUMNS as RESIDUAL_COLUMNS
from verifier.residuals import LEMMA_IDS, geometric_grid, lemma_residuals

DEFAULT_GAP_CUTOFFS = (1e3, 1e4, 1e5, 1e6)


class Diagnostics(CommandGroup):
    """Residual, crossover, recurrence and gap diagnostics."""

    @command("diagnostics", "Limit residuals on a geometric grid")
    def diagnostics(self, run_config):
        lo = run_config.lo if run_config.lo is not None else 10.0
        hi = run_config.hi if run_config.hi is not None else 1e8
        grid = geometric_grid(lo, hi, run_config.per_decade)
        report = lemma_residuals(grid, run_config.lemmas, backend=run_config.precision_backend)

        def summary_line():
            parts = []
            for lemma_id in LEMMA_IDS:
                samples = report.by_lemma(lemma_id)
                if samples:
                    parts.append(f"{lemma_id}({samples[-1].x:g})={samples[-1].residual:.3e}")
            line = ", ".join(parts)
            if report.missing:
                line += f"; {len(report.missing)} missing samples"
            return line

        return CommandResult(
            columns=RESIDUAL_COLUMNS,
            rows=[sample.as_row() for sample in report.samples],
            summary=summary_line,
            meta=lambda: {
                "missing": [{"lemma_id": l, "x": x, "reason": r} for l, x, r in report.missing],
            },
        )

    @command("crossover", "Locate the sign change of f(x) - x - log x")
    def crossover(self, run_config):
        lo = run_config.lo if run_config.lo is not None else math.e
        hi = run_config.hi if run_config.hi is not None else 100.0
        result = crossover_report(
            lo, hi, run_config.tol, run_config.certify_upto, backend=run_config.precision_backend
        )
        verdict = "negative" if result.all_negative else "NOT negative"
        return CommandResult(
            columns=CROSSOVER_COLUMNS,
            rows=result.rows(),
            summary=(
                f"x* = {result.x_star:.7f} (E4(x*)={result.e4_at_x_star:.2e}); E4 {verdict} at all "
                f"{len(result.certificate)} sampled points up to {run_config.certify_upto:g}"
            ),
            meta=lambda: {
                "x_star": result.x_star,
                "e4_at_x_star": result.e4_at_x_star,
                "tol": result.tol,
                "iterations": result.iterations,
                "all_negative": result.all_negative,
            },
        )

    @command("recurrence", "Check the q recurrence by two evaluation paths")
    def recurrence(self, run_config):
        report = recurrence_check_sweep(
            self.open_stream(run_config),
            run_config.u_min,
            run_config.u_max,
            backend=run_config.precision_backend,
        )
        return CommandResult(
            columns=RECURRENCE_COLUMNS,
            rows=[row.as_row() for row in report.rows],
            summary=(
                f"u={run_config.u_min}..{run_config.u_max}: max |direct - literal| "
                f"{report.max_abs_residual_literal:.3e} (relative {report.max_rel_residual_literal:.3e}), "
                f"max |literal - simplified| {report.max_abs_residual_paths:.3e} "
                f"(relative {report.max_rel_residual_paths:.3e})"
            ),
            meta=lambda: {
                "max_abs_residual_literal": report.max_abs_residual_literal,
                "max_abs_residual_paths": report.max_abs_residual_paths,
                "max_rel_residual_literal": report.max_rel_residual_literal,
                "max_rel_residual_paths": report.max_rel_residual_paths,
            },
        )

    @command("gaps", "Mean prime gap against f(x) - x")
    def gaps(self, run_config):
        cutoffs = run_config.x_values or list(DEFAULT_GAP_CUTOFFS)
        comparisons = synth_gap_compare(
            cutoffs,
            iterations=run_config.iterations,
            backend=run_config.precision_backend,
            segment_size=run_config.segment_size,
        )
        return CommandResult(
            columns=GAP_COLUMNS,
            rows=[c.as_row() for c in comparisons],
            summary=", ".join(f"ratio({c.x:g})={c.ratio:.4f}" for c in comparisons),
            meta=lambda: {
                "details": [
                    {
                        "x": c.x,
                        "prime_count": c.prime_count,
                        "largest_prime": c.largest_prime,
                        "prime_span": c.prime_span,
                        "iterates": c.iterates,
                        "iterate_span": c.iterate_span,
                    }
                    for c in comparisons
                ],
            },
        )


def setup(runner):
    runner.add_command_group(Diagnostics(runner))
