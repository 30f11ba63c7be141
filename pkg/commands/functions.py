import math

from analytic.auxiliary import b_of, h_of
from analytic.solver import f_of
from commands.command_base import CommandGroup, CommandResult, command

FSOLVE_COLUMNS = ("x", "f", "residual", "iterations", "h", "b")
DEFAULT_X_VALUES = (2.0, math.e, 10.0, 100.0)


class Functions(CommandGroup):
    """Pointwise evaluation of f, h and b."""

    @command("fsolve", "Solve for f(x) and report h(x) and b_x")
    def fsolve(self, run_config):
        backend = run_config.precision_backend
        rows = []
        worst = 0.0
        for x in run_config.x_values or DEFAULT_X_VALUES:
            result = f_of(x, backend=backend)
            b = b_of(x, backend=backend) if x > 1 else None
            rows.append((result.x, result.f, result.residual, result.iterations, h_of(x, backend=backend), b))
            worst = max(worst, abs(result.residual))
        return CommandResult(
            columns=FSOLVE_COLUMNS,
            rows=rows,
            summary=f"solved {len(rows)} abscissae, max |residual| {worst!r}",
        )


def setup(runner):
    runner.add_command_group(Functions(runner))
