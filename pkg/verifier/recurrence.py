import math
import logging
from dataclasses import dataclass, field
from typing import List

from analytic.qvalues import q_from_state, recurrence_rhs_literal, recurrence_rhs_simplified
from errors import DomainError

COLUMNS = ("u", "direct", "literal", "simplified", "res_literal", "res_paths")


@dataclass
class RecurrenceResidual:
    u: int
    direct_q_next: float
    literal_rhs: float
    simplified_rhs: float
    residual_literal: float
    residual_paths: float

    def as_row(self):
        return (
            self.u,
            self.direct_q_next,
            self.literal_rhs,
            self.simplified_rhs,
            self.residual_literal,
            self.residual_paths,
        )

    @property
    def scale(self):
        return max(1.0, abs(self.direct_q_next))


@dataclass
class RecurrenceReport:
    rows: List[RecurrenceResidual] = field(default_factory=list)
    max_abs_residual_literal: float = 0.0
    max_abs_residual_paths: float = 0.0
    max_rel_residual_literal: float = 0.0
    max_rel_residual_paths: float = 0.0

    def add(self, row):
        self.rows.append(row)
        self.max_abs_residual_literal = max(self.max_abs_residual_literal, abs(row.residual_literal))
        self.max_abs_residual_paths = max(self.max_abs_residual_paths, abs(row.residual_paths))
        self.max_rel_residual_literal = max(self.max_rel_residual_literal, abs(row.residual_literal) / row.scale)
        self.max_rel_residual_paths = max(self.max_rel_residual_paths, abs(row.residual_paths) / row.scale)


def recurrence_check(state_u, state_next, backend="standard"):
    """Compare q at u + 1 from its definition with both recurrence evaluations.

    Args:
        state_u: ThetaMertensState at index u
        state_next: ThetaMertensState at index u + 1
    """
    p_next = state_next.p_n
    q_u = q_from_state(state_u).q
    direct = q_from_state(state_next).q
    literal = recurrence_rhs_literal(state_u, q_u, p_next, backend=backend)
    simplified = recurrence_rhs_simplified(state_u.theta_value, q_u, p_next, math.log(p_next))
    return RecurrenceResidual(
        u=state_u.n,
        direct_q_next=direct,
        literal_rhs=literal,
        simplified_rhs=simplified,
        residual_literal=direct - literal,
        residual_paths=literal - simplified,
    )


def recurrence_check_sweep(stream, u_min=2, u_max=10**4, backend="standard"):
    """Run recurrence_check for every u in [u_min, u_max].

    Args:
        stream: PrimeStream positioned at or before index u_min

    Returns:
        RecurrenceReport: Rows in u order plus maximum residuals
    """
    if u_min < 2:
        raise DomainError(f"the recurrence needs log base theta(p_u) > 1, so u >= 2; got u_min={u_min}")
    if u_max < u_min:
        raise DomainError(f"u_max={u_max} is below u_min={u_min}")
    if stream.state.n > u_min:
        raise DomainError(f"stream is already at n={stream.state.n}, past u_min={u_min}")

    report = RecurrenceReport()
    previous = stream.state.copy() if stream.state.n else None
    for state in stream.states(u_max + 1):
        if previous is not None and previous.n >= u_min:
            report.add(recurrence_check(previous, state, backend=backend))
        previous = state.copy()

    logging.info(
        f"Recurrence check u={u_min}..{u_max}: max |direct - literal| = {report.max_abs_residual_literal!r}, "
        f"max |literal - simplified| = {report.max_abs_residual_paths!r}"
    )
    return report
