import math
import logging
from dataclasses import dataclass
from typing import Optional

from analytic.constants import EXP_NEG_GAMMA, GAMMA
from analytic.qvalues import q_from_values
from errors import DomainError

COLUMNS = ("n", "p_n", "theta", "lhs", "margin", "q", "ratio_form_margin")


@dataclass
class NicolasRecord:
    n: int
    p_n: int
    theta: float
    lhs: float
    margin: float
    q: float
    ratio_form_margin: Optional[float]

    def as_row(self):
        return (self.n, self.p_n, self.theta, self.lhs, self.margin, self.q, self.ratio_form_margin)


def nicolas_record(state):
    """Margin evidence at the state's index.

    margin = e^-gamma - log(theta) * prod(1 - 1/p) comes from the product form;
    q comes from the exponent form, so the two sign tests are independent.
    ratio_form_margin is -log prod - gamma - log log theta, defined for theta > 1.
    """
    theta = state.theta_value
    mertens_log = state.mertens_value
    lhs = math.log(theta) * math.exp(mertens_log)
    ratio_form = None
    if theta > 1:
        ratio_form = -mertens_log - GAMMA - math.log(math.log(theta))
    return NicolasRecord(
        n=state.n,
        p_n=state.p_n,
        theta=theta,
        lhs=lhs,
        margin=EXP_NEG_GAMMA - lhs,
        q=q_from_values(state.n, theta, mertens_log).q,
        ratio_form_margin=ratio_form,
    )


@dataclass
class SweepSummary:
    n_first: int = 0
    n_last: int = 0
    min_margin: float = math.inf
    min_margin_n: int = 0
    records_emitted: int = 0
    nonpositive_margins: int = 0
    sign_mismatches: int = 0
    ratio_form_mismatches: int = 0

    def annotations(self):
        """Running-minimum bookkeeping for a checkpoint."""
        return {"min_margin": self.min_margin, "min_margin_n": float(self.min_margin_n)}

    @classmethod
    def from_annotations(cls, annotations):
        summary = cls()
        if "min_margin" in annotations:
            summary.min_margin = annotations["min_margin"]
            summary.min_margin_n = int(annotations.get("min_margin_n", 0))
        return summary


class NicolasSweep:
    """Nicolas margin sweep over the indices of a prime stream.

    A record is emitted at every stride-th index and at every index whose
    margin is a new running minimum. Every index is checked for the q/margin
    sign law and for agreement with the ratio form.
    """

    def __init__(self, stream, n_max, stride, summary=None):
        if n_max < 1:
            raise DomainError(f"n_max must be >= 1, got {n_max}")
        if stride < 1:
            raise DomainError(f"stride must be >= 1, got {stride}")
        self.stream = stream
        self.n_max = n_max
        self.stride = stride
        self.summary = summary or SweepSummary()

    def _check(self, record):
        summary = self.summary
        if record.margin <= 0:
            summary.nonpositive_margins += 1
            logging.warning(f"Non-positive Nicolas margin {record.margin!r} at n={record.n}")
        if (record.margin > 0) != (record.q > 0):
            summary.sign_mismatches += 1
            logging.warning(f"Sign law broken at n={record.n}: margin={record.margin!r}, q={record.q!r}")
        if record.ratio_form_margin is not None and record.n >= 2:
            if (record.margin > 0) != (record.ratio_form_margin > 0):
                summary.ratio_form_mismatches += 1
                logging.warning(f"Ratio form disagrees at n={record.n}: {record.ratio_form_margin!r}")

    def __iter__(self):
        summary = self.summary
        for state in self.stream.states(self.n_max):
            record = nicolas_record(state)
            if not summary.n_first:
                summary.n_first = record.n
            summary.n_last = record.n
            self._check(record)

            new_minimum = record.margin < summary.min_margin
            if new_minimum:
                summary.min_margin = record.margin
                summary.min_margin_n = record.n
            if new_minimum or record.n % self.stride == 0:
                summary.records_emitted += 1
                yield record

        logging.info(
            f"Nicolas sweep n={summary.n_first}..{summary.n_last}: min margin "
            f"{summary.min_margin!r} at n={summary.min_margin_n}, {summary.records_emitted} records"
        )


def nicolas_sweep(stream, n_max, stride, summary=None):
    """Iterable of NicolasRecords; the sweep's summary is on the returned object."""
    return NicolasSweep(stream, n_max, stride, summary=summary)
