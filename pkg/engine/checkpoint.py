from dataclasses import dataclass, field
from typing import Dict

import config
from engine.accumulator import CompensatedSum, ThetaMertensState
from errors import CheckpointVersionError

# Field order of the on-disk record
CHECKPOINT_FIELDS = (
    "format_version",
    "n",
    "p_n",
    "theta_sum",
    "theta_compensation",
    "mertens_sum",
    "mertens_compensation",
)


@dataclass
class Checkpoint:
    """Serializable image of a ThetaMertensState.

    annotations carries optional sweep bookkeeping (float values) that a
    resumed run needs to reproduce the rows of a single-shot run.
    """
    n: int
    p_n: int
    theta_sum: float
    theta_compensation: float
    mertens_sum: float
    mertens_compensation: float
    format_version: int = config.CHECKPOINT_FORMAT_VERSION
    annotations: Dict[str, float] = field(default_factory=dict)


def save_checkpoint(state, annotations=None):
    return Checkpoint(
        n=state.n,
        p_n=state.p_n,
        theta_sum=state.theta.sum,
        theta_compensation=state.theta.compensation,
        mertens_sum=state.mertens_log.sum,
        mertens_compensation=state.mertens_log.compensation,
        annotations=dict(annotations or {}),
    )


def load_checkpoint(checkpoint):
    """Rebuild the accumulator state, compensation terms included.

    Raises:
        CheckpointVersionError: The record was written by an unsupported format
    """
    if checkpoint.format_version != config.CHECKPOINT_FORMAT_VERSION:
        raise CheckpointVersionError(
            f"checkpoint format_version {checkpoint.format_version} is not supported "
            f"(expected {config.CHECKPOINT_FORMAT_VERSION})"
        )
    return ThetaMertensState(
        n=checkpoint.n,
        p_n=checkpoint.p_n,
        theta=CompensatedSum(checkpoint.theta_sum, checkpoint.theta_compensation),
        mertens_log=CompensatedSum(checkpoint.mertens_sum, checkpoint.mertens_compensation),
    )
