from .nicolas import NicolasRecord, NicolasSweep, SweepSummary, nicolas_record, nicolas_sweep
from .residuals import LEMMA_IDS, ResidualReport, ResidualSample, geometric_grid, lemma_residuals, residual
from .crossover import CrossoverResult, crossover_report, e4, gym_crossover_search, sign_certificate
from .recurrence import RecurrenceReport, RecurrenceResidual, recurrence_check, recurrence_check_sweep
from .primes import (
    GapComparison,
    MertensRow,
    PntReport,
    PntRow,
    QRow,
    decade_indices,
    mertens_sweep,
    pnt_ratio_sweep,
    q_sequence,
    synth_gap_compare,
)
