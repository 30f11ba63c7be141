from .constants import GAMMA, EXP_NEG_GAMMA, CONSTANTS, Constants, check_constants, derive_gamma
from .precision import get_backend, BACKENDS, STANDARD, EXTENDED
from .solver import FSolveResult, f_of, iterate_f
from .auxiliary import b_of, h_of, log1p_tail
from .qvalues import (
    QValue,
    q_from_state,
    q_from_values,
    q_from_abscissa,
    recurrence_rhs_literal,
    recurrence_rhs_simplified,
)
