import math
import logging
from dataclasses import dataclass

import mpmath

# Euler-Mascheroni constant and exp(-gamma), rounded to the nearest double.
# derive_gamma() reproduces GAMMA from the harmonic sum.
GAMMA = 0.5772156649015329
EXP_NEG_GAMMA = 0.5614594835668852


@dataclass(frozen=True)
class Constants:
    gamma: float = GAMMA
    exp_neg_gamma: float = EXP_NEG_GAMMA


CONSTANTS = Constants()


def derive_gamma(m=10**6, dps=30):
    """H_m - log m with Euler-Maclaurin corrections, in mpmath.

    The correction terms -1/(2m) + 1/(12m^2) - 1/(120m^4) + 1/(252m^6) leave an
    error far below double precision for m >= 10^3.

    Args:
        m: Number of harmonic terms
        dps: Working decimal digits

    Returns:
        mpmath.mpf: The estimate of gamma
    """
    with mpmath.workdps(dps):
        m = mpmath.mpf(m)
        harmonic = mpmath.harmonic(m)
        return (
            harmonic
            - mpmath.log(m)
            - 1 / (2 * m)
            + 1 / (12 * m**2)
            - 1 / (120 * m**4)
            + 1 / (252 * m**6)
        )


def check_constants(constants=CONSTANTS, max_ulps=4):
    """Verify exp(-gamma) against the stored exp_neg_gamma.

    Raises:
        RuntimeError: The two stored constants are inconsistent
    """
    computed = math.exp(-constants.gamma)
    tolerance = max_ulps * math.ulp(constants.exp_neg_gamma)
    if abs(computed - constants.exp_neg_gamma) > tolerance:
        raise RuntimeError(
            f"constant self-check failed: exp(-gamma)={computed!r}, "
            f"stored exp_neg_gamma={constants.exp_neg_gamma!r}"
        )
    logging.debug(f"Constant self-check passed: exp(-gamma)={computed!r}")
    return True
