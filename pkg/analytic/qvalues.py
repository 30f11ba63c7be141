import math
from dataclasses import dataclass

from analytic.constants import EXP_NEG_GAMMA
from analytic.solver import f_of
from errors import DomainError


@dataclass
class QValue:
    """Offset q with log(theta + q) * prod(1 - 1/p_k) = e^-gamma.

    exponent is e^-gamma / prod(1 - 1/p_k), so theta + q = exp(exponent).
    """
    n: int
    theta: float
    q: float
    exponent: float


def q_from_values(n, theta, mertens_log):
    exponent = EXP_NEG_GAMMA * math.exp(-mertens_log)
    return QValue(n=n, theta=theta, q=math.exp(exponent) - theta, exponent=exponent)


def q_from_state(state):
    """q at theta(p_n), with the product over the first n primes.

    Args:
        state: ThetaMertensState with n >= 1

    Returns:
        QValue: The solved offset

    Raises:
        DomainError: The state holds no primes
    """
    if state.n < 1:
        raise DomainError("q is defined for n >= 1")
    return q_from_values(state.n, state.theta_value, state.mertens_value)


def q_from_abscissa(x, mertens_log):
    """q at an arbitrary abscissa x, given the log Mertens product to use.

    Passing the product over primes <= x gives the prime-counting reading of
    the index; passing the product over the first n primes with x = theta(p_n)
    gives q_from_state.
    """
    return math.exp(EXP_NEG_GAMMA * math.exp(-mertens_log)) - x


def recurrence_rhs_literal(state, q_u, p_next, backend="standard"):
    """Right-hand side of the q recurrence, evaluated as printed.

    F^A - log p_next - theta(p_u) with F = f(theta(p_u)) and
    A = [(1 - 1/F) / (1 - 1/p_next)] * log_theta(theta + q_u). Powers are
    taken as exp(A log F).

    Args:
        state: ThetaMertensState at index u
        q_u: q at index u
        p_next: p_{u+1}
        backend: Precision backend for the f solve

    Returns:
        float: The recurrence's value for q at u + 1

    Raises:
        DomainError: theta(p_u) <= 1, where log base theta is not usable
    """
    theta = state.theta_value
    if theta <= 1:
        raise DomainError(f"log base theta(p_u)={theta!r} must exceed 1 (u={state.n})")
    if theta + q_u <= 0:
        raise DomainError(f"theta + q = {theta + q_u!r} must be positive")
    big_f = f_of(theta, backend=backend).f
    log_base = math.log(theta + q_u) / math.log(theta)
    exponent = (1 - 1 / big_f) / (1 - 1 / p_next) * log_base
    return math.exp(exponent * math.log(big_f)) - math.log(p_next) - theta


def recurrence_rhs_simplified(theta_u, q_u, p_next, log_p_next):
    """(theta_u + q_u)^(1/(1 - 1/p_next)) - theta_u - log p_next.

    Substituting (1 - 1/F) log F = log theta into the printed recurrence
    cancels f entirely, which leaves this form.

    Raises:
        DomainError: theta_u + q_u <= 1
    """
    base = theta_u + q_u
    if base <= 1:
        raise DomainError(f"theta_u + q_u = {base!r} must exceed 1")
    return math.exp(math.log(base) / (1 - 1 / p_next)) - theta_u - log_p_next
