import math
from contextlib import nullcontext
import sys
from dataclasses import dataclass
from typing import Callable

import mpmath

import config

STANDARD = "standard"
EXTENDED = "extended"
BACKENDS = (STANDARD, EXTENDED)


@dataclass(frozen=True)
class Backend:
    """Elementary functions of one working precision."""
    name: str
    num: Callable
    log: Callable
    log1p: Callable
    exp: Callable
    expm1: Callable
    eps: float

    def workprec(self):
        """Context that holds the backend's precision while it computes."""
        if self.name == EXTENDED:
            return mpmath.workdps(config.EXTENDED_DPS)
        return nullcontext()


_STANDARD = Backend(
    name=STANDARD,
    num=float,
    log=math.log,
    log1p=math.log1p,
    exp=math.exp,
    expm1=math.expm1,
    eps=sys.float_info.epsilon,
)

_EXTENDED = Backend(
    name=EXTENDED,
    num=mpmath.mpf,
    log=mpmath.log,
    log1p=mpmath.log1p,
    exp=mpmath.exp,
    expm1=mpmath.expm1,
    eps=10.0 ** (1 - config.EXTENDED_DPS),
)


def get_backend(name=STANDARD):
    if isinstance(name, Backend):
        return name
    if name == STANDARD:
        return _STANDARD
    if name == EXTENDED:
        return _EXTENDED
    raise ValueError(f"unknown precision backend {name!r}; expected one of {BACKENDS}")
