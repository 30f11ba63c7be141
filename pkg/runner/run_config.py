from dataclasses import dataclass, field
from typing import List, Optional

import config


@dataclass
class RunConfig:
    """One command invocation with every parameter any command may read."""
    command: str
    n_max: Optional[int] = None
    stride: int = 1
    n_values: List[int] = field(default_factory=list)
    x_values: List[float] = field(default_factory=list)
    lemmas: Optional[List[str]] = None
    lo: Optional[float] = None
    hi: Optional[float] = None
    per_decade: int = 1
    tol: float = 1e-6
    certify_upto: float = 1e6
    u_min: int = 2
    u_max: int = 10**4
    iterations: int = 3
    checkpoint_path: Optional[str] = None
    resume_path: Optional[str] = None
    output_path: Optional[str] = None
    output_format: str = "csv"
    emit_plot: bool = False
    precision_backend: str = "standard"
    segment_size: int = config.SEGMENT_SIZE
    workers: int = config.SIEVE_WORKERS
