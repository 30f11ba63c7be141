from .client import SweepRunner
from .run_config import RunConfig
