from .sieve import SieveConfig, SieveCursor, PrimeBlock, PrimeSieve, next_block, simple_sieve
from .accumulator import CompensatedSum, ThetaMertensState, extend
from .checkpoint import Checkpoint, save_checkpoint, load_checkpoint
from .stream import PrimeStream
