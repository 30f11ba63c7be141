import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Output Configuration
OUTPUT_DIR = os.getenv("NICOLAS_OUTPUT_DIR", "reports")
CHECKPOINT_DIR = os.getenv("NICOLAS_CHECKPOINT_DIR", "checkpoints")
LOG_FILE = os.getenv("NICOLAS_LOG_FILE", "nicolas.log")
LOG_LEVEL = os.getenv("NICOLAS_LOG_LEVEL", "INFO")

# Sieve Configuration
SEGMENT_SIZE = int(os.getenv("NICOLAS_SEGMENT_SIZE", "262144"))
MIN_SEGMENT_SIZE = 1024
SIEVE_WORKERS = int(os.getenv("NICOLAS_SIEVE_WORKERS", "1"))

# Checkpoint / Report Configuration
CHECKPOINT_FORMAT_VERSION = 1
FLOAT_DIGITS = 17

# Solver Configuration
F_MAX_ITERATIONS = 200
EXTENDED_DPS = 40
