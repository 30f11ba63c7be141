import os
import logging
import shutil

import config
from engine.checkpoint import CHECKPOINT_FIELDS, Checkpoint
from errors import CheckpointVersionError, CorruptCheckpointError
from utils.formatters import format_float

_INT_FIELDS = {"format_version", "n", "p_n"}
_ANNOTATION_PREFIX = "sweep."


def _encode(key, value):
    if key in _INT_FIELDS:
        return f"{key}={int(value)}"
    # 17-digit decimal for humans, hex for a bit-exact reload
    return f"{key}={format_float(value)} {float(value).hex()}"


def _decode_float(key, text):
    parts = text.split()
    if len(parts) != 2:
        raise CorruptCheckpointError(f"field {key!r}: expected '<decimal> <hex>', got {text!r}")
    try:
        decimal, exact = float(parts[0]), float.fromhex(parts[1])
    except ValueError as e:
        raise CorruptCheckpointError(f"field {key!r}: {e}") from e
    if decimal != exact and not (decimal != decimal and exact != exact):
        raise CorruptCheckpointError(f"field {key!r}: decimal and hex encodings disagree")
    return exact


def dumps_checkpoint(checkpoint):
    """Render a checkpoint as the flat key=value text record."""
    values = {name: getattr(checkpoint, name) for name in CHECKPOINT_FIELDS}
    lines = [_encode(name, values[name]) for name in CHECKPOINT_FIELDS]
    for key in sorted(checkpoint.annotations):
        lines.append(_encode(_ANNOTATION_PREFIX + key, checkpoint.annotations[key]))
    return "\n".join(lines) + "\n"


def loads_checkpoint(text):
    """Parse a checkpoint record.

    Raises:
        CheckpointVersionError: Unsupported format_version
        CorruptCheckpointError: Missing, duplicated or malformed fields
    """
    raw = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CorruptCheckpointError(f"line {lineno}: expected key=value")
        if key in raw:
            raise CorruptCheckpointError(f"line {lineno}: duplicate field {key!r}")
        raw[key] = value.strip()

    if "format_version" not in raw:
        raise CorruptCheckpointError("missing field 'format_version'")
    try:
        version = int(raw["format_version"])
    except ValueError as e:
        raise CorruptCheckpointError(f"field 'format_version': {e}") from e
    if version != config.CHECKPOINT_FORMAT_VERSION:
        raise CheckpointVersionError(
            f"checkpoint format_version {version} is not supported "
            f"(expected {config.CHECKPOINT_FORMAT_VERSION})"
        )

    fields = {}
    for name in CHECKPOINT_FIELDS:
        if name not in raw:
            raise CorruptCheckpointError(f"missing field {name!r}")
        if name in _INT_FIELDS:
            try:
                fields[name] = int(raw[name])
            except ValueError as e:
                raise CorruptCheckpointError(f"field {name!r}: {e}") from e
        else:
            fields[name] = _decode_float(name, raw[name])

    annotations = {}
    for key, value in raw.items():
        if key in fields:
            continue
        if not key.startswith(_ANNOTATION_PREFIX):
            raise CorruptCheckpointError(f"unknown field {key!r}")
        annotations[key[len(_ANNOTATION_PREFIX):]] = _decode_float(key, value)

    return Checkpoint(annotations=annotations, **fields)


class CheckpointManager:
    """Reads and writes checkpoint files."""

    def __init__(self, storage_dir=config.CHECKPOINT_DIR):
        """Initialize the checkpoint manager.

        Args:
            storage_dir: Directory for checkpoints given by bare name
        """
        self.storage_dir = storage_dir

    def resolve(self, name):
        """Bare names live in storage_dir; anything with a directory part is used as is."""
        if os.path.dirname(name):
            return name
        return os.path.join(self.storage_dir, name)

    def save(self, name, checkpoint):
        """Write a checkpoint atomically.

        Args:
            name: File name or path
            checkpoint: Checkpoint to write

        Returns:
            str: The path written
        """
        path = self.resolve(name)
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)

        # Create a temporary file first
        temp_path = path + ".tmp"
        try:
            with open(temp_path, "w", encoding="utf-8") as f:
                f.write(dumps_checkpoint(checkpoint))
            os.replace(temp_path, path)
        except OSError:
            if os.path.exists(temp_path):
                try:
                    os.remove(temp_path)
                except OSError:
                    pass
            raise
        logging.info(f"Saved checkpoint at n={checkpoint.n} to {path}")
        return path

    def load(self, name):
        """Read a checkpoint.

        A corrupt file is backed up to <path>.bak before the error propagates.

        Returns:
            Checkpoint: The parsed record
        """
        path = self.resolve(name)
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
        try:
            checkpoint = loads_checkpoint(text)
        except CorruptCheckpointError as e:
            logging.error(f"Corrupt checkpoint {path}: {e}")
            backup_path = path + ".bak"
            try:
                shutil.copy2(path, backup_path)
                logging.info(f"Created backup of corrupted checkpoint: {backup_path}")
            except OSError as backup_error:
                logging.error(f"Failed to back up corrupted checkpoint: {backup_error}")
            raise
        logging.info(f"Loaded checkpoint at n={checkpoint.n} from {path}")
        return checkpoint
