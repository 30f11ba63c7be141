"""Tests for checkpoint records and resuming."""

import math
import os

import pytest

from engine.checkpoint import Checkpoint, load_checkpoint, save_checkpoint
from engine.sieve import SieveConfig
from engine.stream import PrimeStream
from errors import CheckpointVersionError, CorruptCheckpointError
from utils.checkpoints import CheckpointManager, dumps_checkpoint, loads_checkpoint


def state_at(make_stream, n):
    return make_stream().advance_to(n).copy()


class TestCheckpointRecord:

    def test_text_record_is_bit_exact(self, make_stream):
        state = state_at(make_stream, 1000)
        restored = load_checkpoint(loads_checkpoint(dumps_checkpoint(save_checkpoint(state))))

        assert (restored.n, restored.p_n) == (1000, 7919)
        assert restored.theta.sum == state.theta.sum
        assert restored.theta.compensation == state.theta.compensation
        assert restored.mertens_log.sum == state.mertens_log.sum
        assert restored.mertens_log.compensation == state.mertens_log.compensation

    def test_field_order(self, make_stream):
        text = dumps_checkpoint(save_checkpoint(state_at(make_stream, 3)))
        keys = [line.split("=", 1)[0] for line in text.splitlines()]
        assert keys == [
            "format_version", "n", "p_n",
            "theta_sum", "theta_compensation",
            "mertens_sum", "mertens_compensation",
        ]

    def test_annotations_survive(self, make_stream):
        checkpoint = save_checkpoint(state_at(make_stream, 5), {"min_margin": 0.1, "min_margin_n": 5.0})
        restored = loads_checkpoint(dumps_checkpoint(checkpoint))
        assert restored.annotations == {"min_margin": 0.1, "min_margin_n": 5.0}

    def test_infinite_annotation(self, make_stream):
        checkpoint = save_checkpoint(state_at(make_stream, 1), {"min_margin": math.inf})
        assert loads_checkpoint(dumps_checkpoint(checkpoint)).annotations["min_margin"] == math.inf


class TestCheckpointErrors:

    def test_version_mismatch(self, make_stream):
        text = dumps_checkpoint(save_checkpoint(state_at(make_stream, 3)))
        with pytest.raises(CheckpointVersionError):
            loads_checkpoint(text.replace("format_version=1", "format_version=2"))
        with pytest.raises(CheckpointVersionError):
            load_checkpoint(Checkpoint(3, 5, 1.0, 0.0, -1.0, 0.0, format_version=2))

    def test_missing_field(self, make_stream):
        text = dumps_checkpoint(save_checkpoint(state_at(make_stream, 3)))
        truncated = "\n".join(line for line in text.splitlines() if not line.startswith("mertens_sum"))
        with pytest.raises(CorruptCheckpointError):
            loads_checkpoint(truncated)

    def test_encodings_must_agree(self):
        text = (
            "format_version=1\nn=1\np_n=2\n"
            "theta_sum=6.9314718055994529e-01 0x1.62e42fefa39efp-1\n"
            "theta_compensation=0.0000000000000000e+00 0x0.0p+0\n"
            "mertens_sum=-6.9314718055994529e-01 0x1.62e42fefa39efp-1\n"
            "mertens_compensation=0.0000000000000000e+00 0x0.0p+0\n"
        )
        with pytest.raises(CorruptCheckpointError):
            loads_checkpoint(text)

    def test_unknown_field(self, make_stream):
        text = dumps_checkpoint(save_checkpoint(state_at(make_stream, 3))) + "extra=1\n"
        with pytest.raises(CorruptCheckpointError):
            loads_checkpoint(text)


class TestCheckpointManager:

    def test_save_and_load(self, tmp_path, make_stream):
        manager = CheckpointManager(str(tmp_path))
        path = manager.save("run.ckpt", save_checkpoint(state_at(make_stream, 10)))
        assert path == os.path.join(str(tmp_path), "run.ckpt")
        assert not os.path.exists(path + ".tmp")
        assert manager.load("run.ckpt").n == 10

    def test_corrupt_file_is_backed_up(self, tmp_path):
        manager = CheckpointManager(str(tmp_path))
        path = tmp_path / "bad.ckpt"
        path.write_text("format_version=1\nn=oops\n", encoding="utf-8")
        with pytest.raises(CorruptCheckpointError):
            manager.load("bad.ckpt")
        assert (tmp_path / "bad.ckpt.bak").read_text(encoding="utf-8") == "format_version=1\nn=oops\n"

    def test_resumed_stream_matches_one_shot(self, tmp_path, make_stream):
        manager = CheckpointManager(str(tmp_path))
        manager.save("ten.ckpt", save_checkpoint(state_at(make_stream, 10)))

        resumed = make_stream(state=load_checkpoint(manager.load("ten.ckpt"))).advance_to(11)
        one_shot = make_stream().advance_to(11)

        assert resumed.p_n == 31
        assert resumed.theta.sum == one_shot.theta.sum
        assert resumed.theta.compensation == one_shot.theta.compensation
        assert resumed.theta_value == pytest.approx(math.log(200560490130), rel=1e-14)


class TestStartCheckpoint:

    def test_stream_resumes_from_config(self, make_stream):
        checkpoint = save_checkpoint(state_at(make_stream, 10))
        stream = PrimeStream(SieveConfig(segment_size=1024, start_checkpoint=checkpoint))
        assert stream.state.n == 10
        assert stream.state.p_n == 29

        resumed = stream.advance_to(11)
        one_shot = make_stream().advance_to(11)
        assert resumed.p_n == 31
        assert resumed.theta.sum == one_shot.theta.sum
        assert resumed.mertens_log.sum == one_shot.mertens_log.sum

    def test_explicit_state_wins(self, make_stream):
        checkpoint = save_checkpoint(state_at(make_stream, 10))
        stream = PrimeStream(SieveConfig(start_checkpoint=checkpoint), state=state_at(make_stream, 3))
        assert stream.state.n == 3

    def test_version_mismatch_raised_by_stream(self, make_stream):
        checkpoint = save_checkpoint(state_at(make_stream, 10))
        checkpoint.format_version = 2
        with pytest.raises(CheckpointVersionError):
            PrimeStream(SieveConfig(start_checkpoint=checkpoint))
