"""End-to-end tests of the command line and the runner."""

import json

import pytest

import main
from errors import EXIT_DOMAIN, EXIT_IO, EXIT_OK
from runner.run_config import RunConfig


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def read_lines(path):
    return path.read_text(encoding="utf-8").splitlines()


class TestCommands:

    @pytest.mark.parametrize("argv", [
        ["sweep", "--n-max", "100", "--stride", "10"],
        ["qseq", "--n", "5", "10"],
        ["fsolve", "--x", "2", "e", "100"],
        ["diagnostics", "--hi", "1e4"],
        ["crossover", "--certify-upto", "1e3"],
        ["recurrence", "--u-max", "50"],
        ["pnt", "--n-max", "1000"],
        ["gaps", "--x", "100", "1000"],
        ["mertens", "--n-max", "1e3"],
    ])
    def test_every_command_runs(self, workdir, capsys, argv):
        assert main.main(argv) == EXIT_OK
        report = workdir / "reports" / f"{argv[0]}.csv"
        assert report.exists()
        assert len(read_lines(report)) > 1
        assert capsys.readouterr().out.startswith(f"{argv[0]}: ")

    def test_qseq_report(self, workdir):
        out = workdir / "q.csv"
        assert main.main(["--output", str(out), "qseq", "--n", "10", "100"]) == EXIT_OK
        lines = read_lines(out)
        assert lines[0] == "n,p_n,theta,q,exponent,q_pi_reading"
        assert [line.split(",")[0] for line in lines[1:]] == ["10", "100"]

    def test_json_report_with_meta(self, workdir):
        out = workdir / "d.json"
        assert main.main(["--format", "json", "--output", str(out), "diagnostics", "--lo", "1", "--hi", "100", "--lemmas", "L3"]) == EXIT_OK
        document = json.loads(out.read_text(encoding="utf-8"))
        assert document["columns"] == ["lemma_id", "x", "residual"]
        assert [row["x"] for row in document["rows"]] == [10.0, 100.0]
        assert document["missing"][0]["x"] == 1.0

    def test_plot_script(self, workdir):
        assert main.main(["--plot", "pnt", "--n-max", "1000"]) == EXIT_OK
        assert (workdir / "reports" / "pnt.gp").exists()


class TestExitCodes:

    def test_domain_error(self, workdir):
        assert main.main(["fsolve", "--x", "0.5"]) == EXIT_DOMAIN

    def test_plot_needs_csv(self, workdir):
        assert main.main(["--plot", "--format", "json", "pnt", "--n-max", "100"]) == EXIT_DOMAIN

    def test_bad_argument(self, workdir):
        with pytest.raises(SystemExit) as excinfo:
            main.main(["sweep", "--n-max", "lots"])
        assert excinfo.value.code == 2

    def test_missing_checkpoint(self, workdir):
        assert main.main(["sweep", "--resume", "absent.ckpt"]) == EXIT_IO

    def test_corrupt_checkpoint(self, workdir):
        (workdir / "checkpoints").mkdir()
        (workdir / "checkpoints" / "bad.ckpt").write_text("garbage\n", encoding="utf-8")
        assert main.main(["sweep", "--resume", "bad.ckpt"]) == EXIT_IO
        assert (workdir / "checkpoints" / "bad.ckpt.bak").exists()

    def test_checkpoint_from_another_format_version(self, workdir):
        assert main.main(["sweep", "--n-max", "20", "--checkpoint", "cp.ckpt"]) == EXIT_OK
        path = workdir / "checkpoints" / "cp.ckpt"
        path.write_text(path.read_text(encoding="utf-8").replace("format_version=1", "format_version=2"),
                        encoding="utf-8")
        assert main.main(["sweep", "--n-max", "40", "--resume", "cp.ckpt"]) == EXIT_IO

    def test_unknown_command(self, runner):
        assert runner.run(RunConfig("nope")) == EXIT_DOMAIN


class TestReproducibility:

    def test_checkpointed_sweep_matches_one_shot(self, workdir):
        first, second, whole = workdir / "a.csv", workdir / "b.csv", workdir / "c.csv"
        assert main.main(["--output", str(first), "sweep", "--n-max", "400", "--stride", "50",
                          "--checkpoint", "cp.ckpt"]) == EXIT_OK
        assert (workdir / "checkpoints" / "cp.ckpt").exists()
        assert main.main(["--output", str(second), "sweep", "--n-max", "1000", "--stride", "50",
                          "--resume", "cp.ckpt"]) == EXIT_OK
        assert main.main(["--output", str(whole), "sweep", "--n-max", "1000", "--stride", "50"]) == EXIT_OK

        assert read_lines(first) + read_lines(second)[1:] == read_lines(whole)

    def test_worker_count_does_not_change_bytes(self, workdir):
        serial, parallel = workdir / "s.csv", workdir / "p.csv"
        args = ["sweep", "--n-max", "3000", "--stride", "100", "--segment-size", "1024"]
        assert main.main(["--output", str(serial), *args, "--workers", "1"]) == EXIT_OK
        assert main.main(["--output", str(parallel), *args, "--workers", "3"]) == EXIT_OK
        assert serial.read_bytes() == parallel.read_bytes()

    def test_runner_execute(self, runner):
        path, summary = runner.execute(RunConfig("fsolve", x_values=[10.0]))
        assert path.endswith("fsolve.csv")
        assert "solved 1 abscissae" in summary
