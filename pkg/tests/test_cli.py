import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from springer_kit import cuspidal
from springer_kit.cli import Command, format_table, main, parse_args, parse_bipartition, run
from springer_kit.errors import RepeatedEntries, UsageError
from springer_kit.partitions import Bipartition

GOLDEN = Path(__file__).parent / "golden"


def invoke(argv):
    cmd = parse_args(argv)
    out, err = io.BytesIO(), io.BytesIO()
    status = run(cmd, out, err)
    return status, out.getvalue().decode(), err.getvalue().decode()


def test_parse_args():
    assert parse_args(["classes", "--n", "3"]) == Command("classes", {"n": 3})
    assert parse_args(["verify", "--max-n", "60"]) == Command("verify", {"max_n": 60})
    assert parse_args(["levi", "--n", "6", "--e", "1", "--format", "table"]) == Command("levi", {"n": 6, "e": 1}, "table")
    assert parse_args(["springer", "[[3,1],[2]]"]).params["bipartition"] == Bipartition.of((3, 1), (2,))


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["verify", "--max-n", "-1"], "--max-n"),
        (["classes", "--n", "x"], "--n"),
        (["classes"], "--n"),
        (["bogus"], "bogus"),
        (["springer", "[[2,3],[]]"], "[[2,3],[]]"),
        (["springer", "[1,2]"], "[1,2]"),
        (["cuspidal", "--e", "1"], "--f"),
    ],
)
def test_usage_errors_name_the_flag(argv, flag):
    with pytest.raises(UsageError, match=flag.replace("[", r"\[").replace("]", r"\]")):
        parse_args(argv)


def test_help_is_a_no_op():
    cmd = parse_args(["--help"])
    assert cmd.verb == "help" and "usage" in cmd.help_text
    status, out, _ = invoke(["verify", "--help"])
    assert status == 0 and "--max-n" in out


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["classes", "--n", "2"], "classes_n2.jsonl"),
        (["springer", "[[1],[1]]"], "springer_1_1.jsonl"),
        (["verify", "--max-n", "12"], "verify_max_n_12.jsonl"),
    ],
)
def test_golden(argv, golden):
    status, out, err = invoke(argv)
    assert status == 0 and err == ""
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_springer_record():
    status, out, _ = invoke(["springer", "[[1],[]]"])
    rec = json.loads(out)
    assert status == 0
    assert rec["symbol"] == {"r": 1, "s": 1, "rows": [[1], []]}
    assert rec["display"] == "[1;∅]"
    assert rec["wavefront"] == [2] and rec["rank"] == 1


def test_springer_repeated_entries_gives_null_wavefront():
    status, out, _ = invoke(["springer", "[[],[1]]"])
    assert status == 0 and json.loads(out)["wavefront"] is None


def test_series_and_levi():
    status, out, _ = invoke(["series", "--n", "2"])
    recs = [json.loads(line) for line in out.splitlines()]
    assert status == 0 and len(recs) == 5
    assert sum(r["a_order"] == 2 for r in recs) == 4
    status, out, _ = invoke(["levi", "--n", "6", "--e", "1"])
    rec = json.loads(out)
    assert (rec["k"], rec["gl1_factors"], rec["relative_weyl_type"]) == (2, 4, "B4")


def test_module_errors_go_to_error_stream():
    status, out, err = invoke(["levi", "--n", "1", "--e", "1"])
    assert status == 2 and out == ""
    assert json.loads(err)["error"] == "RankExceeded"
    status, _, err = invoke(["classes", "--n", "31"])
    assert status == 2 and json.loads(err)["error"] == "BoundExceeded"


def test_verify_exit_status_on_failure(monkeypatch):
    monkeypatch.setattr(cuspidal, "generic_denominator", lambda e, f: 3)
    status, out, _ = invoke(["verify", "--max-n", "2"])
    assert status == 1
    assert not any(json.loads(line)["identity_holds"] for line in out.splitlines())


def test_verify_repeated_entries_is_failure(monkeypatch):
    def boom(x):
        raise RepeatedEntries("forced")

    monkeypatch.setattr(cuspidal, "wavefront_partition", boom)
    status, _, err = invoke(["verify", "--max-n", "2"])
    assert status == 1 and json.loads(err)["error"] == "RepeatedEntries"


def test_table_format():
    status, out, _ = invoke(["classes", "--n", "1", "--format", "table"])
    lines = out.splitlines()
    assert status == 0 and lines[0].split() == ["n", "partition", "n_u", "delta_u", "a_order"]
    assert lines[1].split() == ["1", "[2]", "1", "1", "1"]
    assert format_table([]) == ""


def test_deterministic():
    assert invoke(["verify", "--max-n", "30"]) == invoke(["verify", "--max-n", "30"])
    assert invoke(["series", "--n", "3"]) == invoke(["series", "--n", "3"])


def test_main_usage_exit(capsysbinary):
    assert main(["verify", "--max-n", "-1"]) == 2
    err = capsysbinary.readouterr().err.decode()
    assert json.loads(err)["error"] == "UsageError"


def test_parse_bipartition():
    assert parse_bipartition("[[],[]]") == Bipartition.of()
    with pytest.raises(UsageError):
        parse_bipartition("[[1],[x]]")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "springer_kit", "classes", "--n", "2"], capture_output=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.decode() == (GOLDEN / "classes_n2.jsonl").read_text(encoding="utf-8")


def test_env_bound(monkeypatch):
    monkeypatch.setenv("SPRINGER_KIT_MAX_RANK", "1")
    status, _, err = invoke(["classes", "--n", "2"])
    assert status == 2 and json.loads(err)["error"] == "BoundExceeded"
