import json
import subprocess
import sys

import pytest

from nonrep import io
from nonrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_word(capsys):
    assert run(capsys, "check-word", "212321232", "--properties", "overlap") == (
        0, "overlap at 1 period 3\n", "")
    code, out, _ = run(capsys, "check-word", "abcacb", "--format", "json")
    assert code == 0 and all(c["holds"] for c in json.loads(out)["checks"])


def test_apply_and_fixed_point(capsys, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("1 -> 121\n2 -> 232\n3 -> 313\n")
    assert run(capsys, "apply", str(f), "12")[1] == "121232\n"
    assert run(capsys, "fixed-point", "thue_morse", "--seed", "1", "--length", "16")[1] == \
        "1001011001101001\n"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "rank4", "--bound-L", "2000")
    assert code == 0 and "Thue: yes" in out
    code, out, _ = run(capsys, "classify", "rank4", "--bound-L", "2000", "--format", "json")
    assert json.loads(out)["thue_status"] is True


def test_search(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "squarefree", "--rank", "11", "--format", "text")
    assert code == 0 and out == io.fixture_text("appendix_b")
    target = tmp_path / "t.txt"
    assert run(capsys, "search", "squarefree", "--rank", "11", "--threads", "2",
               "--out", str(target))[0] == 0
    assert target.read_text() == out
    assert run(capsys, "search", "squarefree", "--rank", "7", "--no-prune")[1] == \
        run(capsys, "search", "squarefree", "--rank", "7")[1]


def test_search_json_is_thread_independent(capsys):
    a = json.loads(run(capsys, "search", "squarefree", "--rank", "10", "--format", "json")[1])
    b = json.loads(run(capsys, "search", "squarefree", "--rank", "10", "--format", "json",
                       "--threads", "2")[1])
    a.pop("wall_time_ms"), b.pop("wall_time_ms")
    assert a == b


def test_avoid(capsys, tmp_path):
    code, out, _ = run(capsys, "avoid", "--forbid", "12", "--alphabet", "3")
    assert code == 0 and out.splitlines()[0] == "max length 13"
    dot = tmp_path / "tree.dot"
    run(capsys, "avoid", "--forbid", "ab", "--dot", str(dot))
    assert dot.read_text().startswith("digraph")
    out = run(capsys, "avoid", "--alphabet", "2", "--properties", "cube,weak-square")[1]
    assert out.startswith("max length 5")


@pytest.mark.parametrize("argv", [
    ["check-word", "1x2"],
    ["check-word", "123", "--properties", "bogus"],
    ["classify", "no-such-file"],
    ["search", "squarefree", "--rank", "20"],
    ["avoid", "--forbid", "14"],
    ["avoid", "--budget", "0"],
    ["classify", "rank3", "--bound-K", "0"],
    ["reproduce", "--claims", "x"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_reproduce_subset(capsys):
    code, out, _ = run(capsys, "reproduce", "--claims", "8,9")
    assert code == 0
    assert [line.split()[1] for line in out.splitlines()[:2]] == ["PASS", "PASS"]


def test_reproduce_detects_tampered_table(capsys, monkeypatch):
    real = io._manifest()
    monkeypatch.setattr(io, "_manifest", lambda: {
        **real, "appendix_b": {**real["appendix_b"], "sha256": "0" * 64}})
    code, out, _ = run(capsys, "reproduce", "--claims", "1")
    assert code == 1 and "FAIL" in out and "checksum" in out


def test_reproduce_diff_on_edited_row(capsys, monkeypatch):
    text = io.fixture_text("appendix_b").replace("12131232123", "12131232132", 1)
    monkeypatch.setattr("nonrep.reproduce.fixture_text", lambda name: text)
    code, out, _ = run(capsys, "reproduce", "--claims", "1")
    assert code == 1 and "+12131232123" in out


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "nonrep.cli", "check-word", "1212"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "square at 1 period 2" in proc.stdout
