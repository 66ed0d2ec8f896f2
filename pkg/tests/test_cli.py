"""Golden-file tests for the command line.

Each directory under ``fixtures/cli`` holds ``cmd`` (arguments), an optional
``stdin``, and the expected ``stdout`` and ``exit`` code. The command runs
with the fixture directory as working directory. The seconds column of TSV
summaries is masked before comparing.

Set ``DISTDOM_REGEN=1`` to rewrite the expected files from the current build.
"""

import os
import re
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from distdom import cli, harness

FIXTURES = Path(__file__).parent / "fixtures" / "cli"
CASES = sorted(p.name for p in FIXTURES.iterdir() if (p / "cmd").exists())
_SECONDS = re.compile(r"\t\d+\.\d\d$", re.MULTILINE)


def _run(args, stdin="", cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "distdom", *args],
        input=stdin,
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def _mask(text: str) -> str:
    return _SECONDS.sub("\t*", text)


@pytest.mark.parametrize("case", CASES)
def test_golden(case):
    here = FIXTURES / case
    args = shlex.split((here / "cmd").read_text())
    stdin = (here / "stdin").read_text() if (here / "stdin").exists() else ""
    proc = _run(args, stdin, cwd=here)
    if os.environ.get("DISTDOM_REGEN"):
        (here / "stdout").write_text(_mask(proc.stdout))
        (here / "exit").write_text(f"{proc.returncode}\n")
    assert proc.returncode == int((here / "exit").read_text())
    assert _mask(proc.stdout) == (here / "stdout").read_text()
    if proc.returncode:
        assert proc.stderr.strip()


def test_pipeline_enumerate_into_recognize():
    trees = _run(["enumerate", "--n", "9"]).stdout
    out = _run(["recognize", "--family", "T_d", "--d", "2"], stdin=trees).stdout.splitlines()
    assert len(out) == 47
    assert sum('"member": true' in line for line in out) == 1


def test_verify_writes_reports(tmp_path):
    cfg = tmp_path / "c.txt"
    cfg.write_text("checks = thm42\nd = 2\ntree_n_max = 7\n")
    assert cli.main(["verify", "--config", str(cfg), "--out", str(tmp_path / "out")]) == 0
    files = sorted(p.name for p in (tmp_path / "out").iterdir())
    assert files == ["summary.tsv", "thm42_d2.json"]


def test_conjecture_counterexample_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(harness, "in_B_d", lambda g, d: False)
    assert cli.main(["conjecture", "--d", "2", "--n-max", "6"]) == 3
    assert '"CONJECTURE-COUNTEREXAMPLE"' in capsys.readouterr().out


def test_verify_violation_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(harness, "in_T_d", lambda t, d: False)
    assert cli.main(["verify", "--checks", "thm35"]) == 2
    assert "FAIL" in capsys.readouterr().out


def test_help_exits_zero():
    proc = _run(["--help"])
    assert proc.returncode == 0 and "exit codes" in proc.stdout
    for sub in ("gamma", "partition", "construct", "recognize", "enumerate", "verify", "conjecture"):
        assert _run([sub, "--help"]).returncode == 0
