from __future__ import annotations

import json
import re
import subprocess
import sys

import pytest

from laxcat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_counterexample_exit_and_witness(capsys):
    code, out, _ = run(capsys, "laxepi", "coinserter_counterexample.json")
    assert code == 1
    assert "g = alpha_A" in out


def test_json_report_is_stable_modulo_timestamp(capsys):
    _, first, _ = run(capsys, "laxepi", "coinserter_counterexample", "--json")
    _, second, _ = run(capsys, "laxepi", "coinserter_counterexample", "--json")
    strip = lambda s: re.sub(r'"timestamp": "[^"]*"', "", s)
    assert strip(first) == strip(second)
    report = json.loads(first)
    assert report["result"]["witness"]["g"] == "alpha_A"
    assert report["result"]["witness"]["rechecked"] is True


def test_factorize_then_dsb(capsys, tmp_path):
    code, _, _ = run(capsys, "factorize", "coinserter_counterexample", "--out-dir", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["left.json", "mid.json", "right.json"]
    assert run(capsys, "dsb", str(tmp_path / "right.json"))[0] == 0
    assert run(capsys, "laxepi", str(tmp_path / "left.json"))[0] == 0


def test_factorize_gap_reports_failure(capsys, tmp_path):
    code, out, _ = run(capsys, "factorize", "factorization_gap", "--out-dir", str(tmp_path))
    assert code == 1
    assert "left_lax_epi=false" in out


def test_dot_output(capsys, tmp_path):
    code, out, _ = run(capsys, "dot", "remark37", "--item", "C")
    assert code == 0
    assert out.startswith("digraph ") and out.rstrip().endswith("}")
    assert "1_" not in out
    target = tmp_path / "comma.dot"
    assert run(capsys, "dot", "coinserter_counterexample", "--comma", "alpha_A", "-o", str(target))[0] == 0
    assert "fillcolor" in target.read_text()


def test_input_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "dsb", "no_such_file.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "ParseError" in err
    assert run(capsys, "validate", "m3_rejected")[0] == 2
    assert run(capsys, "fillin", "remark37_identity_square")[0] == 2


def test_other_commands(capsys):
    assert run(capsys, "fillin", "factorization_square", "--audit")[0] == 0
    assert run(capsys, "inserter", "coinserter_counterexample", "--items", "F", "G")[0] == 0
    assert run(capsys, "coinserter", "preorders", "--verify-universal")[0] == 0
    assert run(capsys, "vlaxepi", "vcats")[0] == 1
    assert run(capsys, "vlaxepi", "vcats", "--item", "iso_inclusion")[0] == 0
    code, out, _ = run(capsys, "laxepi", "group_homs", "--probe-order", "6")
    assert code == 1 and "S3" in out
    assert run(capsys, "laxepi", "preorders")[0] == 0


def test_caps_flag(capsys):
    assert run(capsys, "laxepi", "remark37", "--max-morphisms", "2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "laxcat.cli", "validate", "remark37"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "bundle" in proc.stdout


def test_selftest_reports_every_suite(capsys):
    code, out, _ = run(capsys, "selftest")
    lines = out.strip().splitlines()
    assert code in (0, 1)
    assert len(lines) == 7
    assert all(line.startswith(("PASS", "FAIL")) for line in lines)
