import json
import subprocess
import sys

import pytest

from asmpp.cli import main


def run_cli(*argv):
    import io
    from contextlib import redirect_stdout
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_enumerate_asm_json():
    code, out = run_cli("enumerate", "asm", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "v1"
    assert data["count"] == 7
    assert [[1, 0, 0], [0, 1, 0], [0, 0, 1]] in data["objects"]


def test_enumerate_nilp_and_tsscpp():
    code, out = run_cli("enumerate", "nilp", "--n", "1")
    data = json.loads(out)
    assert code == 0 and data["count"] == 1
    assert data["objects"][0] == {"paths": [{"steps": "", "extra": "D"}]}
    code, out = run_cli("enumerate", "tsscpp", "--n", "3")
    data = json.loads(out)
    assert code == 0 and data["count"] == 7
    flat = [[int(c) for c in row] for row in
            ("666333", "666333", "666333", "333000", "333000", "333000")]
    assert flat in data["objects"]


def test_enumerate_limit_is_refused():
    code, _ = run_cli("enumerate", "asm", "--n", "9")
    assert code == 2


def test_genfun_routes_agree():
    outputs = []
    for route in ("asm-tilde", "nilp", "integral-A", "integral-U"):
        code, out = run_cli("genfun", route, "--n", "3")
        assert code == 0
        outputs.append(json.loads(out)["coefficients"])
    assert all(o == outputs[0] for o in outputs)
    code, out = run_cli("genfun", "lgv", "--n", "3", "--weights", "t,s,1")
    data = json.loads(out)
    assert data["coefficients"] == outputs[0]
    assert data["variables"] == ["t", "s"]


def test_genfun_csv_format():
    code, out = run_cli("genfun", "asm-tilde", "--n", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("x\\y")
    assert len(lines) == 3


def test_genfun_integral_limit():
    code, _ = run_cli("genfun", "integral-A", "--n", "6")
    assert code == 2


def test_verify_passes_and_reports():
    code, out = run_cli("verify", "dyck", "--n", "1..3")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "v1"
    assert data["pass"] is True
    assert data["total"] == 1 + 2 + 5


def test_verify_vacuous_run_is_legal():
    code, out = run_cli("verify", "wheel", "--n", "2", "--samples", "0")
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 0 and data["pass"] is True


def test_verify_unknown_suite_or_bad_range():
    code, _ = run_cli("verify", "doubly-refined", "--n", "1..9")
    assert code == 2


def test_reports_are_deterministic(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for target in (a, b):
        code, _ = run_cli("verify", "recursion", "--n", "2..3", "--seed", "7",
                          "--out", str(target))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_reports_identical_across_worker_counts(tmp_path):
    a = tmp_path / "w1.json"
    b = tmp_path / "w2.json"
    code, _ = run_cli("verify", "bijections", "--n", "1..3", "--seed", "3",
                      "--workers", "1", "--out", str(a))
    assert code == 0
    code, _ = run_cli("verify", "bijections", "--n", "1..3", "--seed", "3",
                      "--workers", "2", "--out", str(b))
    assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "asmpp.cli", "verify", "even-partitions", "--n", "1..2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True


def test_every_spec_suite_exists():
    for suite in ("doubly-refined", "dyck", "wheel", "recursion", "zeilid",
                  "a-independence", "appendix-d", "even-partitions",
                  "bijections", "involutions", "mrr"):
        code, out = run_cli("verify", suite, "--n",
                            "2" if suite in ("wheel", "recursion") else "1..2",
                            "--samples", "2")
        assert code == 0, suite
        assert json.loads(out)["pass"] is True, suite
