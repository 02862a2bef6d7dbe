"""Protocol tests for the one-shot runner."""

import json
import subprocess
import sys
import time
from pathlib import Path

RUNNER = Path(__file__).resolve().parents[1] / "src" / "exec_harness" / "runner.py"
CMD = [sys.executable, str(RUNNER)]


def run(request, timeout=30):
    start = time.monotonic()
    proc = subprocess.run(CMD, input=json.dumps(request).encode(),
                          stdout=subprocess.PIPE, stderr=subprocess.PIPE, timeout=timeout)
    elapsed = time.monotonic() - start
    return proc, elapsed


def verdict_of(proc):
    return json.loads(proc.stdout.decode())


def test_pass():
    proc, _ = run({"code": "def f(x):\n    return x + 1\n",
                   "tests": ["assert f(1) == 2", "assert f(0) == 1"]})
    assert proc.returncode == 0
    v = verdict_of(proc)
    assert v["status"] == "pass"
    assert v["failed"] == []


def test_fail_reports_indices():
    proc, _ = run({"code": "def f(x):\n    return x - 1\n",
                   "tests": ["assert f(1) == 2", "assert f(2) == 1"]})
    assert proc.returncode == 0
    v = verdict_of(proc)
    assert v["status"] == "fail"
    assert v["failed"] == [0]


def test_error_on_syntax():
    proc, _ = run({"code": "def f(:\n", "tests": ["assert True"]})
    assert proc.returncode == 0
    v = verdict_of(proc)
    assert v["status"] == "error"
    assert "SyntaxError" in v["message"]


def test_error_on_test_exception():
    proc, _ = run({"code": "def f(x):\n    return x\n", "tests": ["assert f() == 1"]})
    v = verdict_of(proc)
    assert v["status"] == "error"
    assert "test 0" in v["message"]


def test_timeout_within_budget():
    proc, elapsed = run({"code": "while True:\n    pass\n",
                         "tests": ["assert True"], "timeout_s": 1})
    assert proc.returncode == 0
    v = verdict_of(proc)
    assert v["status"] == "timeout"
    assert elapsed < 2.0  # timeout_s + 1 second


def test_candidate_prints_do_not_corrupt_verdict():
    proc, _ = run({"code": "print('noise')\ndef f():\n    print('more')\n    return 1\n",
                   "tests": ["assert f() == 1"]})
    v = verdict_of(proc)
    assert v["status"] == "pass"


def test_candidate_crash_is_error():
    proc, _ = run({"code": "import sys\ndef f():\n    sys.exit(3)\n",
                   "tests": ["assert f() == 1"]})
    v = verdict_of(proc)
    assert v["status"] == "error"


def test_malformed_input_exit_2():
    proc = subprocess.run(CMD, input=b"{not json", stdout=subprocess.PIPE,
                          stderr=subprocess.PIPE, timeout=30)
    assert proc.returncode == 2


def test_missing_fields_exit_2():
    proc = subprocess.run(CMD, input=b"{}", stdout=subprocess.PIPE,
                          stderr=subprocess.PIPE, timeout=30)
    assert proc.returncode == 2


def test_deterministic_for_deterministic_code():
    request = {"code": "def g(n):\n    return n * 2\n", "tests": ["assert g(2) == 4"]}
    first, _ = run(request)
    second, _ = run(request)
    assert first.stdout == second.stdout
