#!/usr/bin/env python3
"""One-shot sandboxed test runner.

Protocol: read one JSON request {"code": str, "tests": [str, ...],
"timeout_s": number} from stdin, write one JSON verdict {"status":
"pass"|"fail"|"error"|"timeout", "failed": [indices], "message": str} to
stdout. Exit code 0 for any well-formed verdict, 2 for malformed input.

The broker process never runs untrusted code itself: it spawns a fresh
interpreter in worker mode, enforces the wall clock, and kills the child on
overrun, so a hanging or crashing candidate cannot take the caller down.
"""

import json
import subprocess
import sys

DEFAULT_TIMEOUT_S = 5.0


def run_worker() -> int:
    """Execute code + assertions in this (disposable) process."""
    request = json.loads(sys.stdin.read())
    code = request["code"]
    tests = request["tests"]
    verdict = {"status": "pass", "failed": [], "message": ""}
    namespace: dict = {}
    # candidate prints must not corrupt the verdict channel
    import io
    real_stdout = sys.stdout
    try:
        sys.stdout = io.StringIO()
        try:
            exec(compile(code, "<candidate>", "exec"), namespace)
        except BaseException as exc:
            verdict = {"status": "error", "failed": [],
                       "message": f"definition raised {type(exc).__name__}: {exc}"}
        else:
            failed = []
            for index, test in enumerate(tests):
                try:
                    exec(compile(test, f"<test {index}>", "exec"), namespace)
                except AssertionError:
                    failed.append(index)
                except BaseException as exc:
                    verdict = {"status": "error", "failed": failed,
                               "message": f"test {index} raised {type(exc).__name__}: {exc}"}
                    break
            else:
                if failed:
                    verdict = {"status": "fail", "failed": failed,
                               "message": f"{len(failed)} assertion(s) failed"}
    finally:
        sys.stdout = real_stdout
    print(json.dumps(verdict))
    return 0


def run_broker() -> int:
    raw = sys.stdin.read()
    try:
        request = json.loads(raw)
        if not isinstance(request, dict) or "code" not in request or "tests" not in request:
            raise ValueError("request needs 'code' and 'tests'")
        timeout_s = float(request.get("timeout_s", DEFAULT_TIMEOUT_S))
        if timeout_s <= 0:
            raise ValueError("timeout_s must be positive")
        if not request["tests"]:
            raise ValueError("tests must be non-empty")
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        sys.stderr.write(f"malformed request: {exc}\n")
        return 2

    child = subprocess.Popen(
        [sys.executable, __file__, "--worker"],
        stdin=subprocess.PIPE, stdout=subprocess.PIPE, stderr=subprocess.PIPE,
    )
    try:
        out, err = child.communicate(raw.encode("utf-8"), timeout=timeout_s)
    except subprocess.TimeoutExpired:
        child.kill()
        child.communicate()
        print(json.dumps({"status": "timeout", "failed": [],
                          "message": f"no verdict within {timeout_s}s"}))
        return 0
    if err:
        sys.stderr.write(err.decode("utf-8", "replace"))
    try:
        verdict = json.loads(out.decode("utf-8"))
        assert isinstance(verdict, dict) and "status" in verdict
    except Exception:
        verdict = {"status": "error", "failed": [],
                   "message": f"worker died with exit code {child.returncode}"}
    print(json.dumps(verdict))
    return 0


def main() -> int:
    if "--worker" in sys.argv[1:]:
        return run_worker()
    return run_broker()


if __name__ == "__main__":
    sys.exit(main())
