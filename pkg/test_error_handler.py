#!/usr/bin/env python3
"""
Tests for exit-code mapping and the CLI error decorator
"""

import io
import sys

from error_handler import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_SOLVER_FAILURE,
    EXIT_USER_ERROR,
    DomainError,
    GroupValidationError,
    IndexSetSyntaxError,
    OracleInfeasibleError,
    SolverError,
    VerificationMismatchError,
    exit_code_for,
    handle_errors,
)


def test_exit_code_for():
    assert exit_code_for(GroupValidationError("bad", law="identity")) == EXIT_USER_ERROR
    assert exit_code_for(IndexSetSyntaxError("bad", position=3)) == EXIT_USER_ERROR
    assert exit_code_for(OracleInfeasibleError(10, 5)) == EXIT_USER_ERROR
    assert exit_code_for(DomainError("x <= 0")) == EXIT_USER_ERROR
    assert exit_code_for(SolverError("stalled", iterate=[1.0])) == EXIT_SOLVER_FAILURE
    assert exit_code_for(VerificationMismatchError("1 of 2 checks disagree")) == EXIT_MISMATCH
    assert exit_code_for(FileNotFoundError("missing.tbl")) == EXIT_USER_ERROR
    assert exit_code_for(RuntimeError("unexpected")) == EXIT_SOLVER_FAILURE


def test_exception_payloads():
    e = GroupValidationError("row 2 is not a permutation", law="invertibility")
    assert e.law == "invertibility" and "invertibility law violated" in str(e)
    e = SolverError("no root", iterate=[1.0, 2.0], residuals=[0.5], trace=[("double", 2.0)])
    assert e.iterate == (1.0, 2.0) and e.residuals == (0.5,) and len(e.trace) == 1
    e = VerificationMismatchError("disagree", [{"n": 3}])
    assert e.mismatches == [{"n": 3}]


def test_handle_errors_returns_exit_codes():
    stream = io.StringIO()

    @handle_errors("demo", stream=stream)
    def run(exc=None):
        if exc is not None:
            raise exc
        return EXIT_OK

    assert run() == EXIT_OK
    assert run(SolverError("stalled")) == EXIT_SOLVER_FAILURE
    assert run(VerificationMismatchError("disagree")) == EXIT_MISMATCH
    assert run(OracleInfeasibleError(100, 10)) == EXIT_USER_ERROR
    assert run(ValueError("bad number")) == EXIT_USER_ERROR
    assert run(OverflowError("math range error")) == EXIT_SOLVER_FAILURE
    assert run(ZeroDivisionError("float division by zero")) == EXIT_SOLVER_FAILURE
    lines = stream.getvalue().splitlines()
    assert lines[-1] == "error: ZeroDivisionError: float division by zero"
    assert len(lines) == 6 and all(line.startswith("error: ") for line in lines)


if __name__ == "__main__":
    print("=" * 60)
    print("wreathcount - error handling tests")
    print("=" * 60)
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
                print(f"PASS {name}")
            except Exception as e:
                failed += 1
                print(f"FAIL {name}: {e!r}")
    print("=" * 60)
    sys.exit(1 if failed else 0)
