"""Tests for the error hierarchy and exit-code mapping"""

import pytest

from utils.error_handler import (
    EXIT_INTERNAL,
    EXIT_NEGATIVE,
    EXIT_USAGE,
    BudgetExceededError,
    ChoquetKitError,
    CrossCheckError,
    DegenerateDrawError,
    ErrorHandler,
    FormatError,
    NotSubmodularError,
    WrongLengthError,
    exit_code_for,
    safe_execute,
)


@pytest.mark.parametrize("error,code", [
    (WrongLengthError(4, 3), EXIT_USAGE),
    (FormatError("cap.txt", 3, "bad"), EXIT_USAGE),
    (BudgetExceededError(10, 5), EXIT_USAGE),
    (DegenerateDrawError(5), EXIT_USAGE),
    (NotSubmodularError(), EXIT_NEGATIVE),
    (CrossCheckError("mismatch"), EXIT_INTERNAL),
    (RuntimeError("boom"), EXIT_INTERNAL),
])
def test_exit_code_for(error, code):
    assert exit_code_for(error) == code


def test_error_fields():
    error = FormatError("cap.txt", 3, "missing key 1")
    assert isinstance(error, ChoquetKitError)
    assert error.error_code == "FORMAT_ERROR"
    assert error.message == "Format Error (cap.txt:3): missing key 1"
    assert error.details == {'filename': 'cap.txt', 'line': 3}


def test_format_error_without_line():
    assert FormatError("cap.txt", None, "empty").message == "Format Error (cap.txt): empty"


def test_log_error_result_and_stats():
    handler = ErrorHandler("ChoquetKit.test")
    result = handler.log_error(BudgetExceededError(10, 5), context="scan")
    assert result['success'] is False
    assert result['error_type'] == "BudgetExceededError"
    assert result['exit_code'] == EXIT_USAGE
    assert result['error_id'].startswith("ERR_")

    handler.log_error(ValueError("oops"))
    handler.log_error(ValueError("again"))
    stats = handler.get_error_stats()
    assert stats['total_errors'] == 3
    assert stats['most_common'] == ("ValueError", 2)


def test_unexpected_errors_get_a_generic_message():
    assert ErrorHandler().get_user_message(KeyError("x")).startswith("unexpected error")


def test_safe_execute_returns_fallback():
    def explode():
        raise RuntimeError("disk full")

    assert safe_execute(explode, context="history", fallback_result="skipped") == "skipped"
    assert safe_execute(lambda a, b=0: a + b, 1, b=2) == 3
