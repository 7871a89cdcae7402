"""Centralized error handling for ChoquetKit

Provides the exception hierarchy shared by the engine and the CLI,
consistent error logging, and the mapping from errors to exit codes.
"""

import logging
import traceback
from typing import Dict, Any, Optional, Callable
from datetime import datetime


# Exit-code contract of the command line front end
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class ChoquetKitError(Exception):
    """Base exception class for ChoquetKit"""
    exit_code = EXIT_USAGE

    def __init__(self, message: str, error_code: str = None, details: Dict = None):
        self.message = message
        self.error_code = error_code or "GENERAL_ERROR"
        self.details = details or {}
        self.timestamp = datetime.now()
        super().__init__(self.message)


class ValidationError(ChoquetKitError):
    """Error related to input validation"""
    def __init__(self, field: str, message: str, details: Dict = None,
                 error_code: str = "VALIDATION_ERROR"):
        self.field = field
        super().__init__(
            message=f"Validation Error ({field}): {message}",
            error_code=error_code,
            details=details
        )


class WrongLengthError(ValidationError):
    def __init__(self, expected: int, actual: int):
        super().__init__(
            field="values",
            message=f"expected {expected} values, got {actual}",
            details={'expected': expected, 'actual': actual},
            error_code="WRONG_LENGTH"
        )


class NotNormalizedError(ValidationError):
    def __init__(self, empty_value, full_value):
        super().__init__(
            field="values",
            message=f"capacity must satisfy c(empty)=0 and c(full)=1, got {empty_value} and {full_value}",
            details={'empty': str(empty_value), 'full': str(full_value)},
            error_code="NOT_NORMALIZED"
        )


class NotMonotoneError(ValidationError):
    """Raised with the failing cover pair A < A|{i}"""
    def __init__(self, lower_mask: int, upper_mask: int, lower_value, upper_value):
        self.lower_mask = lower_mask
        self.upper_mask = upper_mask
        super().__init__(
            field="values",
            message=(f"not monotone on cover pair {lower_mask} < {upper_mask}: "
                     f"{lower_value} > {upper_value}"),
            details={'lower_mask': lower_mask, 'upper_mask': upper_mask},
            error_code="NOT_MONOTONE"
        )


class DimensionMismatchError(ValidationError):
    def __init__(self, expected: int, actual: int, what: str = "function"):
        super().__init__(
            field=what,
            message=f"dimension {actual} does not match ground-set size {expected}",
            details={'expected': expected, 'actual': actual},
            error_code="DIMENSION_MISMATCH"
        )


class NegativeInputError(ValidationError):
    def __init__(self, what: str = "function"):
        super().__init__(
            field=what,
            message="entries must be nonnegative",
            error_code="NEGATIVE_INPUT"
        )


class BadLambdaError(ValidationError):
    def __init__(self, lam):
        super().__init__(
            field="lambda",
            message=f"lambda must lie in [0, 1], got {lam}",
            error_code="BAD_LAMBDA"
        )


class WindowTooSmallError(ValidationError):
    def __init__(self, k: int, bound: int):
        super().__init__(
            field="bound",
            message=f"bound {bound} is below 2k+2 = {2 * k + 2}",
            details={'k': k, 'bound': bound},
            error_code="WINDOW_TOO_SMALL"
        )


class NotSubmodularError(ChoquetKitError):
    """The requested bound is only claimed for submodular capacities"""
    exit_code = EXIT_NEGATIVE

    def __init__(self, report=None):
        self.report = report
        super().__init__(
            message="capacity is not submodular",
            error_code="NOT_SUBMODULAR",
            details={'report': str(report) if report is not None else None}
        )


class BudgetExceededError(ChoquetKitError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            message=f"enumeration needs {required} function pairs, budget is {budget}",
            error_code="BUDGET_EXCEEDED",
            details={'required': required, 'budget': budget}
        )


class GenerationError(ChoquetKitError):
    """Error raised by the random capacity generators"""
    def __init__(self, message: str, error_code: str = "GENERATION_ERROR", details: Dict = None):
        super().__init__(message=message, error_code=error_code, details=details)


class DegenerateDrawError(GenerationError):
    def __init__(self, attempts: int):
        super().__init__(
            message=f"every draw gave c(full)=0 before rescaling ({attempts} attempts)",
            error_code="DEGENERATE_DRAW",
            details={'attempts': attempts}
        )


class GenerationFailedError(GenerationError):
    def __init__(self, attempts: int):
        super().__init__(
            message=f"no submodular capacity produced within {attempts} attempts",
            error_code="GENERATION_FAILED",
            details={'attempts': attempts}
        )


class FormatError(ChoquetKitError):
    """Error related to capacity / function file parsing"""
    def __init__(self, filename: str, line: Optional[int], message: str):
        self.filename = filename
        self.line = line
        where = f"{filename}:{line}" if line is not None else filename
        super().__init__(
            message=f"Format Error ({where}): {message}",
            error_code="FORMAT_ERROR",
            details={'filename': filename, 'line': line}
        )


class CrossCheckError(ChoquetKitError):
    """Two independent computations disagreed; always an implementation bug"""
    exit_code = EXIT_INTERNAL

    def __init__(self, message: str, details: Dict = None):
        super().__init__(
            message=f"Internal cross-check failed: {message}",
            error_code="CROSS_CHECK_FAILED",
            details=details
        )


def exit_code_for(error: Exception) -> int:
    """Map an exception onto the CLI exit-code contract"""
    if isinstance(error, ChoquetKitError):
        return error.exit_code
    return EXIT_INTERNAL


class ErrorHandler:
    """Centralized error handling and logging"""

    def __init__(self, logger_name: str = "ChoquetKit"):
        self.logger = logging.getLogger(logger_name)
        self.error_counts = {}

    def log_error(self, error: Exception, context: str = "",
                  user_data: Dict = None) -> Dict[str, Any]:
        """Log error with context and return a result dict"""

        error_id = f"ERR_{datetime.now().strftime('%Y%m%d_%H%M%S_%f')}"

        error_type = type(error).__name__
        self.error_counts[error_type] = self.error_counts.get(error_type, 0) + 1

        error_details = {
            'error_id': error_id,
            'error_type': error_type,
            'message': str(error),
            'context': context,
            'user_data': user_data or {}
        }

        # Expected failures are the user's problem, anything else is ours
        if isinstance(error, ChoquetKitError) and not isinstance(error, CrossCheckError):
            self.logger.info(f"Error {error_id}: {error_details}")
        else:
            error_details['traceback'] = traceback.format_exc()
            self.logger.error(f"Error {error_id}: {error_details}")

        return {
            'success': False,
            'error_id': error_id,
            'error_type': error_type,
            'message': self.get_user_message(error),
            'exit_code': exit_code_for(error),
            'timestamp': datetime.now().isoformat()
        }

    def get_user_message(self, error: Exception) -> str:
        """Get the one-line message shown on stderr"""
        if isinstance(error, ChoquetKitError):
            return error.message
        return f"unexpected error: {error}"

    def get_error_stats(self) -> Dict[str, Any]:
        """Get error statistics"""
        total_errors = sum(self.error_counts.values())
        return {
            'total_errors': total_errors,
            'error_types': dict(self.error_counts),
            'most_common': max(self.error_counts.items(), key=lambda x: x[1]) if self.error_counts else None
        }


def safe_execute(func: Callable, *args, context: str = "",
                 fallback_result: Any = None, **kwargs) -> Any:
    """Run a non-essential side effect, logging instead of raising"""
    try:
        return func(*args, **kwargs)
    except Exception as e:
        global_error_handler.log_error(error=e, context=context or func.__name__)
        return fallback_result


# Global error handler instance
global_error_handler = ErrorHandler()
