"""Input validation utilities for ChoquetKit

Validates command options before any computation starts. Every
validator returns the same ``{valid, errors, warnings}`` dict shape.
"""

import logging
from typing import Any, Dict

from engine.capacity import MAX_GROUND_SET
from utils import config

logger = logging.getLogger(__name__)

GENERATOR_KINDS = ("monotone", "submodular")


def _result() -> Dict[str, Any]:
    return {'valid': False, 'errors': [], 'warnings': []}


def _finish(result: Dict[str, Any]) -> Dict[str, Any]:
    result['valid'] = len(result['errors']) == 0
    for warning in result['warnings']:
        logger.warning(warning)
    return result


class OptionValidator:
    """Validates CLI option sets"""

    @classmethod
    def validate_ground_set(cls, n: int, result: Dict[str, Any]) -> None:
        if not isinstance(n, int) or n < 1:
            result['errors'].append(f"--n must be a positive integer, got {n!r}")
        elif n > MAX_GROUND_SET:
            result['errors'].append(f"--n {n} exceeds the practical bound {MAX_GROUND_SET}")

    @classmethod
    def validate_scan_options(cls, n: int, count: int, max_value: int,
                              budget: int = None, allow_sampling: bool = False) -> Dict[str, Any]:
        result = _result()
        budget = budget or config.SCAN_BUDGET
        cls.validate_ground_set(n, result)
        if count < 0:
            result['errors'].append(f"--count must be nonnegative, got {count}")
        if max_value < 0:
            result['errors'].append(f"--max-value must be nonnegative, got {max_value}")
        if result['errors']:
            return _finish(result)

        # every scanned capacity also gets the exhaustive submodularity check; it cannot be sampled
        subset_pairs = 4 ** n
        if subset_pairs > budget:
            result['errors'].append(
                f"exhaustive submodularity check needs {subset_pairs} subset pairs, over the budget {budget}")

        required = (max_value + 1) ** (2 * n)
        result['required_pairs'] = required
        result['within_budget'] = required <= budget
        if required > budget:
            if allow_sampling:
                result['warnings'].append(
                    f"{required} pairs exceed the budget {budget}; falling back to sampling")
            else:
                result['errors'].append(f"{required} pairs exceed the budget {budget}")
        if count == 0:
            result['warnings'].append("--count 0 scans nothing")
        return _finish(result)

    @classmethod
    def validate_lemma_options(cls, k: int, bound: int) -> Dict[str, Any]:
        result = _result()
        if k < 0:
            result['errors'].append(f"--k must be nonnegative, got {k}")
        elif bound < 2 * k + 2:
            result['errors'].append(f"--bound {bound} is below 2k+2 = {2 * k + 2}")
        return _finish(result)

    @classmethod
    def validate_generate_options(cls, n: int, kind: str) -> Dict[str, Any]:
        result = _result()
        cls.validate_ground_set(n, result)
        if kind not in GENERATOR_KINDS:
            result['errors'].append(f"--kind must be one of {', '.join(GENERATOR_KINDS)}, got {kind!r}")
        if isinstance(n, int) and n > 12:
            result['warnings'].append("submodularity verification is O(4^n); large n is slow")
        return _finish(result)
