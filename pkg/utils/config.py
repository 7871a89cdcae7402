import os
import logging
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

_PREFIX = "CHOQUET_KIT_"

DEFAULTS = {
    "SCAN_BUDGET": 10_000_000,
    "DENOMINATOR": 1000,
    "GENERATOR_RETRIES": 50,
    "SCAN_WORKERS": 1,
    "CONCAVE_PIECES": 4,
}

_warnings = []


def _int_setting(name):
    """Read a positive integer setting, falling back to its default"""
    raw = os.getenv(_PREFIX + name)
    default = DEFAULTS[name]
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip().replace("_", ""))
    except ValueError:
        _warnings.append(f"{_PREFIX}{name}={raw!r} is not an integer, using {default}")
        return default
    if value < 1:
        _warnings.append(f"{_PREFIX}{name}={value} must be positive, using {default}")
        return default
    return value


# Get configuration values
SCAN_BUDGET = _int_setting("SCAN_BUDGET")
DENOMINATOR = _int_setting("DENOMINATOR")
GENERATOR_RETRIES = _int_setting("GENERATOR_RETRIES")
SCAN_WORKERS = _int_setting("SCAN_WORKERS")
CONCAVE_PIECES = _int_setting("CONCAVE_PIECES")

HISTORY_DB = os.getenv(_PREFIX + "HISTORY_DB", "").strip()
LOG_LEVEL = os.getenv(_PREFIX + "LOG_LEVEL", "WARNING").strip().upper() or "WARNING"

if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
    _warnings.append(f"{_PREFIX}LOG_LEVEL={LOG_LEVEL!r} is unknown, using WARNING")
    LOG_LEVEL = "WARNING"

FEATURES = {
    "scan_history": bool(HISTORY_DB),
    "parallel_scan": SCAN_WORKERS > 1,
}


def load_config():
    """Load and return configuration dictionary"""
    return {
        "scan_budget": SCAN_BUDGET,
        "denominator": DENOMINATOR,
        "generator_retries": GENERATOR_RETRIES,
        "scan_workers": SCAN_WORKERS,
        "concave_pieces": CONCAVE_PIECES,
        "history_db": HISTORY_DB,
        "log_level": LOG_LEVEL,
        "features": dict(FEATURES),
    }


def validate_config():
    """Validate configuration and return a status report"""
    issues = []
    warnings = list(_warnings)
    features_enabled = [feature for feature, enabled in FEATURES.items() if enabled]

    if DENOMINATOR < 2:
        issues.append(f"{_PREFIX}DENOMINATOR must be at least 2 for non-trivial draws")

    if SCAN_BUDGET < 16:
        warnings.append("Scan budget is too small for even n=1 with max value 1")

    if HISTORY_DB and not os.path.isdir(os.path.dirname(os.path.abspath(HISTORY_DB))):
        warnings.append(f"History database directory for {HISTORY_DB} does not exist")

    for warning in warnings:
        logger.debug(f"Config warning: {warning}")

    return {
        'valid': len(issues) == 0,
        'issues': issues,
        'warnings': warnings,
        'features_enabled': features_enabled,
        'total_features': len(features_enabled),
    }


__all__ = [
    "SCAN_BUDGET",
    "DENOMINATOR",
    "GENERATOR_RETRIES",
    "SCAN_WORKERS",
    "CONCAVE_PIECES",
    "HISTORY_DB",
    "LOG_LEVEL",
    "FEATURES",
    "load_config",
    "validate_config",
]
