# Make utility functions available for import
from utils.config import load_config, validate_config
from utils.error_handler import ChoquetKitError, ErrorHandler, exit_code_for

__all__ = [
    "load_config",
    "validate_config",
    "ChoquetKitError",
    "ErrorHandler",
    "exit_code_for",
]
