"""Base Command Class for ChoquetKit

Provides option validation, error-to-exit-code mapping, timing and
output handling shared by every CLI verb.
"""

from abc import ABC, abstractmethod
from argparse import Namespace
from typing import Dict, Any, Optional
import logging
import sys
import time
from datetime import datetime

from utils.error_handler import EXIT_OK, ValidationError, global_error_handler
from utils.sqlite_logger import SQLiteLogger


class Command(ABC):
    """Abstract base class for all ChoquetKit verbs"""

    def __init__(self, name: str, history: Optional[SQLiteLogger] = None, version: str = "1.0.0"):
        self.name = name
        self.version = version
        self.history = history
        self.created_at = datetime.now()
        self.logger = logging.getLogger(f"ChoquetKit.{self.name}")
        self.quiet = False
        self.output_format = "text"
        self.metrics = {
            'total_runs': 0,
            'successful_runs': 0,
            'failed_runs': 0,
            'average_response_time': 0.0
        }

    @abstractmethod
    def process(self, args: Namespace) -> int:
        """Run the verb and return its exit status - implemented by subclasses"""
        pass

    def validate_input(self, args: Namespace) -> Dict[str, Any]:
        """Validate options before any computation - can be overridden"""
        return {'valid': True, 'errors': [], 'warnings': []}

    def emit(self, text: str) -> None:
        """Write result text to stdout unless --quiet"""
        if self.quiet:
            return
        if not text.endswith("\n"):
            text += "\n"
        sys.stdout.write(text)

    def machine(self) -> bool:
        return self.output_format == "machine"

    def log_request(self, status: int, response_time: float) -> None:
        self.metrics['total_runs'] += 1
        if status == EXIT_OK:
            self.metrics['successful_runs'] += 1
        else:
            self.metrics['failed_runs'] += 1

        total_time = self.metrics['average_response_time'] * (self.metrics['total_runs'] - 1)
        self.metrics['average_response_time'] = (total_time + response_time) / self.metrics['total_runs']

        self.logger.info(f"{self.name} finished with status {status} in {response_time:.2f}s")

    def execute(self, args: Namespace) -> int:
        """Validate, process, and map any error onto the exit-code contract"""
        start_time = time.time()
        self.quiet = getattr(args, 'quiet', False)
        self.output_format = getattr(args, 'format', 'text')

        try:
            validation = self.validate_input(args)
            if not validation['valid']:
                raise ValidationError("options", "; ".join(validation['errors']), details=validation)
            status = self.process(args)

        except Exception as e:
            result = global_error_handler.log_error(e, context=self.name)
            sys.stderr.write(f"error: {result['message']}\n")
            status = result['exit_code']

        self.log_request(status, time.time() - start_time)
        return status

    def get_metrics(self) -> Dict[str, Any]:
        return {
            'command': self.name,
            'version': self.version,
            'created_at': self.created_at.isoformat(),
            **self.metrics
        }
