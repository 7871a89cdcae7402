"""CLI Commands Package for ChoquetKit

One module per verb; each exposes a Command subclass.
"""

from .check import CheckCommand
from .integrate import IntegrateCommand
from .prove import ProveCommand
from .scan import ScanCommand
from .lemma import LemmaCommand
from .generate import GenerateCommand

COMMANDS = {
    'check': CheckCommand,
    'integrate': IntegrateCommand,
    'prove': ProveCommand,
    'scan': ScanCommand,
    'lemma': LemmaCommand,
    'generate': GenerateCommand,
}

__all__ = [
    'CheckCommand',
    'IntegrateCommand',
    'ProveCommand',
    'ScanCommand',
    'LemmaCommand',
    'GenerateCommand',
    'COMMANDS',
]
