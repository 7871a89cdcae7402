"""Command line front end for ChoquetKit"""

from cli.app import ChoquetKitApp, build_parser, main

__all__ = [
    'ChoquetKitApp',
    'build_parser',
    'main',
]
