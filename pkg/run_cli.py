#!/usr/bin/env python3
"""
ChoquetKit - Launcher
=====================

Checks the interpreter and dependencies, then hands the arguments to
the CLI. Diagnostics go to stderr so stdout carries only results.

    python run_cli.py check tests/data/cap_sub.txt
"""

import os
import sys

REQUIRED = ['numpy', 'pandas', 'dotenv']


def check_python_version():
    if sys.version_info < (3, 8):
        sys.stderr.write(f"Python 3.8+ required. Current: {sys.version}\n")
        return False
    return True


def check_dependencies():
    missing = []
    for package in REQUIRED:
        try:
            __import__(package)
        except ImportError:
            missing.append(package)

    if missing:
        sys.stderr.write(f"Missing packages: {', '.join(missing)}\n")
        sys.stderr.write("Install with: pip install -r requirements.txt\n")
        return False
    return True


def main():
    if not (check_python_version() and check_dependencies()):
        return 2

    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
    from cli.app import main as cli_main
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
