"""Shared fixtures: the three reference capacities and their data files"""

from fractions import Fraction
from pathlib import Path

import pytest

from engine.capacity import build_capacity
from tests import TEST_CONFIG

ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = ROOT / TEST_CONFIG["test_data_dir"]
GOLDEN_DIR = ROOT / TEST_CONFIG["golden_dir"]


@pytest.fixture
def cap_add():
    """Uniform probability on two points"""
    return build_capacity(2, [0, Fraction(1, 2), Fraction(1, 2), 1])


@pytest.fixture
def cap_sub():
    return build_capacity(2, [0, Fraction(7, 10), Fraction(7, 10), 1])


@pytest.fixture
def cap_bad():
    """Monotone and normalized, fails submodularity on ({0}, {1})"""
    return build_capacity(2, [0, Fraction(1, 10), Fraction(1, 10), 1])


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def golden():
    def read(name):
        return (GOLDEN_DIR / name).read_text(encoding="utf-8")
    return read


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path as str"""
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
