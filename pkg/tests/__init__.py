"""Test suite for ChoquetKit

Unit tests for the engine and utilities, property-based tests for the
integral axioms, and golden-file tests for the command line.
"""

# Test configuration, paths relative to the repository root
TEST_CONFIG = {
    'test_data_dir': 'tests/data',
    'golden_dir': 'tests/data/golden',
}
