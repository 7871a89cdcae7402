"""Tests for CLI option validation"""

from utils.validators import OptionValidator


def test_scan_options_within_budget():
    result = OptionValidator.validate_scan_options(2, 10, 3)
    assert result['valid']
    assert result['required_pairs'] == 256
    assert result['within_budget']


def test_scan_options_over_budget():
    result = OptionValidator.validate_scan_options(2, 10, 3, budget=100)
    assert not result['valid']
    assert result['within_budget'] is False

    sampled = OptionValidator.validate_scan_options(2, 10, 3, budget=100, allow_sampling=True)
    assert sampled['valid']
    assert sampled['warnings']


def test_scan_options_bad_values():
    result = OptionValidator.validate_scan_options(0, -1, -2)
    assert not result['valid']
    assert len(result['errors']) == 3


def test_lemma_options():
    assert OptionValidator.validate_lemma_options(2, 7)['valid']
    assert not OptionValidator.validate_lemma_options(3, 4)['valid']
    assert not OptionValidator.validate_lemma_options(-1, 4)['valid']


def test_generate_options():
    assert OptionValidator.validate_generate_options(3, "submodular")['valid']
    result = OptionValidator.validate_generate_options(3, "random")
    assert not result['valid']
    assert "monotone" in result['errors'][0]
    assert not OptionValidator.validate_generate_options(21, "monotone")['valid']


def test_scan_options_cap_the_submodularity_check():
    assert OptionValidator.validate_scan_options(4, 1, 0, budget=256)['valid']
    result = OptionValidator.validate_scan_options(5, 1, 0, budget=256, allow_sampling=True)
    assert not result['valid']
    assert "submodularity" in result['errors'][0]
