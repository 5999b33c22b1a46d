"""
Fast tests for verification configuration.

No file I/O - pure in-memory unit tests.
"""

import copy

import pytest

from qa.config import DEFAULT_VERIFY_CONFIG, _validate_verify_config, load_verify_config


def test_default_verify_config():
    """Test default verification configuration structure."""
    assert DEFAULT_VERIFY_CONFIG["seed"] == 0
    assert DEFAULT_VERIFY_CONFIG["fixtures_dir"] == "./fixtures"
    assert DEFAULT_VERIFY_CONFIG["samples"]["morphisms"] == 500
    assert "counit" in DEFAULT_VERIFY_CONFIG["samples"]


def test_load_verify_config_empty():
    """Test loading when the verify block is missing."""
    resolved = load_verify_config({})

    assert resolved["seed"] == 0
    assert resolved["reports_dir"] == "./reports"


def test_load_verify_config_partial():
    """Test loading with a partial verify block."""
    resolved = load_verify_config({"verify": {"seed": 7, "reports_dir": "/tmp/out"}})

    assert resolved["seed"] == 7
    assert resolved["reports_dir"] == "/tmp/out"
    assert resolved["golden_dir"] == "./fixtures/golden"  # From default


def test_load_verify_config_nested():
    """Test that sample counts merge with the defaults."""
    resolved = load_verify_config({"verify": {"samples": {"counit": 5}}})

    assert resolved["samples"]["counit"] == 5
    assert resolved["samples"]["rigidity"] == 200  # From default


def test_load_verify_config_null_block():
    """Test that an empty YAML block counts as missing."""
    assert load_verify_config({"verify": None})["seed"] == 0


def test_validate_verify_config_valid():
    """Test validation with valid configuration."""
    # Should not raise
    _validate_verify_config(copy.deepcopy(DEFAULT_VERIFY_CONFIG))


def test_validate_verify_config_invalid_seed():
    """Test validation with a negative or boolean seed."""
    cfg = copy.deepcopy(DEFAULT_VERIFY_CONFIG)
    cfg["seed"] = -1
    with pytest.raises(ValueError, match="seed must be a non-negative integer"):
        _validate_verify_config(cfg)

    cfg["seed"] = True
    with pytest.raises(ValueError, match="seed"):
        _validate_verify_config(cfg)


def test_validate_verify_config_invalid_dir():
    """Test validation with a non-string directory."""
    cfg = copy.deepcopy(DEFAULT_VERIFY_CONFIG)
    cfg["golden_dir"] = 3

    with pytest.raises(ValueError, match="golden_dir must be string"):
        _validate_verify_config(cfg)


def test_validate_verify_config_invalid_samples():
    """Test validation with a zero sample count."""
    cfg = copy.deepcopy(DEFAULT_VERIFY_CONFIG)
    cfg["samples"]["approximations"] = 0

    with pytest.raises(ValueError, match="samples.approximations must be a positive integer"):
        _validate_verify_config(cfg)


def test_validate_verify_config_invalid_max_dim():
    """Test validation with a bad dimension cap."""
    cfg = copy.deepcopy(DEFAULT_VERIFY_CONFIG)
    cfg["ar_formula_max_dim"] = "8"

    with pytest.raises(ValueError, match="ar_formula_max_dim must be a positive integer"):
        _validate_verify_config(cfg)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
