"""
Verification Configuration

Loads and validates the ``verify`` section of config.yml with sane defaults.
"""

from typing import Any, Dict

from loguru import logger


# Default verification configuration
DEFAULT_VERIFY_CONFIG = {
    "fixtures_dir": "./fixtures",
    "golden_dir": "./fixtures/golden",
    "reports_dir": "./reports",
    "seed": 0,
    "samples": {
        "counit": 200,
        "ext_identities": 200,
        "rigidity": 200,
        "approximations": 100,
        "morphisms": 500,
    },
    "ar_formula_max_dim": 8,
    "random_rep_max_dim": 10,
}


def load_verify_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Load verification configuration with defaults.

    Args:
        config: Main configuration dictionary (from config.yml)

    Returns:
        Verification configuration dictionary with defaults applied
    """
    verify_config = config.get("verify", {}) or {}

    # Apply defaults for missing keys
    resolved = DEFAULT_VERIFY_CONFIG.copy()
    resolved.update(verify_config)

    # Ensure nested dicts are merged properly
    if "samples" in verify_config:
        resolved["samples"] = {**DEFAULT_VERIFY_CONFIG["samples"], **(verify_config["samples"] or {})}

    # Validate configuration
    _validate_verify_config(resolved)

    logger.info(f"Resolved verify config: seed={resolved['seed']}, "
                f"fixtures_dir={resolved['fixtures_dir']}, "
                f"reports_dir={resolved['reports_dir']}")
    logger.debug(f"Samples: {resolved['samples']}")

    return resolved


def _validate_verify_config(verify_config: Dict[str, Any]) -> None:
    """
    Validate verification configuration.

    Args:
        verify_config: Verification configuration dictionary

    Raises:
        ValueError: If configuration is invalid
    """
    seed = verify_config.get("seed")
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise ValueError("verify.seed must be a non-negative integer")

    for key in ("fixtures_dir", "golden_dir", "reports_dir"):
        if not isinstance(verify_config.get(key), str):
            raise ValueError(f"verify.{key} must be string")

    for key, value in verify_config["samples"].items():
        if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
            raise ValueError(f"verify.samples.{key} must be a positive integer")

    for key in ("ar_formula_max_dim", "random_rep_max_dim"):
        value = verify_config.get(key)
        if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
            raise ValueError(f"verify.{key} must be a positive integer")

    logger.debug("Verify configuration validated successfully")
