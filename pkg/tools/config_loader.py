"""
Environment-aware configuration loader.

Reads config.yml, fills in defaults for missing sections, and applies
environment variable overrides so runs can be pinned without editing files.

Environment variables (override config.yml values):
- QTAU_SEED: verify.seed for the sampled property suites
- LOG_LEVEL: general.log_level
- QTAU_MAX_NODES: poset.max_nodes
"""

from pathlib import Path
import copy
import os
import yaml

DEFAULT_CONFIG = {
    "general": {"log_level": "WARNING", "log_dir": "./logs"},
    "algebra": {"length_cap": 50},
    "linalg": {"seed": 20240601, "search_rounds": 6},
    "poset": {"max_nodes": 10000, "workers": 1},
    "verify": {},
}


def _env_int(name: str, current):
    value = os.getenv(name)
    if value is None or value == "":
        return current
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}") from None


def load_config(path: str = "config.yml") -> dict:
    """
    Load configuration from YAML file with environment variable overrides.

    Args:
        path: Path to config.yml file (default: config.yml)

    Returns:
        Configuration dictionary with defaults and env vars applied
    """
    cfg = {}
    p = Path(path)
    if p.exists():
        with open(p, "r", encoding="utf-8") as f:
            cfg = yaml.safe_load(f) or {}

    for section, defaults in DEFAULT_CONFIG.items():
        merged = copy.deepcopy(defaults)
        merged.update(cfg.get(section) or {})
        cfg[section] = merged

    # ENV overrides
    cfg["general"]["log_level"] = os.getenv("LOG_LEVEL", cfg["general"]["log_level"])
    cfg["poset"]["max_nodes"] = _env_int("QTAU_MAX_NODES", cfg["poset"]["max_nodes"])
    seed = _env_int("QTAU_SEED", None)
    if seed is not None:
        cfg["verify"]["seed"] = seed

    return cfg
