"""
Fast tests for the qtau command line and its configuration loader.

Each test writes a throwaway config.yml so logs and reports land in tmp_path.
"""

import json
import os

import pytest
import yaml
from loguru import logger

from main import main
from tools.config_loader import load_config
from tools.logging_setup import setup_logging

from tests.conftest import FIXTURES_DIR, fixture_path


@pytest.fixture(autouse=True)
def drop_sinks():
    yield
    logger.remove()


@pytest.fixture
def config_path(tmp_path):
    cfg = {
        "general": {"log_dir": str(tmp_path / "logs")},
        "verify": {
            "fixtures_dir": FIXTURES_DIR,
            "golden_dir": os.path.join(FIXTURES_DIR, "golden"),
            "reports_dir": str(tmp_path / "reports"),
        },
    }
    path = tmp_path / "config.yml"
    path.write_text(yaml.safe_dump(cfg), encoding="utf-8")
    return str(path)


def run(config_path, *argv) -> int:
    return main(["--config", config_path, *argv])


def test_load_config_defaults(tmp_path):
    """Test that a missing file gives the default sections."""
    cfg = load_config(str(tmp_path / "absent.yml"))
    assert cfg["general"]["log_level"] == "WARNING"
    assert cfg["poset"]["max_nodes"] == 10000
    assert cfg["linalg"]["search_rounds"] == 6


def test_load_config_env_overrides(tmp_path, monkeypatch):
    """Test environment overrides."""
    monkeypatch.setenv("QTAU_MAX_NODES", "50")
    monkeypatch.setenv("QTAU_SEED", "9")
    cfg = load_config(str(tmp_path / "absent.yml"))
    assert cfg["poset"]["max_nodes"] == 50
    assert cfg["verify"]["seed"] == 9

    monkeypatch.setenv("QTAU_MAX_NODES", "many")
    with pytest.raises(ValueError, match="QTAU_MAX_NODES must be an integer"):
        load_config(str(tmp_path / "absent.yml"))


def test_tau(config_path, capsys):
    """Test the tau verb."""
    assert run(config_path, "tau", fixture_path("K2"), "s:2") == 0
    assert "tau [2] = [1]" in capsys.readouterr().out


def test_decompose(config_path, capsys):
    """Test multiplicities in the decompose verb."""
    assert run(config_path, "decompose", fixture_path("K2"), "p:1 + p:2 + p:2") == 0
    out = capsys.readouterr().out
    assert "1 x [1]" in out
    assert "2 x [2|1]" in out


def test_mutate_by_literal(config_path, capsys):
    """Test mutating away P2 selected by its literal."""
    assert run(config_path, "mutate", fixture_path("K2"), "p:1 + p:2", "--at", "p:2") == 0
    assert capsys.readouterr().out.strip() == "[1] | P2"


def test_complements(config_path, capsys):
    """Test the complements verb."""
    assert run(config_path, "complements", fixture_path("K2"), "p:2") == 0
    out = capsys.readouterr().out
    assert "larger:  [1] + [2|1]" in out
    assert "smaller: [2] + [2|1]" in out


def test_extend_writes_algebra_and_sidecar(config_path, tmp_path, capsys):
    """Test the extend verb and its .map.yml sidecar."""
    out = tmp_path / "K2x.qa"
    assert run(config_path, "extend", fixture_path("K"), "--at", "1", "--out", str(out)) == 0
    assert out.exists()
    sidecar = yaml.safe_load((tmp_path / "K2x.qa.map.yml").read_text(encoding="utf-8"))
    assert sidecar["new_vertex"] == "2"
    assert sidecar["arrows"] == {"x1": {"source": "2", "target": "1"}}
    assert "dim 3" in capsys.readouterr().out


def test_hasse_exports(config_path, tmp_path, capsys):
    """Test the hasse verb with DOT and JSON output and the e-image highlight."""
    dot, js = tmp_path / "k2.dot", tmp_path / "k2.json"
    code = run(
        config_path, "hasse", fixture_path("K2"), "--dot", str(dot), "--json", str(js), "--base", fixture_path("K")
    )
    assert code == 0
    assert "5 nodes, 5 arrows, complete=True" in capsys.readouterr().out
    assert dot.read_text(encoding="utf-8").count("style=dashed") == 2
    assert len(json.loads(js.read_text(encoding="utf-8"))["nodes"]) == 5


def test_errors_exit_one(config_path):
    """Test that library errors become exit code 1."""
    assert run(config_path, "tau", fixture_path("broken"), "s:1") == 1
    assert run(config_path, "mutate", fixture_path("K2"), "p:2 + s:2", "--at", "0") == 1


def test_verify_suite_writes_report(config_path, tmp_path, capsys):
    """Test a verification suite end to end."""
    reports = tmp_path / "out"
    assert run(config_path, "verify-paper", "s3-figure", "--report-dir", str(reports)) == 0
    assert "0 failed" in capsys.readouterr().out
    record = json.loads((reports / "s3-figure.json").read_text(encoding="utf-8"))
    assert record["ok"] is True


def test_setup_logging_file(tmp_path):
    """Test that DEBUG records reach the log file."""
    path = setup_logging(str(tmp_path / "logs"), "ERROR")
    logger.debug("enumeration level 3")
    logger.complete()
    assert path == tmp_path / "logs" / "qtau.log"
    assert "enumeration level 3" in path.read_text(encoding="utf-8")
