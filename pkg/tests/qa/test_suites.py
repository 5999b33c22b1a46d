"""
Fast tests for the suite runner and golden comparison.
"""

import os

import pytest

from qa.config import load_verify_config
from qa.report import FAIL, PASS, SKIP, Report
from qa.suites import check_golden, fixture, run_suite, suite_names
from tilting.hasse import hasse

from tests.conftest import FIXTURES_DIR


@pytest.fixture
def cfg():
    resolved = load_verify_config({"verify": {"fixtures_dir": FIXTURES_DIR, "golden_dir": os.path.join(FIXTURES_DIR, "golden")}})
    resolved["max_nodes"] = 1000
    return resolved


def test_suite_names():
    """Test the suite list ends with 'all'."""
    names = suite_names()
    assert names[-1] == "all"
    assert "s3-boundary" in names


def test_unknown_suite(cfg):
    """Test unknown suite names."""
    with pytest.raises(ValueError, match="Unknown suite"):
        run_suite("s9", cfg)


def test_golden_match(cfg):
    """Test the K2 golden file against a fresh enumeration."""
    K2 = fixture(cfg, "K2")
    report = Report("golden")
    check_golden(report, cfg, K2, hasse(K2))
    assert report.counts()[PASS] >= 3
    assert report.ok


def test_golden_mismatch(cfg):
    """Test that a capped enumeration fails the golden comparison."""
    K2 = fixture(cfg, "K2")
    report = Report("golden")
    check_golden(report, cfg, K2, hasse(K2, max_nodes=2))
    assert report.counts()[FAIL] >= 1


def test_golden_missing_is_skipped(cfg):
    """Test the SKIP for algebras without a golden file."""
    K = fixture(cfg, "K")
    report = Report("golden")
    check_golden(report, cfg, K, hasse(K))
    assert report.counts() == {PASS: 0, FAIL: 0, SKIP: 1}
