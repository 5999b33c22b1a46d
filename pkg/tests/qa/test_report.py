"""
Fast tests for verification reports.
"""

import json
import os
import tempfile

import pytest

from qa.report import FAIL, PASS, SKIP, CheckResult, Report, merge


def make_report() -> Report:
    report = Report("demo")
    report.add("dims", True, expected=5, got=5)
    report.add("arrows", False, expected=27, got=26)
    report.skip("golden", "missing")
    return report


def test_counts_and_ok():
    """Test status counting."""
    report = make_report()
    assert report.counts() == {PASS: 1, FAIL: 1, SKIP: 1}
    assert not report.ok
    assert [c.check_id for c in report.failures] == ["arrows"]
    assert Report("empty").ok


def test_bad_status():
    """Test that unknown statuses are refused."""
    with pytest.raises(ValueError, match="status must be one of"):
        CheckResult("x", "MAYBE")


def test_to_json():
    """Test the JSON rendering."""
    record = json.loads(make_report().to_json())
    assert record["suite"] == "demo"
    assert record["ok"] is False
    assert record["checks"][1] == {"check_id": "arrows", "status": FAIL, "details": {"expected": 27, "got": 26}}


def test_to_markdown():
    """Test the summary and check tables."""
    text = make_report().to_markdown()
    assert text.startswith("# qtau verification report - demo")
    assert "| FAIL | 1 |" in text
    assert "| arrows | FAIL | expected=27, got=26 |" in text


def test_write():
    """Test writing both files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        paths = make_report().write(tmpdir)
        assert os.path.exists(paths["json"])
        assert os.path.exists(paths["md"])
        assert paths["json"].endswith("demo.json")


def test_merge_prefixes_suites():
    """Test merging reports under suite prefixes."""
    other = Report("other")
    other.add("x", True)
    merged = merge("all", [make_report(), other])
    assert merged.suite == "all"
    assert [c.check_id for c in merged.checks][-1] == "other/x"
    assert merged.counts()[PASS] == 2


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
