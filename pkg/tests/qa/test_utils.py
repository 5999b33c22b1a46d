"""
Fast tests for QA utilities.

Minimal file I/O, use temp directories.
"""

import os
import tempfile

import pytest

from qa.utils import atomic_write_json, atomic_write_text, format_duration, get_report_paths, read_json


def test_get_report_paths():
    """Test report path generation."""
    paths = get_report_paths("/tmp/reports", "s3_boundary")
    assert paths["json"].endswith(os.path.join("reports", "s3_boundary.json"))
    assert paths["md"].endswith(os.path.join("reports", "s3_boundary.md"))


def test_atomic_write_text():
    """Test atomic text writing into a fresh directory."""
    with tempfile.TemporaryDirectory() as tmpdir:
        path = os.path.join(tmpdir, "nested", "out.md")
        atomic_write_text("# Report\n", path)

        assert os.path.exists(path)
        assert not os.path.exists(path + ".tmp")
        with open(path, encoding="utf-8") as f:
            assert f.read() == "# Report\n"


def test_atomic_write_json_is_canonical():
    """Test sorted keys and reading back."""
    with tempfile.TemporaryDirectory() as tmpdir:
        path = os.path.join(tmpdir, "record.json")
        atomic_write_json({"b": 1, "a": [1, 2]}, path)

        with open(path, encoding="utf-8") as f:
            text = f.read()
        assert text.index('"a"') < text.index('"b"')
        assert text.endswith("\n")
        assert read_json(path) == {"a": [1, 2], "b": 1}


def test_read_json_missing():
    """Test that a missing file raises."""
    with pytest.raises(FileNotFoundError):
        read_json("/nonexistent/record.json")


def test_format_duration():
    """Test duration formatting."""
    assert format_duration(45.2) == "45.2s"
    assert format_duration(125.0) == "2m 5.0s"
    assert format_duration(0.5) == "0.5s"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
