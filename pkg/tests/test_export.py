"""
Fast tests for poset JSON and DOT exports.
"""

import json

import pytest

from tilting.hasse import hasse
from tools.export import PosetRecord, export_dot, poset_from_json, poset_to_json


@pytest.fixture(scope="module")
def pentagon(K2):
    return hasse(K2)


def test_json_reimport_reproduces_keys(K2, pentagon):
    """Test that re-imported nodes get the same canonical keys."""
    again = poset_from_json(K2, poset_to_json(pentagon))
    assert again.keys == pentagon.keys
    assert [(a.source, a.target) for a in again.arrows] == [(a.source, a.target) for a in pentagon.arrows]
    assert again.complete


def test_json_layout(pentagon):
    """Test the exported fields."""
    record = json.loads(poset_to_json(pentagon))
    assert record["algebra"] == "K2"
    assert len(record["nodes"]) == 5
    top = record["nodes"][0]
    assert top["support"] == []
    assert {s["diagram"] for s in top["summands"]} == {"[1]", "[2|1]"}
    assert all(s["uniserial"] for s in top["summands"])
    PosetRecord.model_validate(record)


def test_json_wrong_algebra(algebras, pentagon):
    """Test importing onto a different vertex set."""
    with pytest.raises(ValueError, match="vertices"):
        poset_from_json(algebras["K"], poset_to_json(pentagon))


def test_dot_highlight(pentagon):
    """Test node and edge lines and the highlight style."""
    text = export_dot(pentagon, highlight=[0, 1])
    assert text.startswith('digraph "K2" {')
    assert text.count("->") == 5
    assert text.count("style=dashed color=blue") == 2
    assert "  n4 [label=" in text


def test_dot_highlight_must_be_nodes(pentagon):
    """Test that unknown highlight indices are refused."""
    with pytest.raises(ValueError, match="not nodes"):
        export_dot(pentagon, highlight=[9])
