"""
Fast tests for module decomposition.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reps.construct import projective, simple
from reps.decompose import decompose, is_indecomposable, is_local
from reps.literals import parse_module
from reps.random_reps import make_rng, random_base_change, random_module
from reps.rep import direct_sum
from qa.properties import decomposition_defect


def test_indecomposable_projectives(B1a):
    """Test that projectives have local endomorphism rings."""
    assert is_indecomposable(projective(B1a, "1"))
    assert is_indecomposable(projective(B1a, "2"))
    assert is_local(simple(B1a, "1"))


def test_zero_module_is_not_indecomposable(B1a):
    """Test the zero module."""
    assert not is_indecomposable(parse_module(B1a, "0"))
    assert len(decompose(parse_module(B1a, "0"))) == 0


def test_multiplicities(B1a):
    """Test P1 + P2 + P2 splits with multiplicity two for P2."""
    p1, p2 = projective(B1a, "1"), projective(B1a, "2")
    parts = decompose(direct_sum([p2, p1, p2], B1a))
    assert len(parts) == 2
    assert parts.multiplicity(p2) == 2
    assert parts.multiplicity(p1) == 1
    assert parts.basic(B1a).dim_vector == (2, 3)


def test_decompose_hidden_sum(B1a):
    """Test a direct sum disguised by a random base change."""
    total = direct_sum([simple(B1a, "1"), parse_module(B1a, "u:2>1"), simple(B1a, "2")], B1a)
    copy, _ = random_base_change(total, make_rng(7))
    parts = decompose(copy)
    assert len(parts) == 3
    assert sorted(m.total_dim for m in parts.summands) == [1, 1, 2]


@pytest.mark.parametrize("literal", ["s:1 + s:1", "u:1>2 + u:1>2 + s:2"])
def test_homogeneous_sums(B1b, literal):
    """Test sums with repeated summands."""
    module = parse_module(B1b, literal)
    parts = decompose(module)
    assert parts.total(B1b).dim_vector == module.dim_vector


@settings(max_examples=8, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**16))
def test_decompose_is_idempotent(B1b, seed):
    """Test that summands are indecomposable and add up to the module."""
    module = random_module(B1b, make_rng(seed), max_dim=6)
    parts = decompose(module)
    for m in parts.summands:
        assert len(decompose(m)) == 1
    if parts.summands:
        assert parts.total(B1b).dim_vector == module.dim_vector


def test_repeated_summands_rebuild_module(B1b):
    """Test that P + P is rebuilt from its decomposition with multiplicity two."""
    p2 = projective(B1b, "2")
    module = direct_sum([p2, p2], B1b)
    parts = decompose(module)
    assert parts.multiplicity(p2) == 2
    assert parts.total(B1b).dim_vector == module.dim_vector
    assert decomposition_defect(module) is None
    assert decomposition_defect(direct_sum([p2, simple(B1b, "1"), p2], B1b)) is None
