"""
Tests for one-point extensions, the functors E and R, and the maps e and r.
"""

import pytest

from reps.construct import projective, simple
from reps.homs import hom_dim, is_isomorphic
from reps.literals import parse_module
from reps.rep import direct_sum
from extension.context import context_from_algebras, new_vertex, one_point_extension
from extension.functors import (
    canonical_sequence,
    counit_check,
    extend,
    in_S_perp,
    inflate,
    nakayama_p0,
    restrict,
    split_off_S,
    unit_check,
)
from extension.maps import contains_S, e_map, end_extension_check, in_image, r_map
from extension.nonprojective import module_extension, naive_e
from extension.verify import theorem_a_sweep, verify_boundary, verify_embedding, verify_section2
from tilting.keys import canonical_key
from tilting.pairs import parse_pair, regular_pair, zero_pair
from tools.errors import AlgebraParseError, SplitError


@pytest.fixture(scope="module")
def ctx_a(algebras):
    return context_from_algebras(algebras["B1a"], algebras["A1a"])


@pytest.fixture(scope="module")
def ctx_b(algebras):
    return context_from_algebras(algebras["B1b"], algebras["A1b"])


@pytest.fixture(scope="module")
def ctx_k(algebras):
    return context_from_algebras(algebras["K"], algebras["K2"])


def test_context_from_files(ctx_a):
    """Test that A1a is recognised as B1a[P(2)]."""
    assert ctx_a.v == "3"
    assert ctx_a.p0_vertices == ("2",)
    assert ctx_a.new_arrows == ("g",)
    assert ctx_a.A.dim == ctx_a.B.dim + 1 + ctx_a.P0.total_dim
    assert ctx_a.describe()["arrows"] == {"g": {"source": "3", "target": "2"}}


def test_extra_relation_is_not_projective_extension(algebras):
    """Test that A3 is rejected as a projective extension of B2."""
    assert new_vertex(algebras["B2"], algebras["A3"]) == "5"
    with pytest.raises(ValueError, match="relations beyond"):
        context_from_algebras(algebras["B2"], algebras["A3"])


def test_one_point_extension_builds_algebra(algebras):
    """Test K[P(1)] is the path algebra of 2 -> 1."""
    ctx = one_point_extension(algebras["K"], ["1"])
    assert ctx.v == "2"
    assert ctx.new_arrows == ("x1",)
    assert ctx.A.dim == 3
    assert ctx.A.name == "K[P0]"


def test_one_point_extension_repeated_summand(B1a):
    """Test P0 = P(1) + P(1) gives two parallel arrows."""
    ctx = one_point_extension(B1a, ["1", "1"], names=["u", "w"])
    assert [a.name for a in ctx.A.quiver.arrows_from(ctx.v)] == ["u", "w"]
    assert ctx.A.dim == B1a.dim + 1 + 2 * projective(B1a, "1").total_dim


def test_one_point_extension_errors(B1a):
    """Test bad extension requests."""
    with pytest.raises(ValueError, match="at least one"):
        one_point_extension(B1a, [])
    with pytest.raises(AlgebraParseError, match="already exists"):
        one_point_extension(B1a, ["1"], vertex="2")
    with pytest.raises(AlgebraParseError, match="clash"):
        one_point_extension(B1a, ["1"], names=["a"])


def test_extend_and_restrict(ctx_a):
    """Test R E = id and E M in S^perp."""
    for literal in ("s:1", "s:2", "u:2>1", "p:2"):
        m = parse_module(ctx_a.B, literal)
        em = extend(ctx_a, m)
        assert counit_check(ctx_a, m)
        assert in_S_perp(ctx_a, em)
        assert unit_check(ctx_a, em)
        assert restrict(ctx_a, em).encode() == m.encode()


def test_extend_of_projective_at_new_vertex(ctx_a):
    """Test (E P(2))_3 = P(2)_2 and E is full on Hom spaces."""
    p2 = projective(ctx_a.B, "2")
    assert extend(ctx_a, p2).dims["3"] == p2.dims["2"]
    s2 = simple(ctx_a.B, "2")
    assert hom_dim(extend(ctx_a, p2), extend(ctx_a, s2)) == hom_dim(p2, s2)


def test_unit_fails_off_perp(ctx_a):
    """Test that delta_S is not invertible."""
    assert not unit_check(ctx_a, ctx_a.S)
    assert not in_S_perp(ctx_a, ctx_a.S)


def test_canonical_sequence_of_new_projective(ctx_a):
    """Test 0 -> R P -> P -> S -> 0 for P = P(3)."""
    seq = canonical_sequence(ctx_a, ctx_a.Ptilde)
    assert seq.r == 1
    assert seq.is_exact()
    assert is_isomorphic(seq.quotient, ctx_a.S)


def test_split_off_S(ctx_a):
    """Test splitting E M + S + S."""
    em = extend(ctx_a, parse_module(ctx_a.B, "u:2>1"))
    rest, r = split_off_S(ctx_a, direct_sum([em, ctx_a.S, ctx_a.S], ctx_a.A))
    assert r == 2
    assert is_isomorphic(rest, em)


def test_split_off_S_needs_vanishing_ext(ctx_a):
    """Test that Ext^1(S, S2) != 0 is refused."""
    with pytest.raises(SplitError):
        split_off_S(ctx_a, simple(ctx_a.A, "2"))


def test_inflate_is_zero_at_new_vertex(ctx_a):
    """Test inflation of a B-module."""
    m = inflate(ctx_a, parse_module(ctx_a.B, "u:2>1"))
    assert m.dims["3"] == 0
    assert m.algebra is ctx_a.A


def test_nakayama_of_P0(ctx_a):
    """Test nu P(2) = I(2)."""
    assert nakayama_p0(ctx_a).dim_vector == (1, 2)


def test_e_and_r_on_extremes(ctx_k):
    """Test e and r at the top and bottom of the K posets."""
    top = e_map(ctx_k, regular_pair(ctx_k.B))
    assert contains_S(ctx_k, top)
    assert canonical_key(r_map(ctx_k, top)) == canonical_key(regular_pair(ctx_k.B))
    assert in_image(ctx_k, top)
    assert not in_image(ctx_k, zero_pair(ctx_k.A))
    with pytest.raises(ValueError, match="expects a pair"):
        e_map(ctx_k, regular_pair(ctx_k.A))


def test_r_of_non_image_pair(ctx_k):
    """Test that r drops the new vertex from the support."""
    pair = r_map(ctx_k, parse_pair(ctx_k.A, "s:1 | 2"))
    assert canonical_key(pair) == canonical_key(regular_pair(ctx_k.B))


def test_end_extension(ctx_b):
    """Test the End identity for the tau-tilting module B1b."""
    report = end_extension_check(ctx_b, regular_pair(ctx_b.B).module)
    assert report.ok
    with pytest.raises(ValueError, match="tau-tilting"):
        end_extension_check(ctx_b, simple(ctx_b.B, "1"))


def test_verifiers_on_K(ctx_k):
    """Test every verifier on the smallest extension."""
    for report in (
        verify_section2(ctx_k),
        verify_embedding(ctx_k),
        verify_boundary(ctx_k),
        theorem_a_sweep(ctx_k),
    ):
        assert report.ok, report.failures


def test_embedding_B1b_into_A1b(ctx_b, poset_B1b, poset_A1b):
    """Test e embeds the six B1b pairs as a full subquiver."""
    report = verify_embedding(ctx_b, poset_B1b, poset_A1b)
    assert report.ok, report.failures
    images = {canonical_key(e_map(ctx_b, node)) for node in poset_B1b.nodes}
    assert len(images) == 6


def test_sweep_B1b_A1b(ctx_b, poset_B1b, poset_A1b):
    """Test r on all eighteen A1b pairs and r e = id."""
    assert theorem_a_sweep(ctx_b, poset_B1b, poset_A1b).ok
    assert verify_boundary(ctx_b, poset_B1b, poset_A1b).ok


def test_module_extension_by_projective_matches_extend(algebras):
    """Test E_X = E when X = P(3) over B2."""
    B, A = algebras["B2"], algebras["A2"]
    ctx = context_from_algebras(B, A)
    p3 = projective(B, "3")
    for literal in ("s:3", "u:3>1", "p:4", "s:2"):
        m = parse_module(B, literal)
        assert is_isomorphic(module_extension(A, p3, m), extend(ctx, m))


def test_module_extension_over_A3(algebras):
    """Test E_X over A3 with X = [3|2]."""
    B, A = algebras["B2"], algebras["A3"]
    x = parse_module(B, "u:3>2")
    ext = module_extension(A, x, parse_module(B, "u:3>1"))
    assert ext.dims["5"] == hom_dim(x, parse_module(B, "u:3>1"))
    assert naive_e(A, x, regular_pair(B)).dims["5"] >= 1
    with pytest.raises(ValueError, match="simple top"):
        module_extension(A, parse_module(B, "s:1 + s:2"), simple(B, "1"))


def test_verify_section2_on_A1b(ctx_b, poset_B1b, poset_A1b):
    """Test the extension and translate statements over B1b and A1b."""
    report = verify_section2(ctx_b, poset_B1b, poset_A1b)
    assert report.ok, report.failures
