"""
Tests for support tau-tilting pairs, mutation and the Hasse quiver.

K and K2 enumerate instantly; the B1b and A1b posets are built once per session.
"""

import pytest

from reps.construct import simple
from reps.random_reps import make_rng, random_base_change
from reps.rep import direct_sum
from tilting.completion import almost_complete_pairs, bongartz, complements
from tilting.hasse import hasse
from tilting.keys import canonical_key
from tilting.mutation import left_mutation, left_mutation_step, mutable_positions
from tilting.pairs import (
    is_stt_pair,
    is_support_tau_tilting,
    is_tau_rigid,
    is_tau_tilting,
    leq,
    less,
    make_pair,
    pair_from_module,
    parse_pair,
    regular_pair,
    zero_pair,
)
from tools.errors import EnumerationIncomplete, MutationError


def same(p, q) -> bool:
    return canonical_key(p) == canonical_key(q)


def test_single_vertex(algebras):
    """Test the two pairs of the field."""
    poset = hasse(algebras["K"])
    assert len(poset) == 2
    assert len(poset.arrows) == 1
    assert poset.complete


def test_pentagon(K2):
    """Test the five pairs of the A2 quiver."""
    poset = hasse(K2)
    assert len(poset) == 5
    assert len(poset.arrows) == 5
    assert poset.is_regular()
    assert not poset.order_violations()
    assert same(poset.nodes[poset.maximum], regular_pair(K2))
    assert same(poset.nodes[poset.minimum], zero_pair(K2))


def test_left_mutations_of_regular_pair(K2):
    """Test both left mutations of K2 = S1 + P2."""
    top = regular_pair(K2)
    assert mutable_positions(top) == [0, 1]
    assert same(left_mutation(top, 0), parse_pair(K2, "p:2 + s:2"))
    step = left_mutation_step(top, 1)
    assert step.added is None
    assert step.added_support == "2"
    assert same(step.result, parse_pair(K2, "s:1 | 2"))


def test_mutation_inside_fac_raises(K2):
    """Test that S2 in Fac P2 cannot be left-mutated."""
    pair = parse_pair(K2, "p:2 + s:2")
    with pytest.raises(MutationError, match="Fac"):
        left_mutation(pair, 0)
    with pytest.raises(MutationError, match="No summand"):
        left_mutation(pair, 5)


def test_pair_checks(K2):
    """Test the support tau-tilting pair predicate."""
    assert is_stt_pair(regular_pair(K2))
    assert is_stt_pair(zero_pair(K2))
    assert not is_stt_pair(parse_pair(K2, "p:2"))
    assert not is_tau_rigid(direct_sum([simple(K2, "1"), simple(K2, "2")], K2))
    assert is_tau_tilting(regular_pair(K2).module)
    assert is_support_tau_tilting(simple(K2, "2"))


def test_order(K2):
    """Test the Fac order on pairs."""
    top, bottom = regular_pair(K2), zero_pair(K2)
    assert leq(bottom, top)
    assert less(bottom, top)
    assert not less(top, top)


def test_canonical_key_ignores_base_change(K2):
    """Test that isomorphic pairs share a key."""
    module = direct_sum([simple(K2, "2"), regular_pair(K2).summands[1]], K2)
    copy, _ = random_base_change(module, make_rng(3))
    assert same(pair_from_module(module), pair_from_module(copy))


def test_parse_pair_drops_repeats(K2):
    """Test that repeated summands collapse."""
    pair = parse_pair(K2, "p:2 + p:2 + s:2")
    assert len(pair.summands) == 2
    assert pair.label() == "[2] + [2|1]"


def test_complements(K2):
    """Test the two completions of (P2, 0)."""
    poset = hasse(K2)
    larger, smaller = complements(parse_pair(K2, "p:2"), poset)
    assert same(larger, regular_pair(K2))
    assert same(smaller, parse_pair(K2, "p:2 + s:2"))
    with pytest.raises(ValueError, match="parts"):
        complements(regular_pair(K2), poset)


def test_complements_need_complete_poset(K2):
    """Test that a capped poset is refused."""
    partial = hasse(K2, max_nodes=2)
    assert not partial.complete
    with pytest.raises(EnumerationIncomplete):
        complements(parse_pair(K2, "p:2"), partial)


def test_bongartz(K2):
    """Test the Bongartz completion of S2."""
    assert same(bongartz(simple(K2, "2"), hasse(K2)), parse_pair(K2, "p:2 + s:2"))


def test_almost_complete_pairs(K2):
    """Test one almost complete pair per edge of the pentagon."""
    poset = hasse(K2)
    almost = almost_complete_pairs(poset)
    assert len(almost) == 5
    for pair in almost:
        larger, smaller = complements(pair, poset)
        assert poset.has_arrow(poset.index_of(larger), poset.index_of(smaller))


def test_B1b_hexagon(poset_B1b):
    """Test the six pairs of B1b."""
    assert len(poset_B1b) == 6
    assert len(poset_B1b.arrows) == 6
    assert poset_B1b.is_regular()
    assert not poset_B1b.order_violations()


def test_A1b_poset(A1b, poset_A1b):
    """Test the eighteen pairs of A1b and some named nodes."""
    assert len(poset_A1b) == 18
    assert len(poset_A1b.arrows) == 27
    assert poset_A1b.is_regular()
    top = poset_A1b.index_of(parse_pair(A1b, "p:1 + p:2 + p:3"))
    below = poset_A1b.index_of(parse_pair(A1b, "s:2 + u:2>1 + u:3>2>1"))
    assert top == poset_A1b.maximum
    assert below is not None and poset_A1b.is_cover(below, top)
    assert poset_A1b.index_of(parse_pair(A1b, "s:2 + u:3>2 | 1")) is not None
    assert poset_A1b.to_networkx().number_of_edges() == 27


def test_make_pair_sorts_summands(K2):
    """Test that summand order does not depend on input order."""
    s1, s2 = simple(K2, "1"), simple(K2, "2")
    assert make_pair(K2, [s2, s1]).label() == make_pair(K2, [s1, s2]).label()


def test_B2_poset(poset_B2):
    """Test the 37 pairs of B2, four neighbours each."""
    assert poset_B2.complete
    assert len(poset_B2) == 37
    assert len(poset_B2.arrows) == 74
    assert poset_B2.is_regular()
    assert not poset_B2.order_violations()


def test_B2_two_completions(poset_B2):
    """Test that every almost complete pair of B2 has two completions joined by an arrow."""
    almost = almost_complete_pairs(poset_B2)
    assert almost
    for pair in almost:
        larger, smaller = complements(pair, poset_B2)
        assert poset_B2.has_arrow(poset_B2.index_of(larger), poset_B2.index_of(smaller))


def test_A2_poset(poset_A2):
    """Test the 168 pairs of A2."""
    assert poset_A2.complete
    assert len(poset_A2) == 168
    assert len(poset_A2.arrows) == 420
    assert poset_A2.is_regular()


def test_threaded_enumeration_matches(A1b, poset_A1b):
    """Test that expanding BFS levels in a thread pool gives the same poset."""
    threaded = hasse(A1b, workers=4)
    assert threaded.keys == poset_A1b.keys
    assert [(a.source, a.target) for a in threaded.arrows] == [(a.source, a.target) for a in poset_A1b.arrows]
