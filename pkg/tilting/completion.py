"""
Completions of almost complete pairs and Bongartz completion, read off an enumerated poset.
"""

from typing import Dict, List, Optional, Tuple

from loguru import logger

from reps.decompose import decompose
from reps.rep import Rep
from tilting.hasse import HassePoset, hasse
from tilting.keys import PairKey, canonical_key, module_key
from tilting.pairs import STPair, is_tau_rigid, leq, make_pair
from tools.errors import EnumerationIncomplete, TheoremViolation


def cached_hasse(algebra, max_nodes: int = 10_000, workers: int = 1) -> HassePoset:
    """hasse(algebra), computed once per algebra and node cap."""
    store = algebra.cache.setdefault("hasse", {})
    if max_nodes not in store:
        store[max_nodes] = hasse(algebra, max_nodes=max_nodes, workers=workers)
    return store[max_nodes]


def _require_complete(poset: HassePoset) -> None:
    if not poset.complete:
        raise EnumerationIncomplete(
            f"Poset of {poset.algebra.name} is partial ({len(poset)} nodes); raise poset.max_nodes"
        )


def _contains(poset: HassePoset, i: int, ids, support) -> bool:
    node_ids, node_support = poset.keys[i]
    return set(ids) <= set(node_ids) and set(support) <= set(node_support)


def completions(poset: HassePoset, almost: STPair) -> List[int]:
    """Indices of nodes containing every summand and support vertex of ``almost``."""
    ids = [module_key(m) for m in almost.summands]
    return [i for i in range(len(poset)) if _contains(poset, i, ids, almost.support)]


def complements(almost: STPair, poset: Optional[HassePoset] = None) -> Tuple[STPair, STPair]:
    """
    The two completions of an almost complete pair, larger one first.

    Raises:
        ValueError: If ``almost`` does not have n - 1 parts
        EnumerationIncomplete: If the poset is partial
        TheoremViolation: If the number of completions is not two
    """
    alg = almost.algebra
    if almost.size != alg.n - 1:
        raise ValueError(f"{almost.label()} has {almost.size} parts, expected {alg.n - 1}")
    poset = poset if poset is not None else cached_hasse(alg)
    _require_complete(poset)
    found = completions(poset, almost)
    if len(found) != 2:
        raise TheoremViolation(f"{almost.label()} has {len(found)} completions, expected 2")
    first, second = (poset.nodes[i] for i in found)
    if leq(first, second):
        first, second = second, first
    logger.debug(f"complements of {almost.label()}: {first.label()} / {second.label()}")
    return first, second


def bongartz(module: Rep, poset: Optional[HassePoset] = None) -> STPair:
    """
    Maximum pair whose module contains every summand of the tau-rigid ``module``.

    Raises:
        ValueError: If ``module`` is not tau-rigid
        EnumerationIncomplete: If the poset is partial
        TheoremViolation: If the candidates have no unique maximum
    """
    alg = module.algebra
    if not is_tau_rigid(module):
        raise ValueError("Bongartz completion needs a tau-rigid module")
    poset = poset if poset is not None else cached_hasse(alg)
    _require_complete(poset)
    ids = [module_key(m) for m in decompose(module).summands]
    candidates = [i for i in range(len(poset)) if _contains(poset, i, ids, ())]
    tops = [
        i for i in candidates
        if all(leq(poset.nodes[j], poset.nodes[i]) for j in candidates)
    ]
    if len(tops) != 1:
        raise TheoremViolation(f"Bongartz completion: {len(tops)} maximal candidates among {len(candidates)}")
    return poset.nodes[tops[0]]


def almost_complete_pairs(poset: HassePoset) -> List[STPair]:
    """Every pair obtained by dropping one summand or one support vertex of a node, deduplicated."""
    seen: Dict[PairKey, STPair] = {}
    for node in poset.nodes:
        for k in range(len(node.summands)):
            almost = make_pair(node.algebra, node.without(k), node.support)
            seen.setdefault(canonical_key(almost), almost)
        for v in node.support:
            almost = make_pair(node.algebra, node.summands, node.support - {v})
            seen.setdefault(canonical_key(almost), almost)
    return [seen[k] for k in sorted(seen)]
