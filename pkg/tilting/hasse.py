"""
Breadth-first enumeration of the Hasse quiver of support tau-tilting pairs.

Starts at (A, 0) and applies every available left mutation. A finite poset
with a maximum is reached entirely by descending chains of covers, so left
mutations suffice. Each BFS level is expanded (optionally in a thread pool),
then its new nodes are sorted by canonical key before they get indices.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx
from loguru import logger

from algebra.bound import BoundQuiverAlgebra
from reps.literals import diagram
from reps.rep import Rep
from tilting.keys import ClassId, PairKey, canonical_key, module_key
from tilting.mutation import MutationStep, left_mutation_step, mutable_positions
from tilting.pairs import STPair, leq, regular_pair

DEFAULT_MAX_NODES = 10_000


@dataclass(frozen=True)
class HasseArrow:
    source: int
    target: int
    position: int
    label: str


@dataclass
class HassePoset:
    algebra: BoundQuiverAlgebra
    nodes: List[STPair] = field(default_factory=list)
    keys: List[PairKey] = field(default_factory=list)
    arrows: List[HasseArrow] = field(default_factory=list)
    complete: bool = True

    def __post_init__(self):
        self._index: Dict[PairKey, int] = {k: i for i, k in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.nodes)

    def index_of(self, pair: STPair) -> Optional[int]:
        return self._index.get(canonical_key(pair))

    def index_of_key(self, key: PairKey) -> Optional[int]:
        return self._index.get(key)

    def successors(self, i: int) -> List[int]:
        """Targets of arrows leaving node i (its left mutations)."""
        return [a.target for a in self.arrows if a.source == i]

    def predecessors(self, i: int) -> List[int]:
        return [a.source for a in self.arrows if a.target == i]

    def degree(self, i: int) -> int:
        return len(self.successors(i)) + len(self.predecessors(i))

    def is_regular(self) -> bool:
        """Every node has total degree n (only meaningful when complete)."""
        n = self.algebra.n
        return all(self.degree(i) == n for i in range(len(self.nodes)))

    @property
    def maximum(self) -> int:
        return 0

    @property
    def minimum(self) -> Optional[int]:
        for i, node in enumerate(self.nodes):
            if not node.summands:
                return i
        return None

    def indecomposables(self) -> List[Rep]:
        """One representative per isomorphism class of summands occurring in the nodes."""
        seen: Dict[ClassId, Rep] = {}
        for node in self.nodes:
            for m in node.summands:
                seen.setdefault(module_key(m), m)
        return [seen[k] for k in sorted(seen)]

    def has_arrow(self, i: int, j: int) -> bool:
        return any(a.source == i and a.target == j for a in self.arrows)

    def is_cover(self, lower: int, upper: int) -> bool:
        """``upper`` covers ``lower``: an arrow upper -> lower."""
        return self.has_arrow(upper, lower)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for i, node in enumerate(self.nodes):
            graph.add_node(i, label=node.label())
        for a in self.arrows:
            graph.add_edge(a.source, a.target, position=a.position, label=a.label)
        return graph

    def below(self, i: int, j: int) -> bool:
        """node i <= node j, read off the quiver (a downward path from j to i)."""
        return i == j or nx.has_path(self.to_networkx(), j, i)

    def order_violations(self) -> List[Tuple[int, int]]:
        """
        Pairs (i, j) where reachability in the quiver disagrees with Fac inclusion.

        Also checks that the arrows are exactly the covers of the Fac order.
        """
        n = len(self.nodes)
        order = nx.DiGraph()
        order.add_nodes_from(range(n))
        for i in range(n):
            for j in range(n):
                if i != j and leq(self.nodes[j], self.nodes[i]):
                    order.add_edge(i, j)
        closure = nx.transitive_closure_dag(self.to_networkx())
        bad = [(i, j) for i in range(n) for j in range(n) if i != j and order.has_edge(i, j) != closure.has_edge(i, j)]
        if not bad and nx.is_directed_acyclic_graph(order):
            covers = set(nx.transitive_reduction(order).edges())
            bad.extend(sorted(covers.symmetric_difference((a.source, a.target) for a in self.arrows)))
        return bad


def _expand(pair: STPair) -> List[MutationStep]:
    return [left_mutation_step(pair, k) for k in mutable_positions(pair)]


def hasse(algebra: BoundQuiverAlgebra, max_nodes: int = DEFAULT_MAX_NODES, workers: int = 1) -> HassePoset:
    """
    Enumerate sτ-tilt(algebra) up to ``max_nodes`` pairs.

    The result has ``complete=False`` when the cap stopped the search; arrows
    towards nodes beyond the cap are dropped.
    """
    start = regular_pair(algebra)
    nodes: List[STPair] = [start]
    keys: List[PairKey] = [canonical_key(start)]
    index: Dict[PairKey, int] = {keys[0]: 0}
    pending: List[Tuple[int, PairKey, int, str]] = []
    complete = True
    level = [0]
    depth = 0
    while level:
        if workers > 1 and len(level) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                expansions = list(pool.map(_expand, [nodes[i] for i in level]))
        else:
            expansions = [_expand(nodes[i]) for i in level]
        fresh: Dict[PairKey, STPair] = {}
        for i, steps in zip(level, expansions):
            for step in steps:
                key = canonical_key(step.result)
                if key not in index and key not in fresh:
                    fresh[key] = step.result
                pending.append((i, key, step.position, diagram(step.removed)))
        level = []
        for key in sorted(fresh):
            if len(nodes) >= max_nodes:
                complete = False
                break
            index[key] = len(nodes)
            level.append(len(nodes))
            nodes.append(fresh[key])
            keys.append(key)
        depth += 1
        logger.debug(f"hasse {algebra.name}: level {depth}, {len(level)} new, {len(nodes)} total")
    arrows = [
        HasseArrow(i, index[key], position, label)
        for i, key, position, label in pending
        if key in index
    ]
    if not complete:
        logger.warning(f"hasse {algebra.name}: stopped at {max_nodes} nodes, poset is partial")
    logger.info(f"hasse {algebra.name}: nodes={len(nodes)} arrows={len(arrows)} complete={complete}")
    return HassePoset(algebra, nodes, keys, arrows, complete)
