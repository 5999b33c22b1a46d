"""
Isomorphism-invariant keys for modules and pairs.

Indecomposables are bucketed by a signature of isomorphism invariants and
resolved inside a bucket with ``is_isomorphic``. The registry lives in the
algebra's cache so keys agree across every poset built over that algebra.
"""

import threading
from typing import Dict, List, Tuple

from algebra.bound import BoundQuiverAlgebra
from algebra.quiver import sorted_vertices
from reps.construct import injective, projective
from reps.homs import hom_dim, is_isomorphic, radical_layers, socle
from reps.rep import Rep

ClassId = Tuple[Tuple, int]
PairKey = Tuple[Tuple[ClassId, ...], Tuple[str, ...]]


def signature(module: Rep) -> Tuple:
    """Dimension vector, radical layers, socle, and Hom dimensions to/from projectives and injectives."""
    alg = module.algebra
    return (
        module.dim_vector,
        tuple(radical_layers(module)),
        socle(module)[0].dim_vector,
        hom_dim(module, module),
        tuple(hom_dim(module, projective(alg, v)) for v in alg.vertices),
        tuple(hom_dim(injective(alg, v), module) for v in alg.vertices),
    )


class IsoClassRegistry:
    """Assigns a stable id to each isomorphism class of indecomposables seen so far."""

    def __init__(self, algebra: BoundQuiverAlgebra):
        self.algebra = algebra
        self._buckets: Dict[Tuple, List[Rep]] = {}
        self._lock = threading.Lock()

    def class_id(self, module: Rep) -> ClassId:
        sig = signature(module)
        with self._lock:
            bucket = self._buckets.setdefault(sig, [])
            for index, rep in enumerate(bucket):
                if is_isomorphic(rep, module):
                    return sig, index
            bucket.append(module)
            return sig, len(bucket) - 1

    def representative(self, class_id: ClassId) -> Rep:
        sig, index = class_id
        return self._buckets[sig][index]

    def __len__(self) -> int:
        return sum(len(b) for b in self._buckets.values())


def registry_for(algebra: BoundQuiverAlgebra) -> IsoClassRegistry:
    registry = algebra.cache.get("iso_registry")
    if registry is None:
        registry = algebra.cache.setdefault("iso_registry", IsoClassRegistry(algebra))
    return registry


def module_key(module: Rep) -> ClassId:
    return registry_for(module.algebra).class_id(module)


def canonical_key(pair) -> PairKey:
    """Sorted class ids of the summands together with the sorted support."""
    registry = registry_for(pair.algebra)
    ids = tuple(sorted(registry.class_id(m) for m in pair.summands))
    return ids, tuple(sorted_vertices(pair.support))
