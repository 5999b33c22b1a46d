"""
Extensions by a module X with simple top that need not be projective.

For A = B[X] given as its own algebra file, E_X M has Hom_B(X, M) at the new
vertex, and a new arrow sends phi to phi applied to the top generator of X.
When X is projective this is the usual extension functor; otherwise the maps
e and r stop producing support tau-tilting pairs, and the search below finds
pairs on which that happens.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from loguru import logger

from algebra import linalg as la
from algebra.bound import BoundQuiverAlgebra
from reps.construct import simple
from reps.homs import hom_basis, hom_dim
from reps.literals import diagram
from reps.presentation import tau, top_generators
from reps.rep import Rep, check_rep, direct_sum
from qa.report import Report
from extension.context import new_vertex
from extension.functors import restrict_to
from tilting.completion import cached_hasse
from tilting.hasse import HassePoset
from tilting.pairs import STPair, is_tau_rigid


def _top_vertex(X: Rep) -> Tuple[str, list]:
    generators = top_generators(X)
    if len(generators) != 1:
        raise ValueError(f"X must have a simple top, found {len(generators)} top generators")
    return generators[0]


def module_extension(A: BoundQuiverAlgebra, X: Rep, module: Rep) -> Rep:
    """
    E_X M over A, for B-modules X and M with B the algebra of ``X``.

    Raises:
        ValueError: If X has no simple top, a new arrow misses the top vertex of X,
            or the result violates a relation of A
    """
    B = X.algebra
    v = new_vertex(B, A)
    x0, generator = _top_vertex(X)
    new = A.quiver.arrows_from(v)
    if any(a.target != x0 for a in new):
        raise ValueError(f"Every new arrow of {A.name} must end at the top vertex {x0} of X")
    homs = hom_basis(X, module)
    g = la.from_columns([generator], X.dims[x0])
    block = la.hstack([la.matmul(phi.maps[x0], g) for phi in homs], module.dims[x0])
    width = len(homs)
    dims = dict(module.dims)
    dims[v] = width * len(new)
    mats = dict(module.mats)
    for k, arrow in enumerate(new):
        parts = [block if j == k else la.zeros(module.dims[x0], width) for j in range(len(new))]
        mats[arrow.name] = la.hstack(parts, module.dims[x0])
    result = Rep(A, dims, mats)
    if not check_rep(result):
        raise ValueError(f"E_X of {module.dim_vector} violates the relations of {A.name}")
    return result


def naive_e(A: BoundQuiverAlgebra, X: Rep, pair: STPair) -> Rep:
    """The module part of (E_X M (+) S, Q)."""
    v = new_vertex(X.algebra, A)
    parts = [module_extension(A, X, m) for m in pair.summands] + [simple(A, v)]
    return direct_sum(parts, A)


def _hom_witness(summands: List[Rep]) -> Optional[str]:
    for y in summands:
        for z in summands:
            d = hom_dim(y, tau(z))
            if d:
                return f"Hom({diagram(y)}, tau {diagram(z)}) = {d}"
    return None


@dataclass
class Witnesses:
    extension: List[dict] = field(default_factory=list)
    restriction: List[dict] = field(default_factory=list)


def nonprojective_witnesses(
    B: BoundQuiverAlgebra,
    A: BoundQuiverAlgebra,
    X: Rep,
    poset_B: Optional[HassePoset] = None,
    poset_A: Optional[HassePoset] = None,
) -> Witnesses:
    """B-pairs whose naive extension is not tau-rigid and A-pairs whose restriction is not."""
    poset_B = poset_B if poset_B is not None else cached_hasse(B)
    poset_A = poset_A if poset_A is not None else cached_hasse(A)
    v = new_vertex(B, A)
    found = Witnesses()
    for node in poset_B.nodes:
        module = naive_e(A, X, node)
        if not is_tau_rigid(module):
            parts = [module_extension(A, X, m) for m in node.summands] + [simple(A, v)]
            found.extension.append({"pair": node.label(), "reason": _hom_witness(parts)})
    for node in poset_A.nodes:
        restricted = restrict_to(B, node.module)
        if not is_tau_rigid(restricted):
            parts = [restrict_to(B, m) for m in node.summands]
            found.restriction.append({"pair": node.label(), "reason": _hom_witness(parts)})
    logger.info(
        f"{A.name}: {len(found.extension)} extension witnesses, {len(found.restriction)} restriction witnesses"
    )
    return found


def verify_nonprojective_failure(
    B: BoundQuiverAlgebra,
    A: BoundQuiverAlgebra,
    X: Rep,
    poset_B: Optional[HassePoset] = None,
    poset_A: Optional[HassePoset] = None,
) -> Report:
    """At least one witness in each direction."""
    found = nonprojective_witnesses(B, A, X, poset_B, poset_A)
    report = Report(f"nonprojective-{A.name}")
    report.add("extension_witness", bool(found.extension), count=len(found.extension), first=found.extension[:1])
    report.add("restriction_witness", bool(found.restriction), count=len(found.restriction), first=found.restriction[:1])
    return report
