"""
Fac membership and minimal left add(U)-approximations.
"""

from typing import List, Sequence, Tuple, Union

from loguru import logger

from algebra import linalg as la
from reps.homs import factors_through, hom_basis, span_contains
from reps.rep import Rep, RepMorphism, compose, direct_sum, row_morphism, zero_morphism, zero_rep

Summands = Union[Rep, Sequence[Rep]]


def _as_sum(modules: Summands, algebra) -> Rep:
    if isinstance(modules, Rep):
        return modules
    return direct_sum(list(modules), algebra)


def fac_contains(u: Summands, x: Rep) -> bool:
    """True iff the evaluation map U^(dim Hom(U, X)) -> X is surjective."""
    if x.is_zero():
        return True
    total = _as_sum(u, x.algebra)
    homs = hom_basis(total, x)
    if not homs:
        return False
    for v in x.algebra.vertices:
        if x.dims[v] and la.rank(la.hstack([f.maps[v] for f in homs], x.dims[v])) < x.dims[v]:
            return False
    return True


def min_left_approx(x: Rep, u: Sequence[Rep]) -> RepMorphism:
    """
    Minimal left add(U)-approximation X -> U' for a basic U given by its summands.

    Starts from the evaluation map into (+)_k U_k^(dim Hom(X, U_k)) and drops
    one component at a time while it factors through the remaining ones. A
    component that survives is independent modulo the radical compositions of
    the others, so the result is left minimal.
    """
    alg = x.algebra
    components: List[Tuple[int, RepMorphism]] = [
        (k, h) for k, target in enumerate(u) for h in hom_basis(x, target)
    ]
    if not components:
        return zero_morphism(x, zero_rep(alg))
    between = {
        (j, k): hom_basis(u[j], u[k]) for j in range(len(u)) for k in range(len(u))
    }
    kept = list(range(len(components)))
    for c in range(len(components)):
        rest = [d for d in kept if d != c]
        k, h = components[c]
        spanning = [
            compose(phi, components[d][1]).flat()
            for d in rest
            for phi in between[(components[d][0], k)]
        ]
        if span_contains(spanning, h.flat()):
            kept = rest
    approx = row_morphism([components[c][1] for c in kept], x)
    logger.debug(f"min_left_approx {x.dim_vector}: {len(components)} -> {len(kept)} components")
    return approx


def is_left_approximation(f: RepMorphism, u: Sequence[Rep]) -> bool:
    """Every map X -> U_k factors through f."""
    return all(factors_through(g, f) for target in u for g in hom_basis(f.source, target))
