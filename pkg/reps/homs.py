"""
Hom spaces, kernels, cokernels, images and radical series of representations.
"""

from itertools import combinations, islice, product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from algebra import linalg as la
from reps.rep import (
    Rep,
    RepMorphism,
    combination,
    compose,
    from_flat,
    identity,
    zero_morphism,
)

_search = {"seed": 20240601, "rounds": 6}

# Coefficients and evaluation cap of the deterministic lattice scan
LATTICE_COEFFS = (-1, 0, 1, 2)
LATTICE_LIMIT = 1024


def configure_search(seed: int, rounds: int) -> None:
    """Seed and round count for maximal-rank searches (``linalg`` config section)."""
    _search["seed"] = int(seed)
    _search["rounds"] = int(rounds)


def _same_algebra(m: Rep, n: Rep) -> None:
    if m.algebra is not n.algebra:
        raise ValueError(f"Modules over different algebras: {m.algebra.name} vs {n.algebra.name}")


def hom_basis(source: Rep, target: Rep) -> List[RepMorphism]:
    """Basis of Hom(source, target): the solution space of the commutation equations."""
    _same_algebra(source, target)
    alg = source.algebra
    if source.is_zero() or target.is_zero():
        return []
    offset: Dict[str, int] = {}
    nvars = 0
    for v in alg.vertices:
        offset[v] = nvars
        nvars += target.dims[v] * source.dims[v]
    if nvars == 0:
        return []

    def var(v: str, r: int, c: int) -> int:
        return offset[v] + r * source.dims[v] + c

    equations = []
    for a in alg.arrows:
        i, j = a.source, a.target
        m_a = la.rows_of(source.mats[a.name])
        n_a = la.rows_of(target.mats[a.name])
        for r in range(target.dims[j]):
            for c in range(source.dims[i]):
                row = [la.ZERO] * nvars
                # (f_j M_a)[r, c]
                for k in range(source.dims[j]):
                    if m_a[k][c]:
                        row[var(j, r, k)] += m_a[k][c]
                # -(N_a f_i)[r, c]
                for k in range(target.dims[i]):
                    if n_a[r][k]:
                        row[var(i, k, c)] -= n_a[r][k]
                if any(row):
                    equations.append(row)
    if not equations:
        solutions = la.eye(nvars)
    else:
        solutions = la.nullspace(la.vector_matrix(equations, nvars))
    return [from_flat(source, target, col) for col in la.columns_of(solutions)]


def hom_dim(source: Rep, target: Rep) -> int:
    return len(hom_basis(source, target))


def submodule(module: Rep, basis: Dict[str, la.Matrix]) -> Tuple[Rep, RepMorphism]:
    """
    Submodule spanned at each vertex by the columns of ``basis[v]``.

    Raises:
        ValueError: If the subspaces are not closed under the arrows
    """
    alg = module.algebra
    dims = {v: basis[v].shape[1] for v in alg.vertices}
    mats = {}
    for a in alg.arrows:
        image = la.matmul(module.mats[a.name], basis[a.source])
        action = la.solve(basis[a.target], image)
        if action is None:
            raise ValueError(f"Subspaces are not closed under arrow {a.name}")
        mats[a.name] = action
    sub = Rep(alg, dims, mats)
    return sub, RepMorphism(sub, module, dict(basis))


def kernel(f: RepMorphism) -> Tuple[Rep, RepMorphism]:
    """Kernel with its inclusion into f.source."""
    return submodule(f.source, {v: la.nullspace(m) for v, m in f.maps.items()})


def image(f: RepMorphism) -> Tuple[Rep, RepMorphism, RepMorphism]:
    """Image with the epimorphism from f.source and the inclusion into f.target."""
    im, inclusion = submodule(f.target, {v: la.column_basis(m) for v, m in f.maps.items()})
    epi_maps = {v: la.solve(inclusion.maps[v], f.maps[v]) for v in f.maps}
    return im, RepMorphism(f.source, im, epi_maps), inclusion


def cokernel(f: RepMorphism) -> Tuple[Rep, RepMorphism]:
    """Cokernel with its projection from f.target."""
    target = f.target
    alg = target.algebra
    quotient = {v: la.left_nullspace(m) for v, m in f.maps.items()}
    dims = {v: quotient[v].shape[0] for v in alg.vertices}
    mats = {}
    for a in alg.arrows:
        q_i, q_j = quotient[a.source], quotient[a.target]
        rhs = la.transpose(la.matmul(q_j, target.mats[a.name]))
        action_t = la.solve(la.transpose(q_i), rhs)
        if action_t is None:
            raise ValueError(f"Image is not a submodule along arrow {a.name}")
        mats[a.name] = la.transpose(action_t)
    coker = Rep(alg, dims, mats)
    return coker, RepMorphism(target, coker, quotient)


def radical(module: Rep) -> Tuple[Rep, RepMorphism]:
    """rad M: at vertex j the sum of the images of all arrows ending at j."""
    alg = module.algebra
    basis = {}
    for v in alg.vertices:
        incoming = [module.mats[a.name] for a in alg.quiver.arrows_into(v)]
        basis[v] = la.column_basis(la.hstack(incoming, module.dims[v]))
    return submodule(module, basis)


def top(module: Rep) -> Rep:
    _, inclusion = radical(module)
    return cokernel(inclusion)[0]


def socle(module: Rep) -> Tuple[Rep, RepMorphism]:
    """soc M: at vertex i the common kernel of all arrows leaving i."""
    alg = module.algebra
    basis = {}
    for v in alg.vertices:
        outgoing = [module.mats[a.name] for a in alg.quiver.arrows_from(v)]
        basis[v] = la.nullspace(la.vstack(outgoing, module.dims[v]))
    return submodule(module, basis)


def radical_layers(module: Rep) -> List[Tuple[int, ...]]:
    """Dimension vectors of rad^k M / rad^(k+1) M, top first."""
    layers = []
    current = module
    while not current.is_zero():
        rad, _ = radical(current)
        layers.append(tuple(c - r for c, r in zip(current.dim_vector, rad.dim_vector)))
        current = rad
    return layers


def socle_layers(module: Rep) -> List[Tuple[int, ...]]:
    """Dimension vectors of the socle series quotients, socle first."""
    layers = []
    current = module
    while not current.is_zero():
        soc, inclusion = socle(current)
        layers.append(soc.dim_vector)
        current, _ = cokernel(inclusion)
    return layers


def max_rank_element(
    morphisms: Sequence[RepMorphism], goal: Optional[int] = None, lattice: bool = False
) -> Optional[RepMorphism]:
    """
    Element of maximal rank in the span of ``morphisms``.

    Basis elements and pairwise sums are scanned first, then integer
    combinations drawn from a seeded generator over a height that grows each
    round; the random rounds stop at ``goal`` or once the rank has not improved
    for two rounds. With ``lattice`` set and ``goal`` still missed, small
    integer combinations of the basis are scanned deterministically before
    giving up.
    """
    if not morphisms:
        return None
    best: Optional[RepMorphism] = None

    def better(f: RepMorphism) -> bool:
        nonlocal best
        if best is None or f.rank > best.rank:
            best = f
        return goal is not None and best.rank >= goal

    for f in morphisms:
        if better(f):
            return best
    if len(morphisms) <= 10:
        for f, g in combinations(morphisms, 2):
            if better(f + g):
                return best
    rng = np.random.default_rng(_search["seed"])
    stale = 0
    for rnd in range(_search["rounds"]):
        height = 4 ** (rnd + 2)
        coeffs = rng.integers(-height, height + 1, size=len(morphisms))
        if not coeffs.any():
            continue
        before = best.rank
        if better(combination(morphisms, coeffs)):
            return best
        stale = stale + 1 if best.rank == before else 0
        if stale >= 2:
            break
    if lattice and goal is not None:
        for coeffs in _lattice(len(morphisms)):
            if better(combination(morphisms, coeffs)):
                logger.debug(f"Rank {goal} reached by lattice combination {coeffs}")
                return best
    return best


def _lattice(n: int):
    """
    Coefficient vectors of the fallback scan, at most LATTICE_LIMIT of them.

    Every vector over LATTICE_COEFFS when that fits under the cap, otherwise
    vectors supported on three basis elements.
    """
    if len(LATTICE_COEFFS) ** n <= LATTICE_LIMIT:
        vectors = (c for c in product(LATTICE_COEFFS, repeat=n) if any(c))
    else:
        nonzero = [c for c in LATTICE_COEFFS if c]
        vectors = (
            tuple(dict(zip(support, values)).get(k, 0) for k in range(n))
            for support in combinations(range(n), 3)
            for values in product(nonzero, repeat=3)
        )
    return islice(vectors, LATTICE_LIMIT)


def find_monomorphism(source: Rep, target: Rep) -> Optional[RepMorphism]:
    """An injective morphism source -> target, if the Hom space contains one."""
    if source.is_zero():
        return RepMorphism(source, target, {})
    f = max_rank_element(hom_basis(source, target), goal=source.total_dim)
    return f if f is not None and f.is_injective() else None


def find_epimorphism(source: Rep, target: Rep) -> Optional[RepMorphism]:
    if target.is_zero():
        return RepMorphism(source, target, {})
    f = max_rank_element(hom_basis(source, target), goal=target.total_dim)
    return f if f is not None and f.is_surjective() else None


def _invariants(module: Rep) -> Tuple:
    return (module.dim_vector, tuple(radical_layers(module)), socle(module)[0].dim_vector)


def is_isomorphic(m: Rep, n: Rep) -> bool:
    """Equal dimension vectors and an invertible element in Hom(m, n)."""
    _same_algebra(m, n)
    if m.dim_vector != n.dim_vector:
        return False
    if m.is_zero():
        return True
    if m.encode() == n.encode():
        return True
    if _invariants(m) != _invariants(n):
        return False
    homs = hom_basis(m, n)
    if len(homs) != hom_dim(m, m) or len(homs) != hom_dim(n, m):
        return False
    f = max_rank_element(homs, goal=m.total_dim, lattice=True)
    found = f is not None and f.is_isomorphism()
    logger.trace(f"is_isomorphic {m.dim_vector}: {found}")
    return found


def span_contains(vectors: Sequence[Sequence], target: Sequence) -> bool:
    """True iff ``target`` is a linear combination of ``vectors``."""
    if not any(target):
        return True
    if not vectors:
        return False
    return la.span_rank(list(vectors) + [list(target)]) == la.span_rank(vectors)


def factors_through(g: RepMorphism, f: RepMorphism) -> bool:
    """Is there h with h o f = g (f: X -> U, g: X -> W)?"""
    candidates = [compose(h, f).flat() for h in hom_basis(f.target, g.target)]
    return span_contains(candidates, g.flat())


def composition_span_rank(maps: Sequence[RepMorphism]) -> int:
    """Dimension of the span of a set of parallel morphisms."""
    return la.span_rank([f.flat() for f in maps]) if maps else 0


def _retraction(s: RepMorphism, back: Sequence[RepMorphism]) -> Optional[RepMorphism]:
    """t in span(back) with t o s = id, if one exists."""
    goal = identity(s.source).flat()
    columns = [compose(t, s).flat() for t in back]
    coeffs = la.solve_vector(la.from_columns(columns, len(goal)), goal)
    if coeffs is None:
        return None
    return combination(back, coeffs)


def _generic_candidates(morphisms: Sequence[RepMorphism]):
    yield from morphisms
    if len(morphisms) <= 10:
        for f, g in combinations(morphisms, 2):
            yield f + g
    rng = np.random.default_rng(_search["seed"])
    for rnd in range(2 * _search["rounds"]):
        height = 4 ** (rnd + 2)
        coeffs = rng.integers(-height, height + 1, size=len(morphisms))
        if coeffs.any():
            yield combination(morphisms, coeffs)


def find_split_monomorphism(source: Rep, target: Rep) -> Optional[Tuple[RepMorphism, RepMorphism]]:
    """
    (s, t) with t o s = id_source, i.e. ``source`` is a direct summand of ``target``.

    Split monomorphisms form a dense open subset of Hom(source, target) when
    they exist, so generic combinations of a basis are tried in turn.
    """
    if source.is_zero():
        return zero_morphism(source, target), zero_morphism(target, source)
    homs = hom_basis(source, target)
    back = hom_basis(target, source)
    if not homs or not back:
        return None
    for s in _generic_candidates(homs):
        if not s.is_injective():
            continue
        t = _retraction(s, back)
        if t is not None:
            return s, t
    return None
