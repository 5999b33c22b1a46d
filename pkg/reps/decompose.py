"""
Krull-Schmidt decomposition of representations.

Locality of End(M) is certified with the trace form (rad End(M) is its kernel
in characteristic 0). Non-local endomorphism rings are split along an
idempotent obtained either by Newton lifting of an element that is idempotent
modulo the radical, or as the Fitting projection of an endomorphism shifted by
one of its rational eigenvalues.
"""

from dataclasses import dataclass
from itertools import chain, product
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from algebra import linalg as la
from reps.homs import hom_basis, image, is_isomorphic, kernel, radical_layers, socle
from reps.rep import Rep, RepMorphism, compose, direct_sum
from tools.errors import DecompositionError


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Pairwise non-isomorphic indecomposables with multiplicities."""

    parts: Tuple[Tuple[Rep, int], ...]

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def summands(self) -> List[Rep]:
        return [m for m, _ in self.parts]

    def multiplicity(self, module: Rep) -> int:
        for m, k in self.parts:
            if is_isomorphic(m, module):
                return k
        return 0

    def total(self, algebra=None) -> Rep:
        mods = [m for m, k in self.parts for _ in range(k)]
        return direct_sum(mods, algebra if algebra is not None else (mods[0].algebra if mods else None))

    def basic(self, algebra=None) -> Rep:
        return direct_sum(self.summands, algebra if algebra is not None else (self.summands[0].algebra if self.parts else None))


def sort_key(module: Rep) -> Tuple:
    """Isomorphism invariants first, raw encoding last (only to break ties deterministically)."""
    return (
        module.total_dim,
        module.dim_vector,
        tuple(radical_layers(module)),
        socle(module)[0].dim_vector,
        module.encode(),
    )


def _total(f: RepMorphism) -> la.Matrix:
    return f.total_matrix()


def radical_dimension(endos: Sequence[RepMorphism]) -> int:
    """dim rad End(M) as the nullity of the trace form tr(x y)."""
    totals = [_total(f) for f in endos]
    gram = [
        [_trace(la.matmul(x, y)) for y in totals]
        for x in totals
    ]
    return len(endos) - la.rank(la.mat(gram, len(endos)))


def _trace(m: la.Matrix):
    rows = la.rows_of(m)
    return sum((rows[i][i] for i in range(len(rows))), la.ZERO)


def is_local(module: Rep, endos: Optional[Sequence[RepMorphism]] = None) -> bool:
    endos = hom_basis(module, module) if endos is None else endos
    if len(endos) <= 1:
        return True
    return len(endos) - radical_dimension(endos) == 1


def _power(f: RepMorphism, k: int) -> RepMorphism:
    return RepMorphism(f.source, f.target, {v: la.power(m, k) for v, m in f.maps.items()})


def _shifted(f: RepMorphism, lam) -> RepMorphism:
    return RepMorphism(f.source, f.target, {v: la.sub(m, la.scale(la.eye(m.shape[0]), lam)) for v, m in f.maps.items()})


def _is_idempotent(f: RepMorphism) -> bool:
    return all(la.matmul(m, m) == m for m in f.maps.values())


def _newton_lift(f: RepMorphism, max_steps: int = 64) -> Optional[RepMorphism]:
    """e <- 3e^2 - 2e^3 from an element idempotent modulo a nilpotent ideal."""
    e = f
    for _ in range(max_steps):
        if _is_idempotent(e):
            return e
        maps = {}
        for v, m in e.maps.items():
            sq = la.matmul(m, m)
            maps[v] = la.sub(la.scale(sq, 3), la.scale(la.matmul(sq, m), 2))
        e = RepMorphism(f.source, f.target, maps)
    return None


def _nontrivial(f: RepMorphism) -> bool:
    return 0 < f.rank < f.source.total_dim


def _fitting_split(module: Rep, f: RepMorphism) -> Optional[Tuple[Rep, Rep]]:
    """M = ker g (+) im g with g = (f - lam)^d for a rational eigenvalue lam of f."""
    exponent = max(module.dims.values())
    eigen = sorted({lam for m in f.maps.values() for lam in la.rational_eigenvalues(m)})
    for lam in eigen:
        g = _power(_shifted(f, lam), exponent)
        if _nontrivial(g):
            return kernel(g)[0], image(g)[0]
    return None


def _idempotent_split(module: Rep, e: RepMorphism) -> Tuple[Rep, Rep]:
    complement = RepMorphism(module, module, {v: la.sub(la.eye(m.shape[0]), m) for v, m in e.maps.items()})
    return image(e)[0], image(complement)[0]


def _splitting(module: Rep, endos: Sequence[RepMorphism]) -> Tuple[Rep, Rep]:
    rad_dim = radical_dimension(endos)
    candidates = chain(endos, (compose(g, f) for f, g in product(endos[:8], repeat=2)))
    for f in candidates:
        if f.is_zero() or f.is_isomorphism():
            continue
        square_minus = RepMorphism(module, module, {
            v: la.sub(la.matmul(m, m), m) for v, m in f.maps.items()
        })
        if _in_radical(square_minus, endos, rad_dim):
            e = _newton_lift(f)
            if e is not None and _nontrivial(e):
                return _idempotent_split(module, e)
        parts = _fitting_split(module, f)
        if parts is not None:
            return parts
    raise DecompositionError(
        f"Could not split module with dim vector {module.dim_vector}: End has no rational idempotent among candidates"
    )


def _in_radical(f: RepMorphism, endos: Sequence[RepMorphism], rad_dim: int) -> bool:
    """x is in rad End iff tr(x y) = 0 for every y in End."""
    if rad_dim == 0:
        return f.is_zero()
    x = _total(f)
    return all(_trace(la.matmul(x, _total(y))) == 0 for y in endos)


def _split(module: Rep) -> List[Rep]:
    if module.is_zero():
        return []
    endos = hom_basis(module, module)
    if is_local(module, endos):
        return [module]
    first, second = _splitting(module, endos)
    if first.total_dim + second.total_dim != module.total_dim or first.is_zero() or second.is_zero():
        raise DecompositionError(f"Inconsistent split of dim vector {module.dim_vector}")
    return _split(first) + _split(second)


def is_indecomposable(module: Rep) -> bool:
    return not module.is_zero() and is_local(module)


def decompose(module: Rep) -> Decomposition:
    """Indecomposable summands with multiplicities, in deterministic order."""
    pieces = _split(module)
    groups: List[List] = []
    for piece in sorted(pieces, key=sort_key):
        for group in groups:
            if group[0].dim_vector == piece.dim_vector and is_isomorphic(group[0], piece):
                group[1] += 1
                break
        else:
            groups.append([piece, 1])
    logger.debug(f"decompose {module.dim_vector}: {[(g[0].dim_vector, g[1]) for g in groups]}")
    return Decomposition(tuple((m, k) for m, k in groups))
