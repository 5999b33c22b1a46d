"""
Seeded random modules and morphisms for the property suites.

Every module over a finite-dimensional algebra is a cokernel of a map between
sums of indecomposable projectives, so random path-coordinate maps give a
sample that reaches all modules of bounded dimension.
"""

from typing import Optional, Tuple

import numpy as np

from algebra import linalg as la
from algebra.bound import BoundQuiverAlgebra
from reps.construct import projective, projective_morphism, projective_sum
from reps.homs import cokernel, hom_basis
from reps.rep import Rep, RepMorphism, combination, zero_morphism

COEFF_RANGE = 3


def _coeffs(rng: np.random.Generator, size: int):
    return [int(c) for c in rng.integers(-COEFF_RANGE, COEFF_RANGE + 1, size=size)]


def _pick_vertices(algebra: BoundQuiverAlgebra, rng: np.random.Generator, count: int, budget: int):
    chosen, used = [], 0
    for _ in range(count):
        v = algebra.vertices[int(rng.integers(len(algebra.vertices)))]
        size = projective(algebra, v).total_dim
        if used + size > budget:
            continue
        chosen.append(v)
        used += size
    return chosen


def random_module(algebra: BoundQuiverAlgebra, rng: np.random.Generator, max_dim: int = 10) -> Rep:
    """Cokernel of a random map P1 -> P0 with dim P0 <= ``max_dim``."""
    p0 = projective_sum(algebra, _pick_vertices(algebra, rng, int(rng.integers(1, 4)), max_dim))
    p1 = projective_sum(algebra, _pick_vertices(algebra, rng, int(rng.integers(0, 4)), 4 * max_dim))
    entries = {}
    for s, u in enumerate(p1.vertices):
        for t, v in enumerate(p0.vertices):
            paths = algebra.basis_paths(v, u)
            if not paths:
                continue
            coeffs = _coeffs(rng, len(paths))
            elem = {p: la.qq(c) for p, c in zip(paths, coeffs) if c}
            if elem:
                entries[(t, s)] = elem
    f = projective_morphism(p1, p0, entries)
    return cokernel(f)[0]


def random_invertible(n: int, rng: np.random.Generator) -> la.Matrix:
    """Product of random unit lower and upper triangular integer matrices."""
    if n == 0:
        return la.zeros(0, 0)
    lower = [[1 if i == j else (int(rng.integers(-2, 3)) if j < i else 0) for j in range(n)] for i in range(n)]
    upper = [[1 if i == j else (int(rng.integers(-2, 3)) if j > i else 0) for j in range(n)] for i in range(n)]
    return la.matmul(la.mat(lower, n), la.mat(upper, n))


def random_base_change(module: Rep, rng: np.random.Generator) -> Tuple[Rep, RepMorphism]:
    """An isomorphic copy of ``module`` and the isomorphism module -> copy."""
    g = {v: random_invertible(module.dims[v], rng) for v in module.algebra.vertices}
    mats = {
        a.name: la.chain(g[a.target], module.mats[a.name], la.inverse(g[a.source]))
        for a in module.algebra.arrows
    }
    copy = Rep(module.algebra, module.dims, mats)
    return copy, RepMorphism(module, copy, g)


def random_morphism(source: Rep, target: Rep, rng: np.random.Generator) -> RepMorphism:
    """Random integer combination of a Hom basis (the zero map if Hom vanishes)."""
    basis = hom_basis(source, target)
    if not basis:
        return zero_morphism(source, target)
    return combination(basis, _coeffs(rng, len(basis)))


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)
