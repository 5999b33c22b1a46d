"""
Representations of bound quivers and morphisms between them.

A representation stores one vector space dimension per vertex and one exact
rational matrix per arrow (rows = dimension at the target, columns = dimension
at the source). Both classes are immutable values.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from algebra import linalg as la
from algebra.bound import BoundQuiverAlgebra
from algebra.quiver import PathWord
from algebra.rewriting import Element
from tools.errors import ShapeError


@dataclass(frozen=True, eq=False)
class Rep:
    algebra: BoundQuiverAlgebra
    dims: Mapping[str, int]
    mats: Mapping[str, la.Matrix] = field(default_factory=dict)

    def __post_init__(self):
        alg = self.algebra
        dims = {}
        for v in alg.vertices:
            d = int(self.dims.get(v, 0))
            if d < 0:
                raise ShapeError(f"Negative dimension {d} at vertex {v}")
            dims[v] = d
        unknown = set(self.dims) - set(alg.vertices)
        if unknown:
            raise ShapeError(f"Unknown vertices {sorted(unknown)} for algebra {alg.name}")
        mats = {}
        for a in alg.arrows:
            shape = (dims[a.target], dims[a.source])
            m = self.mats.get(a.name)
            if m is None:
                m = la.zeros(*shape)
            elif m.shape != shape:
                raise ShapeError(f"Arrow {a.name}: matrix shape {m.shape}, expected {shape}")
            mats[a.name] = m
        unknown = set(self.mats) - set(mats)
        if unknown:
            raise ShapeError(f"Unknown arrows {sorted(unknown)} for algebra {alg.name}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mats", mats)

    def __repr__(self) -> str:
        return f"Rep({self.algebra.name}, dims={self.dim_vector})"

    @property
    def dim_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    @cached_property
    def offsets(self) -> Dict[str, int]:
        """Start index of each vertex block in the total space."""
        out, pos = {}, 0
        for v in self.algebra.vertices:
            out[v] = pos
            pos += self.dims[v]
        return out

    def path_matrix(self, path: PathWord) -> la.Matrix:
        """Action of a path (first arrow applied first)."""
        result = la.eye(self.dims[path.source])
        for name in path.arrows:
            result = la.matmul(self.mats[name], result)
        return result

    def element_matrix(self, elem: Element, source: str, target: str) -> la.Matrix:
        """Action of a combination of paths source -> target."""
        result = la.zeros(self.dims[target], self.dims[source])
        for path, coef in elem.items():
            result = la.add(result, la.scale(self.path_matrix(path), coef))
        return result

    def encode(self) -> Tuple:
        """Hashable encoding of dims and matrices (basis dependent)."""
        return (self.dim_vector, tuple(la.encode(self.mats[a.name]) for a in self.algebra.arrows))


def check_rep(module: Rep) -> bool:
    """
    True iff every relation of the algebra acts as zero on ``module``.

    Raises:
        ShapeError: If a matrix does not match the dimension vector
    """
    for a in module.algebra.arrows:
        shape = (module.dims[a.target], module.dims[a.source])
        if module.mats[a.name].shape != shape:
            raise ShapeError(f"Arrow {a.name}: matrix shape {module.mats[a.name].shape}, expected {shape}")
    for rel in module.algebra.relations:
        elem: Element = {}
        for coef, path in rel.terms:
            elem[path] = elem.get(path, la.ZERO) + coef
        if not la.is_zero(module.element_matrix(elem, rel.source, rel.target)):
            return False
    return True


def zero_rep(algebra: BoundQuiverAlgebra) -> Rep:
    return Rep(algebra, {})


def direct_sum(modules: Sequence[Rep], algebra: Optional[BoundQuiverAlgebra] = None) -> Rep:
    """Block-diagonal direct sum; ``algebra`` is required for an empty list."""
    if not modules:
        if algebra is None:
            raise ValueError("direct_sum of no modules needs the algebra")
        return zero_rep(algebra)
    alg = modules[0].algebra
    for m in modules:
        if m.algebra is not alg:
            raise ValueError("direct_sum of modules over different algebras")
    dims = {v: sum(m.dims[v] for m in modules) for v in alg.vertices}
    mats = {a.name: la.block_diag([m.mats[a.name] for m in modules]) for a in alg.arrows}
    return Rep(alg, dims, mats)


@dataclass(frozen=True, eq=False)
class RepMorphism:
    source: Rep
    target: Rep
    maps: Mapping[str, la.Matrix]

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra:
            raise ValueError("Morphism between modules over different algebras")
        maps = {}
        for v in self.source.algebra.vertices:
            shape = (self.target.dims[v], self.source.dims[v])
            m = self.maps.get(v)
            if m is None:
                m = la.zeros(*shape)
            elif m.shape != shape:
                raise ShapeError(f"Vertex {v}: morphism block {m.shape}, expected {shape}")
            maps[v] = m
        object.__setattr__(self, "maps", maps)

    def __repr__(self) -> str:
        return f"RepMorphism({self.source.dim_vector} -> {self.target.dim_vector}, rank={self.rank})"

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.source.algebra

    def commutes(self) -> bool:
        """f_target(a) M_a = N_a f_source(a) for every arrow a."""
        for a in self.algebra.arrows:
            lhs = la.matmul(self.maps[a.target], self.source.mats[a.name])
            rhs = la.matmul(self.target.mats[a.name], self.maps[a.source])
            if lhs != rhs:
                return False
        return True

    @cached_property
    def rank(self) -> int:
        return sum(la.rank(m) for m in self.maps.values())

    def is_zero(self) -> bool:
        return all(la.is_zero(m) for m in self.maps.values())

    def is_injective(self) -> bool:
        return self.rank == self.source.total_dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.total_dim

    def is_isomorphism(self) -> bool:
        return self.source.dim_vector == self.target.dim_vector and self.is_injective()

    def flat(self) -> List:
        """Coordinates in the space of all vertex blocks (row-major, vertex order)."""
        return [x for v in self.algebra.vertices for x in la.flat(self.maps[v])]

    def total_matrix(self) -> la.Matrix:
        return la.block_diag([self.maps[v] for v in self.algebra.vertices])

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        return RepMorphism(self.source, self.target, {v: la.add(self.maps[v], other.maps[v]) for v in self.maps})

    def __sub__(self, other: "RepMorphism") -> "RepMorphism":
        return RepMorphism(self.source, self.target, {v: la.sub(self.maps[v], other.maps[v]) for v in self.maps})

    def scaled(self, c) -> "RepMorphism":
        return RepMorphism(self.source, self.target, {v: la.scale(m, c) for v, m in self.maps.items()})


def compose(g: RepMorphism, f: RepMorphism) -> RepMorphism:
    """g after f."""
    if f.target is not g.source and f.target.encode() != g.source.encode():
        raise ValueError("compose: target of f is not the source of g")
    return RepMorphism(f.source, g.target, {v: la.matmul(g.maps[v], f.maps[v]) for v in f.maps})


def identity(module: Rep) -> RepMorphism:
    return RepMorphism(module, module, {v: la.eye(d) for v, d in module.dims.items()})


def zero_morphism(source: Rep, target: Rep) -> RepMorphism:
    return RepMorphism(source, target, {})


def combination(morphisms: Sequence[RepMorphism], coeffs: Iterable) -> RepMorphism:
    """sum c_k f_k over morphisms with a common source and target."""
    first = morphisms[0]
    coeffs = list(coeffs)
    maps = {
        v: la.combine([f.maps[v] for f in morphisms], coeffs) for v in first.algebra.vertices
    }
    return RepMorphism(first.source, first.target, maps)


def from_flat(source: Rep, target: Rep, vector: Sequence) -> RepMorphism:
    """Inverse of RepMorphism.flat."""
    maps, pos = {}, 0
    for v in source.algebra.vertices:
        rows, cols = target.dims[v], source.dims[v]
        block = [list(vector[pos + r * cols: pos + (r + 1) * cols]) for r in range(rows)]
        maps[v] = la.mat(block, cols) if rows else la.zeros(0, cols)
        pos += rows * cols
    return RepMorphism(source, target, maps)


def direct_sum_morphism(parts: Sequence[RepMorphism], source: Rep, target: Rep) -> RepMorphism:
    """Block-diagonal morphism between the direct sums of sources and targets."""
    return RepMorphism(
        source, target, {v: la.block_diag([f.maps[v] for f in parts]) for v in source.algebra.vertices}
    )


def column_morphism(parts: Sequence[RepMorphism], target: Rep) -> RepMorphism:
    """[f_1 ... f_k]: (+) sources -> common target."""
    alg = target.algebra
    source = direct_sum([f.source for f in parts], alg)
    return RepMorphism(
        source, target, {v: la.hstack([f.maps[v] for f in parts], target.dims[v]) for v in alg.vertices}
    )


def row_morphism(parts: Sequence[RepMorphism], source: Rep) -> RepMorphism:
    """[f_1; ...; f_k]: common source -> (+) targets."""
    alg = source.algebra
    target = direct_sum([f.target for f in parts], alg)
    return RepMorphism(
        source, target, {v: la.vstack([f.maps[v] for f in parts], source.dims[v]) for v in alg.vertices}
    )
