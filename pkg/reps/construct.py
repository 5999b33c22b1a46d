"""
Standard modules: simples, indecomposable projectives and injectives, uniserials,
the duality D, and morphisms between sums of projectives in path coordinates.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from algebra import linalg as la
from algebra.bound import BoundQuiverAlgebra
from algebra.quiver import PathWord
from algebra.rewriting import Element
from reps.rep import Rep, RepMorphism, check_rep, column_morphism, direct_sum
from tools.errors import ModuleLiteralError, ZeroPrefixError


def simple(algebra: BoundQuiverAlgebra, vertex: str) -> Rep:
    algebra.check_vertex(vertex)
    return Rep(algebra, {vertex: 1})


def projective(algebra: BoundQuiverAlgebra, vertex: str) -> Rep:
    """P(i): basis at j = normal-form paths i -> j, arrows act by right concatenation."""
    cache = algebra.cache.setdefault("projective", {})
    if vertex in cache:
        return cache[vertex]
    algebra.check_vertex(vertex)
    dims = {j: len(algebra.basis_paths(vertex, j)) for j in algebra.vertices}
    mats = {}
    for a in algebra.arrows:
        src_paths = algebra.basis_paths(vertex, a.source)
        tgt_paths = algebra.basis_paths(vertex, a.target)
        index = {p: r for r, p in enumerate(tgt_paths)}
        rows = [[la.ZERO] * len(src_paths) for _ in tgt_paths]
        for col, p in enumerate(src_paths):
            word = PathWord(p.source, a.target, p.arrows + (a.name,))
            for q, c in algebra.normal_form(word).items():
                rows[index[q]][col] = c
        mats[a.name] = la.mat(rows, len(src_paths)) if tgt_paths else la.zeros(0, len(src_paths))
    module = Rep(algebra, dims, mats)
    cache[vertex] = module
    return module


def dualize(module: Rep) -> Rep:
    """D = Hom_k(-, k): a module over the opposite algebra with transposed matrices."""
    op = module.algebra.opposite
    return Rep(op, dict(module.dims), {name: la.transpose(m) for name, m in module.mats.items()})


def dualize_morphism(f: RepMorphism, source: Rep = None, target: Rep = None) -> RepMorphism:
    """D f : D N -> D M for f : M -> N."""
    source = source if source is not None else dualize(f.target)
    target = target if target is not None else dualize(f.source)
    return RepMorphism(source, target, {v: la.transpose(m) for v, m in f.maps.items()})


def injective(algebra: BoundQuiverAlgebra, vertex: str) -> Rep:
    """I(i) = D of the opposite algebra's projective at i."""
    return dualize(projective(algebra.opposite, vertex))


def regular(algebra: BoundQuiverAlgebra) -> Rep:
    """A as a left module: the direct sum of all indecomposable projectives."""
    return direct_sum([projective(algebra, v) for v in algebra.vertices], algebra)


def uniserial(algebra: BoundQuiverAlgebra, word: PathWord) -> Rep:
    """
    Module with one basis vector per prefix of ``word``; arrows of the word shift.

    Raises:
        ZeroPrefixError: If some prefix of the word is zero in the algebra
        ModuleLiteralError: If the resulting matrices violate a relation
    """
    for k in range(1, len(word.arrows) + 1):
        prefix = algebra.quiver.path(list(word.arrows[:k]))
        if not algebra.normal_form(prefix):
            raise ZeroPrefixError(f"Prefix {prefix} of {word} is zero in {algebra.name}")
    vertices = [word.source] + [algebra.quiver.arrow(n).target for n in word.arrows]
    dims: Dict[str, int] = {}
    slot = []
    for v in vertices:
        slot.append(dims.get(v, 0))
        dims[v] = dims.get(v, 0) + 1
    entries: Dict[str, List[List]] = {
        a.name: [[la.ZERO] * dims.get(a.source, 0) for _ in range(dims.get(a.target, 0))]
        for a in algebra.arrows
    }
    for k, name in enumerate(word.arrows):
        entries[name][slot[k + 1]][slot[k]] = la.ONE
    mats = {}
    for a in algebra.arrows:
        mats[a.name] = la.mat(entries[a.name], dims.get(a.source, 0)) if dims.get(a.target, 0) else la.zeros(
            0, dims.get(a.source, 0)
        )
    module = Rep(algebra, dims, mats)
    if not check_rep(module):
        raise ModuleLiteralError(f"Uniserial walk {word} does not satisfy the relations of {algebra.name}")
    return module


def yoneda_morphism(target: Rep, vertex: str, vector: Sequence) -> RepMorphism:
    """The map P(vertex) -> target sending e_vertex to ``vector`` in target_vertex."""
    alg = target.algebra
    source = projective(alg, vertex)
    m = la.from_columns([list(vector)], target.dims[vertex])
    maps = {}
    for k in alg.vertices:
        cols = [la.flat(la.matmul(target.path_matrix(p), m)) for p in alg.basis_paths(vertex, k)]
        maps[k] = la.from_columns(cols, target.dims[k])
    return RepMorphism(source, target, maps)


def morphism_from_generators(target: Rep, generators: Sequence[Tuple[str, Sequence]]) -> RepMorphism:
    """(+) P(v_s) -> target with the s-th generator sent to the given vector."""
    return column_morphism([yoneda_morphism(target, v, vec) for v, vec in generators], target)


@dataclass(frozen=True, eq=False)
class ProjectiveSum:
    """(+)_s P(v_s) together with its summand layout."""

    algebra: BoundQuiverAlgebra
    vertices: Tuple[str, ...]
    rep: Rep

    def offset(self, s: int, k: str) -> int:
        """Row of the first basis path of summand s at vertex k."""
        return sum(len(self.algebra.basis_paths(u, k)) for u in self.vertices[:s])

    def generator_index(self, s: int) -> int:
        u = self.vertices[s]
        return self.offset(s, u) + self.algebra.basis_paths(u, u).index(PathWord(u, u, ()))


def projective_sum(algebra: BoundQuiverAlgebra, vertices: Sequence[str]) -> ProjectiveSum:
    vertices = tuple(vertices)
    rep = direct_sum([projective(algebra, v) for v in vertices], algebra)
    return ProjectiveSum(algebra, vertices, rep)


PathMatrix = Mapping[Tuple[int, int], Element]


def projective_morphism(source: ProjectiveSum, target: ProjectiveSum, entries: PathMatrix) -> RepMorphism:
    """
    Morphism (+)P(u_s) -> (+)P(v_t) from path coordinates.

    ``entries[(t, s)]`` is the image of the generator of summand s inside summand
    t: a combination of basis paths v_t -> u_s.
    """
    alg = source.algebra
    maps = {}
    for k in alg.vertices:
        rows = [[la.ZERO] * source.rep.dims[k] for _ in range(target.rep.dims[k])]
        for s, u in enumerate(source.vertices):
            col0 = source.offset(s, k)
            for qi, q in enumerate(alg.basis_paths(u, k)):
                for t, v in enumerate(target.vertices):
                    c = entries.get((t, s))
                    if not c:
                        continue
                    row0 = target.offset(t, k)
                    index = {p: r for r, p in enumerate(alg.basis_paths(v, k))}
                    for p, coef in alg.multiply(c, {q: la.ONE}).items():
                        rows[row0 + index[p]][col0 + qi] += coef
        maps[k] = la.mat(rows, source.rep.dims[k]) if rows else la.zeros(0, source.rep.dims[k])
    return RepMorphism(source.rep, target.rep, maps)


def path_coordinates(f: RepMorphism, source: ProjectiveSum, target: ProjectiveSum) -> Dict[Tuple[int, int], Element]:
    """Inverse of projective_morphism: read each generator's image in path coordinates."""
    alg = source.algebra
    entries: Dict[Tuple[int, int], Element] = {}
    for s, u in enumerate(source.vertices):
        column = la.columns_of(f.maps[u])[source.generator_index(s)] if f.maps[u].shape[1] else []
        for t, v in enumerate(target.vertices):
            row0 = target.offset(t, u)
            elem = {
                p: column[row0 + r] for r, p in enumerate(alg.basis_paths(v, u)) if column[row0 + r] != 0
            }
            if elem:
                entries[(t, s)] = elem
    return entries
