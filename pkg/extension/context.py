"""
One-point extensions A = B[P0] by a projective B-module P0.

A has the quiver of B plus a new source vertex v with one arrow v -> i for
each summand P(i) of P0, and exactly the relations of B. The new projective
P(v) has radical P0 and top the new simple S.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple

from loguru import logger

from algebra.bound import BoundQuiverAlgebra
from algebra.quiver import Arrow, Quiver
from reps.construct import projective, simple
from reps.rep import Rep, direct_sum
from tools.errors import AlgebraParseError, TheoremViolation


@dataclass(frozen=True, eq=False)
class OPEContext:
    """
    B, the summand vertices of P0, A = B[P0], the new vertex, S and P~.

    ``new_arrows[k]`` is the arrow v -> ``p0_vertices[k]``.
    """

    B: BoundQuiverAlgebra
    p0_vertices: Tuple[str, ...]
    A: BoundQuiverAlgebra
    v: str
    new_arrows: Tuple[str, ...]
    S: Rep
    Ptilde: Rep

    @cached_property
    def P0(self) -> Rep:
        return direct_sum([projective(self.B, i) for i in self.p0_vertices], self.B)

    def describe(self) -> Dict:
        """Vertex and arrow bookkeeping, as written to the ``.map.yml`` sidecar."""
        return {
            "base": self.B.name,
            "extension": self.A.name,
            "old_vertices": list(self.B.vertices),
            "new_vertex": self.v,
            "arrows": {name: {"source": self.v, "target": i} for name, i in zip(self.new_arrows, self.p0_vertices)},
        }

    def __repr__(self) -> str:
        return f"OPEContext({self.B.name} -> {self.A.name}, v={self.v}, P0={list(self.p0_vertices)})"


def _default_vertex(B: BoundQuiverAlgebra) -> str:
    if all(v.isdigit() for v in B.vertices):
        return str(max(int(v) for v in B.vertices) + 1)
    return "v"


def _default_names(B: BoundQuiverAlgebra, count: int) -> Tuple[str, ...]:
    taken = {a.name for a in B.arrows}
    names, k = [], 1
    while len(names) < count:
        name = f"x{k}"
        if name not in taken:
            names.append(name)
        k += 1
    return tuple(names)


def _build_context(B: BoundQuiverAlgebra, p0: Tuple[str, ...], A: BoundQuiverAlgebra, v: str, arrows: Tuple[str, ...]) -> OPEContext:
    ctx = OPEContext(B, p0, A, v, arrows, simple(A, v), projective(A, v))
    expected = B.dim + 1 + ctx.P0.total_dim
    if A.dim != expected:
        raise TheoremViolation(f"dim {A.name} = {A.dim}, expected dim B + 1 + dim P0 = {expected}")
    return ctx


def one_point_extension(
    B: BoundQuiverAlgebra,
    p0_vertices: Sequence[str],
    vertex: Optional[str] = None,
    names: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
) -> OPEContext:
    """
    Build A = B[P0] with P0 = (+) P(i) over ``p0_vertices`` (repetitions allowed).

    Raises:
        AlgebraParseError: Unknown or clashing vertex ids and arrow names
        ValueError: If ``p0_vertices`` is empty
    """
    p0 = tuple(p0_vertices)
    if not p0:
        raise ValueError("P0 needs at least one summand")
    for i in p0:
        B.check_vertex(i)
    v = vertex or _default_vertex(B)
    if v in B.vertices:
        raise AlgebraParseError(f"Extension vertex '{v}' already exists in {B.name}")
    arrows = tuple(names) if names else _default_names(B, len(p0))
    if len(arrows) != len(p0):
        raise AlgebraParseError(f"{len(arrows)} arrow names given for {len(p0)} summands of P0")
    clash = set(arrows) & {a.name for a in B.arrows}
    if clash or len(set(arrows)) != len(arrows):
        raise AlgebraParseError(f"Arrow names {sorted(clash) or list(arrows)} clash")
    quiver = Quiver(
        B.vertices + (v,),
        B.arrows + tuple(Arrow(n, v, i) for n, i in zip(arrows, p0)),
    )
    A = BoundQuiverAlgebra(name or f"{B.name}[P0]", quiver, B.relations, B.cap)
    ctx = _build_context(B, p0, A, v, arrows)
    logger.info(f"One-point extension {B.name} -> {A.name}: vertex {v}, P0 = {list(p0)}, dim {A.dim}")
    return ctx


def new_vertex(B: BoundQuiverAlgebra, A: BoundQuiverAlgebra) -> str:
    """
    The single vertex of A that B lacks, once B's quiver is checked to sit inside A's.

    Raises:
        ValueError: If A is not B plus one source vertex
    """
    extra = [v for v in A.vertices if v not in B.vertices]
    if len(extra) != 1 or len(A.vertices) != len(B.vertices) + 1:
        raise ValueError(f"{A.name} is not {B.name} plus one vertex")
    v = extra[0]
    for a in B.arrows:
        try:
            other = A.quiver.arrow(a.name)
        except AlgebraParseError:
            raise ValueError(f"Arrow {a.name} of {B.name} missing from {A.name}") from None
        if (other.source, other.target) != (a.source, a.target):
            raise ValueError(f"Arrow {a.name} has different endpoints in {A.name}")
    for a in A.arrows:
        if a.name not in {b.name for b in B.arrows} and (a.source != v or a.target == v):
            raise ValueError(f"New arrow {a.name} of {A.name} does not leave {v} into {B.name}")
    return v


def _relation_set(algebra: BoundQuiverAlgebra):
    return {
        frozenset((str(p), c) for c, p in rel.terms)
        for rel in algebra.relations
    }


def context_from_algebras(B: BoundQuiverAlgebra, A: BoundQuiverAlgebra) -> OPEContext:
    """
    Recognise A, given as its own file, as the projective extension B[P0].

    Raises:
        ValueError: If A has extra relations (an extension by a non-projective module)
    """
    v = new_vertex(B, A)
    if _relation_set(A) != _relation_set(B):
        raise ValueError(f"{A.name} has relations beyond those of {B.name}; it is not B[P0] for a projective P0")
    outgoing = A.quiver.arrows_from(v)
    ctx = _build_context(B, tuple(a.target for a in outgoing), A, v, tuple(a.name for a in outgoing))
    logger.debug(f"Recognised {ctx!r}")
    return ctx
