"""
tau-rigid modules and support tau-tilting pairs.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Sequence, Tuple

from loguru import logger

from algebra import linalg as la
from algebra.bound import BoundQuiverAlgebra
from algebra.quiver import sorted_vertices
from reps.approx import fac_contains
from reps.construct import path_coordinates, projective
from reps.decompose import decompose, sort_key
from reps.homs import hom_dim, is_isomorphic
from reps.literals import diagram, parse_summands
from reps.presentation import min_presentation, tau
from reps.rep import Rep, direct_sum
from tools.errors import ModuleLiteralError, OracleDisagreement


@dataclass(frozen=True, eq=False)
class STPair:
    """
    (M, P) with M basic, stored as its indecomposable summands, and P = (+) P(v), v in ``support``.

    Summands are kept in ``sort_key`` order. Use ``make_pair`` to build one from
    an arbitrary module.
    """

    algebra: BoundQuiverAlgebra
    summands: Tuple[Rep, ...]
    support: FrozenSet[str]

    @cached_property
    def module(self) -> Rep:
        return direct_sum(list(self.summands), self.algebra)

    @property
    def size(self) -> int:
        """|M| + |P|."""
        return len(self.summands) + len(self.support)

    def without(self, k: int) -> Tuple[Rep, ...]:
        return self.summands[:k] + self.summands[k + 1:]

    def label(self) -> str:
        mod = " + ".join(diagram(m) for m in self.summands) or "0"
        if not self.support:
            return mod
        return f"{mod} | " + ",".join(f"P{v}" for v in sorted_vertices(self.support))

    def __repr__(self) -> str:
        return f"STPair({self.algebra.name}: {self.label()})"


def make_pair(algebra: BoundQuiverAlgebra, summands: Iterable[Rep], support: Iterable[str] = ()) -> STPair:
    """Pair from summands that are already indecomposable and pairwise non-isomorphic."""
    parts = tuple(sorted((m for m in summands if not m.is_zero()), key=sort_key))
    return STPair(algebra, parts, frozenset(algebra.check_vertex(v) for v in support))


def pair_from_module(module: Rep, support: Iterable[str] = ()) -> STPair:
    """Pair from any module: decomposed and made basic."""
    return make_pair(module.algebra, decompose(module).summands, support)


def regular_pair(algebra: BoundQuiverAlgebra) -> STPair:
    """(A, 0), the maximum."""
    return make_pair(algebra, [projective(algebra, v) for v in algebra.vertices])


def zero_pair(algebra: BoundQuiverAlgebra) -> STPair:
    """(0, A), the minimum."""
    return make_pair(algebra, [], algebra.vertices)


def parse_pair(algebra: BoundQuiverAlgebra, text: str) -> STPair:
    """
    ``<module> [+ <module> ...] [| v1,v2,...]``; ``0`` is the zero module.

    Summands are decomposed, so ``proj:1 + proj:1`` gives one summand.
    """
    module_text, sep, support_text = text.rpartition("|") if "|" in text else (text, "", "")
    if not module_text.strip():
        raise ModuleLiteralError(f"Missing module part in pair literal '{text}'")
    support = [v.strip().lstrip("Pp") for v in support_text.split(",") if v.strip()]
    summands = parse_summands(algebra, module_text)
    return pair_from_module(direct_sum(summands, algebra), support)


def _presentation_criterion(module: Rep) -> bool:
    """Hom(p1, M): Hom(P0, M) -> Hom(P1, M) is surjective."""
    pres = min_presentation(module)
    if not pres.p1_sum.vertices:
        return True
    entries = path_coordinates(pres.p1, pres.p1_sum, pres.p0_sum)
    blocks = []
    for s, u in enumerate(pres.p1_sum.vertices):
        row = []
        for t, v in enumerate(pres.p0_sum.vertices):
            elem = entries.get((t, s))
            if elem:
                row.append(module.element_matrix(elem, v, u))
            else:
                row.append(la.zeros(module.dims[u], module.dims[v]))
        blocks.append(la.hstack(row, module.dims[u]))
    total = sum(module.dims[u] for u in pres.p1_sum.vertices)
    width = sum(module.dims[v] for v in pres.p0_sum.vertices)
    return la.rank(la.vstack(blocks, width)) == total


def is_tau_rigid(module: Rep) -> bool:
    """
    Hom(M, tau M) = 0, computed directly and through the presentation criterion.

    Raises:
        OracleDisagreement: If the two computations differ
    """
    if module.is_zero():
        return True
    direct = hom_dim(module, tau(module)) == 0
    presented = _presentation_criterion(module)
    if direct != presented:
        raise OracleDisagreement(
            f"tau-rigidity of {module.dim_vector}: Hom(M, tau M) says {direct}, presentation says {presented}"
        )
    return direct


def is_stt_pair(pair: STPair) -> bool:
    """tau-rigid, M vanishes on the support, and |M| + |P| = n."""
    if pair.size != pair.algebra.n:
        return False
    if any(pair.module.dims[v] for v in pair.support):
        return False
    ok = is_tau_rigid(pair.module)
    logger.trace(f"is_stt_pair {pair.label()}: {ok}")
    return ok


def leq(p: STPair, q: STPair) -> bool:
    """p <= q iff Fac(p.module) is contained in Fac(q.module)."""
    return all(fac_contains(q.module, x) for x in p.summands)


def less(p: STPair, q: STPair) -> bool:
    return leq(p, q) and not leq(q, p)


def is_tau_tilting(module: Rep) -> bool:
    return len(decompose(module)) == module.algebra.n and is_tau_rigid(module)


def support_of(module: Rep) -> FrozenSet[str]:
    """Vertices where ``module`` vanishes."""
    return frozenset(v for v in module.algebra.vertices if module.dims[v] == 0)


def is_support_tau_tilting(module: Rep) -> bool:
    """M is tau-tilting over A / <e>, e the idempotent of the vertices where M vanishes."""
    return is_stt_pair(pair_from_module(module, support_of(module)))


def perp_tau(u: Rep, x: Rep) -> bool:
    """X in the left perpendicular category of tau U: Hom(X, tau U) = 0."""
    return hom_dim(x, tau(u)) == 0


def contains_summand(pair: STPair, module: Rep) -> bool:
    return any(m.dim_vector == module.dim_vector and is_isomorphic(m, module) for m in pair.summands)


def same_summands(first: Sequence[Rep], second: Sequence[Rep]) -> bool:
    """Equal as multisets of isomorphism classes (both basic)."""
    if len(first) != len(second):
        return False
    remaining = list(second)
    for m in first:
        for i, n in enumerate(remaining):
            if m.dim_vector == n.dim_vector and is_isomorphic(m, n):
                del remaining[i]
                break
        else:
            return False
    return True
