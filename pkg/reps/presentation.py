"""
Projective covers, minimal projective presentations, the transpose Tr and the
Auslander-Reiten translate tau = D Tr, plus Ext^1 and stable Hom dimensions.
"""

from dataclasses import dataclass
from typing import List, Tuple

from algebra import linalg as la
from algebra.quiver import reversed_path
from reps.construct import (
    ProjectiveSum,
    dualize,
    morphism_from_generators,
    path_coordinates,
    projective_morphism,
    projective_sum,
)
from reps.homs import cokernel, composition_span_rank, hom_basis, kernel, radical
from reps.rep import Rep, RepMorphism, compose, zero_morphism, zero_rep


def top_generators(module: Rep) -> List[Tuple[str, list]]:
    """Vectors of ``module`` whose classes form a basis of its top, vertex by vertex."""
    rad, inclusion = radical(module)
    generators = []
    for v in module.algebra.vertices:
        current = inclusion.maps[v]
        current_rank = la.rank(current)
        for k in range(module.dims[v]):
            candidate = la.hstack([current, la.unit_column(module.dims[v], k)])
            if la.rank(candidate) > current_rank:
                current, current_rank = candidate, current_rank + 1
                generators.append((v, la.flat(la.unit_column(module.dims[v], k))))
    return generators


def projective_cover_sum(module: Rep) -> Tuple[ProjectiveSum, RepMorphism]:
    """Cover as a ProjectiveSum (summand layout kept) and the epimorphism onto ``module``."""
    if module.is_zero():
        raise ValueError("The zero module has no projective cover")
    generators = top_generators(module)
    cover = projective_sum(module.algebra, [v for v, _ in generators])
    f = morphism_from_generators(module, generators)
    return cover, RepMorphism(cover.rep, module, f.maps)


def projective_cover(module: Rep) -> RepMorphism:
    """(+) P(i)^(mult of S_i in top M) -> M."""
    return projective_cover_sum(module)[1]


def is_projective(module: Rep) -> bool:
    if module.is_zero():
        return True
    cover, _ = projective_cover_sum(module)
    return cover.rep.total_dim == module.total_dim


@dataclass(frozen=True, eq=False)
class Presentation:
    """P1 --p1--> P0 --p0--> M --> 0, minimal."""

    module: Rep
    p1_sum: ProjectiveSum
    p0_sum: ProjectiveSum
    p1: RepMorphism
    p0: RepMorphism

    @property
    def P1(self) -> Rep:
        return self.p1_sum.rep

    @property
    def P0(self) -> Rep:
        return self.p0_sum.rep


def min_presentation(module: Rep) -> Presentation:
    p0_sum, p0 = projective_cover_sum(module)
    omega, inclusion = kernel(p0)
    if omega.is_zero():
        p1_sum = projective_sum(module.algebra, [])
        p1 = zero_morphism(p1_sum.rep, p0_sum.rep)
    else:
        p1_sum, q = projective_cover_sum(omega)
        p1 = RepMorphism(p1_sum.rep, p0_sum.rep, compose(inclusion, q).maps)
    return Presentation(module, p1_sum, p0_sum, p1, p0)


def transpose(module: Rep) -> Rep:
    """
    Tr M over the opposite algebra: cokernel of Hom(p1, A).

    The presentation map is read in path coordinates and every path is
    reversed, which is exactly Hom(-, A) on maps between projectives.
    """
    op = module.algebra.opposite
    if module.is_zero():
        return zero_rep(op)
    pres = min_presentation(module)
    entries = path_coordinates(pres.p1, pres.p1_sum, pres.p0_sum)
    source = projective_sum(op, pres.p0_sum.vertices)
    target = projective_sum(op, pres.p1_sum.vertices)
    op_entries = {
        (s, t): op.reduce({reversed_path(p): c for p, c in elem.items()})
        for (t, s), elem in entries.items()
    }
    dual_map = projective_morphism(source, target, op_entries)
    return cokernel(dual_map)[0]


def tau(module: Rep) -> Rep:
    """Auslander-Reiten translate D Tr M; zero exactly on projectives."""
    return dualize(transpose(module))


def syzygy(module: Rep) -> Tuple[Rep, RepMorphism, RepMorphism]:
    """(Omega M, inclusion into the cover, cover map)."""
    _, cover = projective_cover_sum(module)
    omega, inclusion = kernel(cover)
    return omega, inclusion, cover


def ext1_dim(m: Rep, n: Rep) -> int:
    """dim Hom(Omega M, N) minus the rank of restriction from Hom(P0, N)."""
    if m.is_zero() or n.is_zero():
        return 0
    omega, inclusion, cover = syzygy(m)
    from_omega = hom_basis(omega, n)
    if not from_omega:
        return 0
    restricted = [compose(phi, inclusion) for phi in hom_basis(cover.source, n)]
    return len(from_omega) - composition_span_rank(restricted)


def injective_envelope(module: Rep) -> RepMorphism:
    """M -> I(M), the dual of the projective cover of D M."""
    cover = projective_cover(dualize(module))
    envelope = dualize(cover.source)
    return RepMorphism(module, envelope, {v: la.transpose(m) for v, m in cover.maps.items()})


def stable_hom_dims(m: Rep, n: Rep) -> Tuple[int, int]:
    """(dim of Hom modulo maps through projectives, dim modulo maps through injectives)."""
    homs = hom_basis(m, n)
    if not homs:
        return 0, 0
    cover = projective_cover(n)
    through_proj = [compose(cover, g) for g in hom_basis(m, cover.source)]
    envelope = injective_envelope(m)
    through_inj = [compose(g, envelope) for g in hom_basis(envelope.target, n)]
    return (
        len(homs) - composition_span_rank(through_proj),
        len(homs) - composition_span_rank(through_inj),
    )


def ar_ext1_dim(m: Rep, n: Rep) -> int:
    """Ext^1(M, N) through the Auslander-Reiten formula: D Hom-bar(N, tau M)."""
    return stable_hom_dims(n, tau(m))[1]
