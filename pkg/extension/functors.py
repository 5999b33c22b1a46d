"""
The restriction R: mod A -> mod B, the extension E: mod B -> mod A, and the
modules and maps they relate.

R forgets the new vertex. E M has Hom_B(P0, M) = (+)_k M_{i_k} at v and the
k-th new arrow acts as the projection onto its block, which is evaluation at
the generator of the k-th summand of P0. R E is the identity on the nose, and
E identifies mod B with S^perp.
"""

from dataclasses import dataclass

from algebra import linalg as la
from algebra.bound import BoundQuiverAlgebra
from reps.construct import injective
from reps.homs import cokernel, hom_dim, is_isomorphic, submodule
from reps.presentation import ext1_dim
from reps.rep import Rep, RepMorphism, direct_sum
from extension.context import OPEContext
from tools.errors import SplitError, TheoremViolation


def _require(module: Rep, algebra: BoundQuiverAlgebra) -> None:
    if module.algebra is not algebra:
        raise ValueError(f"Expected a module over {algebra.name}, got one over {module.algebra.name}")


def restrict_to(B: BoundQuiverAlgebra, module: Rep) -> Rep:
    """Drop every vertex and arrow of ``module`` that B does not have."""
    return Rep(
        B,
        {v: module.dims[v] for v in B.vertices},
        {a.name: module.mats[a.name] for a in B.arrows},
    )


def inflate_to(A: BoundQuiverAlgebra, module: Rep) -> Rep:
    """A B-module as an A-module, zero at the vertices A adds."""
    return Rep(A, dict(module.dims), dict(module.mats))


def restrict(ctx: OPEContext, module: Rep) -> Rep:
    _require(module, ctx.A)
    return restrict_to(ctx.B, module)


def restrict_morphism(ctx: OPEContext, f: RepMorphism) -> RepMorphism:
    return RepMorphism(
        restrict(ctx, f.source),
        restrict(ctx, f.target),
        {v: f.maps[v] for v in ctx.B.vertices},
    )


def inflate(ctx: OPEContext, module: Rep) -> Rep:
    _require(module, ctx.B)
    return inflate_to(ctx.A, module)


def _projection(module: Rep, p0, k: int) -> la.Matrix:
    """Block k of (+)_j M_{p0[j]} -> M_{p0[k]}."""
    before = sum(module.dims[i] for i in p0[:k])
    total = sum(module.dims[i] for i in p0)
    size = module.dims[p0[k]]
    rows = [[la.ONE if c == before + r else la.ZERO for c in range(total)] for r in range(size)]
    return la.mat(rows, total) if size else la.zeros(0, total)


def extend(ctx: OPEContext, module: Rep) -> Rep:
    """E M = Hom_B(U, M)."""
    _require(module, ctx.B)
    dims = dict(module.dims)
    dims[ctx.v] = sum(module.dims[i] for i in ctx.p0_vertices)
    mats = dict(module.mats)
    for k, name in enumerate(ctx.new_arrows):
        mats[name] = _projection(module, ctx.p0_vertices, k)
    return Rep(ctx.A, dims, mats)


def extend_morphism(ctx: OPEContext, f: RepMorphism, source: Rep = None, target: Rep = None) -> RepMorphism:
    source = source if source is not None else extend(ctx, f.source)
    target = target if target is not None else extend(ctx, f.target)
    maps = dict(f.maps)
    maps[ctx.v] = la.block_diag([f.maps[i] for i in ctx.p0_vertices])
    return RepMorphism(source, target, maps)


def in_S_perp(ctx: OPEContext, module: Rep) -> bool:
    """Hom_A(S, X) = 0 and Ext^1_A(S, X) = 0."""
    return hom_dim(ctx.S, module) == 0 and ext1_dim(ctx.S, module) == 0


@dataclass(frozen=True, eq=False)
class CanonicalSequence:
    """0 -> R X -> X -> S^r -> 0, with R X realised as the part of X away from v."""

    module: Rep
    sub: Rep
    inclusion: RepMorphism
    quotient: Rep
    projection: RepMorphism
    r: int

    def is_exact(self) -> bool:
        composite_zero = all(
            la.is_zero(la.matmul(self.projection.maps[v], self.inclusion.maps[v])) for v in self.module.dims
        )
        return (
            composite_zero
            and self.inclusion.is_injective()
            and self.projection.is_surjective()
            and self.sub.total_dim + self.quotient.total_dim == self.module.total_dim
        )


def canonical_sequence(ctx: OPEContext, module: Rep) -> CanonicalSequence:
    """
    Raises:
        TheoremViolation: If r differs from dim Hom_A(X, S) or the quotient is not S^r
    """
    _require(module, ctx.A)
    basis = {u: la.eye(module.dims[u]) for u in ctx.B.vertices}
    basis[ctx.v] = la.zeros(module.dims[ctx.v], 0)
    sub, inclusion = submodule(module, basis)
    quotient, projection = cokernel(inclusion)
    r = module.dims[ctx.v]
    if r != hom_dim(module, ctx.S):
        raise TheoremViolation(f"Canonical sequence: r = {r} but dim Hom(X, S) = {hom_dim(module, ctx.S)}")
    if not is_isomorphic(quotient, direct_sum([ctx.S] * r, ctx.A)):
        raise TheoremViolation("Canonical sequence: quotient is not a power of S")
    return CanonicalSequence(module, sub, inclusion, quotient, projection, r)


def split_off_S(ctx: OPEContext, module: Rep):
    """
    Y = Y' (+) S^r with Y' in S^perp; returns (Y', r).

    Raises:
        SplitError: If Ext^1_A(S, Y) != 0
    """
    _require(module, ctx.A)
    if ext1_dim(ctx.S, module) != 0:
        raise SplitError("split_off_S needs Ext^1(S, Y) = 0")
    outgoing = [module.mats[name] for name in ctx.new_arrows]
    fixed = la.nullspace(la.vstack(outgoing, module.dims[ctx.v]))
    basis = {u: la.zeros(module.dims[u], 0) for u in ctx.B.vertices}
    basis[ctx.v] = fixed
    _, inclusion = submodule(module, basis)
    rest, _ = cokernel(inclusion)
    return rest, fixed.shape[1]


def unit_morphism(ctx: OPEContext, module: Rep) -> RepMorphism:
    """delta_X: X -> E R X, the identity away from v and the stacked new arrows at v."""
    _require(module, ctx.A)
    target = extend(ctx, restrict(ctx, module))
    maps = {u: la.eye(module.dims[u]) for u in ctx.B.vertices}
    maps[ctx.v] = la.vstack([module.mats[name] for name in ctx.new_arrows], module.dims[ctx.v])
    return RepMorphism(module, target, maps)


def unit_check(ctx: OPEContext, module: Rep) -> bool:
    """
    delta_X is an isomorphism; this happens exactly when X lies in S^perp.

    Raises:
        TheoremViolation: If invertibility of delta_X and S^perp membership disagree
    """
    delta = unit_morphism(ctx, module)
    if not delta.commutes():
        raise TheoremViolation("delta_X is not a morphism of A-modules")
    iso = delta.is_isomorphism()
    perp = in_S_perp(ctx, module)
    if iso != perp:
        raise TheoremViolation(f"Unit at {module.dim_vector}: delta iso={iso}, X in S^perp={perp}")
    return iso


def counit_check(ctx: OPEContext, module: Rep) -> bool:
    """epsilon_M: R E M -> M is the identity."""
    back = restrict(ctx, extend(ctx, module))
    return back.encode() == module.encode() or is_isomorphic(back, module)


def nakayama_p0(ctx: OPEContext) -> Rep:
    """nu_B P0 = (+) I(i) over the summands of P0."""
    return direct_sum([injective(ctx.B, i) for i in ctx.p0_vertices], ctx.B)
