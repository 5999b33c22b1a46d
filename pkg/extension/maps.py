"""
The maps e: stau-tilt B -> stau-tilt A and r: stau-tilt A -> stau-tilt B.

e(M, Q) = (E M (+) S, Q) and r(T, P) = (R T made basic, P without v). Both
results are re-verified as support tau-tilting pairs; a failure is a
TheoremViolation.
"""

from typing import List

from loguru import logger

from reps.decompose import decompose
from reps.homs import hom_basis, hom_dim, is_isomorphic
from reps.rep import Rep, direct_sum
from qa.report import Report
from extension.context import OPEContext
from extension.functors import extend, nakayama_p0, restrict
from tilting.keys import canonical_key
from tilting.pairs import STPair, contains_summand, is_stt_pair, is_tau_tilting, make_pair
from tools.errors import TheoremViolation


def _check(pair: STPair, what: str) -> STPair:
    if not is_stt_pair(pair):
        raise TheoremViolation(f"{what} = {pair.label()} is not a support tau-tilting pair")
    return pair


def e_map(ctx: OPEContext, pair: STPair, check: bool = True) -> STPair:
    if pair.algebra is not ctx.B:
        raise ValueError(f"e expects a pair over {ctx.B.name}")
    image = make_pair(ctx.A, [extend(ctx, m) for m in pair.summands] + [ctx.S], pair.support)
    if check:
        _check(image, f"e({pair.label()})")
    logger.trace(f"e: {pair.label()} -> {image.label()}")
    return image


def _basic(pieces: List[Rep]) -> List[Rep]:
    kept: List[Rep] = []
    for m in pieces:
        if not any(k.dim_vector == m.dim_vector and is_isomorphic(k, m) for k in kept):
            kept.append(m)
    return kept


def r_map(ctx: OPEContext, pair: STPair, check: bool = True) -> STPair:
    if pair.algebra is not ctx.A:
        raise ValueError(f"r expects a pair over {ctx.A.name}")
    pieces = [p for m in pair.summands for p in decompose(restrict(ctx, m)).summands]
    image = make_pair(ctx.B, _basic(pieces), pair.support - {ctx.v})
    if check:
        _check(image, f"r({pair.label()})")
    logger.trace(f"r: {pair.label()} -> {image.label()}")
    return image


def in_image(ctx: OPEContext, pair: STPair) -> bool:
    """``pair`` = e(r(pair)); since r e = id this is membership in the image of e."""
    return canonical_key(e_map(ctx, r_map(ctx, pair))) == canonical_key(pair)


def contains_S(ctx: OPEContext, pair: STPair) -> bool:
    return contains_summand(pair, ctx.S)


def end_extension_check(ctx: OPEContext, module: Rep) -> Report:
    """
    End_A(E T (+) S) against End_B(T) extended by Hom_B(T, nu_B P0).

    Raises:
        ValueError: If ``module`` is not tau-tilting over B
    """
    if not is_tau_tilting(module):
        raise ValueError("end_extension_check needs a tau-tilting B-module")
    et = extend(ctx, module)
    total = direct_sum([et, ctx.S], ctx.A)
    end_a = hom_dim(total, total)
    end_b = hom_dim(module, module)
    to_nu = hom_dim(module, nakayama_p0(ctx))
    to_s = hom_dim(et, ctx.S)
    corner = hom_dim(ctx.S, et)
    report = Report("end-extension")
    details = {"module": " + ".join(str(m.dim_vector) for m in decompose(module).summands)}
    report.add(
        "dimension_identity",
        end_a == end_b + to_nu + 1,
        dim_end_A=end_a, dim_end_B=end_b, dim_hom_nu=to_nu, **details,
    )
    report.add("corner_zero", corner == 0, dim_hom_S_ET=corner, **details)
    report.add("hom_to_S", to_s == to_nu, dim_hom_ET_S=to_s, dim_hom_nu=to_nu, **details)
    report.add("fully_faithful", len(hom_basis(et, et)) == end_b, **details)
    return report
