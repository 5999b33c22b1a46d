"""
Executable checks of the one-point extension results on enumerated posets.

Every verifier returns a Report. Statements that fail are recorded as FAIL
checks instead of raising, so one sweep reports every violation it finds.
"""

from typing import Dict, List, Optional, Tuple

import networkx as nx
from loguru import logger

from reps.homs import find_monomorphism, find_split_monomorphism, hom_dim
from reps.literals import diagram
from reps.presentation import ext1_dim, min_presentation, tau
from reps.rep import Rep, direct_sum
from qa.report import Report
from extension.context import OPEContext
from extension.functors import extend, in_S_perp, inflate, nakayama_p0, restrict
from extension.maps import contains_S, e_map, end_extension_check, r_map
from tilting.completion import cached_hasse
from tilting.hasse import HassePoset
from tilting.keys import canonical_key, module_key
from tilting.pairs import is_tau_rigid
from tools.errors import TheoremViolation


def _posets(ctx: OPEContext, poset_B: Optional[HassePoset], poset_A: Optional[HassePoset]):
    return (
        poset_B if poset_B is not None else cached_hasse(ctx.B),
        poset_A if poset_A is not None else cached_hasse(ctx.A),
    )


def rigid_modules(poset: HassePoset) -> List[Rep]:
    """Module parts of the nodes and their indecomposable summands, one per isomorphism class."""
    seen: Dict[Tuple, Rep] = {}
    for node in poset.nodes:
        if node.summands:
            seen.setdefault(canonical_key(node)[0], node.module)
    for m in poset.indecomposables():
        seen.setdefault((module_key(m),), m)
    return [seen[k] for k in sorted(seen)]


def _is_summand(q: Rep, p: Rep) -> bool:
    return find_split_monomorphism(q, p) is not None


def verify_section2(ctx: OPEContext, poset_B: Optional[HassePoset] = None, poset_A: Optional[HassePoset] = None) -> Report:
    """
    Extension, restriction and translate statements over every tau-rigid module of both posets.

    Check ids:
      extend_rigid          E T (+) S is tau-rigid, T over B
      hom_to_S              dim Hom_A(E T, S) = dim Hom_B(T, nu P0)
      presentation_summand  each term of the minimal presentation of R T is a summand of R of the same term for T
      translate_embeds      tau_B R T embeds into tau_A T and into R tau_A T
      inflated_translate    tau_A R T embeds into tau_A T
      restrict_rigid        R T is tau-rigid over B and over A
      orthogonal            Hom(X, tau_B R T) = 0 implies Hom(E X, tau_A T) = 0
      ext_identities        Ext_A(X, E M) = Ext_B(R X, M), and Ext_A(E M, X) = Ext_B(M, R X) for X in S^perp
      ext_epimorphism       Ext_A(X, Y) >= Ext_B(R X, R Y), with equality for Y in S^perp
    """
    poset_B, poset_A = _posets(ctx, poset_B, poset_A)
    report = Report(f"section2-{ctx.A.name}")
    b_rigid, a_rigid = rigid_modules(poset_B), rigid_modules(poset_A)
    b_indec, a_indec = poset_B.indecomposables(), poset_A.indecomposables()
    nu = nakayama_p0(ctx)
    logger.info(f"section2 {ctx.A.name}: {len(b_rigid)} B-modules, {len(a_rigid)} A-modules")

    for t in b_rigid:
        et = extend(ctx, t)
        report.add("extend_rigid", is_tau_rigid(direct_sum([et, ctx.S], ctx.A)), module=diagram(t))
        to_nu = hom_dim(t, nu)
        report.add("hom_to_S", hom_dim(et, ctx.S) == to_nu, module=diagram(t), dim=to_nu)

    for t in a_rigid:
        name = diagram(t)
        rt = restrict(ctx, t)
        if not rt.is_zero():
            pres_t, pres_rt = min_presentation(t), min_presentation(rt)
            for term, q, p in (("P0", pres_rt.P0, pres_t.P0), ("P1", pres_rt.P1, pres_t.P1)):
                report.add("presentation_summand", _is_summand(q, restrict(ctx, p)), module=name, term=term)
        tau_a, tau_b = tau(t), tau(rt)
        report.add(
            "translate_embeds",
            find_monomorphism(inflate(ctx, tau_b), tau_a) is not None
            and find_monomorphism(tau_b, restrict(ctx, tau_a)) is not None,
            module=name, tau_B_RT=diagram(tau_b), tau_A_T=diagram(tau_a),
        )
        report.add("inflated_translate", find_monomorphism(tau(inflate(ctx, rt)), tau_a) is not None, module=name)
        report.add("restrict_rigid", is_tau_rigid(rt) and is_tau_rigid(inflate(ctx, rt)), module=name)
        bad = [
            diagram(x) for x in b_indec
            if hom_dim(x, tau_b) == 0 and hom_dim(extend(ctx, x), tau_a) != 0
        ]
        report.add("orthogonal", not bad, module=name, counterexamples=bad)

    for x in a_indec:
        rx = restrict(ctx, x)
        x_perp = in_S_perp(ctx, x)
        for m in b_indec:
            em = extend(ctx, m)
            ok = ext1_dim(x, em) == ext1_dim(rx, m)
            if x_perp:
                ok = ok and ext1_dim(em, x) == ext1_dim(m, rx)
            report.add("ext_identities", ok, X=diagram(x), M=diagram(m))
        for y in a_indec:
            a_side, b_side = ext1_dim(x, y), ext1_dim(rx, restrict(ctx, y))
            ok = a_side >= b_side and (a_side == b_side or not in_S_perp(ctx, y))
            report.add("ext_epimorphism", ok, X=diagram(x), Y=diagram(y), ext_A=a_side, ext_B=b_side)
    return report


def _images(ctx: OPEContext, poset_B: HassePoset, poset_A: HassePoset, report: Report) -> List[Optional[int]]:
    found: List[Optional[int]] = []
    for node in poset_B.nodes:
        try:
            image = e_map(ctx, node)
        except TheoremViolation as e:
            report.add("e_valid", False, node=node.label(), error=str(e))
            found.append(None)
            continue
        found.append(poset_A.index_of(image))
    return found


def _closure(poset: HassePoset) -> nx.DiGraph:
    return nx.transitive_closure_dag(poset.to_networkx())


def verify_embedding(ctx: OPEContext, poset_B: Optional[HassePoset] = None, poset_A: Optional[HassePoset] = None) -> Report:
    """
    e is an order embedding that maps arrows to arrows and is full on arrows;
    r is order preserving and r e is the identity.
    """
    poset_B, poset_A = _posets(ctx, poset_B, poset_A)
    report = Report(f"embedding-{ctx.A.name}")
    if not (poset_B.complete and poset_A.complete):
        report.skip("embedding", "poset enumeration is partial")
        return report
    image = _images(ctx, poset_B, poset_A, report)
    report.add("e_nodes_found", all(i is not None for i in image), image_nodes=len(image))
    if any(i is None for i in image):
        return report
    report.add("e_injective", len(set(image)) == len(image), nodes_B=len(poset_B), nodes_A=len(poset_A))

    closure_B, closure_A = _closure(poset_B), _closure(poset_A)
    order_bad = [
        (i, j) for i in range(len(image)) for j in range(len(image))
        if i != j and closure_B.has_edge(i, j) != closure_A.has_edge(image[i], image[j])
    ]
    report.add("e_order_embedding", not order_bad, violations=order_bad)

    missing = [(a.source, a.target) for a in poset_B.arrows if not poset_A.has_arrow(image[a.source], image[a.target])]
    report.add("e_arrows", not missing, arrows_B=len(poset_B.arrows), missing=missing)

    preimage = {a: b for b, a in enumerate(image)}
    lifted = {(image[a.source], image[a.target]) for a in poset_B.arrows}
    extra = [
        (a.source, a.target) for a in poset_A.arrows
        if a.source in preimage and a.target in preimage and (a.source, a.target) not in lifted
    ]
    report.add("e_full", not extra, arrows_between_images=len(lifted) + len(extra), unlifted=extra)

    restricted: List[Optional[int]] = []
    for node in poset_A.nodes:
        try:
            restricted.append(poset_B.index_of(r_map(ctx, node)))
        except TheoremViolation as e:
            report.add("r_valid", False, node=node.label(), error=str(e))
            restricted.append(None)
    report.add("r_nodes_found", all(i is not None for i in restricted), nodes_A=len(poset_A))
    if all(i is not None for i in restricted):
        r_bad = [
            (a.source, a.target) for a in poset_A.arrows
            if restricted[a.source] != restricted[a.target]
            and not closure_B.has_edge(restricted[a.source], restricted[a.target])
        ]
        report.add("r_order", not r_bad, violations=r_bad)
        report.add("re_identity", all(restricted[image[i]] == i for i in range(len(image))), nodes=len(image))

    with_s = {i for i, node in enumerate(poset_A.nodes) if contains_S(ctx, node)}
    agree = with_s == set(image)
    if not agree:
        logger.warning(f"{ctx.A.name}: image of e differs from the pairs having S as a summand")
    report.add("image_vs_S_summand", True, recorded=True, agree=agree, with_S=len(with_s), image=len(image))
    logger.info(f"embedding {ctx.B.name} -> {ctx.A.name}: {len(image)} of {len(poset_A)} nodes, ok={report.ok}")
    return report


def boundary_profile(ctx: OPEContext, poset_A: HassePoset, image: List[int], index: int, module: Rep) -> Dict:
    """Hom(E M, S) for the B-module M of a node and its neighbours outside the image of e."""
    inside = set(image)
    return {
        "hom_EM_S": hom_dim(extend(ctx, module), ctx.S),
        "successors_outside": [j for j in poset_A.successors(index) if j not in inside],
        "predecessors_outside": [j for j in poset_A.predecessors(index) if j not in inside],
    }


def verify_boundary(ctx: OPEContext, poset_B: Optional[HassePoset] = None, poset_A: Optional[HassePoset] = None) -> Report:
    """
    For each image node e(M, Q):

      Hom(E M, S) != 0  all successors lie in the image and exactly one predecessor does not
      Hom(E M, S) = 0   the number of predecessors outside the image is not one

    Successors leaving the image in the second case are recorded.
    """
    poset_B, poset_A = _posets(ctx, poset_B, poset_A)
    report = Report(f"boundary-{ctx.A.name}")
    if not (poset_B.complete and poset_A.complete):
        report.skip("boundary", "poset enumeration is partial")
        return report
    image = _images(ctx, poset_B, poset_A, report)
    if any(i is None for i in image):
        report.add("e_nodes_found", False)
        return report
    for node, index in zip(poset_B.nodes, image):
        label = poset_A.nodes[index].label()
        profile = boundary_profile(ctx, poset_A, image, index, node.module)
        succ_out, pred_out = profile["successors_outside"], profile["predecessors_outside"]
        if profile["hom_EM_S"]:
            report.add("successors_in_image", not succ_out, node=label, outside=succ_out)
            report.add("one_predecessor_outside", len(pred_out) == 1, node=label, outside=pred_out)
        else:
            report.add(
                "predecessor_criterion", len(pred_out) != 1,
                node=label, predecessors_outside=pred_out, successors_outside=succ_out,
            )
    return report


def verify_torsion_membership(ctx: OPEContext, poset_B: Optional[HassePoset] = None) -> Report:
    """
    For tau-tilting B-modules T and enumerated indecomposables X:
    X in perp(tau_B T) iff E X in perp(tau_A E T), and Hom(T, X) = 0 iff Hom(E T, E X) = 0.
    """
    poset_B = poset_B if poset_B is not None else cached_hasse(ctx.B)
    report = Report(f"torsion-{ctx.A.name}")
    modules = poset_B.indecomposables()
    extended = {id(x): extend(ctx, x) for x in modules}
    for node in poset_B.nodes:
        if node.support:
            continue
        t = node.module
        et = extend(ctx, t)
        tau_t, tau_et = tau(t), tau(et)
        torsion_bad, free_bad = [], []
        for x in modules:
            ex = extended[id(x)]
            if (hom_dim(x, tau_t) == 0) != (hom_dim(ex, tau_et) == 0):
                torsion_bad.append(diagram(x))
            if (hom_dim(t, x) == 0) != (hom_dim(et, ex) == 0):
                free_bad.append(diagram(x))
        report.add("torsion_class", not torsion_bad, module=node.label(), mismatches=torsion_bad)
        report.add("torsionfree_class", not free_bad, module=node.label(), mismatches=free_bad)
    return report


def theorem_a_sweep(ctx: OPEContext, poset_B: Optional[HassePoset] = None, poset_A: Optional[HassePoset] = None) -> Report:
    """e on every B-node and r on every A-node give verified pairs, r e = id, and the End identity per tau-tilting module."""
    poset_B, poset_A = _posets(ctx, poset_B, poset_A)
    report = Report(f"pairs-{ctx.A.name}")
    for node in poset_B.nodes:
        try:
            back = r_map(ctx, e_map(ctx, node))
            report.add("re_identity", canonical_key(back) == canonical_key(node), node=node.label())
        except TheoremViolation as e:
            report.add("e_valid", False, node=node.label(), error=str(e))
    for node in poset_A.nodes:
        try:
            r_map(ctx, node)
            report.add("r_valid", True, node=node.label())
        except TheoremViolation as e:
            report.add("r_valid", False, node=node.label(), error=str(e))
    for node in poset_B.nodes:
        if not node.support:
            report.extend(end_extension_check(ctx, node.module), prefix="end/")
    return report

