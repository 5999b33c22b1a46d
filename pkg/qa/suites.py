"""
Verification suites run by ``qtau verify-paper``.

Each suite loads the fixture algebras it needs, runs its steps in order and
returns one Report. Fixture algebras are loaded once per process so the
posets cached on them are shared between suites.
"""

import os
import time
from functools import lru_cache
from typing import Callable, Dict, List

from loguru import logger

from algebra.bound import BoundQuiverAlgebra
from algebra.parser import load_algebra
from reps.construct import injective, projective
from reps.homs import find_monomorphism, is_isomorphic, radical_layers, socle_layers, top
from reps.literals import parse_module
from reps.presentation import tau
from qa.properties import run_properties
from qa.report import Report, merge
from qa.utils import format_duration, read_json
from extension.context import context_from_algebras
from extension.functors import extend, restrict
from extension.maps import e_map
from extension.nonprojective import module_extension, nonprojective_witnesses, verify_nonprojective_failure
from extension.verify import (
    boundary_profile,
    theorem_a_sweep,
    verify_boundary,
    verify_embedding,
    verify_section2,
    verify_torsion_membership,
)
from tilting.completion import cached_hasse, complements
from tilting.hasse import HassePoset
from tilting.keys import canonical_key
from tilting.pairs import parse_pair
from tools.errors import ZeroPrefixError


@lru_cache(maxsize=None)
def _load(path: str) -> BoundQuiverAlgebra:
    return load_algebra(path)


def fixture(cfg: Dict, name: str) -> BoundQuiverAlgebra:
    return _load(os.path.abspath(os.path.join(cfg["fixtures_dir"], f"{name}.qa")))


def _poset(algebra: BoundQuiverAlgebra, cfg: Dict) -> HassePoset:
    return cached_hasse(algebra, cfg.get("max_nodes", 10_000))


def check_golden(report: Report, cfg: Dict, algebra: BoundQuiverAlgebra, poset: HassePoset) -> None:
    """Compare a poset against ``<golden_dir>/<name>.json``."""
    path = os.path.join(cfg["golden_dir"], f"{algebra.name}.json")
    if not os.path.exists(path):
        report.skip(f"golden/{algebra.name}", f"no golden file at {path}")
        return
    golden = read_json(path)
    prefix = f"golden/{algebra.name}/"
    report.add(prefix + "complete", poset.complete == golden["complete"], complete=poset.complete)
    if golden.get("nodes") is not None:
        report.add(prefix + "nodes", len(poset) == golden["nodes"], nodes=len(poset), expected=golden["nodes"])
    if golden.get("arrows") is not None:
        report.add(prefix + "arrows", len(poset.arrows) == golden["arrows"], arrows=len(poset.arrows), expected=golden["arrows"])
    if golden.get("regular"):
        report.add(prefix + "regular", poset.is_regular(), n=algebra.n)
    for literal in golden.get("required_nodes", []):
        report.add(prefix + "node", poset.index_of(parse_pair(algebra, literal)) is not None, pair=literal)
    for upper, lower in golden.get("required_arrows", []):
        i = poset.index_of(parse_pair(algebra, upper))
        j = poset.index_of(parse_pair(algebra, lower))
        report.add(prefix + "arrow", i is not None and j is not None and poset.has_arrow(i, j), source=upper, target=lower)


def suite_s2_example(cfg: Dict) -> Report:
    """Translates and restrictions of M = [3|2|1] over A1a, plus the fixture facts of B1a."""
    report = Report("s2-example")
    B, A = fixture(cfg, "B1a"), fixture(cfg, "A1a")
    ctx = context_from_algebras(B, A)

    logger.info("Step 1/3: fixture facts")
    report.add("dim_B1a", B.dim == 5, dim=B.dim)
    report.add("projective_2", is_isomorphic(projective(B, "2"), parse_module(B, "u:2>1>2")))
    report.add("injective_1", is_isomorphic(injective(B, "1"), parse_module(B, "u:2>1")))
    try:
        parse_module(B, "u:1>2>1")
        report.add("zero_prefix_121", False)
    except ZeroPrefixError:
        report.add("zero_prefix_121", True)

    logger.info("Step 2/3: translates of M")
    m = parse_module(A, "u:3>2>1")
    rm = restrict(ctx, m)
    tau_a = tau(m)
    r_tau_a = restrict(ctx, tau_a)
    tau_b = tau(rm)
    report.add("R_M", is_isomorphic(rm, parse_module(B, "u:2>1")), dims=rm.dim_vector)
    report.add(
        "tau_A_M",
        tau_a.dim_vector == (1, 2, 1)
        and socle_layers(tau_a) == [(0, 1, 0), (1, 0, 1), (0, 1, 0)]
        and is_isomorphic(top(tau_a), parse_module(A, "s:2 + s:3")),
        dims=tau_a.dim_vector, socle_layers=socle_layers(tau_a), radical_layers=radical_layers(tau_a),
    )
    report.add("R_tau_A_M", is_isomorphic(r_tau_a, parse_module(B, "u:2>1>2")), dims=r_tau_a.dim_vector)
    report.add("tau_B_R_M", is_isomorphic(tau_b, parse_module(B, "u:1>2")), dims=tau_b.dim_vector)
    embedding = find_monomorphism(tau_b, r_tau_a)
    report.add(
        "proper_embedding",
        embedding is not None and not embedding.is_surjective(),
        source=tau_b.dim_vector, target=r_tau_a.dim_vector,
    )

    logger.info("Step 3/3: extension statements over A1a")
    report.extend(verify_section2(ctx, _poset(B, cfg), _poset(A, cfg)), prefix="section2/")
    return report


def suite_s3_figure(cfg: Dict) -> Report:
    """The 18-node poset of A1b, the 6-node poset of B1b and the golden node sets."""
    report = Report("s3-figure")
    B, A = fixture(cfg, "B1b"), fixture(cfg, "A1b")

    logger.info("Step 1/3: enumerate B1b and A1b")
    started = time.time()
    poset_B, poset_A = _poset(B, cfg), _poset(A, cfg)
    logger.info(f"Enumerated in {format_duration(time.time() - started)}")
    report.add("dims", B.dim == 5 and A.dim == 8, dim_B=B.dim, dim_A=A.dim)

    logger.info("Step 2/3: golden comparison")
    for algebra, poset in ((B, poset_B), (A, poset_A)):
        check_golden(report, cfg, algebra, poset)

    logger.info("Step 3/3: order and exchange structure")
    report.add("order_A1b", not poset_A.order_violations(), nodes=len(poset_A))
    report.add("order_B1b", not poset_B.order_violations(), nodes=len(poset_B))
    regular = parse_pair(A, "p:1 + p:2 + p:3")
    report.add("maximum", poset_A.index_of(regular) == poset_A.maximum)
    return report


def suite_s3_embedding(cfg: Dict) -> Report:
    """e and r between B1b/A1b, B2/A2 and K/K2, with the pair sweep and End identity."""
    report = Report("s3-embedding")
    cases = [("B1b", "A1b"), ("B2", "A2"), ("K", "K2")]
    for step, (b_name, a_name) in enumerate(cases, 1):
        logger.info(f"Step {step}/{len(cases)}: {b_name} -> {a_name}")
        B, A = fixture(cfg, b_name), fixture(cfg, a_name)
        ctx = context_from_algebras(B, A)
        poset_B, poset_A = _poset(B, cfg), _poset(A, cfg)
        check_golden(report, cfg, B, poset_B)
        check_golden(report, cfg, A, poset_A)
        report.extend(verify_embedding(ctx, poset_B, poset_A), prefix=f"{a_name}/")
        report.extend(theorem_a_sweep(ctx, poset_B, poset_A), prefix=f"{a_name}/")
        report.extend(verify_torsion_membership(ctx, poset_B), prefix=f"{a_name}/")
    return report


def suite_s3_boundary(cfg: Dict) -> Report:
    """Boundary theorems on A1b and A2, and the named node of A2 with its complements."""
    report = Report("s3-boundary")
    for step, (b_name, a_name) in enumerate((("B1b", "A1b"), ("B2", "A2")), 1):
        logger.info(f"Step {step}/3: boundary of the image in {a_name}")
        B, A = fixture(cfg, b_name), fixture(cfg, a_name)
        ctx = context_from_algebras(B, A)
        report.extend(verify_boundary(ctx, _poset(B, cfg), _poset(A, cfg)), prefix=f"{a_name}/")

    logger.info("Step 3/3: the pair (S1 + S4, {2,3}) of A2")
    B, A = fixture(cfg, "B2"), fixture(cfg, "A2")
    ctx = context_from_algebras(B, A)
    poset_B, poset_A = _poset(B, cfg), _poset(A, cfg)
    almost = parse_pair(A, "s:1 + s:4 | 2,3")
    larger, smaller = complements(almost, poset_A)
    expected_larger = parse_pair(A, "s:1 + s:4 + s:5 | 2,3")
    expected_smaller = parse_pair(A, "s:1 + s:4 | 2,3,5")
    report.add(
        "complements",
        canonical_key(larger) == canonical_key(expected_larger)
        and canonical_key(smaller) == canonical_key(expected_smaller),
        larger=larger.label(), smaller=smaller.label(),
    )
    i, j = poset_A.index_of(larger), poset_A.index_of(smaller)
    report.add("arrow", i is not None and j is not None and poset_A.has_arrow(i, j))
    b_node = parse_pair(B, "s:1 + s:4 | 2,3")
    image = [poset_A.index_of(e_map(ctx, node)) for node in poset_B.nodes]
    profile = boundary_profile(ctx, poset_A, image, i, b_node.module)
    report.add(
        "non_image_successor",
        profile["hom_EM_S"] == 0 and j in profile["successors_outside"],
        **profile,
    )
    return report


def suite_nonprojective(cfg: Dict) -> Report:
    """Witnesses over A3 = B2[[3|2]], and the projective control over A2."""
    report = Report("nonprojective")
    B, A3, A2 = fixture(cfg, "B2"), fixture(cfg, "A3"), fixture(cfg, "A2")
    x = parse_module(B, "u:3>2")

    logger.info("Step 1/3: A3 is not a projective extension")
    try:
        context_from_algebras(B, A3)
        report.add("A3_not_projective_extension", False)
    except ValueError:
        report.add("A3_not_projective_extension", True)
    try:
        parse_module(B, "u:4>3>1")
        report.add("uniserial_431_absent", False)
    except ZeroPrefixError:
        report.add("uniserial_431_absent", True)

    logger.info("Step 2/3: witness search over A3")
    report.extend(verify_nonprojective_failure(B, A3, x, _poset(B, cfg), _poset(A3, cfg)), prefix="A3/")

    logger.info("Step 3/3: projective control over A2")
    ctx = context_from_algebras(B, A2)
    p3 = projective(B, "3")
    control = nonprojective_witnesses(B, A2, p3, _poset(B, cfg), _poset(A2, cfg))
    report.add("control_no_witnesses", not control.extension and not control.restriction)
    agree = all(
        is_isomorphic(module_extension(A2, p3, m), extend(ctx, m)) for m in _poset(B, cfg).indecomposables()
    )
    report.add("control_matches_extend", agree)
    return report


def suite_properties(cfg: Dict) -> Report:
    return run_properties(cfg, {name: fixture(cfg, name) for name in ("B1a", "A1a", "B1b", "A1b", "B2", "A2")})


SUITES: Dict[str, Callable[[Dict], Report]] = {
    "s2-example": suite_s2_example,
    "s3-figure": suite_s3_figure,
    "s3-embedding": suite_s3_embedding,
    "s3-boundary": suite_s3_boundary,
    "nonprojective": suite_nonprojective,
    "properties": suite_properties,
}


def run_suite(name: str, cfg: Dict) -> Report:
    """
    Run one suite, or every suite for ``all``.

    Raises:
        ValueError: If the suite name is unknown
    """
    if name == "all":
        return merge("all", [run_suite(n, cfg) for n in SUITES])
    if name not in SUITES:
        raise ValueError(f"Unknown suite '{name}', expected one of {sorted(SUITES)} or 'all'")
    started = time.time()
    report = SUITES[name](cfg)
    counts = report.counts()
    logger.info(f"Suite {name}: {counts} in {format_duration(time.time() - started)}")
    return report


def suite_names() -> List[str]:
    return list(SUITES) + ["all"]

