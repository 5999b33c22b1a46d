"""
JSON and DOT exports of enumerated posets.

The JSON form stores every summand as an explicit matrix record with
canonical rational strings, so importing it back gives modules with the same
canonical keys as the enumeration that produced it.
"""

from typing import Dict, Iterable, List, Optional

from loguru import logger
from pydantic import BaseModel

from algebra.bound import BoundQuiverAlgebra
from reps.literals import diagram, format_record, parse_record
from tilting.hasse import HasseArrow, HassePoset
from tilting.keys import canonical_key
from tilting.pairs import make_pair


class SummandRecord(BaseModel):
    dim_vector: List[int]
    diagram: str
    uniserial: bool
    record: Dict


class NodeRecord(BaseModel):
    index: int
    label: str
    summands: List[SummandRecord]
    support: List[str]


class ArrowRecord(BaseModel):
    source: int
    target: int
    position: int
    label: str


class PosetRecord(BaseModel):
    algebra: str
    vertices: List[str]
    complete: bool
    nodes: List[NodeRecord]
    arrows: List[ArrowRecord]


def _summand_record(module) -> SummandRecord:
    picture = diagram(module)
    return SummandRecord(
        dim_vector=list(module.dim_vector),
        diagram=picture,
        uniserial=" " not in picture,
        record=format_record(module),
    )


def poset_record(poset: HassePoset) -> PosetRecord:
    alg = poset.algebra
    nodes = [
        NodeRecord(
            index=i,
            label=node.label(),
            summands=[_summand_record(m) for m in node.summands],
            support=[v for v in alg.vertices if v in node.support],
        )
        for i, node in enumerate(poset.nodes)
    ]
    arrows = [
        ArrowRecord(source=a.source, target=a.target, position=a.position, label=a.label)
        for a in poset.arrows
    ]
    return PosetRecord(algebra=alg.name, vertices=list(alg.vertices), complete=poset.complete, nodes=nodes, arrows=arrows)


def poset_to_json(poset: HassePoset) -> str:
    return poset_record(poset).model_dump_json(indent=2)


def poset_from_json(algebra: BoundQuiverAlgebra, text: str) -> HassePoset:
    """
    Rebuild a poset over ``algebra`` from ``poset_to_json`` output.

    Raises:
        ValueError: If the record was written for a different vertex set
    """
    record = PosetRecord.model_validate_json(text)
    if record.vertices != list(algebra.vertices):
        raise ValueError(f"Poset record has vertices {record.vertices}, {algebra.name} has {list(algebra.vertices)}")
    nodes = [
        make_pair(algebra, [parse_record(algebra, s.record) for s in n.summands], n.support)
        for n in sorted(record.nodes, key=lambda n: n.index)
    ]
    arrows = [HasseArrow(a.source, a.target, a.position, a.label) for a in record.arrows]
    poset = HassePoset(algebra, nodes, [canonical_key(p) for p in nodes], arrows, record.complete)
    logger.debug(f"Imported {len(poset)} nodes and {len(arrows)} arrows for {algebra.name}")
    return poset


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(poset: HassePoset, highlight: Optional[Iterable[int]] = None) -> str:
    """
    Graphviz digraph, nodes ``n0..`` in poset order, one edge per arrow.

    Highlighted nodes (the image of e, say) are drawn dashed and blue.

    Raises:
        ValueError: If ``highlight`` names a node the poset does not have
    """
    marked = set(highlight or ())
    unknown = sorted(i for i in marked if not 0 <= i < len(poset))
    if unknown:
        raise ValueError(f"Highlight indices {unknown} are not nodes of the poset")
    lines = [f"digraph {_quote(poset.algebra.name)} {{", "  rankdir=TB;", "  node [shape=box];"]
    for i, node in enumerate(poset.nodes):
        style = " style=dashed color=blue" if i in marked else ""
        lines.append(f"  n{i} [label={_quote(node.label())}{style}];")
    for a in poset.arrows:
        lines.append(f"  n{a.source} -> n{a.target} [label={_quote(a.label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
