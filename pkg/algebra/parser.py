"""
Reading and writing the line-oriented algebra file format.

    algebra B1b
    vertices: 1 2
    arrows: b: 1 -> 2, a: 2 -> 1
    relations: a*b = 0
    cap: 50

Lines starting with ``#`` are comments. A relation is ``lhs = rhs`` where both
sides are sums of optionally-scaled paths (``2 b*d``, ``-1/2 a*c``) or ``0``;
``p*q`` means "first p, then q".
"""

import re
from pathlib import Path
from typing import List, Optional, Tuple

from loguru import logger

from algebra.bound import DEFAULT_LENGTH_CAP, BoundQuiverAlgebra
from algebra.linalg import ZERO, fmt_q, qq
from algebra.quiver import Arrow, PathWord, Quiver, Relation
from tools.errors import AlgebraParseError

_ARROW_RE = re.compile(r"^\s*([A-Za-z_][\w']*)\s*:\s*([\w']+)\s*->\s*([\w']+)\s*$")
_TERM_RE = re.compile(r"^(?:(\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z_][\w']*(?:\s*\*\s*[A-Za-z_][\w']*)*)$")
_NAME_RE = re.compile(r"^[\w']+$")


def _split_terms(side: str) -> List[Tuple[int, str]]:
    """Split ``a*b - 2 c*d + e*f`` into signed raw terms."""
    text = side.strip()
    if not text:
        raise AlgebraParseError("Empty side in relation")
    terms = []
    sign = 1
    current = ""
    for ch in text:
        if ch in "+-" and current.strip():
            terms.append((sign, current.strip()))
            current = ""
            sign = 1 if ch == "+" else -1
        elif ch in "+-":
            sign = sign * (1 if ch == "+" else -1)
        else:
            current += ch
    if not current.strip():
        raise AlgebraParseError(f"Dangling operator in '{side}'")
    terms.append((sign, current.strip()))
    return terms


def _parse_side(side: str, quiver: Quiver) -> List[Tuple[object, PathWord]]:
    if side.strip() == "0":
        return []
    out = []
    for sign, raw in _split_terms(side):
        match = _TERM_RE.match(raw)
        if not match:
            raise AlgebraParseError(f"Cannot parse relation term '{raw}'")
        coef = qq(match.group(1)) if match.group(1) else qq(1)
        names = [n.strip() for n in match.group(2).split("*")]
        path = quiver.path(names)
        out.append((coef * sign, path))
    return out


def parse_relation(text: str, quiver: Quiver) -> Relation:
    if text.count("=") != 1:
        raise AlgebraParseError(f"Relation '{text}' must contain exactly one '='")
    lhs, rhs = text.split("=")
    terms = _parse_side(lhs, quiver) + [(-c, p) for c, p in _parse_side(rhs, quiver)]
    if not terms:
        raise AlgebraParseError(f"Relation '{text}' has no terms")
    return Relation(tuple(terms))


def parse_algebra(text: str, cap: Optional[int] = None) -> BoundQuiverAlgebra:
    """
    Parse an algebra file into a BoundQuiverAlgebra.

    Args:
        text: File contents
        cap: Length cap override; the file's ``cap:`` line wins over the default

    Raises:
        AlgebraParseError: Malformed syntax, unknown names, non-composable paths
        AdmissibilityError: The ideal is not admissible within the cap
    """
    name = None
    vertices: List[str] = []
    arrow_specs: List[str] = []
    relation_specs: List[str] = []
    file_cap = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("algebra"):
            parts = line.split(None, 1)
            if len(parts) != 2 or parts[0] != "algebra":
                raise AlgebraParseError(f"line {lineno}: expected 'algebra <name>'")
            name = parts[1].strip()
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise AlgebraParseError(f"line {lineno}: expected '<key>: ...', got '{line}'")
        key = key.strip()
        rest = rest.strip()
        if key == "vertices":
            vertices.extend(rest.split())
        elif key == "arrows":
            arrow_specs.extend(s for s in rest.split(",") if s.strip())
        elif key == "relations":
            relation_specs.extend(s for s in rest.split(",") if s.strip())
        elif key == "cap":
            try:
                file_cap = int(rest)
            except ValueError:
                raise AlgebraParseError(f"line {lineno}: cap must be an integer") from None
        else:
            raise AlgebraParseError(f"line {lineno}: unknown key '{key}'")

    if name is None:
        raise AlgebraParseError("Missing 'algebra <name>' line")
    if not vertices:
        raise AlgebraParseError("Missing 'vertices:' line")
    for v in vertices:
        if not _NAME_RE.match(v):
            raise AlgebraParseError(f"Invalid vertex id '{v}'")

    arrows = []
    for spec in arrow_specs:
        match = _ARROW_RE.match(spec)
        if not match:
            raise AlgebraParseError(f"Cannot parse arrow '{spec.strip()}' (expected 'name: i -> j')")
        arrows.append(Arrow(*match.groups()))
    quiver = Quiver(tuple(vertices), tuple(arrows))
    relations = [parse_relation(spec, quiver) for spec in relation_specs]

    length_cap = file_cap or cap or DEFAULT_LENGTH_CAP
    algebra = BoundQuiverAlgebra(name, quiver, relations, length_cap)
    logger.debug(f"Parsed algebra {name}: basis {[str(p) for p in algebra.basis()]}")
    return algebra


def load_algebra(path, cap: Optional[int] = None) -> BoundQuiverAlgebra:
    return parse_algebra(Path(path).read_text(encoding="utf-8"), cap=cap)


def _format_term(coef, path: PathWord, first: bool) -> str:
    sign = "-" if coef < 0 else "+"
    magnitude = -coef if coef < 0 else coef
    body = str(path) if magnitude == 1 else f"{fmt_q(magnitude)} {path}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def format_algebra(algebra: BoundQuiverAlgebra) -> str:
    """Inverse of parse_algebra (relations written as ``... = 0``)."""
    lines = [
        f"algebra {algebra.name}",
        "vertices: " + " ".join(algebra.vertices),
        "arrows: " + ", ".join(f"{a.name}: {a.source} -> {a.target}" for a in algebra.arrows),
    ]
    rels = []
    for rel in algebra.relations:
        terms = [(c, p) for c, p in rel.terms if c != ZERO]
        rels.append("".join(_format_term(c, p, i == 0) for i, (c, p) in enumerate(terms)) + " = 0")
    if rels:
        lines.append("relations: " + ", ".join(rels))
    lines.append(f"cap: {algebra.cap}")
    return "\n".join(lines) + "\n"
