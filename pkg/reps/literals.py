"""
Module literals for the command line and for exported records.

Accepted forms, optionally joined by ``+`` into a direct sum:

    0                     the zero module
    simple:2              S_2
    proj:2 / inj:2        indecomposable projective / injective at 2
    uniserial:3>2>1       walk 3 -> 2 -> 1, one arrow per hop
    {dims: {1: 1, 2: 1}, mats: {b: [[1]]}}
                          explicit record, rationals as ints or "p/q" strings
"""

from typing import Dict, List

import yaml

from algebra import linalg as la
from algebra.bound import BoundQuiverAlgebra
from reps.construct import injective, projective, simple, uniserial
from reps.homs import radical_layers
from reps.rep import Rep, check_rep, direct_sum, zero_rep
from tools.errors import AlgebraParseError, ModuleLiteralError, ShapeError

_SHORTHANDS = {
    "simple": simple,
    "s": simple,
    "proj": projective,
    "projective": projective,
    "p": projective,
    "inj": injective,
    "injective": injective,
    "i": injective,
}


def _split_sum(text: str) -> List[str]:
    """Split on '+' outside braces and brackets."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "{[":
            depth += 1
        elif ch in "}]":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts]


def _entry(value, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise ModuleLiteralError(f"{where}: entry {value!r} must be an integer or a 'p/q' string")
    try:
        return la.qq(value)
    except ValueError as e:
        raise ModuleLiteralError(f"{where}: {e}") from None


def parse_record(algebra: BoundQuiverAlgebra, record: Dict) -> Rep:
    """
    Build a module from ``{dims: {...}, mats: {...}}``.

    Raises:
        ModuleLiteralError: If the record is malformed or violates a relation
    """
    if not isinstance(record, dict) or "dims" not in record:
        raise ModuleLiteralError("Module record needs a 'dims' mapping")
    dims_raw = record.get("dims") or {}
    mats_raw = record.get("mats") or {}
    if not isinstance(dims_raw, dict) or not isinstance(mats_raw, dict):
        raise ModuleLiteralError("'dims' and 'mats' must be mappings")
    dims = {str(v): int(n) for v, n in dims_raw.items()}
    mats = {}
    for name, rows in mats_raw.items():
        name = str(name)
        try:
            arrow = algebra.quiver.arrow(name)
        except AlgebraParseError as e:
            raise ModuleLiteralError(str(e)) from None
        ncols = dims.get(arrow.source, 0)
        rows = rows or []
        if len(rows) != dims.get(arrow.target, 0):
            raise ModuleLiteralError(
                f"Arrow {name}: {len(rows)} rows, expected {dims.get(arrow.target, 0)}"
            )
        values = [[_entry(x, f"arrow {name}") for x in row] for row in rows]
        try:
            mats[name] = la.mat(values, ncols) if values else la.zeros(0, ncols)
        except ValueError as e:
            raise ModuleLiteralError(f"Arrow {name}: {e}") from None
    try:
        module = Rep(algebra, dims, mats)
    except ShapeError as e:
        raise ModuleLiteralError(str(e)) from None
    if not check_rep(module):
        raise ModuleLiteralError(f"Module record does not satisfy the relations of {algebra.name}")
    return module


def _parse_one(algebra: BoundQuiverAlgebra, text: str) -> Rep:
    if not text:
        raise ModuleLiteralError("Empty module literal")
    if text == "0":
        return zero_rep(algebra)
    if text.startswith("{"):
        try:
            record = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise ModuleLiteralError(f"Cannot read module record: {e}") from None
        return parse_record(algebra, record)
    kind, sep, arg = text.partition(":")
    kind, arg = kind.strip().lower(), arg.strip()
    if not sep or not arg:
        raise ModuleLiteralError(f"Cannot parse module literal '{text}'")
    try:
        if kind in ("uniserial", "u"):
            word = algebra.quiver.walk([v.strip() for v in arg.split(">")])
            return uniserial(algebra, word)
        if kind in _SHORTHANDS:
            algebra.check_vertex(arg)
            return _SHORTHANDS[kind](algebra, arg)
    except AlgebraParseError as e:
        raise ModuleLiteralError(f"{text}: {e}") from None
    raise ModuleLiteralError(f"Unknown module constructor '{kind}' in '{text}'")


def parse_module(algebra: BoundQuiverAlgebra, text: str) -> Rep:
    """Parse a module literal; ``a + b`` is the direct sum."""
    return direct_sum([_parse_one(algebra, part) for part in _split_sum(text.strip())], algebra)


def parse_summands(algebra: BoundQuiverAlgebra, text: str) -> List[Rep]:
    """Like ``parse_module`` but keeps the summands apart; zero parts are dropped."""
    modules = [_parse_one(algebra, part) for part in _split_sum(text.strip())]
    return [m for m in modules if not m.is_zero()]


def diagram(module: Rep) -> str:
    """Radical layers, top first: ``[3|2|1]`` or ``[2|1 3|2]``; ``0`` for the zero module."""
    if module.is_zero():
        return "0"
    vertices = module.algebra.vertices
    layers = []
    for layer in radical_layers(module):
        layers.append(" ".join(v for v, k in zip(vertices, layer) for _ in range(k)))
    return "[" + "|".join(layers) + "]"


def format_record(module: Rep) -> Dict:
    """Inverse of ``parse_record``, with canonical rational strings."""
    alg = module.algebra
    return {
        "dims": {v: module.dims[v] for v in alg.vertices if module.dims[v]},
        "mats": {
            a.name: [[la.fmt_q(x) for x in row] for row in la.rows_of(module.mats[a.name])]
            for a in alg.arrows
            if module.dims[a.source] and module.dims[a.target]
        },
    }


def format_module(module: Rep) -> str:
    """Single-line literal accepted by ``parse_module``."""
    return yaml.safe_dump(format_record(module), default_flow_style=True, sort_keys=False).strip()
