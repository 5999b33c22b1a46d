"""
Quivers, paths and relations.

Composition is diagrammatic: the word ``p*q`` means "first p, then q", and an
arrow ``a: i -> j`` acts on a representation as a linear map M_i -> M_j.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from tools.errors import AlgebraParseError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True, order=False)
class PathWord:
    """A composable arrow word from ``source`` to ``target`` (empty word = e_source)."""

    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return "*".join(self.arrows)


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths, read as ``sum(coef * path) = 0``."""

    terms: Tuple[Tuple[object, PathWord], ...]

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    _by_name: Dict[str, Arrow] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraParseError(f"Duplicate vertex ids in {list(self.vertices)}")
        known = set(self.vertices)
        for arrow in self.arrows:
            if arrow.name in self._by_name:
                raise AlgebraParseError(f"Duplicate arrow name '{arrow.name}'")
            if arrow.source not in known or arrow.target not in known:
                raise AlgebraParseError(
                    f"Arrow '{arrow.name}: {arrow.source} -> {arrow.target}' uses an undeclared vertex"
                )
            self._by_name[arrow.name] = arrow

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise AlgebraParseError(f"Unknown arrow '{name}'") from None

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self.vertices

    def arrow_index(self, name: str) -> int:
        return self.arrows.index(self.arrow(name))

    def arrows_from(self, vertex: str) -> List[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def arrows_into(self, vertex: str) -> List[Arrow]:
        return [a for a in self.arrows if a.target == vertex]

    def trivial(self, vertex: str) -> PathWord:
        if vertex not in self.vertices:
            raise AlgebraParseError(f"Unknown vertex '{vertex}'")
        return PathWord(vertex, vertex, ())

    def path(self, names: Sequence[str]) -> PathWord:
        """Build a path from arrow names; raises if consecutive arrows do not compose."""
        if not names:
            raise AlgebraParseError("Empty arrow word needs a vertex; use trivial()")
        arrows = [self.arrow(n) for n in names]
        for first, second in zip(arrows, arrows[1:]):
            if first.target != second.source:
                raise AlgebraParseError(
                    f"Path {'*'.join(names)} is not composable: "
                    f"{first.name} ends at {first.target}, {second.name} starts at {second.source}"
                )
        return PathWord(arrows[0].source, arrows[-1].target, tuple(names))

    def concat(self, p: PathWord, q: PathWord) -> PathWord:
        """p then q; callers check ``p.target == q.source``."""
        return PathWord(p.source, q.target, p.arrows + q.arrows)

    def opposite(self) -> "Quiver":
        return Quiver(
            self.vertices,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
        )

    def walk(self, vertices: Sequence[str]) -> PathWord:
        """
        Path through the given vertex sequence, one arrow per hop.

        Raises:
            AlgebraParseError: If a hop has no arrow or more than one parallel arrow
        """
        if not vertices:
            raise AlgebraParseError("Empty vertex walk")
        if len(vertices) == 1:
            return self.trivial(vertices[0])
        names = []
        for u, w in zip(vertices, vertices[1:]):
            hops = [a for a in self.arrows if a.source == u and a.target == w]
            if not hops:
                raise AlgebraParseError(f"No arrow {u} -> {w}")
            if len(hops) > 1:
                raise AlgebraParseError(
                    f"Ambiguous hop {u} -> {w}: arrows {', '.join(a.name for a in hops)}"
                )
            names.append(hops[0].name)
        return self.path(names)


def reversed_path(p: PathWord) -> PathWord:
    """The same arrows read backwards, as a path of the opposite quiver."""
    return PathWord(p.target, p.source, tuple(reversed(p.arrows)))


def vertex_sort_key(vertex: str) -> Tuple[int, object]:
    """Numeric ids sort numerically, everything else lexicographically after them."""
    return (0, int(vertex)) if vertex.lstrip("-").isdigit() else (1, vertex)


def sorted_vertices(vertices: Iterable[str]) -> List[str]:
    return sorted(vertices, key=vertex_sort_key)
