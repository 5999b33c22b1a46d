"""
Bound quiver algebras kQ/I with a normal-form path basis.
"""

from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from algebra.linalg import ONE, ZERO
from algebra.quiver import Arrow, PathWord, Quiver, Relation, reversed_path
from algebra.rewriting import Element, RewritingSystem
from tools.errors import AdmissibilityError, AlgebraParseError

DEFAULT_LENGTH_CAP = 50


class BoundQuiverAlgebra:
    """
    Quotient of the path algebra of ``quiver`` by the ideal generated by ``relations``.

    Construction completes the rewriting system and enumerates the basis of
    irreducible paths; both raise when the ideal is not admissible within
    ``cap``. Instances are treated as immutable and compared by identity.
    """

    def __init__(self, name: str, quiver: Quiver, relations: Sequence[Relation] = (), cap: int = DEFAULT_LENGTH_CAP):
        self.name = name
        self.quiver = quiver
        self.relations: Tuple[Relation, ...] = tuple(relations)
        self.cap = cap
        for rel in self.relations:
            self._check_relation(rel)
        self.rewriting = RewritingSystem(quiver, [self._as_element(r) for r in self.relations], cap)
        self._basis: Dict[Tuple[str, str], Tuple[PathWord, ...]] = {}
        self._enumerate_basis()
        self.cache: Dict[str, object] = {}
        logger.debug(f"Algebra {name}: {len(quiver.vertices)} vertices, dim {self.dim}")

    def __repr__(self) -> str:
        return f"BoundQuiverAlgebra({self.name!r}, dim={self.dim})"

    def _check_relation(self, rel: Relation) -> None:
        if not rel.terms:
            raise AlgebraParseError("Empty relation")
        first = rel.terms[0][1]
        for _, path in rel.terms:
            if len(path) < 2:
                raise AlgebraParseError(f"Relation term '{path}' has length < 2 (ideal must be admissible)")
            if (path.source, path.target) != (first.source, first.target):
                raise AlgebraParseError(
                    f"Relation mixes non-parallel paths '{first}' and '{path}'"
                )

    @staticmethod
    def _as_element(rel: Relation) -> Element:
        elem: Element = {}
        for coef, path in rel.terms:
            elem[path] = elem.get(path, ZERO) + coef
        return elem

    def _enumerate_basis(self) -> None:
        layer = [self.quiver.trivial(v) for v in self.quiver.vertices]
        found: List[PathWord] = list(layer)
        while layer:
            nxt = []
            for p in layer:
                for arrow in self.quiver.arrows_from(p.target):
                    q = PathWord(p.source, arrow.target, p.arrows + (arrow.name,))
                    if self.rewriting.suffix_reducible(q):
                        continue
                    if len(q) >= self.cap:
                        raise AdmissibilityError(
                            f"Basis of {self.name} does not stabilize: irreducible path {q} reaches cap {self.cap}"
                        )
                    nxt.append(q)
            found.extend(nxt)
            layer = nxt
        for p in found:
            self._basis.setdefault((p.source, p.target), ())
            self._basis[(p.source, p.target)] += (p,)
        for key in self._basis:
            self._basis[key] = tuple(sorted(self._basis[key], key=self.rewriting.order_key))

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def n(self) -> int:
        """Number of vertices (= number of simple modules)."""
        return len(self.quiver.vertices)

    @cached_property
    def dim(self) -> int:
        return sum(len(ps) for ps in self._basis.values())

    def basis_paths(self, source: str, target: str) -> Tuple[PathWord, ...]:
        """Normal-form paths source -> target, in path order."""
        return self._basis.get((source, target), ())

    def basis(self) -> List[PathWord]:
        return [p for v in self.vertices for w in self.vertices for p in self.basis_paths(v, w)]

    def normal_form(self, word: PathWord) -> Element:
        """Linear combination of basis paths equal to ``word`` in kQ/I."""
        return self.rewriting.reduce({word: ONE})

    def reduce(self, elem: Element) -> Element:
        return self.rewriting.reduce(elem)

    def multiply(self, x: Element, y: Element) -> Element:
        """x then y; non-composable products vanish."""
        out: Element = {}
        for p, c in x.items():
            for q, d in y.items():
                if p.target != q.source:
                    continue
                w = self.quiver.concat(p, q)
                out[w] = out.get(w, ZERO) + c * d
        by_ends: Dict[Tuple[str, str], Element] = {}
        for w, c in out.items():
            by_ends.setdefault((w.source, w.target), {})[w] = c
        result: Element = {}
        for part in by_ends.values():
            result.update(self.rewriting.reduce(part))
        return result

    def rules_summary(self) -> List[str]:
        return [
            f"{r.tip} -> " + (" + ".join(f"{c}*{p}" for p, c in r.tail) if r.tail else "0")
            for r in self.rewriting.rules
        ]

    @cached_property
    def opposite(self) -> "BoundQuiverAlgebra":
        """Arrows and relation words reversed; ``A.opposite.opposite is A``."""
        op_relations = [
            Relation(tuple((c, reversed_path(p)) for c, p in rel.terms)) for rel in self.relations
        ]
        op = BoundQuiverAlgebra(f"{self.name}^op", self.quiver.opposite(), op_relations, self.cap)
        op.__dict__["opposite"] = self
        return op

    def vertex_index(self, vertex: str) -> int:
        return self.quiver.vertices.index(vertex)

    def check_vertex(self, vertex: str) -> str:
        if vertex not in self.quiver.vertices:
            raise AlgebraParseError(f"Unknown vertex '{vertex}' in algebra {self.name}")
        return vertex

    def find_arrow(self, source: str, target: str) -> Optional[Arrow]:
        hops = [a for a in self.arrows if a.source == source and a.target == target]
        return hops[0] if len(hops) == 1 else None
