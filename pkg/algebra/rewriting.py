"""
Tip reduction and overlap completion for ideals of a path algebra.

Paths are ordered length-lexicographically (longer is larger, ties broken by
arrow declaration index), the largest path of an element is its tip, and a
completed rule set reduces every element of the ideal to zero. Completion
processes overlaps of tips shortest-first and stops with an error once an
overlap word reaches the length cap.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from algebra.linalg import ONE, ZERO
from algebra.quiver import PathWord, Quiver
from tools.errors import AdmissibilityError

# A linear combination of parallel paths.
Element = Dict[PathWord, object]


@dataclass(frozen=True)
class Rule:
    """``tip -> tail``: the monic ideal element is tip - sum(tail)."""

    tip: PathWord
    tail: Tuple[Tuple[PathWord, object], ...]

    def as_element(self) -> Element:
        elem = {self.tip: ONE}
        for p, c in self.tail:
            elem[p] = elem.get(p, ZERO) - c
        return elem


class RewritingSystem:
    """Completed tip-reduction rules for an admissible ideal."""

    def __init__(self, quiver: Quiver, relations: Sequence[Element], cap: int = 50):
        self.quiver = quiver
        self.cap = cap
        self._index = {a.name: i for i, a in enumerate(quiver.arrows)}
        self.rules: List[Rule] = []
        self._complete([dict(r) for r in relations])

    def order_key(self, p: PathWord) -> Tuple:
        return (len(p.arrows), tuple(self._index[a] for a in p.arrows))

    def tip(self, elem: Element) -> PathWord:
        return max(elem, key=self.order_key)

    def _monic_rule(self, elem: Element) -> Rule:
        t = self.tip(elem)
        lead = elem[t]
        tail = tuple(
            sorted(((p, -c / lead) for p, c in elem.items() if p != t), key=lambda pc: self.order_key(pc[0]))
        )
        return Rule(t, tail)

    def _find(self, p: PathWord, rules: Sequence[Rule]) -> Optional[Tuple[Rule, int]]:
        arrows = p.arrows
        for rule in rules:
            t = rule.tip.arrows
            for i in range(len(arrows) - len(t) + 1):
                if arrows[i:i + len(t)] == t:
                    return rule, i
        return None

    def reduce(self, elem: Element, rules: Optional[Sequence[Rule]] = None) -> Element:
        """Fully reduce a combination of parallel paths; zero coefficients are dropped."""
        rules = self.rules if rules is None else rules
        work = {p: c for p, c in elem.items() if c != 0}
        result: Element = {}
        while work:
            p = max(work, key=self.order_key)
            c = work.pop(p)
            hit = self._find(p, rules)
            if hit is None:
                result[p] = c
                continue
            rule, i = hit
            left = p.arrows[:i]
            right = p.arrows[i + len(rule.tip.arrows):]
            for q, d in rule.tail:
                w = PathWord(p.source, p.target, left + q.arrows + right)
                value = work.get(w, ZERO) + c * d
                if value == 0:
                    work.pop(w, None)
                else:
                    work[w] = value
        return result

    def reduces_to_zero(self, word: PathWord) -> bool:
        return not self.reduce({word: ONE})

    def is_reducible(self, p: PathWord) -> bool:
        return self._find(p, self.rules) is not None

    def suffix_reducible(self, p: PathWord) -> bool:
        """True iff some tip is a suffix of ``p``; enough when every proper prefix is irreducible."""
        arrows = p.arrows
        return any(arrows[len(arrows) - len(r.tip.arrows):] == r.tip.arrows
                   for r in self.rules if len(r.tip.arrows) <= len(arrows))

    def _interreduce(self, rules: List[Rule]) -> List[Rule]:
        changed = True
        while changed:
            changed = False
            for k, rule in enumerate(rules):
                others = rules[:k] + rules[k + 1:]
                reduced = self.reduce(rule.as_element(), others)
                if not reduced:
                    rules = others
                    changed = True
                    break
                new_rule = self._monic_rule(reduced)
                if new_rule != rule:
                    rules = others + [new_rule]
                    changed = True
                    break
        return sorted(rules, key=lambda r: self.order_key(r.tip))

    def _overlaps(self, rules: Sequence[Rule]):
        for r1 in rules:
            for r2 in rules:
                t1, t2 = r1.tip.arrows, r2.tip.arrows
                for k in range(1, min(len(t1), len(t2))):
                    if t1[-k:] == t2[:k]:
                        yield len(t1) + len(t2) - k, r1, r2, k

    def _s_element(self, r1: Rule, r2: Rule, k: int) -> Element:
        """r1 * right - left * r2 for the overlap tip(r1) = left*o, tip(r2) = o*right."""
        t1, t2 = r1.tip.arrows, r2.tip.arrows
        right, left = t2[k:], t1[:-k]
        source, target = r1.tip.source, r2.tip.target
        elem: Element = {}
        for p, c in r1.as_element().items():
            w = PathWord(source, target, p.arrows + right)
            elem[w] = elem.get(w, ZERO) + c
        for p, c in r2.as_element().items():
            w = PathWord(source, target, left + p.arrows)
            elem[w] = elem.get(w, ZERO) - c
        return {p: c for p, c in elem.items() if c != 0}

    def _complete(self, relations: List[Element]) -> None:
        rules = self._interreduce([self._monic_rule(r) for r in relations if any(c != 0 for c in r.values())])
        done = set()
        rounds = 0
        while True:
            pending = sorted(
                (o for o in self._overlaps(rules) if (o[1], o[2], o[3]) not in done),
                key=lambda o: (o[0], self.order_key(o[1].tip), self.order_key(o[2].tip), o[3]),
            )
            if not pending:
                break
            length, r1, r2, k = pending[0]
            if length >= self.cap:
                raise AdmissibilityError(
                    f"Completion did not stabilize: overlap of {r1.tip} and {r2.tip} has length {length} >= cap {self.cap}"
                )
            done.add((r1, r2, k))
            rounds += 1
            s = self.reduce(self._s_element(r1, r2, k), rules)
            if s:
                rules = self._interreduce(rules + [self._monic_rule(s)])
        self.rules = rules
        logger.debug(f"Completion finished after {rounds} overlaps with {len(rules)} rules")
