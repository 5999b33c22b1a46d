"""
Left mutation of support tau-tilting pairs through exchange sequences.

For X an indecomposable summand of T = X (+) U with X not in Fac U, take the
minimal left add(U)-approximation f: X -> U' and Y = coker f. Either Y is
a nonzero sum of copies of one indecomposable Y1 and the mutation is
(U (+) Y1, P), or Y = 0 and the support grows by the one vertex where U
vanishes outside P.
"""

from dataclasses import dataclass
from typing import List, Optional

from loguru import logger

from reps.approx import fac_contains, min_left_approx
from reps.decompose import decompose
from reps.homs import cokernel, is_isomorphic
from reps.rep import Rep, RepMorphism
from tilting.pairs import STPair, is_stt_pair, leq, make_pair
from tools.errors import MutationError, TheoremViolation


@dataclass(frozen=True, eq=False)
class MutationStep:
    """One exchange: ``source`` mutated at summand ``position`` gives ``result``."""

    source: STPair
    position: int
    approximation: RepMorphism
    cokernel: Rep
    result: STPair
    added: Optional[Rep] = None
    added_support: Optional[str] = None
    direction: str = "left"

    @property
    def removed(self) -> Rep:
        return self.source.summands[self.position]


def is_left_mutable(pair: STPair, position: int) -> bool:
    """X = summand ``position`` is not in Fac of the remaining summands."""
    return not fac_contains(list(pair.without(position)), pair.summands[position])


def mutable_positions(pair: STPair) -> List[int]:
    return [k for k in range(len(pair.summands)) if is_left_mutable(pair, k)]


def _new_support_vertex(pair: STPair, rest) -> str:
    alg = pair.algebra
    candidates = [
        v for v in alg.vertices
        if v not in pair.support and all(m.dims[v] == 0 for m in rest)
    ]
    if len(candidates) != 1:
        raise TheoremViolation(
            f"Mutation of {pair.label()}: expected one new support vertex, found {candidates}"
        )
    return candidates[0]


def left_mutation_step(pair: STPair, position: int, check: bool = True) -> MutationStep:
    """
    Mutate at summand ``position``.

    Raises:
        MutationError: If the position is out of range or X lies in Fac U
        TheoremViolation: If the exchange does not produce a unique smaller pair
    """
    if not 0 <= position < len(pair.summands):
        raise MutationError(f"No summand at position {position} of {pair.label()}")
    x = pair.summands[position]
    rest = list(pair.without(position))
    if fac_contains(rest, x):
        raise MutationError(f"Cannot left-mutate {pair.label()} at {position}: X in Fac U")
    f = min_left_approx(x, rest)
    y, _ = cokernel(f)
    added, added_support = None, None
    if y.is_zero():
        added_support = _new_support_vertex(pair, rest)
        result = make_pair(pair.algebra, rest, set(pair.support) | {added_support})
    else:
        parts = decompose(y)
        if len(parts) != 1:
            raise TheoremViolation(
                f"Mutation of {pair.label()} at {position}: cokernel has {len(parts)} non-isomorphic summands"
            )
        added = parts.summands[0]
        result = make_pair(pair.algebra, rest + [added], pair.support)
    if check:
        if not is_stt_pair(result):
            raise TheoremViolation(f"Mutation of {pair.label()} at {position} is not a support tau-tilting pair")
        if not leq(result, pair) or leq(pair, result):
            raise TheoremViolation(f"Mutation of {pair.label()} at {position} is not strictly smaller")
    logger.debug(f"mutate {pair.label()} at {position} -> {result.label()}")
    return MutationStep(pair, position, f, y, result, added, added_support)


def left_mutation(pair: STPair, position: int) -> STPair:
    return left_mutation_step(pair, position).result


def summand_position(pair: STPair, module: Rep) -> int:
    """
    Index of the summand isomorphic to ``module``.

    Raises:
        MutationError: If ``module`` is not a summand of the pair
    """
    for k, m in enumerate(pair.summands):
        if m.dim_vector == module.dim_vector and is_isomorphic(m, module):
            return k
    raise MutationError(f"{pair.label()} has no summand with dimension vector {module.dim_vector}")
