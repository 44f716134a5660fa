"""Existence test for D-ary prefix-free codes with prescribed compositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .code_model import Composition, CompositionMultiset
from .counting import prefix_extension_count, word_count


@dataclass(frozen=True)
class InequalityCheck:
    """Both sides of the counting inequality for one composition.

    ``lhs`` is the number of words with the composition; ``rhs`` is the
    number of those words claimed by codewords of the multiset (the
    composition's own codewords included).
    """

    composition: Composition
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    witness: Optional[InequalityCheck]
    checks: Tuple[InequalityCheck, ...]


def _witness_order(check: InequalityCheck):
    return (check.composition.total_length, check.composition.counts)


def check_prefix_feasibility(ms: CompositionMultiset) -> FeasibilityVerdict:
    """Decide whether some prefix-free code realizes ``ms``.

    For every distinct composition ``d`` the number of words of composition
    ``d`` must be at least the sum, over compositions ``x`` of the multiset
    that fit inside ``d``, of ``mult(x) * word_count(d - x)``.  Compositions
    absent from the multiset contribute nothing, so only its entries are
    summed.
    """
    checks = []
    for target, _ in ms.entries:
        rhs = 0
        for comp, mult in ms.entries:
            if comp.total_length <= target.total_length:
                rhs += mult * prefix_extension_count(comp, target)
        checks.append(InequalityCheck(target, word_count(target), rhs))
    checks.sort(key=_witness_order)
    violated = [c for c in checks if not c.holds]
    return FeasibilityVerdict(
        feasible=not violated,
        witness=violated[0] if violated else None,
        checks=tuple(checks),
    )
