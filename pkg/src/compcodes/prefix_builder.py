"""Greedy construction of binary prefix-free codes with given compositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Union

from .code_model import Code, Codeword, Composition, CompositionMultiset, InvalidInputError
from .counting import PartialWord, merge_patterns, pattern_count, prefix_extension_count, word_count


@dataclass(frozen=True)
class Success:
    code: Code


@dataclass(frozen=True)
class Infeasible:
    """No candidate word was left at ``step`` (1-based, in build order).

    ``partial`` holds the words chosen before the failing step.
    """

    step: int
    composition: Composition
    partial: Code


@dataclass(frozen=True)
class NotApplicable:
    reason: str


BuildOutcome = Union[Success, Infeasible]


def build_order(ms: CompositionMultiset) -> List[Composition]:
    """Shortest first; equal lengths by number of ones, fewest first."""
    return sorted(ms.expanded(), key=lambda c: (c.total_length, c.counts[1:]))


def lex_smallest_word(comp: Composition, count: Callable[[Codeword], int]) -> Codeword:
    """Fix symbols left to right, keeping the smallest one with a valid completion.

    ``count(prefix)`` must return the number of admissible words of ``comp``
    that start with ``prefix``.
    """
    prefix: Codeword = ()
    for _ in range(comp.total_length):
        for sym in range(comp.alphabet_size):
            if count(prefix + (sym,)) >= 1:
                prefix += (sym,)
                break
        else:
            raise RuntimeError(f"no completion for prefix {prefix} of {comp.counts}")
    return prefix


def available_count(target: Composition, chosen_comps: Sequence[Composition]) -> int:
    """Words of ``target`` that have none of the chosen codewords as a prefix.

    The chosen codewords form a prefix-free set, so the words they extend
    into are disjoint and can simply be subtracted.
    """
    for c in chosen_comps:
        if c.total_length > target.total_length:
            raise InvalidInputError("chosen codewords must not be longer than the target")
    free = word_count(target) - sum(prefix_extension_count(c, target) for c in chosen_comps)
    assert free >= 0, "chosen compositions cannot come from a prefix-free code"
    return free


def _prefix_branch_counter(comp: Composition, chosen: Sequence[Codeword]):
    length = comp.total_length
    blocked = [PartialWord.with_prefix(w, length) for w in chosen]

    def count(prefix: Codeword) -> int:
        pat = PartialWord.with_prefix(prefix, length)
        # A chosen word that is already a prefix of ``prefix`` merges to
        # ``pat`` itself and wipes out the whole branch.
        return pattern_count(pat, comp) - sum(
            pattern_count(merge_patterns(pat, b), comp) for b in blocked)

    return count


def build_prefix_free(ms: CompositionMultiset) -> BuildOutcome:
    """Lexicographically smallest prefix-free code realizing a binary multiset.

    Codewords are chosen shortest first; each one is the smallest word of
    its composition that no earlier codeword is a prefix of.  Whether such a
    word exists depends only on the earlier compositions, so running out of
    candidates proves that no prefix-free code exists.
    """
    if ms.alphabet_size != 2:
        raise InvalidInputError("the prefix-free builder handles binary codes only")
    chosen: List[Codeword] = []
    chosen_comps: List[Composition] = []
    for step, comp in enumerate(build_order(ms), start=1):
        if available_count(comp, chosen_comps) == 0:
            return Infeasible(step, comp, Code(2, tuple(chosen)))
        word = lex_smallest_word(comp, _prefix_branch_counter(comp, chosen))
        chosen.append(word)
        chosen_comps.append(comp)
    return Success(Code(2, tuple(chosen)))
