"""Greedy construction of binary fix-free codes for distinct length profiles.

When any two codeword lengths are equal or differ by a factor of at least
two, a candidate word can carry at most one earlier codeword as a prefix
and at most one as a suffix, and a prefix/suffix pair never overlaps unless
one of them has the full length.  Inclusion-exclusion therefore stops at
pairs, and the count of admissible words depends only on the earlier
compositions.
"""

from __future__ import annotations

from typing import List, Sequence, Union

from .code_model import Code, Codeword, Composition, CompositionMultiset, InvalidInputError, is_distinct_code
from .counting import (PartialWord, merge_patterns, pattern_count, prefix_extension_count,
                       sandwich_count, suffix_extension_count, word_count)
from .prefix_builder import Infeasible, NotApplicable, Success, build_order, lex_smallest_word

FixFreeOutcome = Union[Success, Infeasible, NotApplicable]


def _pair_count(first: Composition, last: Composition, same_word: bool,
                target: Composition) -> int:
    """Words of ``target`` with ``first`` as prefix and ``last`` as suffix."""
    length = target.total_length
    if first.total_length == length or last.total_length == length:
        # The candidate would equal a chosen word.  Only the word itself
        # qualifies, and only when it serves as both prefix and suffix.
        return 1 if same_word and first == target else 0
    return sandwich_count(first, last, target)


def available_count_fixfree(target: Composition, chosen_comps: Sequence[Composition]) -> int:
    """Words of ``target`` with no chosen codeword as a prefix or suffix.

    ``chosen_comps`` are the compositions of a fix-free set built in order;
    the lengths of ``chosen_comps`` plus ``target`` must form a distinct
    profile with none longer than ``target``.
    """
    length = target.total_length
    if any(c.total_length > length for c in chosen_comps):
        raise InvalidInputError("chosen codewords must not be longer than the target")
    if not is_distinct_code([length] + [c.total_length for c in chosen_comps]):
        raise InvalidInputError("lengths do not form a distinct profile")
    total = word_count(target)
    total -= sum(prefix_extension_count(c, target) for c in chosen_comps)
    total -= sum(suffix_extension_count(c, target) for c in chosen_comps)
    for j, first in enumerate(chosen_comps):
        for k, last in enumerate(chosen_comps):
            total += _pair_count(first, last, j == k, target)
    return total


def _fixfree_branch_counter(comp: Composition, chosen: Sequence[Codeword]):
    length = comp.total_length
    prefixes = [PartialWord.with_prefix(w, length) for w in chosen]
    suffixes = [PartialWord.with_suffix(w, length) for w in chosen]

    def count(prefix: Codeword) -> int:
        pat = PartialWord.with_prefix(prefix, length)
        with_pre = [merge_patterns(pat, p) for p in prefixes]
        total = pattern_count(pat, comp)
        total -= sum(pattern_count(p, comp) for p in with_pre)
        total -= sum(pattern_count(merge_patterns(pat, s), comp) for s in suffixes)
        for p in with_pre:
            for s in suffixes:
                total += pattern_count(merge_patterns(p, s), comp)
        return total

    return count


def build_fix_free(ms: CompositionMultiset) -> FixFreeOutcome:
    """Lexicographically smallest fix-free code realizing a binary multiset.

    Returns :class:`NotApplicable` when the codeword lengths are not a
    distinct profile, since the counting argument does not cover that case.
    """
    if ms.alphabet_size != 2:
        raise InvalidInputError("the fix-free builder handles binary codes only")
    if not is_distinct_code(ms.lengths()):
        return NotApplicable(
            "codeword lengths must be equal or differ by a factor of at least two: "
            + ", ".join(str(n) for n in sorted(set(ms.lengths()))))
    chosen: List[Codeword] = []
    chosen_comps: List[Composition] = []
    for step, comp in enumerate(build_order(ms), start=1):
        if available_count_fixfree(comp, chosen_comps) == 0:
            return Infeasible(step, comp, Code(2, tuple(chosen)))
        word = lex_smallest_word(comp, _fixfree_branch_counter(comp, chosen))
        chosen.append(word)
        chosen_comps.append(comp)
    return Success(Code(2, tuple(chosen)))
