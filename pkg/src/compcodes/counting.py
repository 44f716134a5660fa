"""Exact counts of words with a given composition under affix constraints.

All results are Python ints, so there is no overflow at any length.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Sequence, Tuple

from .code_model import Composition, InvalidInputError, composition_of


def binomial(n: int, k: int) -> int:
    """C(n, k), or 0 when k lies outside [0, n]."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=65536)
def _word_count(counts: Tuple[int, ...]) -> int:
    # Telescoping product: place symbol 0 among all positions, then symbol 1
    # among the rest, and so on.
    total = 1
    remaining = sum(counts)
    for c in counts[:-1]:
        total *= binomial(remaining, c)
        remaining -= c
    return total


def word_count(comp: Composition) -> int:
    """Number of distinct words with exactly this composition."""
    return _word_count(comp.counts)


def _remainder_count(target: Composition, *parts: Composition) -> int:
    rest = list(target.counts)
    for part in parts:
        if part.alphabet_size != target.alphabet_size:
            raise InvalidInputError("compositions over different alphabets")
        for i, c in enumerate(part.counts):
            rest[i] -= c
    if any(r < 0 for r in rest):
        return 0
    return _word_count(tuple(rest))


def prefix_extension_count(prefix_comp: Composition, target_comp: Composition) -> int:
    """Words of composition ``target_comp`` starting with a fixed word of ``prefix_comp``.

    The value depends on the prefix only through its composition.
    """
    return _remainder_count(target_comp, prefix_comp)


def suffix_extension_count(suffix_comp: Composition, target_comp: Composition) -> int:
    return _remainder_count(target_comp, suffix_comp)


def sandwich_count(prefix_comp: Composition, suffix_comp: Composition,
                   target_comp: Composition) -> int:
    """Words of ``target_comp`` with a fixed prefix and a fixed, non-overlapping suffix.

    Raises InvalidInputError if the prefix and suffix would overlap; use
    :func:`pattern_count` for that case.
    """
    if prefix_comp.total_length + suffix_comp.total_length > target_comp.total_length:
        raise InvalidInputError(
            "prefix and suffix overlap inside the target length; use pattern_count")
    return _remainder_count(target_comp, prefix_comp, suffix_comp)


@dataclass(frozen=True)
class PartialWord:
    """A word of fixed length where some positions hold a known symbol.

    ``cells[i]`` is the symbol at position ``i`` or ``None`` when free.
    """

    cells: Tuple[Optional[int], ...]

    def __post_init__(self):
        if not self.cells:
            raise InvalidInputError("a partial word needs positive length")

    @classmethod
    def free(cls, length: int) -> "PartialWord":
        return cls((None,) * length)

    @classmethod
    def with_prefix(cls, word: Sequence[int], length: int) -> "PartialWord":
        if len(word) > length:
            raise InvalidInputError(f"prefix of length {len(word)} exceeds {length}")
        return cls(tuple(word) + (None,) * (length - len(word)))

    @classmethod
    def with_suffix(cls, word: Sequence[int], length: int) -> "PartialWord":
        if len(word) > length:
            raise InvalidInputError(f"suffix of length {len(word)} exceeds {length}")
        return cls((None,) * (length - len(word)) + tuple(word))

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def fixed(self) -> dict:
        return {i: s for i, s in enumerate(self.cells) if s is not None}


def merge_patterns(p: Optional[PartialWord], q: Optional[PartialWord]) -> Optional[PartialWord]:
    """Combine the constraints of two partial words.

    Returns ``None`` when they fix some position to different symbols; a
    ``None`` argument (an earlier conflict) propagates.
    """
    if p is None or q is None:
        return None
    if p.length != q.length:
        raise InvalidInputError(f"pattern lengths differ: {p.length} vs {q.length}")
    cells = []
    for a, b in zip(p.cells, q.cells):
        if a is None:
            cells.append(b)
        elif b is None or a == b:
            cells.append(a)
        else:
            return None
    return PartialWord(tuple(cells))


def pattern_count(pattern: Optional[PartialWord], comp: Composition) -> int:
    """Words of composition ``comp`` agreeing with every fixed position of ``pattern``."""
    if pattern is None:
        return 0
    if pattern.length != comp.total_length:
        raise InvalidInputError(
            f"pattern length {pattern.length} != composition length {comp.total_length}")
    fixed = [s for s in pattern.cells if s is not None]
    if any(s < 0 or s >= comp.alphabet_size for s in fixed):
        return 0
    return _remainder_count(comp, composition_of(fixed, comp.alphabet_size))
