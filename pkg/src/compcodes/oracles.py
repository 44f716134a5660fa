"""Brute-force reference implementations for testing.

Nothing here touches the counting formulas or the builders: words are
enumerated directly and affix relations are tested one pair at a time.
Every entry point refuses inputs whose search space exceeds its budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import List, Optional, Sequence, Tuple

from .code_model import Codeword, Composition, CompositionMultiset

PREFIX_FREE = "prefix-free"
FIX_FREE = "fix-free"


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_length: int = 16
    max_alphabet: int = 10
    max_words: int = 8
    max_enumeration: int = 1 << 22


DEFAULT_BUDGET = OracleBudget()


def _check(budget: OracleBudget, *, length: int = 0, alphabet: int = 2,
           words: int = 0, space: int = 0) -> None:
    if length > budget.max_length:
        raise BudgetExceeded(f"word length {length} > {budget.max_length}")
    if alphabet > budget.max_alphabet:
        raise BudgetExceeded(f"alphabet size {alphabet} > {budget.max_alphabet}")
    if words > budget.max_words:
        raise BudgetExceeded(f"{words} codewords > {budget.max_words}")
    if space > budget.max_enumeration:
        raise BudgetExceeded(f"search space {space} > {budget.max_enumeration}")


@lru_cache(maxsize=4096)
def _all_words(counts: Tuple[int, ...]) -> Tuple[Codeword, ...]:
    d, length = len(counts), sum(counts)
    out = []
    for w in product(range(d), repeat=length):
        if all(w.count(s) == c for s, c in enumerate(counts)):
            out.append(w)
    return tuple(out)


def enumerate_words(comp: Composition, budget: OracleBudget = DEFAULT_BUDGET) -> List[Codeword]:
    """Every word with composition ``comp``, in lexicographic order."""
    length, d = comp.total_length, comp.alphabet_size
    if length < 1:
        raise ValueError("empty compositions are not allowed")
    _check(budget, length=length, alphabet=d, space=d ** length)
    return list(_all_words(comp.counts))


def _is_prefix(a: Sequence, b: Sequence) -> bool:
    return len(a) <= len(b) and tuple(b[:len(a)]) == tuple(a)


def _is_suffix(a: Sequence, b: Sequence) -> bool:
    return len(a) <= len(b) and tuple(b[len(b) - len(a):]) == tuple(a)


def _conflicts(a: Codeword, b: Codeword, mode: str) -> bool:
    if mode == PREFIX_FREE:
        return _is_prefix(a, b) or _is_prefix(b, a)
    if mode == FIX_FREE:
        return (_is_prefix(a, b) or _is_prefix(b, a)
                or _is_suffix(a, b) or _is_suffix(b, a))
    raise ValueError(f"unknown mode {mode!r}")


def exists_code(ms: CompositionMultiset, mode: str,
                budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Backtracking search for a code realizing ``ms`` under ``mode``."""
    slots = sorted(ms.expanded(), key=lambda c: (c.total_length, c.counts))
    d = ms.alphabet_size
    total = sum(c.total_length for c in slots)
    _check(budget, length=max(c.total_length for c in slots), alphabet=d,
           words=len(slots), space=d ** total)
    candidates = [enumerate_words(c, budget) for c in slots]
    chosen: List[Codeword] = []
    picks: List[int] = []

    def extend(i: int) -> bool:
        if i == len(slots):
            return True
        # Slots of equal composition are interchangeable; take their words
        # in increasing index order to avoid revisiting permutations.
        start = picks[-1] + 1 if i and slots[i] == slots[i - 1] else 0
        for idx in range(start, len(candidates[i])):
            w = candidates[i][idx]
            if any(_conflicts(v, w, mode) for v in chosen):
                continue
            chosen.append(w)
            picks.append(idx)
            if extend(i + 1):
                return True
            chosen.pop()
            picks.pop()
        return False

    return extend(0)


def count_candidates(target: Composition, chosen: Sequence[Sequence[int]], mode: str,
                     budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Words of ``target`` having no chosen word as prefix (or suffix, in fix-free mode)."""
    chosen = [tuple(w) for w in chosen]
    count = 0
    for w in enumerate_words(target, budget):
        if mode == PREFIX_FREE:
            bad = any(_is_prefix(v, w) for v in chosen)
        elif mode == FIX_FREE:
            bad = any(_is_prefix(v, w) or _is_suffix(v, w) for v in chosen)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        if not bad:
            count += 1
    return count


def min_cost_fix_free(n: int, m, max_len: int,
                      budget: OracleBudget = DEFAULT_BUDGET) -> Optional[Fraction]:
    """Cheapest total cost of n binary fix-free codewords of length <= max_len.

    Zero costs 1 and one costs ``m``.  Returns ``None`` if no such code fits.
    """
    m = Fraction(m)
    _check(budget, length=max_len, words=n, space=2 ** (max_len + 1))
    words = [w for length in range(1, max_len + 1) for w in product((0, 1), repeat=length)]
    costs = {w: (len(w) - sum(w)) + m * sum(w) for w in words}
    words.sort(key=lambda w: (costs[w], w))
    best: List[Optional[Fraction]] = [None]
    chosen: List[Codeword] = []

    def search(start: int, cost: Fraction) -> None:
        if len(chosen) == n:
            if best[0] is None or cost < best[0]:
                best[0] = cost
            return
        need = n - len(chosen)
        for i in range(start, len(words) - need + 1):
            w = words[i]
            # Words are sorted by cost, so every later pick costs at least this one.
            if best[0] is not None and cost + need * costs[w] >= best[0]:
                return
            if any(_conflicts(v, w, FIX_FREE) for v in chosen):
                continue
            chosen.append(w)
            search(i + 1, cost + costs[w])
            chosen.pop()

    search(0, Fraction(0))
    return best[0]
