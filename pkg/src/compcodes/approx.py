"""Near-optimal fix-free codes when a zero costs 1 and a one costs m >= 1.

The code cost here is the total over all n codewords (n times the average
under a uniform distribution).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from .code_model import Code, InvalidInputError
from .counting import binomial


@dataclass(frozen=True)
class BudgetParams:
    n: int
    m: Fraction
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", Fraction(self.m))
        object.__setattr__(self, "x", Fraction(self.x))
        if self.n < 2:
            raise InvalidInputError("need at least two codewords")
        if self.m < 1:
            raise InvalidInputError("cost of a one must be >= 1")
        if self.x < 0:
            raise InvalidInputError("budget must be nonnegative")

    @property
    def max_letters(self) -> int:
        """Length bound for a codeword costing at most twice the mean budget."""
        return math.floor(2 * self.x / self.n)

    @property
    def max_ones(self) -> int:
        return math.floor(2 * self.x / (self.n * self.m))

    @property
    def word_length(self) -> int:
        return self.max_letters + 1

    @property
    def ones_cap(self) -> int:
        return min(self.max_ones + 1, self.word_length)

    def pool_size(self) -> int:
        """How many words have the common length and at most ``ones_cap`` ones."""
        return sum(binomial(self.word_length, t) for t in range(self.ones_cap + 1))


@dataclass(frozen=True)
class ApproxResult:
    code: Code
    achieved_cost: Fraction
    budget_used: Fraction
    ratio_bound: Fraction
    probes: int


def total_cost(code: Code, m) -> Fraction:
    m = Fraction(m)
    if code.alphabet_size != 2:
        raise InvalidInputError("total_cost expects a binary code")
    return sum((len(w) - sum(w) + m * sum(w) for w in code.words), Fraction(0))


def _words_by_weight(length: int, max_ones: int) -> Iterator[tuple]:
    # Lexicographic order of words with t ones is the lexicographic order of
    # their zero positions.
    for ones in range(max_ones + 1):
        for zeros in combinations(range(length), length - ones):
            word = [1] * length
            for i in zeros:
                word[i] = 0
            yield tuple(word)


def build_code_for_budget(p: BudgetParams) -> Optional[Code]:
    """n equal-length words, cheapest first, or ``None`` if the budget is too small.

    If some fix-free code of total cost at most ``p.x`` exists, the result
    is never ``None`` and costs at most ``(5 + 1/(n-1)) * p.x``.  A ``None``
    does not prove that no such code exists.
    """
    if p.pool_size() < p.n:
        return None
    words = []
    for w in _words_by_weight(p.word_length, p.ones_cap):
        words.append(w)
        if len(words) == p.n:
            break
    return Code(2, tuple(words))


def ratio_bound(n: int, eps) -> Fraction:
    return 5 + Fraction(1, n - 1) + Fraction(eps)


def approx_optimal(n: int, m, eps) -> ApproxResult:
    """Binary search the smallest budget the fixed-length construction accepts.

    The search runs over [0, n(n-1+m)]; the upper end always succeeds (n
    one-hot words of length n fit in it), and the loop stops once the
    bracket is at most ``eps`` wide.
    """
    m, eps = Fraction(m), Fraction(eps)
    if n < 2:
        raise InvalidInputError("need at least two codewords")
    if m < 1:
        raise InvalidInputError("cost of a one must be >= 1")
    if eps <= 0:
        raise InvalidInputError("epsilon must be positive")
    lo, hi = Fraction(0), n * (n - 1 + m)
    best = build_code_for_budget(BudgetParams(n, m, hi))
    assert best is not None
    probes = 1
    while hi - lo > eps:
        mid = (lo + hi) / 2
        code = build_code_for_budget(BudgetParams(n, m, mid))
        probes += 1
        if code is None:
            lo = mid
        else:
            hi, best = mid, code
    return ApproxResult(best, total_cost(best, m), hi, ratio_bound(n, eps), probes)
