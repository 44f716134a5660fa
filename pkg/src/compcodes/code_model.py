"""Core types for codes, codeword compositions and letter costs.

Codewords are tuples of symbol indices in ``range(D)``.  Binary compositions
are indexed by symbol value, so ``(zeros, ones)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

Codeword = Tuple[int, ...]


class InvalidInputError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


@dataclass(frozen=True, order=True)
class Composition:
    """Per-symbol occurrence counts of a single codeword."""

    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise InvalidInputError(f"negative count in composition {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def of(cls, *counts: int) -> "Composition":
        return cls(tuple(counts))

    @property
    def alphabet_size(self) -> int:
        return len(self.counts)

    @property
    def total_length(self) -> int:
        return sum(self.counts)

    def fits_in(self, other: "Composition") -> bool:
        """True when every count is at most the matching count of ``other``."""
        _check_same_alphabet(self, other)
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def __add__(self, other: "Composition") -> "Composition":
        _check_same_alphabet(self, other)
        return Composition(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "Composition") -> "Composition":
        """Componentwise difference; raises if any component would go negative."""
        _check_same_alphabet(self, other)
        return Composition(tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.counts)


def _check_same_alphabet(a: Composition, b: Composition) -> None:
    if len(a.counts) != len(b.counts):
        raise InvalidInputError(
            f"compositions over different alphabets: {a.counts} vs {b.counts}")


@dataclass(frozen=True)
class CompositionMultiset:
    """Compositions with multiplicities, all over one alphabet of size D."""

    alphabet_size: int
    entries: Tuple[Tuple[Composition, int], ...]

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise InvalidInputError("alphabet size must be at least 2")
        merged: Counter = Counter()
        for comp, mult in self.entries:
            if comp.alphabet_size != self.alphabet_size:
                raise InvalidInputError(
                    f"composition {comp.counts} does not have {self.alphabet_size} entries")
            if comp.total_length < 1:
                raise InvalidInputError("empty codewords are not allowed")
            if mult < 1:
                raise InvalidInputError(f"multiplicity must be positive, got {mult}")
            merged[comp] += mult
        if not merged:
            raise InvalidInputError("a composition multiset needs at least one codeword")
        object.__setattr__(self, "entries", tuple(sorted(merged.items())))

    @classmethod
    def from_compositions(cls, alphabet_size: int,
                          comps: Iterable[Union[Composition, Sequence[int]]]) -> "CompositionMultiset":
        items = [c if isinstance(c, Composition) else Composition(tuple(c)) for c in comps]
        return cls(alphabet_size, tuple((c, 1) for c in items))

    @classmethod
    def of_code(cls, code: "Code") -> "CompositionMultiset":
        return cls.from_compositions(
            code.alphabet_size, (composition_of(w, code.alphabet_size) for w in code.words))

    @property
    def size(self) -> int:
        """Total number of codewords, counting multiplicity."""
        return sum(mult for _, mult in self.entries)

    def multiplicity(self, comp: Composition) -> int:
        return dict(self.entries).get(comp, 0)

    def expanded(self) -> List[Composition]:
        return [comp for comp, mult in self.entries for _ in range(mult)]

    def lengths(self) -> List[int]:
        return [c.total_length for c in self.expanded()]


@dataclass(frozen=True)
class Code:
    """An ordered list of codewords over an alphabet of size D."""

    alphabet_size: int
    words: Tuple[Codeword, ...]

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise InvalidInputError("alphabet size must be at least 2")
        words = tuple(tuple(int(s) for s in w) for w in self.words)
        for w in words:
            if not w:
                raise InvalidInputError("empty codeword")
            if any(s < 0 or s >= self.alphabet_size for s in w):
                raise InvalidInputError(
                    f"codeword {w} uses a symbol outside range({self.alphabet_size})")
        object.__setattr__(self, "words", words)

    @classmethod
    def from_strings(cls, words: Iterable[str], alphabet_size: int = 2) -> "Code":
        return cls(alphabet_size, tuple(tuple(int(ch) for ch in w) for w in words))

    def to_strings(self) -> List[str]:
        return ["".join(str(s) for s in w) for w in self.words]

    def reversed_words(self) -> "Code":
        return Code(self.alphabet_size, tuple(w[::-1] for w in self.words))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)


@dataclass(frozen=True)
class CostModel:
    """Positive rational letter costs, one per symbol."""

    costs: Tuple[Fraction, ...]

    def __post_init__(self):
        costs = tuple(Fraction(c) for c in self.costs)
        if len(costs) < 2:
            raise InvalidInputError("need a cost for each of at least two symbols")
        if any(c <= 0 for c in costs):
            raise InvalidInputError("letter costs must be positive")
        object.__setattr__(self, "costs", costs)

    @classmethod
    def binary(cls, m) -> "CostModel":
        """Zero costs 1, one costs ``m >= 1``."""
        m = Fraction(m)
        if m < 1:
            raise InvalidInputError(f"cost of a one must be >= 1, got {m}")
        return cls((Fraction(1), m))


@dataclass(frozen=True)
class Distribution:
    probs: Tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        if not probs:
            raise InvalidInputError("empty distribution")
        if any(p < 0 for p in probs):
            raise InvalidInputError("probabilities must be nonnegative")
        if sum(probs) != 1:
            raise InvalidInputError(f"probabilities sum to {sum(probs)}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        return cls(tuple(Fraction(1, n) for _ in range(n)))


def _words(code) -> List[Tuple]:
    if isinstance(code, Code):
        return list(code.words)
    return [tuple(w) for w in code]


def composition_of(word: Sequence[int], alphabet_size: int) -> Composition:
    counts = [0] * alphabet_size
    for s in word:
        s = int(s)
        if s < 0 or s >= alphabet_size:
            raise InvalidInputError(f"symbol {s} outside range({alphabet_size})")
        counts[s] += 1
    return Composition(tuple(counts))


def _has_affix_pair(words: List[Tuple]) -> bool:
    # After sorting, a word that is a prefix of another sorts directly before
    # some word it prefixes, so checking neighbours is enough.
    words = sorted(words)
    for a, b in zip(words, words[1:]):
        if b[:len(a)] == a:
            return True
    return False


def is_prefix_free(code) -> bool:
    """No codeword is a prefix of (or equal to) a different codeword."""
    return not _has_affix_pair(_words(code))


def is_suffix_free(code) -> bool:
    return not _has_affix_pair([w[::-1] for w in _words(code)])


def is_fix_free(code) -> bool:
    return is_prefix_free(code) and is_suffix_free(code)


def is_uniquely_decodable(code) -> bool:
    """Sardinas-Patterson test.

    Iterates the sets of dangling suffixes until one of them contains a
    codeword (ambiguous) or no new set appears (uniquely decodable).
    """
    words = _words(code)
    codewords = set(words)
    if len(codewords) != len(words):
        return False

    def dangling(left, right):
        out = set()
        for a in left:
            for b in right:
                if len(a) < len(b) and b[:len(a)] == a:
                    out.add(b[len(a):])
        return out

    current = dangling(codewords, codewords)
    seen = set()
    while current:
        if current & codewords:
            return False
        key = frozenset(current)
        if key in seen:
            return True
        seen.add(key)
        current = dangling(current, codewords) | dangling(codewords, current)
    return True


def codeword_cost(comp: Composition, cm: CostModel) -> Fraction:
    if comp.alphabet_size != len(cm.costs):
        raise InvalidInputError(
            f"composition has {comp.alphabet_size} symbols but {len(cm.costs)} costs were given")
    return sum((Fraction(c) * w for c, w in zip(comp.counts, cm.costs)), Fraction(0))


def average_cost(code: Code, dist: Distribution, cm: CostModel) -> Fraction:
    if len(dist.probs) != len(code.words):
        raise InvalidInputError(
            f"{len(dist.probs)} probabilities for {len(code.words)} codewords")
    d = len(cm.costs)
    return sum((p * codeword_cost(composition_of(w, d), cm)
                for p, w in zip(dist.probs, code.words)), Fraction(0))


def is_distinct_code(lengths: Iterable[int]) -> bool:
    """Every two lengths are equal or differ by at least a factor of two."""
    values = sorted(set(lengths))
    if not values:
        raise InvalidInputError("need at least one length")
    # On sorted distinct values it suffices to check neighbours.
    return all(2 * a <= b for a, b in zip(values, values[1:]))
