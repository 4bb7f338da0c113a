"""Classical, vincular, and consecutive pattern containment, occurrence
counting, and avoidance-class enumeration.

A pattern is a small permutation together with a set of adjacency
constraints: adjacency at i means that the letters matching pattern
positions i and i+1 must sit next to each other in the host word.  No
constraints gives a classical pattern; constraints everywhere gives a
consecutive pattern (occurrences are contiguous windows).

Text grammar: digit blocks separated by "_".  Letters inside a
multi-letter block are glued; separate blocks are unconstrained.  A string
without "_" is a classical pattern.  Examples: "3412" is classical,
"1_32" has letters 1,3,2 with 3,2 glued, "_123" is the consecutive
pattern on 1,2,3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BoundExceededError
from .permutations import (
    ENUMERATION_BOUND,
    Permutation,
    enumerate_involutions,
)


@dataclass(frozen=True)
class PatternSpec:
    letters: Permutation
    adjacency: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "letters", Permutation(self.letters))
        object.__setattr__(self, "adjacency", frozenset(self.adjacency))
        m = len(self.letters)
        if not all(1 <= i <= m - 1 for i in self.adjacency):
            raise ValueError(f"adjacency indices must lie in 1..{m - 1}")

    @property
    def is_classical(self) -> bool:
        return not self.adjacency

    @property
    def is_consecutive(self) -> bool:
        return self.adjacency == frozenset(range(1, len(self.letters)))

    @classmethod
    def classical(cls, letters: Iterable[int]) -> "PatternSpec":
        return cls(Permutation(letters), frozenset())

    @classmethod
    def consecutive(cls, letters: Iterable[int]) -> "PatternSpec":
        word = Permutation(letters)
        return cls(word, frozenset(range(1, len(word))))

    @classmethod
    def parse(cls, text: str) -> "PatternSpec":
        text = text.strip()
        if not text:
            raise ValueError("empty pattern")
        if "_" not in text:
            if not text.isdigit():
                raise ValueError(f"cannot parse pattern from {text!r}")
            return cls.classical(int(ch) for ch in text)
        blocks = text.split("_")
        if blocks[0] == "":
            blocks = blocks[1:]
        if not blocks or any(not b.isdigit() for b in blocks):
            raise ValueError(f"cannot parse pattern from {text!r}")
        letters: list[int] = []
        adjacency: set[int] = set()
        for block in blocks:
            start = len(letters) + 1
            letters.extend(int(ch) for ch in block)
            adjacency.update(range(start, start + len(block) - 1))
        return cls(Permutation(letters), frozenset(adjacency))

    def __str__(self) -> str:
        if len(self.letters) > 9:
            raise ValueError("text form only supports single-digit letters")
        if not self.adjacency:
            return "".join(str(v) for v in self.letters)
        blocks = []
        current = [str(self.letters[0])]
        for i in range(1, len(self.letters)):
            if i in self.adjacency:
                current.append(str(self.letters[i]))
            else:
                blocks.append("".join(current))
                current = [str(self.letters[i])]
        blocks.append("".join(current))
        text = "_".join(blocks)
        return "_" + text if len(blocks[0]) > 1 else text


def occurrences(p: Permutation, t: PatternSpec) -> int:
    """Number of index tuples i_1 < ... < i_m whose letters are order
    isomorphic to the pattern and satisfy every adjacency constraint.

    >>> occurrences(Permutation.parse("431256"), PatternSpec.parse("2_13"))
    2
    """
    letters = t.letters
    m = len(letters)
    n = len(p)
    if m > n:
        return 0
    count = 0
    positions: list[int] = []

    def extend(k: int) -> None:
        nonlocal count
        if k == m:
            count += 1
            return
        if k > 0 and k in t.adjacency:
            candidates: Iterable[int] = (positions[-1] + 1,)
        else:
            start = positions[-1] + 1 if k else 0
            candidates = range(start, n - (m - k) + 1)
        for pos in candidates:
            if pos > n - (m - k):
                continue
            v = p[pos]
            if all((v > p[q]) == (letters[k] > letters[j]) for j, q in enumerate(positions)):
                positions.append(pos)
                extend(k + 1)
                positions.pop()

    extend(0)
    return count


def _has_occurrence_ending_at(values: Sequence[int], t: PatternSpec, end: int) -> bool:
    """True iff some occurrence of t in values has its last letter at the
    0-based index ``end``.  Used for incremental pruning."""
    letters = t.letters
    m = len(letters)
    if m > end + 1:
        return False
    positions: list[int] = []

    def extend(k: int) -> bool:
        if k == m:
            return True
        if k == m - 1:
            candidates: Iterable[int] = (end,)
        elif k > 0 and k in t.adjacency:
            candidates = (positions[-1] + 1,)
        else:
            start = positions[-1] + 1 if k else 0
            candidates = range(start, end - (m - 1 - k) + 1)
        for pos in candidates:
            if pos > end or (k == m - 1 and k in t.adjacency and pos != positions[-1] + 1):
                continue
            v = values[pos]
            if all(
                (v > values[q]) == (letters[k] > letters[j]) for j, q in enumerate(positions)
            ):
                positions.append(pos)
                if extend(k + 1):
                    positions.pop()
                    return True
                positions.pop()
        return False

    return extend(0)


def contains(p: Permutation, t: PatternSpec) -> bool:
    """Early-exit containment test; equivalent to occurrences(p, t) > 0."""
    letters = t.letters
    m = len(letters)
    n = len(p)
    if m > n:
        return False
    positions: list[int] = []

    def extend(k: int) -> bool:
        if k == m:
            return True
        if k > 0 and k in t.adjacency:
            candidates: Iterable[int] = (positions[-1] + 1,)
        else:
            start = positions[-1] + 1 if k else 0
            candidates = range(start, n - (m - k) + 1)
        for pos in candidates:
            if pos > n - (m - k):
                continue
            v = p[pos]
            if all((v > p[q]) == (letters[k] > letters[j]) for j, q in enumerate(positions)):
                positions.append(pos)
                if extend(k + 1):
                    positions.pop()
                    return True
                positions.pop()
        return False

    return extend(0)


def avoids(p: Permutation, t: PatternSpec) -> bool:
    return not contains(p, t)


def avoids_all(p: Permutation, ts: Iterable[PatternSpec]) -> bool:
    return all(avoids(p, t) for t in ts)


def consecutive_occurrences(p: Permutation, t: Permutation) -> int:
    """Number of length-m windows of p order isomorphic to t.

    >>> consecutive_occurrences(Permutation.parse("321"), Permutation.parse("321"))
    1
    """
    m = len(t)
    count = 0
    for i in range(len(p) - m + 1):
        window = p[i : i + m]
        if all(
            (window[a] > window[b]) == (t[a] > t[b])
            for a in range(m)
            for b in range(a + 1, m)
        ):
            count += 1
    return count


def enumerate_class(
    n: int,
    patterns: Iterable[PatternSpec],
    base: str = "all",
    bound: int = ENUMERATION_BOUND,
) -> Iterator[Permutation]:
    """Members of the avoidance class, in lexicographic order.

    base="all" walks a prefix tree of partial words, pruning as soon as an
    occurrence of any pattern is completed, so classes far smaller than n!
    are enumerated without touching all of S_n.  base="involutions"
    filters the direct involution enumeration.
    """
    specs = tuple(patterns)
    if base == "involutions":
        if n > bound:
            raise BoundExceededError(n, bound, "involution class enumeration")
        for p in enumerate_involutions(n, bound):
            if avoids_all(p, specs):
                yield p
        return
    if base != "all":
        raise ValueError(f"unknown base {base!r}")
    if n > bound:
        raise BoundExceededError(n, bound, "class enumeration")

    word: list[int] = []
    used = [False] * (n + 1)

    def place() -> Iterator[Permutation]:
        if len(word) == n:
            yield Permutation(word)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            word.append(v)
            used[v] = True
            if not any(_has_occurrence_ending_at(word, s, len(word) - 1) for s in specs):
                yield from place()
            word.pop()
            used[v] = False

    yield from place()
