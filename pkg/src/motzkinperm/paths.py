"""Motzkin words, bicolored Motzkin words, labeled paths, Laguerre
histories, tunnels, and path statistics.

A Motzkin word is a word over {U, D, H} with as many U's as D's and no
prefix containing more D's than U's; it encodes a lattice path from (0, 0)
to (n, 0) staying weakly above the x-axis.  Bicolored words additionally
allow a second horizontal color, written T in ASCII, which may not occur
at height zero.

The height of a step is the y-coordinate of its endpoint for D steps and
of its start point otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import BoundExceededError

ENUMERATION_BOUND = 14

_DELTA = {"U": 1, "D": -1, "H": 0, "T": 0}


def _scan_heights(steps: str, allow_second_color: bool) -> tuple[int, ...]:
    """Validate a step word and return its height list."""
    heights = []
    y = 0
    for i, ch in enumerate(steps, start=1):
        if ch not in _DELTA or (ch == "T" and not allow_second_color):
            raise ValueError(f"invalid step {ch!r} at position {i} in {steps!r}")
        if ch == "D":
            y -= 1
            if y < 0:
                raise ValueError(f"path goes below the axis at position {i} in {steps!r}")
            heights.append(y)
        else:
            if ch == "T" and y == 0:
                raise ValueError(
                    f"second-color horizontal step at height 0 (position {i}) in {steps!r}"
                )
            heights.append(y)
            y += _DELTA[ch]
    if y != 0:
        raise ValueError(f"path does not return to the axis: {steps!r}")
    return tuple(heights)


class BicoloredMotzkinWord(str):
    """Step word over {U, D, H, T}; T is the second horizontal color."""

    def __new__(cls, steps: str) -> "BicoloredMotzkinWord":
        _scan_heights(steps, allow_second_color=True)
        return super().__new__(cls, steps)

    @property
    def n(self) -> int:
        return len(self)


class MotzkinWord(BicoloredMotzkinWord):
    """Plain Motzkin word over {U, D, H}."""

    def __new__(cls, steps: str) -> "MotzkinWord":
        _scan_heights(steps, allow_second_color=False)
        return str.__new__(cls, steps)


def height_list(word: str) -> tuple[int, ...]:
    """Per-step heights: end y for D steps, start y otherwise.

    >>> height_list(BicoloredMotzkinWord("UUDTDH"))
    (0, 1, 1, 1, 0, 0)
    """
    return _scan_heights(str(word), allow_second_color=True)


class Tunnel(NamedTuple):
    """Horizontal segment weakly below the path touching it in exactly its
    two endpoint lattice points; trivial tunnels are the H steps."""

    left: int
    right: int
    trivial: bool


def tunnels(word: MotzkinWord) -> tuple[Tunnel, ...]:
    """All tunnels, one per H step and one per matched U-D pair, sorted by
    decreasing x-coordinate of the left endpoint.

    >>> tunnels(MotzkinWord("UD"))
    (Tunnel(left=0, right=2, trivial=False),)
    """
    found = []
    stack: list[int] = []
    for i, ch in enumerate(str(word), start=1):
        if ch == "U":
            stack.append(i - 1)
        elif ch == "D":
            found.append(Tunnel(stack.pop(), i, trivial=False))
        else:
            found.append(Tunnel(i - 1, i, trivial=True))
    found.sort(key=lambda t: -t.left)
    return tuple(found)


def area(word: MotzkinWord) -> int:
    """Area between the path and the x-axis, as a trapezoid sum.

    U and D steps contribute half-integers but a word that returns to the
    axis always has integral area.

    >>> area(MotzkinWord("UHD"))
    2
    """
    doubled = 0
    y = 0
    for ch in str(word):
        y2 = y + _DELTA[ch]
        doubled += y + y2
        y = y2
    if doubled % 2:
        raise ValueError(f"non-integral area for {word!r}")
    return doubled // 2


def subword_count(word: str, pattern: str) -> int:
    """Occurrences of ``pattern`` as a factor (consecutive letters),
    counting overlaps.

    >>> subword_count("HHH", "HH")
    2
    """
    m = len(pattern)
    return sum(1 for i in range(len(word) - m + 1) if word[i : i + m] == pattern)


WEAK_VALLEY_FACTORS = ("HH", "HU", "DH", "DU")
DESCENT_FACTORS = ("UU", "DD", "UH", "HD", "UD")


def _long_tunnels(word: str) -> int:
    return sum(1 for t in tunnels(MotzkinWord(word)) if not t.trivial and t.right - t.left > 2)


def _noninitial_up(word: str) -> int:
    return word.count("U") - (1 if word.startswith("U") else 0)


def _nonfinal_peaks(word: str) -> int:
    # a peak UD is final when everything after its D is a (possibly empty) run of D's
    return sum(
        1
        for i in range(len(word) - 1)
        if word[i : i + 2] == "UD" and any(ch != "D" for ch in word[i + 2 :])
    )


def _distinguished_h(word: str) -> int:
    # H steps not in first position and not followed exclusively by down
    # steps (an H in last position is followed by the empty run of D's)
    return sum(
        1
        for i, ch in enumerate(word)
        if ch == "H" and i > 0 and any(c != "D" for c in word[i + 1 :])
    )


def _weakly_descending_subpaths(word: str) -> int:
    return sum(1 for flat, _ in itertools.groupby(word, key=lambda c: c in "HD") if flat)


_NAMED_STATISTICS = {
    "weak_valleys": lambda w: sum(subword_count(w, f) for f in WEAK_VALLEY_FACTORS),
    "peaks": lambda w: subword_count(w, "UD"),
    "long_tunnels": _long_tunnels,
    "noninitial_up": _noninitial_up,
    "nonfinal_peaks": _nonfinal_peaks,
    "distinguished_H": _distinguished_h,
    "weakly_descending_subpaths": _weakly_descending_subpaths,
}


def named_statistic(word: MotzkinWord, name: str) -> int:
    """Evaluate one of the named path statistics.

    Known names: weak_valleys, peaks, long_tunnels, noninitial_up,
    nonfinal_peaks, distinguished_H, weakly_descending_subpaths.
    A long tunnel is a matched U-D pair with at least one step strictly
    between them; a non-final peak is a UD factor not followed exclusively
    by D's; a distinguished horizontal step is an H not in first position
    and not followed exclusively by D's; a weakly descending subpath is a
    maximal factor over {H, D}.
    """
    try:
        stat = _NAMED_STATISTICS[name]
    except KeyError:
        raise ValueError(f"unknown path statistic {name!r}") from None
    return stat(str(word))


PATH_STATISTIC_NAMES = tuple(_NAMED_STATISTICS)


def first_return_decompose(word: MotzkinWord):
    """Unique first-return decomposition.

    Returns () for the empty word, ("H", m) when the word is H followed by
    m, and ("U", inner, rest) when it is U inner D rest with the D closing
    the initial U.
    """
    s = str(word)
    if not s:
        return ()
    if s[0] == "H":
        return ("H", MotzkinWord(s[1:]))
    y = 0
    for i, ch in enumerate(s):
        y += _DELTA[ch]
        if y == 0:
            return ("U", MotzkinWord(s[1:i]), MotzkinWord(s[i + 1 :]))
    raise AssertionError("unreachable: validated word must return to the axis")


def first_return_reassemble(parts) -> MotzkinWord:
    if parts == ():
        return MotzkinWord("")
    if parts[0] == "H":
        return MotzkinWord("H" + parts[1])
    return MotzkinWord("U" + parts[1] + "D" + parts[2])


@dataclass(frozen=True)
class LabeledMotzkinPath:
    """Motzkin word whose D steps carry labels not exceeding their heights."""

    word: MotzkinWord
    labels: tuple[int, ...]

    def __post_init__(self):
        word = MotzkinWord(self.word)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "labels", tuple(self.labels))
        d_heights = [h for ch, h in zip(word, height_list(word)) if ch == "D"]
        if len(self.labels) != len(d_heights):
            raise ValueError(
                f"expected {len(d_heights)} labels (one per D), got {len(self.labels)}"
            )
        for k, (label, h) in enumerate(zip(self.labels, d_heights)):
            if not 0 <= label <= h:
                raise ValueError(f"label {label} of D #{k + 1} exceeds its height {h}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        """Inline form with each label right after its D, e.g. "UUHUD1D1HD0"."""
        out = []
        it = iter(self.labels)
        for ch in self.word:
            out.append(ch)
            if ch == "D":
                out.append(str(next(it)))
        return "".join(out)

    @classmethod
    def parse(cls, text: str) -> "LabeledMotzkinPath":
        steps = []
        labels = []
        i = 0
        text = text.strip()
        while i < len(text):
            ch = text[i]
            steps.append(ch)
            i += 1
            if ch == "D":
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                labels.append(int(text[i:j]) if j > i else 0)
                i = j
        return cls(MotzkinWord("".join(steps)), tuple(labels))

    def to_json_dict(self) -> dict:
        return {"steps": str(self.word), "labels": list(self.labels)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "LabeledMotzkinPath":
        return cls(MotzkinWord(data["steps"]), tuple(data["labels"]))


def history_label_bound(step: str, height: int) -> int:
    """Largest admissible label for a step of the given height.

    U, D and H steps admit labels up to their height.  A second-color
    horizontal step at height h has only h - 1 other runs straddling it in
    the permutation picture, so its bound is h - 1; this is what makes the
    number of histories of length n equal to n!.
    """
    return height - 1 if step == "T" else height


@dataclass(frozen=True)
class LaguerreHistory:
    """Bicolored Motzkin word plus one non-negative label per step, with
    every label bounded per ``history_label_bound``."""

    word: BicoloredMotzkinWord
    labels: tuple[int, ...]

    def __post_init__(self):
        word = BicoloredMotzkinWord(self.word)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "labels", tuple(self.labels))
        heights = height_list(word)
        if len(self.labels) != len(word):
            raise ValueError(f"expected {len(word)} labels, got {len(self.labels)}")
        for i, (ch, label, h) in enumerate(zip(word, self.labels, heights), start=1):
            if not 0 <= label <= history_label_bound(ch, h):
                raise ValueError(
                    f"label {label} on step {ch} at position {i} exceeds "
                    f"the bound {history_label_bound(ch, h)} (height {h})"
                )

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        """Pipe form, e.g. "UUTUDTDHD | l=0,0,1,2,1,0,1,0,0"."""
        if not self.word:
            return "| l="
        return f"{self.word} | l={','.join(str(v) for v in self.labels)}"

    @classmethod
    def parse(cls, text: str) -> "LaguerreHistory":
        word_part, _, label_part = text.partition("|")
        word = BicoloredMotzkinWord(word_part.strip())
        label_part = label_part.strip()
        if label_part.startswith("l="):
            label_part = label_part[2:]
        labels = tuple(int(v) for v in label_part.split(",") if v != "") if label_part else ()
        return cls(word, labels)

    def to_json_dict(self) -> dict:
        return {"steps": str(self.word), "labels": list(self.labels)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "LaguerreHistory":
        return cls(BicoloredMotzkinWord(data["steps"]), tuple(data["labels"]))


def history_to_labeled(h: LaguerreHistory) -> LabeledMotzkinPath:
    """Identify a history with no second-color steps and labels only on D
    steps with the labeled Motzkin path carrying those D labels."""
    if "T" in h.word:
        raise ValueError("history has second-color horizontal steps")
    for ch, label in zip(h.word, h.labels):
        if label > 0 and ch != "D":
            raise ValueError("history has a positive label on a non-D step")
    d_labels = tuple(label for ch, label in zip(h.word, h.labels) if ch == "D")
    return LabeledMotzkinPath(MotzkinWord(str(h.word)), d_labels)


def labeled_to_history(m: LabeledMotzkinPath) -> LaguerreHistory:
    labels = []
    it = iter(m.labels)
    for ch in m.word:
        labels.append(next(it) if ch == "D" else 0)
    return LaguerreHistory(BicoloredMotzkinWord(str(m.word)), tuple(labels))


def _words(n: int, alphabet: str) -> Iterator[str]:
    """All height-valid words of length n over the alphabet, lexicographic."""

    def extend(prefix: list[str], y: int) -> Iterator[str]:
        rest = n - len(prefix)
        if rest == 0:
            yield "".join(prefix)
            return
        for ch in alphabet:
            y2 = y + _DELTA[ch]
            if y2 < 0 or y2 > rest - 1:
                continue
            if ch == "T" and y == 0:
                continue
            prefix.append(ch)
            yield from extend(prefix, y2)
            prefix.pop()

    return extend([], 0)


def enumerate_motzkin(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[MotzkinWord]:
    if n > bound:
        raise BoundExceededError(n, bound, "Motzkin word enumeration")
    for s in _words(n, "DHU"):
        yield MotzkinWord(s)


def enumerate_bicolored(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[BicoloredMotzkinWord]:
    if n > bound:
        raise BoundExceededError(n, bound, "bicolored Motzkin word enumeration")
    for s in _words(n, "DHTU"):
        yield BicoloredMotzkinWord(s)


def enumerate_labeled(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[LabeledMotzkinPath]:
    """All labeled Motzkin paths: every Motzkin word with every admissible
    assignment of D labels."""
    if n > bound:
        raise BoundExceededError(n, bound, "labeled Motzkin path enumeration")
    for word in enumerate_motzkin(n, bound):
        d_heights = [h for ch, h in zip(word, height_list(word)) if ch == "D"]
        for labels in itertools.product(*(range(h + 1) for h in d_heights)):
            yield LabeledMotzkinPath(word, labels)


def enumerate_histories(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[LaguerreHistory]:
    """All Laguerre histories of length n (there are n! of them)."""
    if n > bound:
        raise BoundExceededError(n, bound, "Laguerre history enumeration")
    for word in enumerate_bicolored(n, bound):
        heights = height_list(word)
        ranges = (range(history_label_bound(ch, h) + 1) for ch, h in zip(word, heights))
        for labels in itertools.product(*ranges):
            yield LaguerreHistory(word, labels)


def motzkin_number(n: int) -> int:
    """M_0, M_1, ... = 1, 1, 2, 4, 9, 21, 51, ... by the standard recurrence."""
    ms = [1, 1]
    while len(ms) <= n:
        k = len(ms)
        ms.append(ms[k - 1] + sum(ms[i] * ms[k - 2 - i] for i in range(k - 1)))
    return ms[n]


def catalan_number(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c
