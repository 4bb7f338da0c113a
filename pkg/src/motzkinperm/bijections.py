"""The correspondences between permutations, involutions, and Motzkin-type
paths, together with statistic transport along them.

Maps provided:

* ``perm_to_history`` sends any permutation to a Laguerre history by
  reading the role (head / tail / head-tail / boarder) of each value in
  the ascending-run decomposition and attaching crossing labels.
* ``foata`` erases the parentheses of the standard cycle form of an
  involution; its image is the class avoiding the vincular patterns 1_32
  and 1_23.
* ``involution_to_path`` sends an involution to a labeled Motzkin path
  (fixed point -> H, cycle opener -> U, cycle closer -> D with a crossing
  label).
* ``motzkin_to_perm`` rebuilds, from a plain Motzkin word, the unique
  member of the class avoiding 132 and consecutive 123 whose history has
  that word and all labels zero, by reading tunnels in decreasing order
  of their left endpoint.

``CONSECUTIVE_OF_WINDOW`` translates every three-step window of a path
into the consecutive pattern realized by the corresponding involution.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import BoundExceededError, InvariantError
from .paths import (
    DESCENT_FACTORS,
    LabeledMotzkinPath,
    LaguerreHistory,
    BicoloredMotzkinWord,
    MotzkinWord,
    area,
    enumerate_labeled,
    enumerate_motzkin,
    labeled_to_history,
    subword_count,
    tunnels,
)
from .patterns import PatternSpec, avoids, consecutive_occurrences
from .permutations import (
    CycleForm,
    Permutation,
    des_count,
    enumerate_involutions,
    enumerate_permutations,
    fix_count,
    inv_count,
    is_involution,
    run_anatomy,
    standard_cycles,
    validate_standard_cycles,
)

SEARCH_INVERSE_BOUND = 8

_ROLE_STEP = {"head": "U", "tail": "D", "head-tail": "H", "boarder": "T"}

#: Patterns whose avoidance characterizes the image of ``foata``.
VINCULAR_132 = PatternSpec.parse("1_32")
VINCULAR_123 = PatternSpec.parse("1_23")
CLASSICAL_132 = PatternSpec.parse("132")
CLASSICAL_3412 = PatternSpec.parse("3412")
CONSECUTIVE_123 = PatternSpec.parse("_123")


def perm_to_history(p: Permutation) -> LaguerreHistory:
    """History of a permutation: step i is the role of the value i, and the
    label of i counts runs straddling i whose tail precedes i in the word.

    >>> str(perm_to_history(Permutation.parse("826913547")))
    'UUTUDTDHD | l=0,0,1,2,1,0,1,0,0'
    """
    anatomy = run_anatomy(p)
    pos = {v: i for i, v in enumerate(p)}
    steps = "".join(_ROLE_STEP[anatomy.roles[pos[v]]] for v in range(1, len(p) + 1))
    bounds = [(run[0], run[-1]) for run in anatomy.runs]
    labels = tuple(
        sum(1 for s, t in bounds if s < i < t and pos[t] < pos[i]) for i in range(1, len(p) + 1)
    )
    return LaguerreHistory(BicoloredMotzkinWord(steps), labels)


@functools.lru_cache(maxsize=None)
def _history_table(n: int) -> dict[LaguerreHistory, Permutation]:
    table: dict[LaguerreHistory, Permutation] = {}
    for p in enumerate_permutations(n):
        table[perm_to_history(p)] = p
    return table


def history_to_perm(h: LaguerreHistory, bound: int = SEARCH_INVERSE_BOUND) -> Permutation:
    """Preimage of a history under ``perm_to_history``.

    No constructive inverse is implemented on the full history set; this
    inverts by exhaustive search and refuses sizes past the bound.  Small
    sizes are memoized in a full table (bulk round-trip checks hit them
    repeatedly); larger one-off requests scan without caching.
    """
    if h.n > bound:
        raise BoundExceededError(h.n, bound, "history inversion")
    if h.n <= SEARCH_INVERSE_BOUND:
        try:
            return _history_table(h.n)[h]
        except KeyError:
            raise InvariantError(f"history {h} has no permutation preimage") from None
    for p in enumerate_permutations(h.n, bound):
        if perm_to_history(p) == h:
            return p
    raise InvariantError(f"history {h} has no permutation preimage")


def foata(cycles: CycleForm) -> Permutation:
    """Erase the parentheses of a standard cycle form of an involution.

    >>> from .permutations import parse_cycles
    >>> str(foata(parse_cycles("(6)(5,8)(3)(2,7)(1,4)")))
    '6 5 8 3 2 7 1 4'
    """
    validate_standard_cycles(cycles)
    if any(len(c) > 2 for c in cycles):
        raise ValueError("cycle form is not an involution (cycle longer than 2)")
    return Permutation(v for cycle in cycles for v in cycle)


def foata_of(p: Permutation) -> Permutation:
    """``foata`` applied to the standard cycle form of an involution."""
    if not is_involution(p):
        raise ValueError(f"{p} is not an involution")
    return foata(standard_cycles(p))


def foata_inverse(p: Permutation) -> CycleForm:
    """Cut the word before every left-to-right minimum and read the pieces
    as cycles.  Defined exactly on the avoidance class of 1_32 and 1_23."""
    for spec in (VINCULAR_132, VINCULAR_123):
        if not avoids(p, spec):
            raise ValueError(f"{p} contains the vincular pattern {spec}")
    cycles: list[tuple[int, ...]] = []
    current: list[int] = []
    minimum = len(p) + 1
    for v in p:
        if v < minimum and current:
            cycles.append(tuple(current))
            current = []
        minimum = min(minimum, v)
        current.append(v)
    if current:
        cycles.append(tuple(current))
    form = tuple(cycles)
    validate_standard_cycles(form)
    return form


def involution_to_path(p: Permutation) -> LabeledMotzkinPath:
    """Labeled Motzkin path of an involution: H at fixed points, U at cycle
    openers, D at cycle closers; a closer of (j, i) is labeled with the
    number of cycles (x, y) satisfying j < x < i < y.

    >>> str(involution_to_path(Permutation.parse("65382174")))
    'UUHUD1D1HD0'
    """
    if not is_involution(p):
        raise ValueError(f"{p} is not an involution")
    pairs = [(j, i) for i, j in ((i, p.image(i)) for i in range(1, len(p) + 1)) if j < i]
    steps = []
    labels = []
    for i in range(1, len(p) + 1):
        j = p.image(i)
        if j == i:
            steps.append("H")
        elif j > i:
            steps.append("U")
        else:
            steps.append("D")
            labels.append(sum(1 for x, y in pairs if j < x < i < y))
    return LabeledMotzkinPath(MotzkinWord("".join(steps)), tuple(labels))


def path_to_involution(m: LabeledMotzkinPath) -> Permutation:
    """Constructive inverse of ``involution_to_path``: scanning left to
    right, U opens a cycle, H fixes its position, and a D labeled h closes
    the (h+1)-th largest open opener."""
    word = [0] * m.n
    opens: list[int] = []
    labels = iter(m.labels)
    for i, ch in enumerate(str(m.word), start=1):
        if ch == "H":
            word[i - 1] = i
        elif ch == "U":
            opens.append(i)
        else:
            j = opens.pop(-(next(labels) + 1))
            word[i - 1], word[j - 1] = j, i
    return Permutation(word)


def motzkin_to_perm(w: MotzkinWord) -> Permutation:
    """The member of the class avoiding 132 and consecutive 123 whose
    history is (w, all labels zero): tunnels in decreasing order of their
    left endpoint become ascending runs (left+1, right), trivial tunnels
    becoming one-letter runs.

    >>> str(motzkin_to_perm(MotzkinWord("UUUDDUHDDUD")))
    '10 11 7 6 8 3 4 2 5 1 9'
    """
    word: list[int] = []
    for t in tunnels(w):
        if t.right == t.left + 1:
            word.append(t.right)
        else:
            word.extend((t.left + 1, t.right))
    return Permutation(word)


#: The consecutive pattern realized by an involution across each
#: three-step window of its path.
CONSECUTIVE_OF_WINDOW = {
    "HHH": "123", "HHU": "123", "HHD": "231",
    "HUH": "132", "HUU": "132", "HUD": "132",
    "HDH": "213", "HDU": "213", "HDD": "321",
    "UHH": "312", "UHU": "312", "UHD": "321",
    "UUH": "321", "UUU": "321", "UUD": "321",
    "UDH": "213", "UDU": "213", "UDD": "321",
    "DHH": "123", "DHU": "123", "DHD": "231",
    "DUH": "132", "DUU": "132", "DUD": "132",
    "DDH": "213", "DDU": "213", "DDD": "321",
}

CONSECUTIVE_PATTERNS = ("123", "132", "213", "231", "312", "321")


def window_pattern_counts(word: MotzkinWord) -> dict[str, int]:
    """Count three-step windows by the consecutive pattern they encode."""
    counts = {name: 0 for name in CONSECUTIVE_PATTERNS}
    s = str(word)
    for i in range(len(s) - 2):
        counts[CONSECUTIVE_OF_WINDOW[s[i : i + 3]]] += 1
    return counts


@dataclass(frozen=True)
class TransportRecord:
    """Statistics of a 3412-avoiding involution computed two ways: directly
    on the word and through its path."""

    direct: dict[str, int]
    via_path: dict[str, int]


def transport_statistics(p: Permutation) -> TransportRecord:
    """Compute inv, des, fix and all six consecutive-pattern counts both
    directly and through the path image, raising InvariantError on any
    disagreement.

    On the path side: inv = 2*area - (number of non-trivial tunnels),
    des = number of factors in {UU, DD, UH, HD, UD}, fix = number of H
    steps, and pattern counts come from the window table.
    """
    if not is_involution(p):
        raise ValueError(f"{p} is not an involution")
    if not avoids(p, CLASSICAL_3412):
        raise ValueError(f"{p} does not avoid 3412")
    direct = {"inv": inv_count(p), "des": des_count(p), "fix": fix_count(p)}
    for name in CONSECUTIVE_PATTERNS:
        direct[name] = consecutive_occurrences(p, Permutation.parse(name))

    path = involution_to_path(p)
    word = path.word
    nontrivial = sum(1 for t in tunnels(word) if not t.trivial)
    via = {
        "inv": 2 * area(word) - nontrivial,
        "des": sum(subword_count(word, f) for f in DESCENT_FACTORS),
        "fix": word.count("H"),
    }
    via.update(window_pattern_counts(word))
    if direct != via:
        raise InvariantError(
            f"statistic transport mismatch for {p}: direct={direct} via_path={via}"
        )
    return TransportRecord(direct, via)


@dataclass(frozen=True)
class DiagramReport:
    """Outcome of the commuting-diagram checks at one size."""

    n: int
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_diagram(
    n: int,
    *,
    history_map=perm_to_history,
    path_map=involution_to_path,
    foata_map=foata_of,
    bound: int = SEARCH_INVERSE_BOUND,
) -> DiagramReport:
    """Verify, exhaustively at size n, that the triangle of maps commutes
    and that the image characterizations hold:

    1. path_map = history_map after foata_map on involutions;
    2. the histories of the class avoiding 1_32 and 1_23 are exactly the
       labeled Motzkin paths (no second color, labels only on D steps);
    3. a permutation avoids 132 exactly when its history labels vanish;
    4. the paths of 3412-avoiding involutions are exactly the zero-labeled
       Motzkin paths.

    The map arguments exist so a deliberately broken map can be fed in to
    confirm the checker reports it.
    """
    if n > bound:
        raise BoundExceededError(n, bound, "diagram check")
    failures: list[str] = []
    checked = 0

    class_members: set[Permutation] = set()
    for p in enumerate_permutations(n):
        checked += 1
        h = history_map(p)
        in_class = avoids(p, VINCULAR_132) and avoids(p, VINCULAR_123)
        labeled_shape = "T" not in h.word and all(
            label == 0 or ch == "D" for ch, label in zip(h.word, h.labels)
        )
        if in_class != labeled_shape:
            failures.append(f"history-shape characterization fails for {p}: {h}")
        if in_class:
            class_members.add(p)
        if avoids(p, CLASSICAL_132) != all(v == 0 for v in h.labels):
            failures.append(f"zero-label characterization fails for {p}: {h}")

    class_histories = {history_map(p) for p in class_members}
    all_labeled = {labeled_to_history(m) for m in enumerate_labeled(n)}
    if class_histories != all_labeled:
        failures.append(
            f"class histories differ from labeled paths at n={n}: "
            f"{len(class_histories)} vs {len(all_labeled)}"
        )

    motzkin_words = set(enumerate_motzkin(n))
    zero_paths = set()
    for p in enumerate_involutions(n):
        checked += 1
        direct = path_map(p)
        via = history_map(foata_map(p))
        if labeled_to_history(direct) != via:
            failures.append(f"triangle does not commute for involution {p}")
        in_restricted = avoids(p, CLASSICAL_3412)
        zero = all(v == 0 for v in direct.labels)
        if in_restricted != zero:
            failures.append(f"3412 / zero-label characterization fails for {p}")
        if in_restricted:
            zero_paths.add(direct.word)
    if zero_paths != motzkin_words:
        failures.append(f"restricted image differs from Motzkin words at n={n}")

    return DiagramReport(n, checked, tuple(failures))
