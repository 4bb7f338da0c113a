import itertools

import pytest
from hypothesis import given, strategies as st

from motzkinperm.errors import BoundExceededError
from motzkinperm.patterns import (
    PatternSpec,
    avoids,
    avoids_all,
    consecutive_occurrences,
    contains,
    enumerate_class,
    occurrences,
)
from motzkinperm.permutations import (
    Permutation,
    ascending_runs,
    enumerate_permutations,
    reverse_complement,
)

perms = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


def test_parse_forms():
    classical = PatternSpec.parse("3412")
    assert classical.is_classical and not classical.adjacency
    vinc = PatternSpec.parse("1_32")
    assert vinc.letters == Permutation.parse("132")
    assert vinc.adjacency == frozenset({2})
    cons = PatternSpec.parse("_123")
    assert cons.is_consecutive
    assert PatternSpec.parse("12_3").adjacency == frozenset({1})


def test_parse_str_roundtrip():
    for text in ("3412", "1_32", "1_23", "_123", "_12_3", "_12_34"):
        assert str(PatternSpec.parse(text)) == text
    # a multi-letter first block renders with the leading underscore
    assert str(PatternSpec.parse("12_3")) == "_12_3"
    assert PatternSpec.parse("12_3") == PatternSpec.parse("_12_3")


def test_parse_rejects():
    for bad in ("", "1_", "_", "1a2", "1__2"):
        with pytest.raises(ValueError):
            PatternSpec.parse(bad)


def test_occurrences_vincular_example():
    assert occurrences(Permutation.parse("431256"), PatternSpec.parse("2_13")) == 2


def test_occurrences_trivial():
    p = Permutation.parse("35142")
    assert occurrences(p, PatternSpec.parse("1")) == len(p)
    assert occurrences(Permutation.parse("123456"), PatternSpec.parse("_123")) == 4


def test_classical_occurrences_against_brute_force():
    pattern = PatternSpec.parse("132")
    for p in enumerate_permutations(6):
        expected = 0
        for combo in itertools.combinations(range(6), 3):
            vals = [p[i] for i in combo]
            if vals[0] < vals[2] < vals[1]:
                expected += 1
        assert occurrences(p, pattern) == expected


perms_to_8 = st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


@given(perms_to_8)
def test_classical_occurrences_brute_force_random(word):
    p = Permutation(word)
    for text in ("132", "3412"):
        pattern = PatternSpec.parse(text)
        m = len(pattern.letters)
        expected = 0
        for combo in itertools.combinations(range(len(p)), m):
            vals = [p[i] for i in combo]
            if all((vals[a] > vals[b]) == (pattern.letters[a] > pattern.letters[b])
                   for a in range(m) for b in range(a + 1, m)):
                expected += 1
        assert occurrences(p, pattern) == expected


def test_avoids_examples():
    p = Permutation.parse("65832714")
    assert avoids_all(p, (PatternSpec.parse("1_32"), PatternSpec.parse("1_23")))
    assert avoids(p, PatternSpec.parse("123456789"))
    # 47318625 contains 3412 (e.g. the subsequence 4, 7, 1, 5)
    assert not avoids(Permutation.parse("47318625"), PatternSpec.parse("3412"))
    assert contains(Permutation.parse("47318625"), PatternSpec.parse("3412"))


def test_consecutive_occurrences():
    assert consecutive_occurrences(Permutation.parse("321"), Permutation.parse("321")) == 1
    for p in enumerate_permutations(5):
        total = sum(
            consecutive_occurrences(p, Permutation.parse(t))
            for t in ("123", "132", "213", "231", "312", "321")
        )
        assert total == 3  # n - 2 windows


def test_vincular_equals_consecutive_pair_class():
    vincular = (PatternSpec.parse("1_32"), PatternSpec.parse("1_23"))
    consecutive = (PatternSpec.parse("_132"), PatternSpec.parse("_123"))
    for n in range(7):
        a = set(enumerate_class(n, vincular))
        b = set(enumerate_class(n, consecutive))
        assert a == b


@given(perms)
def test_reverse_complement_pattern_exchange(word):
    p = Permutation(word)
    rc = reverse_complement(p)
    pairs = (("_213", "_132"), ("_312", "_231"))
    for left, right in pairs:
        assert occurrences(p, PatternSpec.parse(left)) == occurrences(rc, PatternSpec.parse(right))


def test_class_members_have_short_runs_and_decreasing_heads():
    patterns = (PatternSpec.parse("132"), PatternSpec.parse("_123"))
    for n in range(8):
        for p in enumerate_class(n, patterns):
            runs = ascending_runs(p)
            assert all(len(r) <= 2 for r in runs)
            heads = [r[0] for r in runs]
            assert heads == sorted(heads, reverse=True)


def test_enumerate_class_counts():
    motzkin = [1, 1, 2, 4, 9, 21, 51]
    for n, m in enumerate(motzkin):
        count = sum(1 for _ in enumerate_class(n, (PatternSpec.parse("3412"),), base="involutions"))
        assert count == m
    assert list(enumerate_class(0, ())) == [Permutation(())]


def test_enumerate_class_vincular_matches_involution_numbers():
    involution_numbers = [1, 1, 2, 4, 10, 26, 76]
    vincular = (PatternSpec.parse("1_32"), PatternSpec.parse("1_23"))
    for n, count in enumerate(involution_numbers):
        assert sum(1 for _ in enumerate_class(n, vincular)) == count


def test_enumerate_class_bound():
    with pytest.raises(BoundExceededError):
        next(enumerate_class(13, ()))
    with pytest.raises(ValueError):
        next(enumerate_class(3, (), base="windows"))
