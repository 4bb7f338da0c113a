import math

import pytest
from hypothesis import given, strategies as st

from motzkinperm.errors import BoundExceededError
from motzkinperm.paths import (
    BicoloredMotzkinWord,
    LabeledMotzkinPath,
    LaguerreHistory,
    MotzkinWord,
    area,
    catalan_number,
    enumerate_bicolored,
    enumerate_histories,
    enumerate_labeled,
    enumerate_motzkin,
    first_return_decompose,
    first_return_reassemble,
    height_list,
    history_label_bound,
    history_to_labeled,
    labeled_to_history,
    motzkin_number,
    named_statistic,
    subword_count,
    tunnels,
)

step_words = st.text(alphabet="UDHT", max_size=10)


def _is_valid_bicolored(s: str) -> bool:
    y = 0
    for ch in s:
        if ch == "T" and y == 0:
            return False
        y += {"U": 1, "D": -1, "H": 0, "T": 0}[ch]
        if y < 0:
            return False
    return y == 0


@given(step_words)
def test_validation_matches_reference(s):
    if _is_valid_bicolored(s):
        BicoloredMotzkinWord(s)
    else:
        with pytest.raises(ValueError):
            BicoloredMotzkinWord(s)


def test_validation_messages():
    with pytest.raises(ValueError):
        MotzkinWord("UDT")  # second color not allowed in plain words
    with pytest.raises(ValueError):
        BicoloredMotzkinWord("TD")  # T at height zero
    with pytest.raises(ValueError):
        BicoloredMotzkinWord("UDD")


def test_height_list_examples():
    assert height_list(BicoloredMotzkinWord("UUDTDH")) == (0, 1, 1, 1, 0, 0)
    assert height_list(BicoloredMotzkinWord("HHHH")) == (0, 0, 0, 0)
    assert height_list(BicoloredMotzkinWord("UUTUDTDHD")) == (0, 1, 2, 2, 2, 2, 1, 1, 0)


def test_tunnels_examples():
    eleven = MotzkinWord("UUUDDUHDDUD")
    assert [(t.left, t.right) for t in tunnels(eleven)] == [
        (9, 11), (6, 7), (5, 8), (2, 4), (1, 5), (0, 9),
    ]
    assert tunnels(MotzkinWord("UD")) == (tunnels(MotzkinWord("UD"))[0],)
    assert tunnels(MotzkinWord("UD"))[0] == (0, 2, False)
    assert tunnels(MotzkinWord("H"))[0] == (0, 1, True)


def test_tunnel_structure():
    for n in range(9):
        for w in enumerate_motzkin(n):
            ts = tunnels(w)
            assert len(ts) == w.count("H") + w.count("U")
            assert sum(1 for t in ts if t.trivial) == w.count("H")
            # tunnels are well nested or disjoint
            for a in ts:
                for b in ts:
                    if a == b:
                        continue
                    assert (
                        a.right <= b.left
                        or b.right <= a.left
                        or (a.left <= b.left and b.right <= a.right)
                        or (b.left <= a.left and a.right <= b.right)
                    )


def test_area_examples():
    assert area(MotzkinWord("HHHH")) == 0
    assert area(MotzkinWord("UD")) == 1
    assert area(MotzkinWord("UHD")) == 2


def test_area_equals_tunnel_sum():
    for n in range(10):
        for w in enumerate_motzkin(n):
            assert area(w) == sum(
                t.right - t.left - 1 for t in tunnels(w) if not t.trivial
            )


def test_subword_count():
    assert subword_count("HHH", "HH") == 2
    for n in range(8):
        for w in enumerate_motzkin(n):
            two_letter = [a + b for a in "UDH" for b in "UDH"]
            assert sum(subword_count(w, f) for f in two_letter) == max(0, n - 1)


def test_named_statistics():
    assert named_statistic(MotzkinWord("UD"), "peaks") == 1
    assert named_statistic(MotzkinWord("UD"), "long_tunnels") == 0
    assert named_statistic(MotzkinWord("UHD"), "long_tunnels") == 1
    assert named_statistic(MotzkinWord("UUDD"), "noninitial_up") == 1
    assert named_statistic(MotzkinWord("HUD"), "noninitial_up") == 1
    assert named_statistic(MotzkinWord("UDH"), "nonfinal_peaks") == 1
    assert named_statistic(MotzkinWord("HUD"), "nonfinal_peaks") == 0
    assert named_statistic(MotzkinWord("HHH"), "distinguished_H") == 1
    assert named_statistic(MotzkinWord("UHD"), "distinguished_H") == 0
    with pytest.raises(ValueError):
        named_statistic(MotzkinWord("UD"), "zigzags")


def test_weakly_descending_subpaths_identity():
    # every non-empty Motzkin word ends with H or D, so the count is always
    # the number of HU and DU factors plus one
    for n in range(1, 10):
        for w in enumerate_motzkin(n):
            wd = named_statistic(w, "weakly_descending_subpaths")
            assert wd == subword_count(w, "HU") + subword_count(w, "DU") + 1


def test_first_return_decompose():
    assert first_return_decompose(MotzkinWord("")) == ()
    assert first_return_decompose(MotzkinWord("HUD")) == ("H", "UD")
    assert first_return_decompose(MotzkinWord("UHDH")) == ("U", "H", "H")
    for n in range(8):
        for w in enumerate_motzkin(n):
            assert first_return_reassemble(first_return_decompose(w)) == w


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_motzkin(n)) for n in range(11)] == [
        motzkin_number(n) for n in range(11)
    ]
    assert [sum(1 for _ in enumerate_bicolored(n)) for n in range(8)] == [
        catalan_number(n) for n in range(8)
    ]
    assert [sum(1 for _ in enumerate_labeled(n)) for n in range(8)] == [
        1, 1, 2, 4, 10, 26, 76, 232,
    ]
    assert [sum(1 for _ in enumerate_histories(n)) for n in range(7)] == [
        math.factorial(n) for n in range(7)
    ]
    with pytest.raises(BoundExceededError):
        next(enumerate_motzkin(15))


def test_motzkin_and_catalan_numbers():
    assert [motzkin_number(n) for n in range(7)] == [1, 1, 2, 4, 9, 21, 51]
    assert [catalan_number(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


def test_labeled_path_parse_and_render():
    m = LabeledMotzkinPath.parse("UUHUD1D1HD0")
    assert str(m) == "UUHUD1D1HD0"
    assert m.labels == (1, 1, 0)
    assert LabeledMotzkinPath.parse("HHH").labels == ()
    with pytest.raises(ValueError):
        LabeledMotzkinPath(MotzkinWord("UD"), (1,))  # label exceeds height 0
    with pytest.raises(ValueError):
        LabeledMotzkinPath(MotzkinWord("UD"), ())  # missing label


def test_history_parse_and_render():
    text = "UUTUDTDHD | l=0,0,1,2,1,0,1,0,0"
    h = LaguerreHistory.parse(text)
    assert str(h) == text
    assert LaguerreHistory.parse("| l=").word == ""


def test_history_label_bounds():
    # U, H and D admit labels up to their height; T only to height - 1
    assert history_label_bound("H", 2) == 2
    assert history_label_bound("T", 2) == 1
    LaguerreHistory(BicoloredMotzkinWord("UTD"), (0, 0, 0))
    with pytest.raises(ValueError):
        LaguerreHistory(BicoloredMotzkinWord("UTD"), (0, 1, 0))
    LaguerreHistory(BicoloredMotzkinWord("UHD"), (0, 1, 0))


def test_json_roundtrip():
    m = LabeledMotzkinPath.parse("UUD1D0H")
    assert LabeledMotzkinPath.from_json_dict(m.to_json_dict()) == m
    assert m.to_json_dict() == {"steps": "UUDDH", "labels": [1, 0]}
    h = LaguerreHistory.parse("UUTDD | l=0,1,1,1,0")
    assert LaguerreHistory.from_json_dict(h.to_json_dict()) == h


def test_history_labeled_identification():
    m = LabeledMotzkinPath.parse("UUD1D0H")
    assert history_to_labeled(labeled_to_history(m)) == m
    with pytest.raises(ValueError):
        history_to_labeled(LaguerreHistory(BicoloredMotzkinWord("UTD"), (0, 0, 0)))
    with pytest.raises(ValueError):
        history_to_labeled(LaguerreHistory(BicoloredMotzkinWord("UHD"), (0, 1, 0)))
