import pytest

from motzkinperm.bijections import (
    CONSECUTIVE_OF_WINDOW,
    check_diagram,
    foata,
    foata_inverse,
    foata_of,
    history_to_perm,
    involution_to_path,
    motzkin_to_perm,
    path_to_involution,
    perm_to_history,
    transport_statistics,
    window_pattern_counts,
)
from motzkinperm.paths import (
    LabeledMotzkinPath,
    MotzkinWord,
    enumerate_labeled,
    enumerate_motzkin,
    labeled_to_history,
    named_statistic,
)
from motzkinperm.patterns import PatternSpec, avoids, enumerate_class
from motzkinperm.permutations import (
    Permutation,
    asc_count,
    enumerate_involutions,
    enumerate_permutations,
    identity,
    parse_cycles,
)

SPEC_3412 = PatternSpec.parse("3412")


def restricted_involutions(n):
    return enumerate_class(n, (SPEC_3412,), base="involutions")


def test_history_worked_example():
    h = perm_to_history(Permutation.parse("826913547"))
    assert str(h) == "UUTUDTDHD | l=0,0,1,2,1,0,1,0,0"


def test_history_collisions_on_word_component():
    a = perm_to_history(Permutation.parse("3124"))
    b = perm_to_history(Permutation.parse("1243"))
    assert a.word == b.word == "UTHD"
    assert a != b


def test_history_of_identity():
    h = perm_to_history(identity(5))
    assert str(h.word) == "UTTTD"
    assert h.labels == (0,) * 5


def test_history_roundtrip():
    for n in range(7):
        for p in enumerate_permutations(n):
            assert history_to_perm(perm_to_history(p)) == p


def test_foata_examples():
    assert str(foata(parse_cycles("(6)(5,8)(3)(2,7)(1,4)"))) == "6 5 8 3 2 7 1 4"
    assert str(foata(parse_cycles("(6)(4,8)(3,7)(2)(1,5)"))) == "6 4 8 3 7 2 1 5"
    assert foata(parse_cycles("(4)(3)(2)(1)")) == Permutation.parse("4321")


def test_foata_rejects_bad_cycles():
    with pytest.raises(ValueError):
        foata(parse_cycles("(1,4)(2,7)(3)(5,8)(6)"))  # increasing least elements
    with pytest.raises(ValueError):
        foata(((1, 2, 3),))  # not an involution
    with pytest.raises(ValueError):
        foata_of(Permutation.parse("231"))


def test_foata_inverse_examples():
    cycles = foata_inverse(Permutation.parse("65832714"))
    assert cycles == parse_cycles("(6)(5,8)(3)(2,7)(1,4)")
    assert foata_inverse(Permutation.parse("1")) == ((1,),)


def test_foata_inverse_rejects_and_names_pattern():
    with pytest.raises(ValueError) as err:
        foata_inverse(Permutation.parse("1423"))
    assert "pattern" in str(err.value)


def test_foata_roundtrip_over_class():
    vincular = (PatternSpec.parse("1_32"), PatternSpec.parse("1_23"))
    for n in range(7):
        for p in enumerate_class(n, vincular):
            assert foata(foata_inverse(p)) == p


def test_path_worked_examples():
    from motzkinperm.permutations import cycles_to_permutation

    assert str(involution_to_path(Permutation.parse("65382174"))) == "UUHUD1D1HD0"
    invol = cycles_to_permutation(parse_cycles("(6)(4,8)(3,7)(2)(1,5)"))
    assert str(involution_to_path(invol)) == "UHUUD2HD1D0"
    assert str(involution_to_path(identity(4))) == "HHHH"


def test_path_roundtrip():
    for n in range(8):
        for m in enumerate_labeled(n):
            assert involution_to_path(path_to_involution(m)) == m
        for p in enumerate_involutions(n):
            assert path_to_involution(involution_to_path(p)) == p


def test_triangle_commutes():
    for n in range(7):
        for p in enumerate_involutions(n):
            assert labeled_to_history(involution_to_path(p)) == perm_to_history(foata_of(p))


def test_motzkin_to_perm_examples():
    assert str(motzkin_to_perm(MotzkinWord("UUUDDUHDDUD"))) == "10 11 7 6 8 3 4 2 5 1 9"
    assert motzkin_to_perm(MotzkinWord("HHHH")) == Permutation.parse("4321")
    assert motzkin_to_perm(MotzkinWord("UD")) == Permutation.parse("12")


def test_motzkin_to_perm_inverts_history():
    patterns = (PatternSpec.parse("132"), PatternSpec.parse("_123"))
    for n in range(9):
        for w in enumerate_motzkin(n):
            p = motzkin_to_perm(w)
            assert avoids(p, patterns[0]) and avoids(p, patterns[1])
            h = perm_to_history(p)
            assert str(h.word) == str(w)
            assert not any(h.labels)


def test_window_table_is_total():
    assert len(CONSECUTIVE_OF_WINDOW) == 27
    assert set(CONSECUTIVE_OF_WINDOW) == {
        a + b + c for a in "UDH" for b in "UDH" for c in "UDH"
    }
    assert set(CONSECUTIVE_OF_WINDOW.values()) == {"123", "132", "213", "231", "312", "321"}


def test_window_counts_match_consecutive_occurrences():
    from motzkinperm.patterns import consecutive_occurrences

    for n in range(8):
        for p in restricted_involutions(n):
            counts = window_pattern_counts(involution_to_path(p).word)
            for name, count in counts.items():
                assert count == consecutive_occurrences(p, Permutation.parse(name))


def test_transport_examples():
    record = transport_statistics(identity(5))
    assert record.direct["inv"] == 0 and record.direct["fix"] == 5
    record = transport_statistics(Permutation.parse("2143"))
    assert record.direct["inv"] == 2
    assert record.via_path["inv"] == 2


def test_transport_rejects_non_members():
    with pytest.raises(ValueError):
        transport_statistics(Permutation.parse("312"))  # not an involution
    with pytest.raises(ValueError):
        transport_statistics(Permutation.parse("3412"))  # contains 3412


def test_transport_exhaustive():
    for n in range(8):
        for p in restricted_involutions(n):
            record = transport_statistics(p)
            assert record.direct == record.via_path


def test_ascents_match_weak_valleys():
    for n in range(8):
        lhs = sorted(asc_count(p) for p in restricted_involutions(n))
        rhs = sorted(named_statistic(w, "weak_valleys") for w in enumerate_motzkin(n))
        assert lhs == rhs


def test_check_diagram_passes():
    for n in range(6):
        report = check_diagram(n)
        assert report.ok and not report.failures


def test_check_diagram_reports_injected_fault():
    # a corrupted path map must be caught by the triangle check
    def broken(p):
        m = involution_to_path(p)
        if m.n == 4 and m.word == "UDUD":
            return LabeledMotzkinPath(MotzkinWord("UUDD"), (1, 0))
        return m

    report = check_diagram(4, path_map=broken)
    assert not report.ok
    assert any("commute" in f or "zero-label" in f for f in report.failures)
