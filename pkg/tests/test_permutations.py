import math

import pytest
from hypothesis import given, strategies as st

from motzkinperm.errors import BoundExceededError
from motzkinperm.permutations import (
    Permutation,
    ascending_runs,
    coinv_count,
    cycles_to_permutation,
    des_count,
    enumerate_involutions,
    enumerate_permutations,
    fix_count,
    format_cycles,
    identity,
    inv_count,
    involution_number,
    is_involution,
    parse_cycles,
    reverse_complement,
    run_anatomy,
    standard_cycles,
    validate_standard_cycles,
)

perms = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


def test_parse_and_str():
    p = Permutation.parse("8 2 6 9 1 3 5 4 7")
    assert str(p) == "8 2 6 9 1 3 5 4 7"
    assert Permutation.parse("826913547") == p
    assert Permutation.parse("") == Permutation(())


def test_validation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([0, 1])
    with pytest.raises(ValueError):
        Permutation.parse("abc")


def test_inv_count():
    assert inv_count(Permutation.parse("123")) == 0
    assert inv_count(Permutation.parse("21")) == 1
    p = Permutation.parse("65832714")
    assert inv_count(p) + coinv_count(p) == math.comb(8, 2)


def test_coinv_count():
    assert coinv_count(Permutation.parse("123")) == 3
    assert coinv_count(Permutation.parse("321")) == 0


@given(perms)
def test_inv_plus_coinv(word):
    p = Permutation(word)
    assert inv_count(p) + coinv_count(p) == math.comb(len(p), 2)


def test_des_count():
    assert des_count(Permutation.parse("1234")) == 0
    assert des_count(Permutation.parse("4321")) == 3
    assert des_count(Permutation.parse("826913547")) == 3


def test_fix_count():
    assert fix_count(identity(5)) == 5
    assert fix_count(Permutation.parse("21")) == 0
    assert fix_count(Permutation.parse("65382174")) == 2


def test_reverse_complement():
    assert reverse_complement(Permutation.parse("1")) == Permutation.parse("1")
    assert reverse_complement(Permutation.parse("123")) == Permutation.parse("123")


@given(perms)
def test_reverse_complement_involutive(word):
    p = Permutation(word)
    assert reverse_complement(reverse_complement(p)) == p


def test_reverse_complement_preserves_fix_on_involutions():
    for n in range(9):
        for p in enumerate_involutions(n):
            q = reverse_complement(p)
            assert is_involution(q)
            assert fix_count(q) == fix_count(p)


def test_is_involution():
    assert is_involution(Permutation.parse("123"))
    assert not is_involution(Permutation.parse("231"))
    assert is_involution(Permutation.parse("47318625"))


def test_standard_cycles_examples():
    assert format_cycles(standard_cycles(Permutation.parse("47318625"))) == "(6)(5,8)(3)(2,7)(1,4)"
    assert format_cycles(standard_cycles(Permutation.parse("65382174"))) == "(7)(4,8)(3)(2,5)(1,6)"
    assert format_cycles(standard_cycles(identity(3))) == "(3)(2)(1)"


def test_cycles_roundtrip_on_involutions():
    for n in range(9):
        for p in enumerate_involutions(n):
            cycles = standard_cycles(p)
            validate_standard_cycles(cycles)
            assert cycles_to_permutation(cycles) == p


def test_parse_cycles_roundtrip():
    text = "(6)(5,8)(3)(2,7)(1,4)"
    assert format_cycles(parse_cycles(text)) == text
    assert parse_cycles("") == ()


def test_validate_standard_cycles_rejects():
    with pytest.raises(ValueError):
        validate_standard_cycles(((2, 1),))  # not least-first
    with pytest.raises(ValueError):
        validate_standard_cycles(((1, 2), (3,)))  # increasing leasts
    with pytest.raises(ValueError):
        validate_standard_cycles(((1, 3),))  # not a partition of 1..n


def test_run_anatomy_examples():
    assert ascending_runs(Permutation.parse("346512")) == ((3, 4, 6), (5,), (1, 2))
    assert ascending_runs(Permutation.parse("826913547")) == ((8,), (2, 6, 9), (1, 3, 5), (4, 7))
    anatomy = run_anatomy(identity(5))
    assert anatomy.runs == ((1, 2, 3, 4, 5),)
    assert anatomy.roles == ("head", "boarder", "boarder", "boarder", "tail")


@given(perms)
def test_run_roles_counts(word):
    p = Permutation(word)
    anatomy = run_anatomy(p)
    long_runs = sum(1 for r in anatomy.runs if len(r) >= 2)
    singletons = sum(1 for r in anatomy.runs if len(r) == 1)
    assert anatomy.roles.count("head") == long_runs
    assert anatomy.roles.count("tail") == long_runs
    assert anatomy.roles.count("head-tail") == singletons
    assert sum(len(r) for r in anatomy.runs) == len(p)


def test_enumeration_counts():
    assert list(enumerate_permutations(0)) == [Permutation(())]
    assert sum(1 for _ in enumerate_permutations(4)) == 24
    assert sum(1 for _ in enumerate_involutions(4)) == 10
    assert [involution_number(n) for n in range(9)] == [1, 1, 2, 4, 10, 26, 76, 232, 764]


def test_enumeration_bound_refusal():
    with pytest.raises(BoundExceededError):
        next(enumerate_permutations(13))
    with pytest.raises(BoundExceededError):
        next(enumerate_involutions(9, bound=8))
