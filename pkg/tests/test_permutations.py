"""Permutation object layer: counting, avoidance, decompositions, serialization."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catschett.objects.permutations import (
    avoiders,
    avoids,
    baxter_permutations,
    catalan,
    check_permutation,
    complement,
    contains,
    first_letter_compose,
    first_letter_decompose,
    greatest_letter_decompose,
    identity,
    inverse,
    is_baxter,
    parse_permutation,
    refined_catalan,
    reverse,
    reverse_complement,
    serialize_permutation,
    standardize,
)

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012)

PATTERNS = ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))

perms = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(tuple(range(1, n + 1))).map(tuple))


def test_catalan_values():
    for n, c in enumerate(CATALAN):
        assert catalan(n) == c


def test_refined_catalan_spot_values():
    assert refined_catalan(3, 1) == 4
    for n in range(9):
        assert refined_catalan(n, 0) == 1


def test_refined_catalan_rows_sum_to_catalan():
    for n in range(10):
        assert sum(refined_catalan(n, k) for k in range(n // 2 + 1)) == catalan(n)


def test_avoiders_of_size_three():
    assert set(avoiders(3, (2, 3, 1))) == {
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2), (3, 2, 1)}


def test_avoiders_empty_size():
    for pattern in PATTERNS:
        assert list(avoiders(0, pattern)) == [()]


@pytest.mark.parametrize("pattern", PATTERNS)
def test_avoider_counts_are_catalan(pattern):
    for n in range(9):
        assert sum(1 for _ in avoiders(n, pattern)) == catalan(n)


def test_avoiders_match_filter_oracle():
    for pattern in PATTERNS:
        for n in range(7):
            from itertools import permutations as iperm
            brute = sorted(p for p in iperm(range(1, n + 1)) if not contains(p, pattern))
            assert sorted(avoiders(n, pattern)) == brute


def test_avoidance_spot_values():
    assert avoids((1, 4, 3, 2, 9, 5, 7, 6, 8), (2, 3, 1))
    assert not avoids((2, 3, 1), (2, 3, 1))
    assert avoids((2, 4, 5, 1, 3, 6, 8, 7, 9), (3, 2, 1))


def test_baxter_spot_values():
    assert not is_baxter((2, 4, 1, 3))
    assert is_baxter((1,))
    for n in range(7):
        for p in avoiders(n, (2, 3, 1)):
            assert is_baxter(p)


def test_baxter_counts():
    expected = (1, 2, 6, 22, 92, 422, 2074)
    for n, b in enumerate(expected, start=1):
        assert sum(1 for _ in baxter_permutations(n)) == b


def test_inverse_spot_values():
    assert inverse(()) == ()
    assert inverse((2, 1)) == (2, 1)
    assert inverse(identity(5)) == identity(5)


@given(perms)
def test_inverse_is_an_involution(p):
    q = inverse(p)
    assert inverse(q) == p
    assert tuple(p[q[i] - 1] for i in range(len(p))) == identity(len(p))


def test_reverse_complement_spot_values():
    assert reverse_complement((1, 3, 2)) == (2, 1, 3)
    assert reverse_complement(identity(6)) == identity(6)


@given(perms)
def test_reverse_complement_involutive_and_preserves_321(p):
    assert reverse_complement(reverse_complement(p)) == p
    if avoids(p, (3, 2, 1)):
        assert avoids(reverse_complement(p), (3, 2, 1))


def test_reverse_and_complement():
    assert reverse((1, 3, 2)) == (2, 3, 1)
    assert complement((1, 3, 2)) == (3, 1, 2)


def test_standardize():
    assert standardize((4, 9, 2)) == (2, 3, 1)
    assert standardize(()) == ()


def test_first_letter_decomposition():
    assert first_letter_decompose((3, 1, 2, 5, 4, 7, 6)) == (3, (1, 2), (2, 1, 4, 3))
    assert first_letter_decompose((1,)) == (1, (), ())
    assert first_letter_decompose((3, 1, 2)) == (3, (1, 2), ())


def test_first_letter_round_trip():
    for n in range(1, 8):
        for p in avoiders(n, (2, 3, 1)):
            assert first_letter_compose(*first_letter_decompose(p)) == p


def test_greatest_letter_decomposition():
    assert greatest_letter_decompose((1, 3, 2)) == ((1,), 3, (1,))
    assert greatest_letter_decompose((3, 1, 2)) == ((), 3, (1, 2))
    assert greatest_letter_decompose((1, 2, 3)) == ((1, 2), 3, ())


def test_serialization_round_trip():
    for n in range(6):
        for p in avoiders(n, (3, 2, 1)):
            assert parse_permutation(serialize_permutation(p)) == p


def test_parse_rejects_non_permutations():
    with pytest.raises(ValueError):
        parse_permutation("1 1 2")
    with pytest.raises(ValueError):
        parse_permutation("1 3")
    with pytest.raises(ValueError, match="column 2"):
        parse_permutation("3 x 1")


def test_check_permutation():
    assert check_permutation([2, 1]) == (2, 1)
    with pytest.raises(ValueError):
        check_permutation([0, 1])
