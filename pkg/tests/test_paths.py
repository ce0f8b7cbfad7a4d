"""Lattice-path object layer: Dyck paths, walks, Motzkin paths, histories."""

import math

import pytest

from catschett.objects.permutations import catalan
from catschett.objects.paths import (
    ascending_step_runs,
    dyck_composition,
    dyck_paths,
    east_heights,
    is_dyck_path,
    is_motzkin2_path,
    is_walk_pair,
    is_walk_triple,
    is_zigzag,
    laguerre_histories,
    motzkin2_paths,
    parse_laguerre_history,
    parse_walk_pair,
    parse_walk_triple,
    platform_multiset,
    serialize_laguerre_history,
    serialize_walk_pair,
    serialize_walk_triple,
    walk_from_positions,
    walk_pairs,
)


def test_dyck_counts():
    for n in range(10):
        assert sum(1 for _ in dyck_paths(n)) == catalan(n)


def test_dyck_membership():
    assert is_dyck_path("EN")
    assert is_dyck_path("")
    assert not is_dyck_path("NE")
    assert not is_dyck_path("EE")
    assert not is_dyck_path("ENENE")


def test_platform_multiset_spot_values():
    assert sorted(platform_multiset("EEEENNENNNENEENNEN")) == [1, 1, 1, 2, 4]
    assert platform_multiset("ENENEN") == (1, 1, 1)
    assert platform_multiset("") == ()


def test_composition_spot_values():
    assert dyck_composition("EEEENNENNNENEENNEN") == (3, 4, 2)
    assert dyck_composition("EENNEENN") == (1, 2, 1)
    assert dyck_composition("ENENEN") == (3,)
    assert dyck_composition("ENEN") == (2,)
    assert dyck_composition("") == ()


def test_composition_parts_sum_to_size():
    for n in range(9):
        for w in dyck_paths(n):
            comp = dyck_composition(w)
            assert sum(comp) == n
            assert all(part >= 1 for part in comp)


def test_zigzag():
    assert is_zigzag("ENEN")
    assert not is_zigzag("EENN")


def test_east_heights_and_runs():
    assert east_heights("EENN") == (0, 0)
    assert east_heights("ENEEN") == (0, 1, 1)
    assert ascending_step_runs("EENN") == (2,)
    assert ascending_step_runs("ENEEN") == (1, 2)


def test_walk_pair_counts():
    assert sum(1 for _ in walk_pairs(1)) == 1
    for n in range(1, 9):
        assert sum(1 for _ in walk_pairs(n)) == catalan(n)


def test_walk_pair_membership():
    for n in range(1, 7):
        for mu, nu in walk_pairs(n):
            assert is_walk_pair(mu, nu)
    assert not is_walk_pair("E", "N")


def test_walk_from_positions():
    assert walk_from_positions({1, 3}, 4) == "ENEN"
    assert walk_from_positions(set(), 0) == ""


def test_walk_pair_serialization():
    for n in range(1, 6):
        for pair in walk_pairs(n):
            assert parse_walk_pair(serialize_walk_pair(pair)) == pair
    with pytest.raises(ValueError):
        parse_walk_pair("EN")


def test_walk_triple_serialization():
    triple = ("EENE", "EEEN", "EEEN")
    text = serialize_walk_triple(triple)
    assert parse_walk_triple(text) == triple
    assert is_walk_triple("", "", "")


def test_motzkin2_counts():
    # two-colored Motzkin paths of length n-1 are counted by catalan(n)
    for n in range(1, 9):
        assert sum(1 for _ in motzkin2_paths(n - 1)) == catalan(n)


def test_motzkin2_membership():
    assert is_motzkin2_path("HTTHUDUD")
    assert is_motzkin2_path("")
    assert not is_motzkin2_path("DU")
    assert not is_motzkin2_path("U")


def test_laguerre_counts():
    assert sum(1 for _ in laguerre_histories(4)) == 24
    for n in range(7):
        assert sum(1 for _ in laguerre_histories(n)) == math.factorial(n)


def test_laguerre_serialization():
    for h in laguerre_histories(4):
        assert parse_laguerre_history(serialize_laguerre_history(h)) == h
