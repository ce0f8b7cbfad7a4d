"""Catalan-Schett and classical Schett polynomials computed by independent routes."""

from __future__ import annotations

from catschett.objects.permutations import all_permutations, avoiders, inverse
from catschett.objects.trees import (
    binary_trees,
    increasing_tree_shape,
    left_chain_orders,
    right_chain_orders,
)
from catschett.serieslab.laurent import LaurentPoly2
from catschett.statistics import mne, mnw, oar, odr


def _odd_chain_counts(t) -> tuple[int, int]:
    olc = sum(1 for k in left_chain_orders(t) if k % 2)
    orc = sum(1 for k in right_chain_orders(t) if k % 2)
    return olc, orc


def catalan_schett_trees(n: int) -> LaurentPoly2:
    """Sum x^olc y^orc over binary trees with n nodes."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms: dict[tuple[int, int], int] = {}
    for t in binary_trees(n):
        key = _odd_chain_counts(t)
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly2(terms)


def catalan_schett_perm231(n: int) -> LaurentPoly2:
    """Sum x^odr(p) y^oar(inverse p) over 231-avoiders of [n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms: dict[tuple[int, int], int] = {}
    for p in avoiders(n, (2, 3, 1)):
        key = (odr(p), oar(inverse(p)))
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly2(terms)


def catalan_schett_perm321(n: int) -> LaurentPoly2:
    """Sum x^(n-2 mne(p)) y^(n-2 mnw(inverse p)) over 321-avoiders of [n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms: dict[tuple[int, int], int] = {}
    for p in avoiders(n, (3, 2, 1)):
        key = (n - 2 * mne(p), n - 2 * mnw(inverse(p)))
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly2(terms)


_ROUTES = {
    "trees": catalan_schett_trees,
    "perm231": catalan_schett_perm231,
    "perm321": catalan_schett_perm321,
}


def catalan_schett(n: int, route: str = "trees") -> LaurentPoly2:
    """Compute the degree-n Catalan-Schett polynomial by the named route."""
    if route not in _ROUTES:
        raise ValueError(f"unknown route: {route!r} (expected one of {sorted(_ROUTES)})")
    return _ROUTES[route](n)


def schett_classical(n: int) -> LaurentPoly2:
    """Sum x^olc y^orc over shapes of increasing binary trees on [n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms: dict[tuple[int, int], int] = {}
    for p in all_permutations(n):
        key = _odd_chain_counts(increasing_tree_shape(p))
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly2(terms)
