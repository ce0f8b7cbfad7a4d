"""Bijections: frozen images, round-trips, and statistic transports."""

import pytest

from catschett.bijections import (
    eta,
    eta_inv,
    fz_history,
    fz_history_inv,
    gamma,
    gamma_inv,
    gamma_theta,
    lin_fu_phi,
    lin_fu_phi_inv,
    phi_cap,
    phi_cap_inv,
    phi_classic,
    phi_classic_inv,
    psi_cap,
    psi_cap_inv,
    psi_fz,
    psi_fz_inv,
    psi_kratt,
    psi_kratt_inv,
    tau,
    tau_inv,
    theta,
    theta_inv,
    upsilon,
    upsilon_inv,
    varsigma,
    varsigma_inv,
    vartheta,
    vartheta_inv,
    viennot_v,
    viennot_v_inv,
)
from catschett.objects.paths import (
    dyck_composition,
    hor_set,
    platform_multiset,
    ver_set,
    walk_pairs,
)
from catschett.objects.permutations import (
    all_permutations,
    avoiders,
    baxter_permutations,
    identity,
    inverse,
)
from catschett.objects.trees import binary_trees, left_chain_orders, plane_trees
from catschett.statistics import ascent_set, descent_set, left_peak_values

FIG_PERM_231 = (1, 4, 3, 2, 9, 5, 7, 6, 8)
FIG_PERM_321 = (2, 4, 5, 1, 3, 6, 8, 7, 9)
FIG_PERM_EXC = (1, 3, 4, 2, 7, 5, 9, 6, 8)
FIG_TREE = (None, (((None, None), ((None, None), ((None, (None, None)), None))), None))


def test_upsilon_frozen_image():
    assert upsilon(FIG_PERM_231) == FIG_TREE
    assert sorted(left_chain_orders(FIG_TREE)) == [1, 1, 2, 2, 3]
    assert upsilon((1,)) == (None, None)
    assert upsilon((2, 1)) == ((None, None), None)


def test_upsilon_round_trip():
    for n in range(8):
        for p in avoiders(n, (2, 3, 1)):
            assert upsilon_inv(upsilon(p)) == p


def test_theta_frozen_image():
    assert theta(FIG_PERM_231) == ("NEENNENE", "NEENENEN")
    assert theta((1,)) == ("", "")


def test_theta_round_trip_and_transport():
    for n in range(1, 8):
        for p in avoiders(n, (2, 3, 1)):
            mu, nu = theta(p)
            assert theta_inv((mu, nu)) == p
            assert hor_set(nu) == descent_set(p)
            assert ver_set(mu) == ascent_set(inverse(p))


def test_viennot_round_trip():
    for n in range(1, 8):
        images = set()
        for t in binary_trees(n):
            pair = viennot_v(t)
            assert viennot_v_inv(pair) == t
            images.add(pair)
        assert images == set(walk_pairs(n))


def test_phi_classic_round_trip():
    for n in range(8):
        for p in avoiders(n, (2, 3, 1)):
            assert phi_classic_inv(phi_classic(p)) == p


def test_tau_frozen_image():
    assert tau((None, None)) == "EN"


def test_tau_round_trip_and_platform_transport():
    for n in range(8):
        for t in binary_trees(n):
            w = tau(t)
            assert tau_inv(w) == t
            assert sorted(left_chain_orders(t)) == sorted(platform_multiset(w))


def test_psi_kratt_frozen_image():
    w = psi_kratt(FIG_PERM_321)
    assert w == "EEEENNENNNENEENNEN"
    assert sorted(platform_multiset(w)) == [1, 1, 1, 2, 4]
    assert dyck_composition(w) == (3, 4, 2)
    assert psi_kratt(identity(4)) == "ENENENEN"


def test_psi_kratt_round_trip():
    for n in range(9):
        for p in avoiders(n, (3, 2, 1)):
            assert psi_kratt_inv(psi_kratt(p)) == p


def test_lin_fu_frozen_image():
    assert lin_fu_phi(FIG_PERM_EXC) == "HTTHUDUD"
    assert lin_fu_phi((1,)) == ""


def test_lin_fu_round_trip():
    for n in range(1, 9):
        for p in avoiders(n, (3, 2, 1)):
            assert lin_fu_phi_inv(lin_fu_phi(p)) == p


def test_varsigma_round_trip():
    for n in range(1, 8):
        for p in avoiders(n, (3, 2, 1)):
            word = lin_fu_phi(p)
            assert varsigma_inv(varsigma(word)) == word


def test_phi_cap_transport():
    mu, nu = phi_cap(FIG_PERM_EXC)
    assert sorted(hor_set(nu)) == [2, 3, 5, 7]
    assert sorted(ver_set(mu)) == [1, 4, 5, 7]
    assert phi_cap_inv((mu, nu)) == FIG_PERM_EXC
    mu_id, nu_id = phi_cap(identity(5))
    assert hor_set(nu_id) == frozenset()


def test_eta_frozen_image():
    assert eta((4, 1, 2, 7, 3, 9, 5, 6, 8, 12, 13, 10, 11)) == \
        (4, 3, 2, 7, 6, 9, 8, 5, 1, 12, 13, 11, 10)
    assert eta(identity(5)) == identity(5)


def test_eta_round_trip():
    for n in range(9):
        for p in avoiders(n, (3, 2, 1)):
            q = eta(p)
            assert eta_inv(q) == p


def test_fz_frozen_image():
    assert fz_history((5, 2, 4, 1, 3, 9, 7, 6, 8)) == \
        ("UUHDDUTHD", (0, 0, 2, 1, 0, 0, 0, 1, 0))
    word, weights = fz_history(identity(5))
    assert word == "HHHHH"
    assert weights == (0, 0, 0, 0, 0)


def test_fz_round_trip_on_all_permutations():
    for n in range(7):
        for p in all_permutations(n):
            word, weights = fz_history(p)
            assert fz_history_inv(word, weights) == p


def test_psi_fz_frozen_image():
    assert psi_fz((4, 3, 2, 7, 6, 8, 9, 5, 1)) == (9, 5, 1, 4, 3, 2, 7, 6, 8)


def test_psi_fz_round_trip_and_left_peaks():
    for n in range(9):
        for p in avoiders(n, (3, 1, 2)):
            q = psi_fz(p)
            assert psi_fz_inv(q) == p
            assert left_peak_values(q) == left_peak_values(p)


def test_psi_cap_preserves_left_peaks():
    for n in range(8):
        for p in avoiders(n, (3, 2, 1)):
            q = psi_cap(p)
            assert left_peak_values(q) == left_peak_values(p)
            assert psi_cap_inv(q) == p


def test_vartheta_frozen_images():
    assert vartheta(((),)) == (1,)
    assert vartheta((((),),)) == (2, 1)
    assert vartheta(((), ())) == (1, 2)
    assert vartheta(((((), ()),))) == (3, 1, 2)


def test_vartheta_round_trip():
    for n in range(8):
        for t in plane_trees(n):
            assert vartheta_inv(vartheta(t)) == t


def test_gamma_injective_small():
    for n in range(1, 7):
        triples = [gamma(b) for b in baxter_permutations(n)]
        assert len(set(triples)) == len(triples)
        for b in baxter_permutations(n):
            assert gamma_inv(gamma(b)) == b


def test_gamma_rejects_non_baxter():
    with pytest.raises(ValueError):
        gamma((2, 4, 1, 3))


def test_gamma_theta_contract():
    from catschett.statistics import modified_descent_tops
    for n in range(1, 7):
        for p in avoiders(n, (2, 3, 1)):
            q = gamma_theta(p)
            assert descent_set(q) == descent_set(p)
            assert modified_descent_tops(inverse(q)) == descent_set(inverse(p))
