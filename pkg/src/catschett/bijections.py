"""Bijections between pattern-restricted permutations, trees, paths, and histories."""

from __future__ import annotations

from functools import lru_cache

from catschett.objects.paths import (
    east_heights,
    is_dyck_path,
    is_laguerre_history,
    is_motzkin2_path,
    is_walk_pair,
    motzkin2_heights,
    walk_from_positions,
)
from catschett.objects.permutations import (
    Perm,
    all_permutations,
    avoiders,
    avoids,
    check_permutation,
    greatest_letter_decompose,
    inverse,
    is_baxter,
)
from catschett.objects.trees import BinaryTree, PlaneTree, plane_node_count
from catschett.statistics import (
    descent_bottoms,
    descent_set,
    modified_descent_tops,
)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


# ---------- root surgery on binary trees ----------

def star_transform(t: BinaryTree) -> BinaryTree:
    """Move the right branch of the root's left child up to the root."""
    _require(t is not None and t[0] is not None and t[1] is None,
             "root must have a left child and no right branch")
    left = t[0]
    return ((left[0], None), left[1])


def star_inverse(t: BinaryTree) -> BinaryTree:
    """Push the right branch of the root back under its left child."""
    _require(t is not None and t[0] is not None and t[0][1] is None,
             "root's left child must have no right branch")
    return ((t[0][0], t[1]), None)


# ---------- 231-avoiders and binary trees, run-transporting ----------

def upsilon(p: Perm) -> BinaryTree:
    """Map a 231-avoider to a binary tree carrying runs onto chains."""
    check_permutation(p)
    _require(avoids(p, (2, 3, 1)), f"not 231-avoiding: {p}")
    return _upsilon(p)


def _upsilon(p: Perm) -> BinaryTree:
    if not p:
        return None
    k = p[0]
    low = p[1:k]
    high = tuple(v - k for v in p[k:])
    if k == 1:
        return (None, _upsilon(high))
    ul, ur = _upsilon(low)
    return ((ul, _upsilon(high)), ur)


def upsilon_inv(t: BinaryTree) -> Perm:
    """Invert the run-transporting tree map."""
    return _upsilon_inv(t)


def _upsilon_inv(t: BinaryTree) -> Perm:
    if t is None:
        return ()
    if t[0] is None:
        rest = _upsilon_inv(t[1])
        return (1,) + tuple(v + 1 for v in rest)
    (ul, mid), ur = t
    low = _upsilon_inv((ul, ur))
    high = _upsilon_inv(mid)
    k = len(low) + 1
    return (k,) + low + tuple(v + k for v in high)


# ---------- 231-avoiders and binary trees, greatest-letter recursion ----------

def phi_classic(p: Perm) -> BinaryTree:
    """Map a 231-avoider to a binary tree by splitting at the greatest letter."""
    check_permutation(p)
    _require(avoids(p, (2, 3, 1)), f"not 231-avoiding: {p}")
    return _phi_classic(p)


def _phi_classic(p: Perm) -> BinaryTree:
    if not p:
        return None
    alpha, _, beta = greatest_letter_decompose(p)
    return (_phi_classic(alpha), _phi_classic(beta))


def phi_classic_inv(t: BinaryTree) -> Perm:
    """Invert the greatest-letter tree map."""
    if t is None:
        return ()
    alpha = phi_classic_inv(t[0])
    beta = phi_classic_inv(t[1])
    a = len(alpha)
    return alpha + (a + len(beta) + 1,) + tuple(v + a for v in beta)


# ---------- binary trees and dominated walk pairs ----------

def viennot_v(t: BinaryTree) -> tuple[str, str]:
    """Map a binary tree to a dominated walk pair via second-visit edge labels."""
    mu, nu = _v_words(t)
    return "".join(mu), "".join(nu)


def _v_words(t: BinaryTree) -> tuple[list[str], list[str]]:
    if t is None:
        return [], []
    a, b = t
    mu_a, nu_a = _v_words(a)
    mu_b, nu_b = _v_words(b)
    mu = mu_a + (["N"] if a is not None else []) + mu_b + (["E"] if b is not None else [])
    nu = nu_a + (["N"] if a is not None else []) + (["E"] if b is not None else []) + nu_b
    return mu, nu


def viennot_v_inv(pair: tuple[str, str]) -> BinaryTree:
    """Invert the walk-pair tree map."""
    mu, nu = pair
    _require(is_walk_pair(mu, nu), f"not a dominated walk pair: {pair}")
    tree = _v_parse(mu, nu)
    _require(tree is not None, f"walk pair has no tree preimage: {pair}")
    return tree


def _v_parse(mu: str, nu: str) -> BinaryTree:
    # a successful parse mirrors the forward recursion, so it is the unique preimage;
    # dominance zeros only propose split points and failures backtrack
    m = len(mu)
    if m == 0:
        return (None, None)
    if mu[-1] == "N":
        if nu[-1] != "N":
            return None
        sub = _v_parse(mu[:-1], nu[:-1])
        return None if sub is None else (sub, None)
    d = 0
    zeros = [0]
    for q in range(1, m):
        d += (nu[q - 1] == "E") - (mu[q - 1] == "E")
        if d == 0:
            zeros.append(q)
    for q in reversed(zeros):
        if q == 0:
            if nu[0] != "E":
                continue
            sub = _v_parse(mu[:-1], nu[1:])
            if sub is not None:
                return (None, sub)
            continue
        if mu[q - 1] != "N" or nu[q - 1] != "N" or nu[q] != "E":
            continue
        left = _v_parse(mu[:q - 1], nu[:q - 1])
        if left is None:
            continue
        right = _v_parse(mu[q:m - 1], nu[q + 1:])
        if right is None:
            continue
        return (left, right)
    return None


def theta(p: Perm) -> tuple[str, str]:
    """Map a 231-avoider to a dominated walk pair through the greatest-letter tree."""
    return viennot_v(phi_classic(p))


def theta_inv(pair: tuple[str, str]) -> Perm:
    """Invert the walk-pair map on 231-avoiders."""
    return phi_classic_inv(viennot_v_inv(pair))


# ---------- binary trees and Dyck paths ----------

def tau(t: BinaryTree) -> str:
    """Map a binary tree to a Dyck path by east-left-north-right reading."""
    if t is None:
        return ""
    return "E" + tau(t[0]) + "N" + tau(t[1])


def tau_inv(word: str) -> BinaryTree:
    """Invert the east-left-north-right reading."""
    _require(is_dyck_path(word), f"not a Dyck path: {word!r}")
    tree, pos = _tau_parse(word, 0)
    _require(pos == len(word), f"trailing steps at {pos}: {word!r}")
    return tree


def _tau_parse(word: str, pos: int) -> tuple[BinaryTree, int]:
    if pos >= len(word) or word[pos] == "N":
        return None, pos
    left, pos = _tau_parse(word, pos + 1)
    # the matching north step closes the left subtree
    right, pos = _tau_parse(word, pos + 1)
    return (left, right), pos


# ---------- 321-avoiders and Dyck paths ----------

def psi_kratt(p: Perm) -> str:
    """Map a 321-avoider to the Dyck path of its capped suffix-minimum heights."""
    check_permutation(p)
    _require(avoids(p, (3, 2, 1)), f"not 321-avoiding: {p}")
    n = len(p)
    heights = []
    sufmin = n + 1
    for i in range(n, 0, -1):
        sufmin = min(sufmin, p[i - 1])
        heights.append(min(i - 1, sufmin - 1))
    heights.reverse()
    word = []
    prev = 0
    for g in heights:
        word.append("N" * (g - prev))
        word.append("E")
        prev = g
    word.append("N" * (n - prev))
    return "".join(word)


def psi_kratt_inv(word: str) -> Perm:
    """Invert the capped-heights map; run-final east steps carry the forced low values."""
    _require(is_dyck_path(word), f"not a Dyck path: {word!r}")
    g = east_heights(word)
    n = len(g)
    final = [i == n - 1 or g[i + 1] > g[i] for i in range(n)]
    p = [0] * n
    taken = [False] * (n + 1)
    for i in range(n):
        if final[i]:
            v = g[i] + 1
            _require(not taken[v], f"height clash at east step {i + 1}: {word!r}")
            p[i] = v
            taken[v] = True
    free = [v for v in range(1, n + 1) if not taken[v]]
    it = iter(free)
    for i in range(n):
        if not final[i]:
            p[i] = next(it)
    return check_permutation(p)


# ---------- 321-avoiders and dominated walk pairs, excedance-transporting ----------

_LETTER_FROM_FLAGS = {(1, 0): "U", (1, 1): "T", (0, 1): "D", (0, 0): "H"}


def lin_fu_phi(p: Perm) -> str:
    """Map a 321-avoider to a two-flavored Motzkin path via excedance flags."""
    check_permutation(p)
    _require(avoids(p, (3, 2, 1)), f"not 321-avoiding: {p}")
    n = len(p)
    q = inverse(p)
    pos = [1 if p[i - 1] > i else 0 for i in range(1, n + 1)]
    val = [1 if i > q[i - 1] else 0 for i in range(1, n + 1)]
    word = "".join(_LETTER_FROM_FLAGS[(pos[i - 1], val[i])] for i in range(1, n))
    return word


def lin_fu_phi_inv(word: str) -> Perm:
    """Invert the excedance-flag map by filling flagged slots increasingly."""
    _require(is_motzkin2_path(word), f"not a two-flavored Motzkin path: {word!r}")
    n = len(word) + 1
    pos = [0] * (n + 1)
    val = [0] * (n + 1)
    for i, ch in enumerate(word, start=1):
        pos[i] = 1 if ch in "UT" else 0
        val[i + 1] = 1 if ch in "TD" else 0
    exc_positions = [i for i in range(1, n + 1) if pos[i]]
    exc_values = [i for i in range(1, n + 1) if val[i]]
    _require(len(exc_positions) == len(exc_values), f"unbalanced flags: {word!r}")
    p = [0] * n
    for i, v in zip(exc_positions, exc_values):
        p[i - 1] = v
    rest_positions = [i for i in range(1, n + 1) if not pos[i]]
    rest_values = [v for v in range(1, n + 1) if not val[v]]
    for i, v in zip(rest_positions, rest_values):
        p[i - 1] = v
    result = check_permutation(p)
    _require(avoids(result, (3, 2, 1)), f"flags do not code a 321-avoider: {word!r}")
    return result


_PAIR_FROM_LETTER = {"U": ("N", "E"), "D": ("E", "N"), "H": ("N", "N"), "T": ("E", "E")}


def varsigma(word: str) -> tuple[str, str]:
    """Rewrite a two-flavored Motzkin path as a dominated walk pair."""
    _require(is_motzkin2_path(word), f"not a two-flavored Motzkin path: {word!r}")
    mu = "".join(_PAIR_FROM_LETTER[ch][0] for ch in word)
    nu = "".join(_PAIR_FROM_LETTER[ch][1] for ch in word)
    return mu, nu


_LETTER_FROM_PAIR = {v: k for k, v in _PAIR_FROM_LETTER.items()}


def varsigma_inv(pair: tuple[str, str]) -> str:
    """Rewrite a dominated walk pair as a two-flavored Motzkin path."""
    mu, nu = pair
    _require(is_walk_pair(mu, nu), f"not a dominated walk pair: {pair}")
    return "".join(_LETTER_FROM_PAIR[(a, b)] for a, b in zip(mu, nu))


def phi_cap(p: Perm) -> tuple[str, str]:
    """Map a 321-avoider to a dominated walk pair carrying excedances to east sets."""
    return varsigma(lin_fu_phi(p))


def phi_cap_inv(pair: tuple[str, str]) -> Perm:
    """Invert the excedance-transporting walk-pair map."""
    return lin_fu_phi_inv(varsigma_inv(pair))


# ---------- 321-avoiders and 312-avoiders ----------

def eta(p: Perm) -> Perm:
    """Map a 321-avoider to a 312-avoider, fixing left-to-right maxima."""
    check_permutation(p)
    _require(avoids(p, (3, 2, 1)), f"not 321-avoiding: {p}")
    return _simion_schmidt(p, pick_largest=True)


def eta_inv(p: Perm) -> Perm:
    """Invert the left-to-right-maxima rewriting."""
    check_permutation(p)
    _require(avoids(p, (3, 1, 2)), f"not 312-avoiding: {p}")
    return _simion_schmidt(p, pick_largest=False)


def _simion_schmidt(p: Perm, pick_largest: bool) -> Perm:
    n = len(p)
    used = [False] * (n + 1)
    out = [0] * n
    cur_max = 0
    for i, v in enumerate(p):
        if v > cur_max:
            cur_max = v
            out[i] = v
            used[v] = True
    for i, v in enumerate(p):
        if out[i]:
            continue
        running_max = max(p[:i + 1])
        choices = range(running_max - 1, 0, -1) if pick_largest else range(1, running_max)
        for c in choices:
            if not used[c]:
                out[i] = c
                used[c] = True
                break
        else:
            raise ValueError(f"no available value below {running_max} at position {i + 1}")
    return check_permutation(out)


# ---------- permutations and weighted histories ----------

def fz_history(p: Perm) -> tuple[str, tuple[int, ...]]:
    """Map a permutation to its valley-peak history with nesting weights."""
    check_permutation(p)
    n = len(p)
    q = inverse(p)
    word = []
    weights = []
    for i in range(1, n + 1):
        j = q[i - 1]
        left = p[j - 2] if j >= 2 else 0
        right = p[j] if j <= n - 1 else n + 1
        if left > i < right:
            ch = "U"
        elif left < i > right:
            ch = "D"
        elif left < i < right:
            ch = "H"
        else:
            ch = "T"
        word.append(ch)
        weights.append(sum(1 for k in range(1, j - 1) if p[k] < i < p[k - 1]))
    return "".join(word), tuple(weights)


def fz_history_inv(word: str, weights) -> Perm:
    """Rebuild a permutation from its valley-peak history by slot insertion."""
    weights = tuple(weights)
    _require(is_laguerre_history(word, weights),
             f"not a valid weighted history: {word!r} {weights}")
    n = len(word)
    slots: list[int | None] = [None]
    for i in range(1, n + 1):
        ch = word[i - 1]
        w = weights[i - 1]
        gap_positions = [k for k, s in enumerate(slots) if s is None]
        at = gap_positions[w]
        if ch == "U":
            slots[at: at + 1] = [None, i, None]
        elif ch == "H":
            slots[at: at + 1] = [i, None]
        elif ch == "T":
            slots[at: at + 1] = [None, i]
        else:
            slots[at: at + 1] = [i]
    _require(slots.count(None) == 1, f"slot bookkeeping failed: {word!r}")
    return check_permutation(tuple(s for s in slots if s is not None))


def _fz_weight_caps(word: str) -> tuple[int, ...]:
    heights = motzkin2_heights(word)
    return tuple(h if ch in "UH" else h - 1 for ch, h in zip(word, heights))


def psi_fz(p: Perm) -> Perm:
    """Map a 312-avoider to the 231-avoider with the same valley-peak word."""
    check_permutation(p)
    _require(avoids(p, (3, 1, 2)), f"not 312-avoiding: {p}")
    word, weights = fz_history(p)
    _require(all(w == 0 for w in weights), f"unexpected nesting weights: {p}")
    return fz_history_inv(word, _fz_weight_caps(word))


def psi_fz_inv(p: Perm) -> Perm:
    """Invert the valley-peak-word rewriting toward 312-avoiders."""
    check_permutation(p)
    _require(avoids(p, (2, 3, 1)), f"not 231-avoiding: {p}")
    word, weights = fz_history(p)
    _require(weights == _fz_weight_caps(word), f"unexpected nesting weights: {p}")
    return fz_history_inv(word, (0,) * len(word))


def psi_cap(p: Perm) -> Perm:
    """Map a 321-avoider to a 231-avoider preserving left peak values."""
    return psi_fz(eta(p))


def psi_cap_inv(p: Perm) -> Perm:
    """Invert the left-peak-preserving map."""
    return eta_inv(psi_fz_inv(p))


# ---------- plane trees and 231-avoiders ----------

def vartheta(t: PlaneTree) -> Perm:
    """Map a plane tree to a 231-avoider by splitting at the first leaf."""
    return _vartheta(t)


def _vartheta(t: PlaneTree) -> Perm:
    if t == ():
        return ()
    leaf_slots = [idx for idx, c in enumerate(t) if c == ()]
    if leaf_slots:
        w = leaf_slots[0]
        t_low = tuple(t[:w])
        t_high = tuple(t[w + 1:])
    else:
        # walk first children down to the first leaf; merge its neighborhood
        spine = []
        node = t
        while node[0] != ():
            spine.append(node)
            node = node[0]
        y = node
        between = spine[1:]
        t_low = tuple(t[1:]) + ((),) + tuple(y[1:])
        t_high = tuple(tuple(u[1:]) for u in between)
    low = _vartheta(t_low)
    high = _vartheta(t_high)
    k = plane_node_count(t_low)
    return (k,) + low + tuple(v + k for v in high)


def vartheta_inv(p: Perm) -> PlaneTree:
    """Invert the first-leaf splitting map."""
    check_permutation(p)
    _require(avoids(p, (2, 3, 1)), f"not 231-avoiding: {p}")
    return _vartheta_inv(p)


def _vartheta_inv(p: Perm) -> PlaneTree:
    if not p:
        return ()
    k = p[0]
    low = p[1:k]
    high = tuple(v - k for v in p[k:])
    t_low = _vartheta_inv(low)
    t_high = _vartheta_inv(high)
    leaf_slots = [idx for idx, c in enumerate(t_low) if c == ()]
    if not leaf_slots:
        return tuple(t_low) + ((),) + tuple(t_high)
    w = leaf_slots[0]
    head = t_low[:w]
    tail = t_low[w + 1:]
    node: PlaneTree = ((),) + tuple(tail)
    for child in reversed(t_high):
        node = (node,) + tuple(child)
    return (node,) + tuple(head)


# ---------- Baxter permutations and walk triples ----------

def gamma(p: Perm) -> tuple[str, str, str]:
    """Map a Baxter permutation to the walk triple of its descent-derived sets."""
    check_permutation(p)
    _require(is_baxter(p), f"not a Baxter permutation: {p}")
    n = len(p)
    q = inverse(p)
    top = walk_from_positions(modified_descent_tops(q), n - 1)
    middle = walk_from_positions(descent_set(p), n - 1)
    bottom = walk_from_positions(descent_bottoms(q), n - 1)
    return top, middle, bottom


@lru_cache(maxsize=None)
def _gamma_by_triple(n: int) -> dict[tuple[str, str, str], Perm]:
    table: dict[tuple[str, str, str], Perm] = {}
    for p in all_permutations(n):
        if is_baxter(p):
            table[gamma(p)] = p
    return table


def gamma_inv(triple: tuple[str, str, str]) -> Perm:
    """Invert the walk-triple map by exhaustive lookup over Baxter permutations."""
    top, middle, bottom = triple
    _require(len(top) == len(middle) == len(bottom), "walks must have equal length")
    n = len(middle) + 1
    table = _gamma_by_triple(n)
    key = (top, middle, bottom)
    _require(key in table, f"not in the walk-triple image: {triple}")
    return table[key]


@lru_cache(maxsize=None)
def _gamma_restricted(n: int) -> dict[tuple[str, str], Perm]:
    # over 231-avoiders the bottom walk repeats the middle one
    table: dict[tuple[str, str], Perm] = {}
    for p in avoiders(n, (2, 3, 1)):
        top, middle, bottom = gamma(p)
        if middle != bottom:
            raise AssertionError(f"bottom differs from middle on a 231-avoider: {p}")
        table[(top, middle)] = p
    return table


def gamma_theta(p: Perm) -> Perm:
    """Carry a 231-avoider through the walk-pair map into the walk-triple preimage."""
    check_permutation(p)
    _require(avoids(p, (2, 3, 1)), f"not 231-avoiding: {p}")
    mu, nu = theta(p)
    table = _gamma_restricted(len(p))
    key = (mu, nu)
    _require(key in table, f"walk pair escapes the restricted image: {p}")
    return table[key]
