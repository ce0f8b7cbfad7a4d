# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled statistic-table kernels: prefix-pruned DFS with incremental statistics."""

from libc.string cimport memset

DEF NMAX = 14
DEF RUNS_SIZE = 900    # 15 * 15 * 2 * 2
DEF PEAKS_SIZE = 4096  # 8 * 8 * 8 * 8


# ---------------------------------------------------------------- runs over 321-avoiders

cdef void _runs321_rec(int n, int pos, unsigned int used, int pm, int floor,
                       int prev, int rl, int no, int ne, int fpar,
                       long* counts) noexcept:
    cdef int c, par, f, nfl, npm, key
    if pos == n:
        par = rl & 1
        no += par
        ne += 1 - par
        f = fpar if fpar >= 0 else par
        key = ((no * 15 + ne) * 2 + f) * 2 + par
        counts[key] += 1
        return
    for c in range(floor + 1, n + 1):
        if used & ((<unsigned int>1) << c):
            continue
        npm = pm if pm > c else c
        nfl = floor
        if c < pm and c > floor:
            nfl = c
        if pos == 0:
            _runs321_rec(n, 1, used | ((<unsigned int>1) << c), npm, nfl,
                         c, 1, 0, 0, -1, counts)
        elif c > prev:
            _runs321_rec(n, pos + 1, used | ((<unsigned int>1) << c), npm, nfl,
                         c, rl + 1, no, ne, fpar, counts)
        else:
            par = rl & 1
            _runs321_rec(n, pos + 1, used | ((<unsigned int>1) << c), npm, nfl,
                         c, 1, no + par, ne + (1 - par),
                         par if fpar < 0 else fpar, counts)


def _table_runs321(int n):
    cdef long counts[RUNS_SIZE]
    cdef int no, ne, f, l, key
    if n == 0:
        return {}
    memset(counts, 0, RUNS_SIZE * sizeof(long))
    _runs321_rec(n, 0, 0, 0, 0, 0, 0, 0, 0, -1, counts)
    out = {}
    for no in range(15):
        for ne in range(15):
            for f in range(2):
                for l in range(2):
                    key = ((no * 15 + ne) * 2 + f) * 2 + l
                    if counts[key]:
                        out[(no, ne, f, l)] = counts[key]
    return out


# ---------------------------------------------------------------- segment compositions of Dyck paths

cdef inline void _comp_bump(int* word, int n2, int n, long* counts) noexcept:
    cdef int i, erun = 0, ecnt = 0, prevcut = 0
    cdef int part, par, op = 0, ep = 0, f = -1, key
    for i in range(n2):
        if word[i]:
            erun += 1
            ecnt += 1
        else:
            if erun >= 2:
                # cut just before the last east step of a long run
                part = (ecnt - 1) - prevcut
                par = part & 1
                op += par
                ep += 1 - par
                if f < 0:
                    f = par
                prevcut = ecnt - 1
            erun = 0
    part = n - prevcut
    par = part & 1
    op += par
    ep += 1 - par
    if f < 0:
        f = par
    key = ((op * 15 + ep) * 2 + f) * 2 + par
    counts[key] += 1


cdef void _dyck_rec(int n, int e, int d, int* word, long* counts) noexcept:
    cdef int idx = 2 * e - d
    if idx == 2 * n:
        _comp_bump(word, 2 * n, n, counts)
        return
    if e < n:
        word[idx] = 1
        _dyck_rec(n, e + 1, d + 1, word, counts)
    if d > 0:
        word[idx] = 0
        _dyck_rec(n, e, d - 1, word, counts)


def _table_compdyck(int n):
    cdef long counts[RUNS_SIZE]
    cdef int word[2 * NMAX]
    cdef int op, ep, f, l, key
    if n == 0:
        return {}
    memset(counts, 0, RUNS_SIZE * sizeof(long))
    _dyck_rec(n, 0, 0, word, counts)
    out = {}
    for op in range(15):
        for ep in range(15):
            for f in range(2):
                for l in range(2):
                    key = ((op * 15 + ep) * 2 + f) * 2 + l
                    if counts[key]:
                        out[(op, ep, f, l)] = counts[key]
    return out


# ---------------------------------------------------------------- peak parities over avoiders

cdef void _peaks_rec(int n, bint rule231, int pos, unsigned int used,
                     int aux, int floor, int prev, int prev2,
                     int le, int lo, int pe, int po, long* counts) noexcept:
    # aux is the prefix maximum under the 321 rule, unused under the 231 rule
    cdef int c, u, nfl, naux, nle, nlo, npe, npo, key
    if pos == n:
        key = ((le * 8 + lo) * 8 + pe) * 8 + po
        counts[key] += 1
        return
    for c in range(floor + 1, n + 1):
        if used & ((<unsigned int>1) << c):
            continue
        if rule231:
            naux = aux
            nfl = floor
            for u in range(c - 1, floor, -1):
                if used & ((<unsigned int>1) << u):
                    nfl = u
                    break
        else:
            naux = aux if aux > c else c
            nfl = floor
            if c < aux and c > floor:
                nfl = c
        nle = le
        nlo = lo
        npe = pe
        npo = po
        if pos >= 1 and prev2 < prev and prev > c:
            if prev & 1:
                nlo += 1
            else:
                nle += 1
            if pos >= 2:
                if prev & 1:
                    npo += 1
                else:
                    npe += 1
        _peaks_rec(n, rule231, pos + 1, used | ((<unsigned int>1) << c),
                   naux, nfl, c, prev, nle, nlo, npe, npo, counts)


def _table_peaks(int n, bint rule231):
    cdef long counts[PEAKS_SIZE]
    cdef int le, lo, pe, po, key
    memset(counts, 0, PEAKS_SIZE * sizeof(long))
    _peaks_rec(n, rule231, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, counts)
    out = {}
    for le in range(8):
        for lo in range(8):
            for pe in range(8):
                for po in range(8):
                    key = ((le * 8 + lo) * 8 + pe) * 8 + po
                    if counts[key]:
                        out[(le, lo, pe, po)] = counts[key]
    return out


def stat_table_fast(kind, int n):
    """Compiled table for the hot kinds; None signals the caller to use the pure backend."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > NMAX:
        return None
    if kind == "runs321":
        return _table_runs321(n)
    if kind == "compdyck":
        return _table_compdyck(n)
    if kind == "lpkpk231":
        return _table_peaks(n, True)
    if kind == "lpk321":
        return _table_peaks(n, False)
    return None
