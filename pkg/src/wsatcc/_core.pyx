# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled search kernel. Mirrors ``_pycore.py`` exactly (layout, RNG, draw order)."""

import numpy as np
cimport numpy as cnp

from libc.stdint cimport int64_t, uint64_t

ctypedef int64_t i64

cdef i64 SAT = 9223372036854775807


cdef inline i64 smul(i64 a, i64 b) noexcept nogil:
    if a == 0 or b == 0:
        return 0
    if a > SAT // b:
        return SAT
    return a * b


cdef inline i64 sadd(i64 a, i64 b) noexcept nogil:
    if a > SAT - b:
        return SAT
    return a + b


cdef inline uint64_t rotl(uint64_t x, int k) noexcept nogil:
    return (x << k) | (x >> (64 - k))


def _arr(xs):
    return np.ascontiguousarray(np.asarray(xs, dtype=np.int64).reshape(-1))


cdef class Kernel:
    cdef public i64 na, ncl, strategy, p, q, pn, flip_count
    cdef i64 nm, nk, stamp, nunsat, cap
    cdef uint64_t s0, s1, s2, s3
    cdef i64[::1] cstart, cplain, mkind, mref, mclause, lo, up, cn, sstart, scope
    cdef i64[::1] tstart, tab, ostart, occ, owner, units, cell, row, col
    cdef i64[::1] val, count, mf, sat, unsat, pos, pi, pinv
    cdef i64[::1] delta, cstamp, astamp, kstamp, touched
    cdef i64[::1] mvbuf, mvlen, mvbreak, ties, perm, atoms_buf
    cdef object _keep
    cdef i64 _units_n

    def __init__(self, ct, noise_num=50, noise_den=100):
        self.na = ct.num_atoms
        self.ncl = ct.num_clauses
        self.strategy = ct.strategy
        self.p = noise_num
        self.q = noise_den
        keep = {}
        for name, src in (
            ("cstart", ct.clause_start), ("cplain", ct.clause_plain), ("mkind", ct.member_kind),
            ("mref", ct.member_ref), ("mclause", ct.member_clause), ("lo", ct.catom_lower),
            ("up", ct.catom_upper), ("cn", ct.catom_n), ("sstart", ct.scope_start),
            ("scope", ct.scope), ("tstart", ct.tab_start), ("tab", ct.tables),
            ("ostart", ct.occ_start), ("occ", ct.occ), ("owner", ct.df_owner),
            ("units", ct.df_units), ("cell", ct.pf_cell), ("row", ct.pf_row), ("col", ct.pf_col),
        ):
            a = _arr(src)
            if a.size == 0:
                a = np.zeros(1, dtype=np.int64)
            keep[name] = a
        self.cstart = keep["cstart"]
        self.cplain = keep["cplain"]
        self.mkind = keep["mkind"]
        self.mref = keep["mref"]
        self.mclause = keep["mclause"]
        self.lo = keep["lo"]
        self.up = keep["up"]
        self.cn = keep["cn"]
        self.sstart = keep["sstart"]
        self.scope = keep["scope"]
        self.tstart = keep["tstart"]
        self.tab = keep["tab"]
        self.ostart = keep["ostart"]
        self.occ = keep["occ"]
        self.owner = keep["owner"]
        self.units = keep["units"]
        self.cell = keep["cell"]
        self.row = keep["row"]
        self.col = keep["col"]
        self.nm = len(ct.member_kind)
        self.nk = len(ct.catom_lower)
        self.pn = ct.pf_n
        self._units_n = len(ct.df_units)

        cdef i64 ncl1 = max(self.ncl, 1)
        self.val = np.zeros(self.na + 1, dtype=np.int64)
        self.count = np.zeros(max(self.nk, 1), dtype=np.int64)
        self.mf = np.zeros(max(self.nm, 1), dtype=np.int64)
        self.sat = np.zeros(ncl1, dtype=np.int64)
        self.unsat = np.zeros(ncl1, dtype=np.int64)
        self.pos = np.full(ncl1, -1, dtype=np.int64)
        self.pi = np.zeros(max(self.pn, 1), dtype=np.int64)
        self.pinv = np.zeros(max(self.pn, 1), dtype=np.int64)
        self.delta = np.zeros(ncl1, dtype=np.int64)
        self.cstamp = np.zeros(ncl1, dtype=np.int64)
        self.touched = np.zeros(ncl1, dtype=np.int64)
        self.astamp = np.zeros(self.na + 1, dtype=np.int64)
        self.kstamp = np.zeros(max(self.pn * self.pn, 1), dtype=np.int64)
        self.cap = self.na + self.pn * self.pn + 1
        self.mvbuf = np.zeros(4 * self.cap, dtype=np.int64)
        self.mvlen = np.zeros(self.cap, dtype=np.int64)
        self.mvbreak = np.zeros(self.cap, dtype=np.int64)
        self.ties = np.zeros(self.cap, dtype=np.int64)
        self.atoms_buf = np.zeros(self.na + 1, dtype=np.int64)
        cdef i64 maxn = self.pn
        for k in range(self.nk):
            if self.cn[k] > maxn:
                maxn = self.cn[k]
        self.perm = np.zeros(maxn + 1, dtype=np.int64)
        self.stamp = 0
        self.nunsat = 0
        self.flip_count = 0
        self._keep = keep
        self.seed(0)

    # -- RNG ------------------------------------------------------------------------

    def seed(self, seed):
        cdef uint64_t x = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
        cdef uint64_t z
        cdef uint64_t out[4]
        cdef int i
        for i in range(4):
            x = x + <uint64_t>0x9E3779B97F4A7C15
            z = x
            z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
            z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
            out[i] = z ^ (z >> 31)
        self.s0, self.s1, self.s2, self.s3 = out[0], out[1], out[2], out[3]

    cdef inline uint64_t _next(self) noexcept nogil:
        cdef uint64_t result = rotl(self.s1 * 5, 7) * 9
        cdef uint64_t t = self.s1 << 17
        self.s2 ^= self.s0
        self.s3 ^= self.s1
        self.s1 ^= self.s2
        self.s0 ^= self.s3
        self.s2 ^= t
        self.s3 = rotl(self.s3, 45)
        return result

    cdef inline i64 _below(self, i64 n) noexcept nogil:
        cdef uint64_t un = <uint64_t>n
        cdef uint64_t thr = (<uint64_t>0 - un) % un
        cdef uint64_t r
        while True:
            r = self._next()
            if r >= thr:
                return <i64>(r % un)

    cdef inline i64 _choose(self, i64 n) noexcept nogil:
        if n == 1:
            return 0
        return self._below(n)

    def next64(self):
        return self._next()

    def below(self, n):
        if n < 1:
            raise ValueError("below() needs n >= 1")
        return self._below(n)

    def choose(self, n):
        if n < 1:
            raise ValueError("choose() needs n >= 1")
        return self._choose(n)

    # -- bookkeeping ----------------------------------------------------------------

    cdef inline i64 _member_f(self, i64 m) noexcept nogil:
        cdef i64 kind = self.mkind[m]
        cdef i64 k, n, t, b, w
        if kind == 0:
            return self.val[self.mref[m]]
        if kind == 1:
            return 1 - self.val[self.mref[m]]
        k = self.mref[m]
        n = self.cn[k]
        t = self.count[k]
        b = self.tstart[k]
        w = n + 1
        if kind == 2:
            return smul(self.tab[b + t], self.tab[b + 2 * w + n - t])
        return sadd(self.tab[b + n - t], self.tab[b + 2 * w + t])

    def member_f(self, m):
        return self._member_f(m)

    cdef inline void _add_unsat(self, i64 c) noexcept nogil:
        self.pos[c] = self.nunsat
        self.unsat[self.nunsat] = c
        self.nunsat += 1

    cdef inline void _remove_unsat(self, i64 c) noexcept nogil:
        cdef i64 i = self.pos[c]
        cdef i64 last
        self.nunsat -= 1
        last = self.unsat[self.nunsat]
        if last != c:
            self.unsat[i] = last
            self.pos[last] = i
        self.pos[c] = -1

    cdef void _rebuild(self) noexcept nogil:
        cdef i64 k, i, t, m, c, s, n, j
        for k in range(self.nk):
            t = 0
            for i in range(self.sstart[k], self.sstart[k + 1]):
                t += self.val[self.scope[i]]
            self.count[k] = t
        for m in range(self.nm):
            self.mf[m] = self._member_f(m)
        self.nunsat = 0
        for c in range(self.ncl):
            s = 0
            for m in range(self.cstart[c], self.cstart[c + 1]):
                if self.mf[m] == 0:
                    s += 1
            self.sat[c] = s
            self.pos[c] = -1
            if s == 0:
                self._add_unsat(c)
        if self.strategy == 2:
            n = self.pn
            for i in range(n):
                for j in range(n):
                    if self.val[self.cell[i * n + j]]:
                        self.pi[i] = j
                        self.pinv[j] = i

    def rebuild(self):
        self._rebuild()

    cdef void _flip(self, i64 x) noexcept nogil:
        cdef i64 v = self.val[x]
        cdef i64 i, m, old, new, k, c
        self.val[x] = 1 - v
        for i in range(self.ostart[x], self.ostart[x + 1]):
            m = self.occ[i]
            old = self.mf[m]
            if self.mkind[m] >= 2:
                k = self.mref[m]
                if v:
                    self.count[k] -= 1
                else:
                    self.count[k] += 1
            new = self._member_f(m)
            self.mf[m] = new
            if (old == 0) != (new == 0):
                c = self.mclause[m]
                if new == 0:
                    self.sat[c] += 1
                    if self.sat[c] == 1:
                        self._remove_unsat(c)
                else:
                    self.sat[c] -= 1
                    if self.sat[c] == 0:
                        self._add_unsat(c)
        if self.strategy == 2 and v == 0 and self.row[x] >= 0:
            self.pi[self.row[x]] = self.col[x]
            self.pinv[self.col[x]] = self.row[x]

    def flip(self, x):
        self._flip(x)

    def apply(self, move):
        for x in move:
            self._flip(x)

    def set_values(self, values):
        cdef i64 a
        for a in range(1, self.na + 1):
            self.val[a] = 1 if values[a] else 0
        self._rebuild()

    def get_values(self):
        return [int(self.val[a]) for a in range(self.na + 1)]

    @property
    def num_unsat(self):
        return self.nunsat

    def unsat_list(self):
        return [int(self.unsat[i]) for i in range(self.nunsat)]

    def counts(self):
        return [int(self.count[k]) for k in range(self.nk)]

    def clause_sat(self):
        return [1 if self.sat[c] > 0 else 0 for c in range(self.ncl)]

    # -- initialisation ---------------------------------------------------------------

    cdef void _init_try(self) noexcept nogil:
        cdef i64 a, u, k, lo, up, s0, n, size, i, j, tmp
        if self.strategy == 0:
            for a in range(1, self.na + 1):
                self.val[a] = self._below(2)
        elif self.strategy == 1:
            for a in range(1, self.na + 1):
                self.val[a] = 0
            for u in range(self._units_n):
                k = self.units[u]
                lo = self.lo[k]
                up = self.up[k]
                s0 = self.sstart[k]
                n = self.cn[k]
                size = lo + self._choose(up - lo + 1)
                for i in range(n):
                    self.perm[i] = self.scope[s0 + i]
                for i in range(size):
                    j = i + self._choose(n - i)
                    tmp = self.perm[i]
                    self.perm[i] = self.perm[j]
                    self.perm[j] = tmp
                    self.val[self.perm[i]] = 1
            for a in range(1, self.na + 1):
                if self.owner[a] < 0:
                    self.val[a] = self._below(2)
        else:
            n = self.pn
            for i in range(n):
                self.perm[i] = i
            i = n - 1
            while i > 0:
                j = self._choose(i + 1)
                tmp = self.perm[i]
                self.perm[i] = self.perm[j]
                self.perm[j] = tmp
                i -= 1
            for a in range(1, self.na + 1):
                self.val[a] = 0
            for i in range(n):
                self.val[self.cell[i * n + self.perm[i]]] = 1
            for a in range(1, self.na + 1):
                if self.row[a] < 0:
                    self.val[a] = self._below(2)
        self._rebuild()

    def init_try(self):
        self._init_try()

    # -- virtual break-counts ---------------------------------------------------------

    cdef inline void _after(self, i64 m, i64 v, i64* fp, i64* g, i64* d) noexcept nogil:
        cdef i64 kind = self.mkind[m]
        cdef i64 k, n, t, b, w, tp, tq, fq
        if kind == 0:
            fp[0] = 1 - v
            g[0] = 0
            d[0] = 1 - v
            return
        if kind == 1:
            fp[0] = v
            g[0] = 0
            d[0] = v
            return
        k = self.mref[m]
        n = self.cn[k]
        t = self.count[k]
        b = self.tstart[k]
        w = n + 1
        if v:
            tp = t - 1
            tq = t - 1
            fq = n - t
        else:
            tp = t + 1
            tq = t
            fq = n - t - 1
        if kind == 2:
            if v:
                d[0] = smul(self.tab[b + t - 1], self.tab[b + 3 * w + n - t])
            else:
                d[0] = smul(self.tab[b + w + t], self.tab[b + 2 * w + n - t - 1])
            fp[0] = smul(self.tab[b + tp], self.tab[b + 2 * w + n - tp])
            g[0] = smul(self.tab[b + tq], self.tab[b + 2 * w + fq])
        else:
            if v:
                d[0] = self.tab[b + w + n - t]
            else:
                d[0] = self.tab[b + 3 * w + t]
            fp[0] = sadd(self.tab[b + n - tp], self.tab[b + 2 * w + tp])
            g[0] = sadd(self.tab[b + fq], self.tab[b + 2 * w + tq])

    cdef i64 _vb_break(self, i64 x) noexcept nogil:
        cdef i64 v = self.val[x]
        cdef i64 total = 0
        cdef i64 i = self.ostart[x]
        cdef i64 oe = self.ostart[x + 1]
        cdef i64 c, j, zeros, S, G, q, m, others, fp, g, d
        while i < oe:
            c = self.mclause[self.occ[i]]
            j = i
            while j < oe and self.mclause[self.occ[j]] == c:
                j += 1
            zeros = 0
            S = 0
            G = 1
            for q in range(i, j):
                m = self.occ[q]
                if self.mf[m] == 0:
                    zeros += 1
                self._after(m, v, &fp, &g, &d)
                S = sadd(smul(fp, S), smul(d, G))
                G = smul(G, g)
            if S != 0 and self.sat[c] - zeros == 0:
                others = 1
                q = i
                for m in range(self.cstart[c], self.cstart[c + 1]):
                    if q < j and self.occ[q] == m:
                        q += 1
                        continue
                    others = smul(others, self.mf[m])
                total = sadd(total, smul(S, others))
            i = j
        return total

    def vb_break(self, x):
        return self._vb_break(x)

    cdef bint _improves(self, i64 c, i64 y) noexcept nogil:
        cdef i64 v = self.val[y]
        cdef i64 before = 1
        cdef i64 after = 1
        cdef i64 cs = self.cstart[c]
        cdef i64 ce = self.cstart[c + 1]
        cdef i64 i, m, fp, g, d
        for i in range(self.ostart[y], self.ostart[y + 1]):
            m = self.occ[i]
            if m < cs:
                continue
            if m >= ce:
                break
            self._after(m, v, &fp, &g, &d)
            before = smul(before, self.mf[m])
            after = smul(after, fp)
        return after < before

    cdef i64 _clause_atoms(self, i64 c) noexcept nogil:
        """Distinct atoms of clause ``c`` into ``atoms_buf``; returns how many."""
        cdef i64 st, cnt = 0, m, a, k, i
        self.stamp += 1
        st = self.stamp
        for m in range(self.cstart[c], self.cstart[c + 1]):
            if self.mkind[m] < 2:
                a = self.mref[m]
                if self.astamp[a] != st:
                    self.astamp[a] = st
                    self.atoms_buf[cnt] = a
                    cnt += 1
            else:
                k = self.mref[m]
                for i in range(self.sstart[k], self.sstart[k + 1]):
                    a = self.scope[i]
                    if self.astamp[a] != st:
                        self.astamp[a] = st
                        self.atoms_buf[cnt] = a
                        cnt += 1
        return cnt

    cdef i64 _vb_candidates(self, i64 c) noexcept nogil:
        """Candidates into ``mvbuf`` as single-atom moves; returns how many."""
        cdef i64 na = self._clause_atoms(c)
        cdef i64 cnt = 0, i, a
        for i in range(na):
            a = self.atoms_buf[i]
            if self._improves(c, a):
                self.mvbuf[4 * cnt] = a
                self.mvlen[cnt] = 1
                cnt += 1
        if cnt == 0:
            for i in range(na):
                self.mvbuf[4 * i] = self.atoms_buf[i]
                self.mvlen[i] = 1
            cnt = na
        return cnt

    def vb_candidates(self, c):
        cdef i64 n = self._vb_candidates(c)
        return [int(self.mvbuf[4 * i]) for i in range(n)]

    # -- multi-atom moves -------------------------------------------------------------

    cdef i64 _move_break(self, i64* mv, i64 length) noexcept nogil:
        cdef i64 st, nt = 0, t, x, i, m, c, br = 0
        self.stamp += 1
        st = self.stamp
        for t in range(length):
            x = mv[t]
            for i in range(self.ostart[x], self.ostart[x + 1]):
                m = self.occ[i]
                c = self.mclause[m]
                if not self.cplain[c]:
                    continue
                if self.cstamp[c] != st:
                    self.cstamp[c] = st
                    self.delta[c] = 0
                    self.touched[nt] = c
                    nt += 1
                if self.mf[m] == 0:
                    self.delta[c] -= 1
                else:
                    self.delta[c] += 1
        for t in range(nt):
            c = self.touched[t]
            if self.sat[c] > 0 and self.sat[c] + self.delta[c] == 0:
                br += 1
        return br

    def move_break(self, move):
        cdef i64 buf[4]
        cdef i64 n = len(move), i
        if n > 4:
            raise ValueError("moves have at most 4 atoms")
        for i in range(n):
            buf[i] = move[i]
        return self._move_break(buf, n)

    cdef i64 _df_move(self, i64 x, i64* out) noexcept nogil:
        cdef i64 o = self.owner[x]
        cdef i64 v, t, tp, best, nties, i, y, b
        cdef i64 pair[2]
        out[0] = x
        if o < 0:
            return 1
        v = self.val[x]
        t = self.count[o]
        tp = t - 1 if v else t + 1
        if self.lo[o] <= tp and tp <= self.up[o]:
            return 1
        best = -1
        nties = 0
        pair[0] = x
        for i in range(self.sstart[o], self.sstart[o + 1]):
            y = self.scope[i]
            if y == x or self.val[y] == v:
                continue
            pair[1] = y
            b = self._move_break(pair, 2)
            if best < 0 or b < best:
                best = b
                nties = 0
                self.ties[nties] = y
                nties += 1
            elif b == best:
                self.ties[nties] = y
                nties += 1
        if nties == 0:
            return 0
        out[1] = self.ties[self._choose(nties)]
        return 2

    def df_move(self, x):
        cdef i64 out[2]
        cdef i64 n = self._df_move(x, out)
        return [int(out[i]) for i in range(n)]

    cdef void _pf_move(self, i64 x, i64* out) noexcept nogil:
        cdef i64 n = self.pn
        cdef i64 r = self.row[x]
        cdef i64 j2 = self.col[x]
        cdef i64 j1 = self.pi[r]
        cdef i64 i2 = self.pinv[j2]
        out[0] = self.cell[r * n + j1]
        out[1] = x
        out[2] = self.cell[i2 * n + j2]
        out[3] = self.cell[i2 * n + j1]

    def pf_move(self, x):
        cdef i64 out[4]
        if self.row[x] < 0 or self.val[x]:
            raise ValueError(f"atom {x} is not a false grid cell")
        self._pf_move(x, out)
        return [int(out[i]) for i in range(4)]

    cdef inline i64 _pf_add(self, i64 cnt, i64 x, i64 st) noexcept nogil:
        cdef i64 r1 = self.row[x]
        cdef i64 r2 = self.pinv[self.col[x]]
        cdef i64 key
        if r1 < r2:
            key = r1 * self.pn + r2
        else:
            key = r2 * self.pn + r1
        if self.kstamp[key] != st:
            self.kstamp[key] = st
            self._pf_move(x, &self.mvbuf[4 * cnt])
            self.mvlen[cnt] = 4
            cnt += 1
        return cnt

    cdef i64 _candidates(self, i64 c) noexcept nogil:
        """Moves into ``mvbuf``/``mvlen`` with break-counts in ``mvbreak``."""
        cdef i64 cnt = 0, na, i, a, r, n, st, m, j, ln
        if self.strategy == 0:
            cnt = self._vb_candidates(c)
            for i in range(cnt):
                self.mvbreak[i] = self._vb_break(self.mvbuf[4 * i])
            return cnt
        if self.strategy == 1:
            na = self._clause_atoms(c)
            for i in range(na):
                a = self.atoms_buf[i]
                ln = self._df_move(a, &self.mvbuf[4 * cnt])
                if ln:
                    self.mvlen[cnt] = ln
                    cnt += 1
        else:
            n = self.pn
            self.stamp += 1
            st = self.stamp
            for m in range(self.cstart[c], self.cstart[c + 1]):
                a = self.mref[m]
                r = self.row[a]
                if r < 0:
                    if self.astamp[a] != st:
                        self.astamp[a] = st
                        self.mvbuf[4 * cnt] = a
                        self.mvlen[cnt] = 1
                        cnt += 1
                    continue
                if self.val[a] == 0:
                    cnt = self._pf_add(cnt, a, st)
                else:
                    for j in range(n):
                        if j != self.pi[r]:
                            cnt = self._pf_add(cnt, self.cell[r * n + j], st)
        for i in range(cnt):
            self.mvbreak[i] = self._move_break(&self.mvbuf[4 * i], self.mvlen[i])
        return cnt

    def candidates(self, c):
        cdef i64 n = self._candidates(c)
        moves = [[int(self.mvbuf[4 * i + t]) for t in range(self.mvlen[i])] for i in range(n)]
        return moves, [int(self.mvbreak[i]) for i in range(n)]

    # -- selection and search ---------------------------------------------------------

    cdef i64 _select_clause(self) noexcept nogil:
        return self.unsat[self._choose(self.nunsat)]

    def select_clause(self):
        if self.nunsat == 0:
            raise ValueError("no unsatisfied clause to select")
        return self._select_clause()

    cdef i64 _pick(self, i64 c) noexcept nogil:
        """Index of the chosen move in ``mvbuf``, or -1 when there is none."""
        cdef i64 cnt = self._candidates(c)
        cdef i64 nz = 0, i, best, nt
        if cnt == 0:
            return -1
        for i in range(cnt):
            if self.mvbreak[i] == 0:
                self.ties[nz] = i
                nz += 1
        if nz > 0:
            return self.ties[self._choose(nz)]
        if self._below(self.q) < self.p:
            return self._choose(cnt)
        best = self.mvbreak[0]
        for i in range(1, cnt):
            if self.mvbreak[i] < best:
                best = self.mvbreak[i]
        nt = 0
        for i in range(cnt):
            if self.mvbreak[i] == best:
                self.ties[nt] = i
                nt += 1
        return self.ties[self._choose(nt)]

    def pick(self, c):
        cdef i64 i = self._pick(c)
        if i < 0:
            return []
        return [int(self.mvbuf[4 * i + t]) for t in range(self.mvlen[i])]

    cdef i64 _step(self) noexcept nogil:
        cdef i64 c = self._select_clause()
        cdef i64 i = self._pick(c)
        cdef i64 t, n
        cdef i64 mv[4]
        if i >= 0:
            n = self.mvlen[i]
            for t in range(n):
                mv[t] = self.mvbuf[4 * i + t]
            for t in range(n):
                self._flip(mv[t])
        self.flip_count += 1
        return i

    def step(self):
        cdef i64 c = self.select_clause()
        cdef i64 i = self._pick(c)
        cdef i64 t
        if i < 0:
            self.flip_count += 1
            return []
        mv = [int(self.mvbuf[4 * i + t]) for t in range(self.mvlen[i])]
        for t in range(len(mv)):
            self._flip(mv[t])
        self.flip_count += 1
        return mv

    def run_try(self, i64 max_flips):
        cdef i64 flips = 0
        with nogil:
            while self.nunsat > 0 and flips < max_flips:
                self._step()
                flips += 1
        return flips

    def check(self):
        cdef i64 k, i, t, m, c, s
        for k in range(self.nk):
            t = 0
            for i in range(self.sstart[k], self.sstart[k + 1]):
                t += self.val[self.scope[i]]
            if t != self.count[k]:
                return False
        for m in range(self.nm):
            if self.mf[m] != self._member_f(m):
                return False
        for c in range(self.ncl):
            s = 0
            for m in range(self.cstart[c], self.cstart[c + 1]):
                if self.mf[m] == 0:
                    s += 1
            if s != self.sat[c]:
                return False
            if (s == 0) != (self.pos[c] >= 0):
                return False
            if self.pos[c] >= 0 and self.unsat[self.pos[c]] != c:
                return False
        return sorted(self.unsat_list()) == [c for c in range(self.ncl) if self.sat[c] == 0]
