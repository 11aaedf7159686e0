"""Pure-Python search kernel.

Line-for-line twin of ``_core.pyx``: same data layout, same RNG stream, same
order of random draws, so both backends produce identical flip trajectories.

Bookkeeping per clause member ``m``: ``mf[m]`` is the number of clauses in the
member's CNF expansion that are currently fully false (0 means the member is
satisfied). ``sat[c]`` counts satisfied members of clause ``c``; the clause is
unsatisfied iff ``sat[c] == 0`` and then it sits in the ``unsat`` index.
"""

from __future__ import annotations

SAT = 2**63 - 1
M64 = (1 << 64) - 1


def smul(a, b):
    if a == 0 or b == 0:
        return 0
    if a > SAT // b:
        return SAT
    return a * b


def sadd(a, b):
    if a > SAT - b:
        return SAT
    return a + b


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M64


class Kernel:
    def __init__(self, ct, noise_num=50, noise_den=100):
        self.na = ct.num_atoms
        self.ncl = ct.num_clauses
        self.strategy = ct.strategy
        self.p = noise_num
        self.q = noise_den
        self.cstart = list(ct.clause_start)
        self.cplain = list(ct.clause_plain)
        self.mkind = list(ct.member_kind)
        self.mref = list(ct.member_ref)
        self.mclause = list(ct.member_clause)
        self.lo = list(ct.catom_lower)
        self.up = list(ct.catom_upper)
        self.cn = list(ct.catom_n)
        self.sstart = list(ct.scope_start)
        self.scope = list(ct.scope)
        self.tstart = list(ct.tab_start)
        self.tab = list(ct.tables)
        self.ostart = list(ct.occ_start)
        self.occ = list(ct.occ)
        self.owner = list(ct.df_owner)
        self.units = list(ct.df_units)
        self.pn = ct.pf_n
        self.cell = list(ct.pf_cell)
        self.row = list(ct.pf_row)
        self.col = list(ct.pf_col)

        nm = len(self.mkind)
        self.val = [0] * (self.na + 1)
        self.count = [0] * len(self.lo)
        self.mf = [0] * nm
        self.sat = [0] * self.ncl
        self.unsat = []
        self.pos = [-1] * self.ncl
        self.pi = [0] * self.pn
        self.pinv = [0] * self.pn
        self.flip_count = 0
        # scratch
        self.delta = [0] * self.ncl
        self.cstamp = [0] * self.ncl
        self.astamp = [0] * (self.na + 1)
        self.kstamp = [0] * (self.pn * self.pn)
        self.stamp = 0
        self.s = [0, 0, 0, 0]
        self.seed(0)

    # -- RNG: xoshiro256** seeded through splitmix64 --------------------------------

    def seed(self, seed):
        x = seed & M64
        out = []
        for _ in range(4):
            x = (x + 0x9E3779B97F4A7C15) & M64
            z = x
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
            out.append(z ^ (z >> 31))
        self.s = out

    def next64(self):
        s = self.s
        result = (_rotl((s[1] * 5) & M64, 7) * 9) & M64
        t = (s[1] << 17) & M64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def below(self, n):
        if n < 1:
            raise ValueError("below() needs n >= 1")
        thr = ((M64 + 1) - n) % n
        while True:
            r = self.next64()
            if r >= thr:
                return r % n

    def choose(self, n):
        return 0 if n == 1 else self.below(n)

    # -- bookkeeping ------------------------------------------------------------------

    def member_f(self, m):
        kind = self.mkind[m]
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

    def _add_unsat(self, c):
        self.pos[c] = len(self.unsat)
        self.unsat.append(c)

    def _remove_unsat(self, c):
        i = self.pos[c]
        last = self.unsat.pop()
        if last != c:
            self.unsat[i] = last
            self.pos[last] = i
        self.pos[c] = -1

    def rebuild(self):
        for k in range(len(self.lo)):
            t = 0
            for i in range(self.sstart[k], self.sstart[k + 1]):
                t += self.val[self.scope[i]]
            self.count[k] = t
        for m in range(len(self.mkind)):
            self.mf[m] = self.member_f(m)
        self.unsat = []
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

    def flip(self, x):
        v = self.val[x]
        self.val[x] = 1 - v
        for i in range(self.ostart[x], self.ostart[x + 1]):
            m = self.occ[i]
            old = self.mf[m]
            if self.mkind[m] >= 2:
                k = self.mref[m]
                self.count[k] += -1 if v else 1
            new = self.member_f(m)
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

    def apply(self, move):
        for x in move:
            self.flip(x)

    def set_values(self, values):
        for a in range(1, self.na + 1):
            self.val[a] = 1 if values[a] else 0
        self.rebuild()

    def get_values(self):
        return list(self.val)

    @property
    def num_unsat(self):
        return len(self.unsat)

    def unsat_list(self):
        return list(self.unsat)

    def counts(self):
        return list(self.count)

    def clause_sat(self):
        return [1 if s > 0 else 0 for s in self.sat]

    # -- initialisation ---------------------------------------------------------------

    def init_try(self):
        na = self.na
        if self.strategy == 0:
            for a in range(1, na + 1):
                self.val[a] = self.below(2)
        elif self.strategy == 1:
            for a in range(1, na + 1):
                self.val[a] = 0
            for k in self.units:
                lo, up = self.lo[k], self.up[k]
                s0, n = self.sstart[k], self.cn[k]
                size = lo + self.choose(up - lo + 1)
                perm = self.scope[s0 : s0 + n]
                for i in range(size):
                    j = i + self.choose(n - i)
                    perm[i], perm[j] = perm[j], perm[i]
                    self.val[perm[i]] = 1
            for a in range(1, na + 1):
                if self.owner[a] < 0:
                    self.val[a] = self.below(2)
        else:
            n = self.pn
            perm = list(range(n))
            for i in range(n - 1, 0, -1):
                j = self.choose(i + 1)
                perm[i], perm[j] = perm[j], perm[i]
            for a in range(1, na + 1):
                self.val[a] = 0
            for i in range(n):
                self.val[self.cell[i * n + perm[i]]] = 1
            for a in range(1, na + 1):
                if self.row[a] < 0:
                    self.val[a] = self.below(2)
        self.rebuild()

    # -- virtual break-counts ---------------------------------------------------------

    def _after(self, m, v):
        """(after, both, containing) false-clause counts of member ``m`` when an
        atom of it with current value ``v`` flips."""
        kind = self.mkind[m]
        if kind == 0:
            return 1 - v, 0, 1 - v
        if kind == 1:
            return v, 0, v
        k = self.mref[m]
        n = self.cn[k]
        t = self.count[k]
        b = self.tstart[k]
        w = n + 1
        tab = self.tab
        if v:
            tp, tq, fq = t - 1, t - 1, n - t
        else:
            tp, tq, fq = t + 1, t, n - t - 1
        if kind == 2:
            if v:
                d = smul(tab[b + t - 1], tab[b + 3 * w + n - t])
            else:
                d = smul(tab[b + w + t], tab[b + 2 * w + n - t - 1])
            fp = smul(tab[b + tp], tab[b + 2 * w + n - tp])
            g = smul(tab[b + tq], tab[b + 2 * w + fq])
        else:
            if v:
                d = tab[b + w + n - t]
            else:
                d = tab[b + 3 * w + t]
            fp = sadd(tab[b + n - tp], tab[b + 2 * w + tp])
            g = sadd(tab[b + fq], tab[b + 2 * w + tq])
        return fp, g, d

    def vb_break(self, x):
        v = self.val[x]
        total = 0
        i = self.ostart[x]
        oe = self.ostart[x + 1]
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
                fp, g, d = self._after(m, v)
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

    def _improves(self, c, y):
        """Does flipping ``y`` lower the fully-false count of clause ``c``?"""
        v = self.val[y]
        before = 1
        after = 1
        cs, ce = self.cstart[c], self.cstart[c + 1]
        for i in range(self.ostart[y], self.ostart[y + 1]):
            m = self.occ[i]
            if m < cs:
                continue
            if m >= ce:
                break
            fp, g, d = self._after(m, v)
            before = smul(before, self.mf[m])
            after = smul(after, fp)
        return after < before

    def _clause_atoms(self, c):
        self.stamp += 1
        st = self.stamp
        out = []
        for m in range(self.cstart[c], self.cstart[c + 1]):
            if self.mkind[m] < 2:
                a = self.mref[m]
                if self.astamp[a] != st:
                    self.astamp[a] = st
                    out.append(a)
            else:
                k = self.mref[m]
                for i in range(self.sstart[k], self.sstart[k + 1]):
                    a = self.scope[i]
                    if self.astamp[a] != st:
                        self.astamp[a] = st
                        out.append(a)
        return out

    def vb_candidates(self, c):
        atoms = self._clause_atoms(c)
        out = [a for a in atoms if self._improves(c, a)]
        return out if out else atoms

    # -- multi-atom moves -------------------------------------------------------------

    def move_break(self, move):
        """Satisfied plain clauses broken by flipping every atom of ``move``."""
        self.stamp += 1
        st = self.stamp
        touched = []
        delta = self.delta
        cstamp = self.cstamp
        for x in move:
            for i in range(self.ostart[x], self.ostart[x + 1]):
                m = self.occ[i]
                c = self.mclause[m]
                if not self.cplain[c]:
                    continue
                if cstamp[c] != st:
                    cstamp[c] = st
                    delta[c] = 0
                    touched.append(c)
                delta[c] += -1 if self.mf[m] == 0 else 1
        br = 0
        for c in touched:
            if self.sat[c] > 0 and self.sat[c] + delta[c] == 0:
                br += 1
        return br

    def df_move(self, x):
        o = self.owner[x]
        if o < 0:
            return [x]
        v = self.val[x]
        t = self.count[o]
        tp = t - 1 if v else t + 1
        if self.lo[o] <= tp <= self.up[o]:
            return [x]
        best = -1
        ties = []
        for i in range(self.sstart[o], self.sstart[o + 1]):
            y = self.scope[i]
            if y == x or self.val[y] == v:
                continue
            b = self.move_break([x, y])
            if best < 0 or b < best:
                best = b
                ties = [y]
            elif b == best:
                ties.append(y)
        if not ties:
            return []
        return [x, ties[self.choose(len(ties))]]

    def pf_move(self, x):
        r = self.row[x]
        if r < 0 or self.val[x]:
            raise ValueError(f"atom {x} is not a false grid cell")
        n = self.pn
        j2 = self.col[x]
        j1 = self.pi[r]
        i2 = self.pinv[j2]
        return [self.cell[r * n + j1], x, self.cell[i2 * n + j2], self.cell[i2 * n + j1]]

    def candidates(self, c):
        moves = []
        if self.strategy == 0:
            for a in self.vb_candidates(c):
                moves.append([a])
            return moves, [self.vb_break(mv[0]) for mv in moves]
        if self.strategy == 1:
            for a in self._clause_atoms(c):
                mv = self.df_move(a)
                if mv:
                    moves.append(mv)
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
                        moves.append([a])
                    continue
                if self.val[a] == 0:
                    self._pf_add(moves, a, st)
                else:
                    for j in range(n):
                        if j != self.pi[r]:
                            self._pf_add(moves, self.cell[r * n + j], st)
        return moves, [self.move_break(mv) for mv in moves]

    def _pf_add(self, moves, x, st):
        r1 = self.row[x]
        r2 = self.pinv[self.col[x]]
        key = r1 * self.pn + r2 if r1 < r2 else r2 * self.pn + r1
        if self.kstamp[key] != st:
            self.kstamp[key] = st
            moves.append(self.pf_move(x))

    # -- selection and search ---------------------------------------------------------

    def select_clause(self):
        if not self.unsat:
            raise ValueError("no unsatisfied clause to select")
        return self.unsat[self.choose(len(self.unsat))]

    def pick(self, c):
        moves, breaks = self.candidates(c)
        if not moves:
            return []
        zeros = [i for i, b in enumerate(breaks) if b == 0]
        if zeros:
            return moves[zeros[self.choose(len(zeros))]]
        if self.below(self.q) < self.p:
            return moves[self.choose(len(moves))]
        best = min(breaks)
        ties = [i for i, b in enumerate(breaks) if b == best]
        return moves[ties[self.choose(len(ties))]]

    def step(self):
        c = self.select_clause()
        mv = self.pick(c)
        self.apply(mv)
        self.flip_count += 1
        return mv

    def run_try(self, max_flips):
        flips = 0
        while self.unsat and flips < max_flips:
            self.step()
            flips += 1
        return flips

    def check(self):
        """Compare cached state with a from-scratch recomputation."""
        for k in range(len(self.lo)):
            t = sum(self.val[self.scope[i]] for i in range(self.sstart[k], self.sstart[k + 1]))
            if t != self.count[k]:
                return False
        for m in range(len(self.mkind)):
            if self.mf[m] != self.member_f(m):
                return False
        for c in range(self.ncl):
            s = sum(1 for m in range(self.cstart[c], self.cstart[c + 1]) if self.mf[m] == 0)
            if s != self.sat[c]:
                return False
            if (s == 0) != (self.pos[c] >= 0):
                return False
            if self.pos[c] >= 0 and self.unsat[self.pos[c]] != c:
                return False
        return sorted(self.unsat) == [c for c in range(self.ncl) if self.sat[c] == 0]
