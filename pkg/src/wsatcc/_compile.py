"""Flatten a :class:`Theory` into the integer arrays consumed by the kernels."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .model import CAtom, Theory
from .strategies import PermutationView, SimpleTheoryView, Strategy

SAT = 2**63 - 1

BODY_ATOM, HEAD_ATOM, BODY_CATOM, HEAD_CATOM = 0, 1, 2, 3


def sat_binom(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    return min(comb(a, b), SAT)


def catom_tables(c: CAtom, in_body: bool) -> list[int]:
    """Four saturated binomial tables of length n+1, indexed by a count ``a``.

    head member: C(a, n-k+1), C(a, n-k), C(a, m+1), C(a, m)
        (at-least clauses fully false, same containing a fixed atom,
         at-most clauses fully false, same containing a fixed atom)
    body member: C(a, k), C(a, k-1), C(a, n-m), C(a, n-m-1)
    """
    n, k, m = len(c.scope), c.lower, c.upper
    if in_body:
        bs = (k, k - 1, n - m, n - m - 1)
    else:
        bs = (n - k + 1, n - k, m + 1, m)
    out: list[int] = []
    for b in bs:
        out.extend(sat_binom(a, b) for a in range(n + 1))
    return out


@dataclass
class CompiledTheory:
    num_atoms: int
    strategy: int
    clause_start: list[int] = field(default_factory=list)
    clause_plain: list[int] = field(default_factory=list)
    member_kind: list[int] = field(default_factory=list)
    member_ref: list[int] = field(default_factory=list)
    member_clause: list[int] = field(default_factory=list)
    catom_lower: list[int] = field(default_factory=list)
    catom_upper: list[int] = field(default_factory=list)
    catom_n: list[int] = field(default_factory=list)
    scope_start: list[int] = field(default_factory=list)
    scope: list[int] = field(default_factory=list)
    tab_start: list[int] = field(default_factory=list)
    tables: list[int] = field(default_factory=list)
    occ_start: list[int] = field(default_factory=list)
    occ: list[int] = field(default_factory=list)
    # DF: owning unit c-atom per atom (-1 if none) and the unit c-atoms in clause order
    df_owner: list[int] = field(default_factory=list)
    df_units: list[int] = field(default_factory=list)
    # PF: grid size, row-major cell atoms, and per-atom row/column (-1 off-grid)
    pf_n: int = 0
    pf_cell: list[int] = field(default_factory=list)
    pf_row: list[int] = field(default_factory=list)
    pf_col: list[int] = field(default_factory=list)

    @property
    def num_clauses(self) -> int:
        return len(self.clause_start) - 1


def compile_theory(t: Theory, strategy: Strategy = Strategy.VB, view=None) -> CompiledTheory:
    na = t.num_atoms
    ct = CompiledTheory(num_atoms=na, strategy=strategy.code)
    occ: list[list[int]] = [[] for _ in range(na + 1)]
    catom_of_clause_member: dict[tuple[int, int], int] = {}
    ct.clause_start.append(0)
    ct.scope_start.append(0)
    for ci, cl in enumerate(t.clauses):
        ct.clause_plain.append(0 if cl.has_catom() else 1)
        for pos, (x, in_body) in enumerate([(x, True) for x in cl.body] + [(x, False) for x in cl.head]):
            mid = len(ct.member_kind)
            ct.member_clause.append(ci)
            if isinstance(x, CAtom):
                k = len(ct.catom_lower)
                catom_of_clause_member[(ci, pos)] = k
                ct.member_kind.append(BODY_CATOM if in_body else HEAD_CATOM)
                ct.member_ref.append(k)
                ct.catom_lower.append(x.lower)
                ct.catom_upper.append(x.upper)
                ct.catom_n.append(len(x.scope))
                ct.scope.extend(x.scope)
                ct.scope_start.append(len(ct.scope))
                ct.tab_start.append(len(ct.tables))
                ct.tables.extend(catom_tables(x, in_body))
                for a in x.scope:
                    occ[a].append(mid)
            else:
                ct.member_kind.append(BODY_ATOM if in_body else HEAD_ATOM)
                ct.member_ref.append(x)
                occ[x].append(mid)
        ct.clause_start.append(len(ct.member_kind))
    ct.occ_start.append(0)
    for a in range(na + 1):
        ct.occ.extend(occ[a])
        ct.occ_start.append(len(ct.occ))

    ct.df_owner = [-1] * (na + 1)
    ct.pf_row = [-1] * (na + 1)
    ct.pf_col = [-1] * (na + 1)
    if strategy is Strategy.DF:
        assert isinstance(view, SimpleTheoryView)
        for ci, _ in view.units:
            k = catom_of_clause_member[(ci, 0)]
            ct.df_units.append(k)
            for a in ct.scope[ct.scope_start[k] : ct.scope_start[k + 1]]:
                ct.df_owner[a] = k
    elif strategy is Strategy.PF:
        assert isinstance(view, PermutationView)
        ct.pf_n = view.n
        for i, line in enumerate(view.cells):
            for j, a in enumerate(line):
                ct.pf_cell.append(a)
                ct.pf_row[a] = i
                ct.pf_col[a] = j
    return ct
