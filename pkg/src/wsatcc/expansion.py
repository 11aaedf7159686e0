"""Compile c-atoms and PL^cc clauses into plain CNF over the original atoms.

The encoding is the auxiliary-free subset encoding: ``at least k of A`` becomes
one positive clause per ``(n-k+1)``-subset of ``A`` and ``at most m of A`` one
negative clause per ``(m+1)``-subset. A clause is expanded by distributing the
member CNFs (Cartesian product of their clause lists). The result is a list:
duplicates produced by different product combinations are kept, tautologies are
dropped. The virtual break-counts in the search kernel are defined against
exactly this list.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, TextIO

from .model import CAtom, Clause, Theory

__all__ = [
    "PropClause",
    "CnfExpansion",
    "ExpansionTooLarge",
    "DEFAULT_CAP",
    "expand_atleast",
    "expand_atmost",
    "expand_clause",
    "expand_theory",
    "write_dimacs",
]

DEFAULT_CAP = 10**6


class ExpansionTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class PropClause:
    positive: frozenset[int] = frozenset()
    negative: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))

    @property
    def tautology(self) -> bool:
        return not self.positive.isdisjoint(self.negative)

    def union(self, other: "PropClause") -> "PropClause":
        return PropClause(self.positive | other.positive, self.negative | other.negative)

    def satisfied(self, values) -> bool:
        """``values`` is indexable by atom id (e.g. :class:`~wsatcc.model.Assignment`)."""
        return any(values[a] for a in self.positive) or any(not values[a] for a in self.negative)

    def literals(self) -> list[int]:
        lits = [a for a in self.positive] + [-a for a in self.negative]
        return sorted(lits, key=lambda x: (abs(x), x))


EMPTY = PropClause()


@dataclass(frozen=True)
class CnfExpansion:
    clauses: tuple[PropClause, ...]
    source: int | None = None


def expand_atleast(scope: Sequence[int], k: int) -> list[PropClause]:
    """At least ``k`` of ``scope`` true. ``k == n + 1`` yields the empty clause."""
    n = len(scope)
    if not 0 <= k <= n + 1:
        raise ValueError(f"at-least bound {k} outside 0..{n + 1}")
    if k == 0:
        return []
    return [PropClause(positive=frozenset(s)) for s in combinations(scope, n - k + 1)]


def expand_atmost(scope: Sequence[int], m: int) -> list[PropClause]:
    """At most ``m`` of ``scope`` true. ``m == -1`` yields the empty clause."""
    n = len(scope)
    if not -1 <= m <= n:
        raise ValueError(f"at-most bound {m} outside -1..{n}")
    if m == n:
        return []
    return [PropClause(negative=frozenset(s)) for s in combinations(scope, m + 1)]


def _or(left: list[PropClause], right: list[PropClause], cap: int) -> list[PropClause]:
    if len(left) * len(right) > cap:
        # cheap pre-check; tautology removal may shrink the product but we refuse early
        raise ExpansionTooLarge(f"expansion exceeds {cap} clauses")
    out = []
    for a in left:
        for b in right:
            c = a.union(b)
            if not c.tautology:
                out.append(c)
    return out


def _member_cnf(x, in_body: bool, cap: int) -> list[PropClause]:
    if isinstance(x, CAtom):
        if in_body:
            # not(k{A}m) == at-most(k-1) or at-least(m+1)
            return _or(expand_atmost(x.scope, x.lower - 1), expand_atleast(x.scope, x.upper + 1), cap)
        return expand_atleast(x.scope, x.lower) + expand_atmost(x.scope, x.upper)
    if in_body:
        return [PropClause(negative=frozenset((x,)))]
    return [PropClause(positive=frozenset((x,)))]


def expand_clause(cl: Clause, cap: int = DEFAULT_CAP, index: int | None = None) -> CnfExpansion:
    acc = [EMPTY]
    for x in cl.body:
        acc = _or(acc, _member_cnf(x, True, cap), cap)
    for x in cl.head:
        acc = _or(acc, _member_cnf(x, False, cap), cap)
    return CnfExpansion(tuple(acc), index)


def expand_theory(t: Theory, cap: int = DEFAULT_CAP) -> list[PropClause]:
    out: list[PropClause] = []
    for i, cl in enumerate(t.clauses):
        out.extend(expand_clause(cl, cap, i).clauses)
        if len(out) > cap:
            raise ExpansionTooLarge(f"expansion exceeds {cap} clauses")
    return out


def write_dimacs(num_atoms: int, clauses: Iterable[PropClause], sink: TextIO) -> None:
    clauses = list(clauses)
    sink.write(f"p cnf {num_atoms} {len(clauses)}\n")
    for c in clauses:
        sink.write(" ".join(map(str, c.literals() + [0])) + "\n")
