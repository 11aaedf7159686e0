"""PL^cc syntax objects and their satisfaction semantics.

A theory is a list of clauses ``a1 & ... & ar -> b1 | ... | bs`` whose members
are plain atoms (positive integers) or cardinality atoms ``k{a1, ..., an}m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

__all__ = [
    "StructureError",
    "CAtom",
    "Clause",
    "Theory",
    "Assignment",
    "Literalish",
    "true_count",
    "eval_catom",
    "eval_literalish",
    "eval_clause",
    "eval_theory",
    "clause_atoms",
]


class StructureError(ValueError):
    """A syntax object violates its structural invariants."""


@dataclass(frozen=True)
class CAtom:
    """Cardinality atom ``lower{scope}upper``."""

    lower: int
    upper: int
    scope: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "scope", tuple(self.scope))
        n = len(self.scope)
        if not 0 <= self.lower <= self.upper <= n:
            raise StructureError(
                f"c-atom bounds must satisfy 0 <= k <= m <= n, got k={self.lower} m={self.upper} n={n}"
            )
        if len(set(self.scope)) != n:
            raise StructureError(f"duplicate atom in c-atom scope {self.scope}")
        for a in self.scope:
            if not isinstance(a, int) or a < 1:
                raise StructureError(f"invalid atom id {a!r} in c-atom scope")

    def __str__(self) -> str:
        return "{" + " ".join(map(str, (self.lower, self.upper, *self.scope))) + "}"


Literalish = Union[int, CAtom]


def _check_member(x: object) -> None:
    if isinstance(x, CAtom):
        return
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise StructureError(f"clause member must be a positive atom id or CAtom, got {x!r}")


@dataclass(frozen=True)
class Clause:
    """``body -> head``; body members occur negatively, head members positively."""

    body: tuple[Literalish, ...] = ()
    head: tuple[Literalish, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "body", tuple(self.body))
        object.__setattr__(self, "head", tuple(self.head))
        for x in self.body + self.head:
            _check_member(x)

    @property
    def members(self) -> tuple[Literalish, ...]:
        return self.body + self.head

    def has_catom(self) -> bool:
        return any(isinstance(x, CAtom) for x in self.members)


def clause_atoms(cl: Clause) -> list[int]:
    """Distinct atoms of a clause in first-occurrence order (c-atom scopes expanded)."""
    seen: dict[int, None] = {}
    for x in cl.members:
        if isinstance(x, CAtom):
            for a in x.scope:
                seen.setdefault(a, None)
        else:
            seen.setdefault(x, None)
    return list(seen)


@dataclass(frozen=True)
class Theory:
    num_atoms: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(self.clauses))
        if self.num_atoms < 0:
            raise StructureError("num_atoms must be non-negative")
        for i, cl in enumerate(self.clauses):
            for a in clause_atoms(cl):
                if a > self.num_atoms:
                    raise StructureError(
                        f"clause {i + 1} mentions atom {a} but the theory has {self.num_atoms} atoms"
                    )

    def catoms(self) -> list[CAtom]:
        return [x for cl in self.clauses for x in cl.members if isinstance(x, CAtom)]


@dataclass
class Assignment:
    """Truth values for atoms ``1..num_atoms``. Index 0 of ``values`` is unused."""

    num_atoms: int
    values: bytearray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.values is None:
            self.values = bytearray(self.num_atoms + 1)
        else:
            self.values = bytearray(self.values)
            if len(self.values) != self.num_atoms + 1:
                raise StructureError("values must have num_atoms + 1 entries (index 0 unused)")

    @classmethod
    def from_true(cls, num_atoms: int, true_atoms: Iterable[int]) -> "Assignment":
        a = cls(num_atoms)
        for x in true_atoms:
            a[x] = True
        return a

    def _check(self, atom: int) -> None:
        if not 1 <= atom <= self.num_atoms:
            raise StructureError(f"atom {atom} outside 1..{self.num_atoms}")

    def __getitem__(self, atom: int) -> bool:
        self._check(atom)
        return bool(self.values[atom])

    def __setitem__(self, atom: int, value: bool) -> None:
        self._check(atom)
        self.values[atom] = 1 if value else 0

    def flip(self, atom: int) -> None:
        self._check(atom)
        self.values[atom] ^= 1

    @property
    def true_set(self) -> frozenset[int]:
        return frozenset(i for i in range(1, self.num_atoms + 1) if self.values[i])

    def true_atoms(self) -> list[int]:
        return [i for i in range(1, self.num_atoms + 1) if self.values[i]]

    def copy(self) -> "Assignment":
        return Assignment(self.num_atoms, self.values)


def true_count(c: CAtom, a: Assignment) -> int:
    """Number of scope atoms of ``c`` that are true under ``a``."""
    return sum(1 for x in c.scope if a[x])


def eval_catom(c: CAtom, a: Assignment) -> bool:
    return c.lower <= true_count(c, a) <= c.upper


def eval_literalish(lit: Literalish, a: Assignment, position: str = "head") -> bool:
    """Truth value of a clause member. ``position`` is accepted for symmetry only:
    polarity is applied by :func:`eval_clause`."""
    if position not in ("body", "head"):
        raise ValueError("position must be 'body' or 'head'")
    if isinstance(lit, CAtom):
        return eval_catom(lit, a)
    return a[lit]


def eval_clause(cl: Clause, a: Assignment) -> bool:
    return any(not eval_literalish(x, a, "body") for x in cl.body) or any(
        eval_literalish(x, a, "head") for x in cl.head
    )


def eval_theory(t: Theory, a: Assignment) -> tuple[bool, list[int]]:
    """Return ``(ok, violated)`` where ``violated`` lists 1-based clause indices."""
    if a.num_atoms != t.num_atoms:
        raise StructureError("assignment and theory disagree on the atom count")
    violated = [i + 1 for i, cl in enumerate(t.clauses) if not eval_clause(cl, a)]
    return not violated, violated


def theory_from_lists(num_atoms: int, clauses: Sequence[tuple[Sequence, Sequence]]) -> Theory:
    """Convenience constructor: ``[(body, head), ...]`` with c-atoms given as
    ``(k, m, [scope])`` tuples."""

    def conv(x):
        if isinstance(x, tuple):
            k, m, scope = x
            return CAtom(k, m, tuple(scope))
        return x

    return Theory(
        num_atoms,
        tuple(Clause(tuple(conv(x) for x in b), tuple(conv(x) for x in h)) for b, h in clauses),
    )
