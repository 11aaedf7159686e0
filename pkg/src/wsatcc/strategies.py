"""Flip strategies: virtual break-count (VB), double flip (DF), permutation flip (PF).

The applicability checks and structural views live here. Move generation and
break-count evaluation run inside the search kernel; the functions at the
bottom of this module are thin accessors over a :class:`~wsatcc.engine.SearchState`
so they can be exercised one call at a time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

from .model import CAtom, Clause, Theory

if TYPE_CHECKING:
    from .engine import SearchState

__all__ = [
    "Strategy",
    "StrategyError",
    "Move",
    "SimpleTheoryView",
    "PermutationView",
    "df_check",
    "pf_check",
    "vb_break_count",
    "vb_candidates",
    "df_init",
    "df_move",
    "pf_init",
    "pf_move",
    "df_break_count",
    "pf_break_count",
]


class Strategy(enum.Enum):
    VB = "VB"
    DF = "DF"
    PF = "PF"

    @property
    def code(self) -> int:
        return {"VB": 0, "DF": 1, "PF": 2}[self.value]


class StrategyError(ValueError):
    """The theory does not have the structure a strategy requires."""


@dataclass(frozen=True)
class Move:
    atoms: tuple[int, ...]
    strategy: Strategy

    def __len__(self) -> int:
        return len(self.atoms)


def _is_unit_catom(cl: Clause) -> bool:
    return not cl.body and len(cl.head) == 1 and isinstance(cl.head[0], CAtom)


@dataclass
class SimpleTheoryView:
    units: list[tuple[int, CAtom]]
    plain: list[int]
    owner: dict[int, int] = field(default_factory=dict)  # atom -> position in ``units``


def df_check(t: Theory) -> SimpleTheoryView:
    """Accept theories whose c-atoms all sit alone in unit clauses with disjoint scopes."""
    units: list[tuple[int, CAtom]] = []
    plain: list[int] = []
    owner: dict[int, int] = {}
    for i, cl in enumerate(t.clauses):
        if _is_unit_catom(cl):
            c = cl.head[0]
            for a in c.scope:
                if a in owner:
                    j = units[owner[a]][0]
                    raise StrategyError(
                        f"-DF needs pairwise disjoint c-atom scopes: clauses {j + 1} and {i + 1} share atom {a}"
                    )
                owner[a] = len(units)
            units.append((i, c))
        elif cl.has_catom():
            raise StrategyError(f"-DF needs every c-atom in a unit clause; clause {i + 1} is not one")
        else:
            plain.append(i)
    return SimpleTheoryView(units, plain, owner)


@dataclass
class PermutationView:
    n: int
    cells: list[list[int]]  # cells[i][j] is the atom of grid cell (i, j), 0-based
    rows: list[int]  # clause index of each row c-atom
    cols: list[int]
    plain: list[int]

    def cell_of(self) -> dict[int, tuple[int, int]]:
        return {a: (i, j) for i, row in enumerate(self.cells) for j, a in enumerate(row)}


def pf_check(t: Theory, grid: Sequence[Sequence[int]] | None = None) -> PermutationView:
    """Recognise c-atoms that are exactly the row/column exactly-one constraints
    of an n x n grid. ``grid`` optionally fixes the cell layout (row-major atoms)."""
    units: list[tuple[int, CAtom]] = []
    plain: list[int] = []
    for i, cl in enumerate(t.clauses):
        if _is_unit_catom(cl):
            c = cl.head[0]
            if c.lower != 1 or c.upper != 1:
                raise StrategyError(f"-PF needs 1{{...}}1 c-atoms; clause {i + 1} has {c.lower}{{...}}{c.upper}")
            units.append((i, c))
        elif cl.has_catom():
            raise StrategyError(f"-PF needs every c-atom in a unit clause; clause {i + 1} is not one")
        else:
            plain.append(i)
    if not units:
        raise StrategyError("-PF needs row and column c-atoms; the theory has none")
    if grid is not None:
        return _pf_from_grid(units, plain, grid)

    n = len(units[0][1].scope)
    if len(units) != 2 * n:
        raise StrategyError(f"-PF found {len(units)} c-atoms with scope size {n}; an n x n grid needs {2 * n}")
    for i, c in units:
        if len(c.scope) != n:
            raise StrategyError(f"-PF c-atom in clause {i + 1} has {len(c.scope)} atoms, expected {n}")
    first = set(units[0][1].scope)
    rows = [u for u in units if u is units[0] or first.isdisjoint(u[1].scope)]
    cols = [u for u in units if not first.isdisjoint(u[1].scope) and u is not units[0]]
    if len(rows) != n or len(cols) != n:
        raise StrategyError(
            f"-PF could not split c-atoms into {n} rows and {n} columns (got {len(rows)} and {len(cols)});"
            " not a permutation specification"
        )
    cells = []
    for ri, rc in rows:
        rs = set(rc.scope)
        line = []
        for ci, cc in cols:
            common = rs.intersection(cc.scope)
            if len(common) != 1:
                raise StrategyError(
                    f"-PF row clause {ri + 1} and column clause {ci + 1} share {len(common)} atoms, expected 1"
                )
            line.append(common.pop())
        cells.append(line)
    flat = [a for line in cells for a in line]
    if len(set(flat)) != n * n:
        raise StrategyError("-PF row scopes overlap; not a permutation specification")
    return PermutationView(n, cells, [r[0] for r in rows], [c[0] for c in cols], plain)


def _pf_from_grid(units, plain, grid) -> PermutationView:
    n = len(grid)
    cells = [list(r) for r in grid]
    if any(len(r) != n for r in cells):
        raise StrategyError("grid override must be square")
    if len({a for r in cells for a in r}) != n * n:
        raise StrategyError("grid override repeats an atom")
    by_scope = {frozenset(c.scope): i for i, c in units}
    rows, cols = [], []
    for line in cells:
        i = by_scope.get(frozenset(line))
        if i is None:
            raise StrategyError(f"grid row {line} has no matching 1{{...}}1 c-atom")
        rows.append(i)
    for j in range(n):
        col = frozenset(cells[i][j] for i in range(n))
        i = by_scope.get(col)
        if i is None:
            raise StrategyError(f"grid column {j + 1} has no matching 1{{...}}1 c-atom")
        cols.append(i)
    if len(units) != 2 * n:
        raise StrategyError("theory has c-atoms outside the grid override")
    return PermutationView(n, cells, rows, cols, plain)


# Accessors over a live search state. They mirror the kernel entry points.


def vb_break_count(s: "SearchState", x: int) -> int:
    return s.kernel.vb_break(x)


def vb_candidates(s: "SearchState", clause: int) -> list[int]:
    return list(s.kernel.vb_candidates(clause))


def df_init(s: "SearchState") -> None:
    s.kernel.init_try()


def pf_init(s: "SearchState") -> None:
    s.kernel.init_try()


def df_move(s: "SearchState", x: int) -> Move:
    return Move(tuple(s.kernel.df_move(x)), Strategy.DF)


def pf_move(s: "SearchState", x: int) -> Move:
    if s.kernel.get_values()[x]:
        raise ValueError(f"atom {x} is true; PF moves are named by a false grid cell")
    return Move(tuple(s.kernel.pf_move(x)), Strategy.PF)


def df_break_count(s: "SearchState", move: Move) -> int:
    return s.kernel.move_break(list(move.atoms))


pf_break_count = df_break_count
