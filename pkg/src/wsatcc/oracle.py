"""Brute-force reference implementations used to check the solver.

Nothing here shares code with the search kernel: models are enumerated by
evaluating the theory over all ``2**na`` assignments at once (bit-sliced with
numpy), break-counts are counted on the materialised CNF expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .expansion import DEFAULT_CAP, PropClause, expand_theory
from .model import Assignment, CAtom, Theory

__all__ = [
    "OracleRefused",
    "ModelSet",
    "enumerate_models",
    "cnf_models",
    "reference_break_count",
    "check_equivalence",
    "min_vertex_cover",
    "count_vertex_covers",
    "queens_completion",
    "count_queens_completions",
]

DEFAULT_ATOM_CAP = 25
_CHUNK = 1 << 18


class OracleRefused(RuntimeError):
    pass


@dataclass(frozen=True)
class ModelSet:
    models: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.models)

    def __contains__(self, true_atoms) -> bool:
        return tuple(sorted(true_atoms)) in set(self.models)


def _bits(na: int, start: int, stop: int) -> np.ndarray:
    """Boolean matrix ``(na + 1, stop - start)``; row ``a`` is atom ``a``'s value."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((na + 1, stop - start), dtype=bool)
    for a in range(1, na + 1):
        out[a] = (idx >> (a - 1)) & 1
    return out


def _member(x, bits: np.ndarray) -> np.ndarray:
    if isinstance(x, CAtom):
        cnt = np.zeros(bits.shape[1], dtype=np.int32)
        for a in x.scope:
            cnt += bits[a]
        return (cnt >= x.lower) & (cnt <= x.upper)
    return bits[x]


def _theory_mask(t: Theory, bits: np.ndarray) -> np.ndarray:
    ok = np.ones(bits.shape[1], dtype=bool)
    for cl in t.clauses:
        sat = np.zeros(bits.shape[1], dtype=bool)
        for x in cl.body:
            sat |= ~_member(x, bits)
        for x in cl.head:
            sat |= _member(x, bits)
        ok &= sat
    return ok


def _cnf_mask(cnf: Sequence[PropClause], bits: np.ndarray) -> np.ndarray:
    ok = np.ones(bits.shape[1], dtype=bool)
    for c in cnf:
        sat = np.zeros(bits.shape[1], dtype=bool)
        for a in c.positive:
            sat |= bits[a]
        for a in c.negative:
            sat |= ~bits[a]
        ok &= sat
    return ok


def _collect(na: int, mask_fn) -> ModelSet:
    models = []
    total = 1 << na
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        bits = _bits(na, start, stop)
        for off in np.flatnonzero(mask_fn(bits)):
            x = start + int(off)
            models.append(tuple(a for a in range(1, na + 1) if (x >> (a - 1)) & 1))
    models.sort()
    return ModelSet(tuple(models))


def enumerate_models(t: Theory, atom_cap: int = DEFAULT_ATOM_CAP) -> ModelSet:
    if t.num_atoms > atom_cap:
        raise OracleRefused(f"{t.num_atoms} atoms exceeds the enumeration cap of {atom_cap}")
    return _collect(t.num_atoms, lambda bits: _theory_mask(t, bits))


def cnf_models(num_atoms: int, cnf: Sequence[PropClause], atom_cap: int = DEFAULT_ATOM_CAP) -> ModelSet:
    if num_atoms > atom_cap:
        raise OracleRefused(f"{num_atoms} atoms exceeds the enumeration cap of {atom_cap}")
    return _collect(num_atoms, lambda bits: _cnf_mask(cnf, bits))


def check_equivalence(t: Theory, cnf: Sequence[PropClause], atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    """True iff ``t`` and ``cnf`` have the same models over ``t``'s atoms."""
    if t.num_atoms > atom_cap:
        raise OracleRefused(f"{t.num_atoms} atoms exceeds the enumeration cap of {atom_cap}")
    total = 1 << t.num_atoms
    for start in range(0, total, _CHUNK):
        bits = _bits(t.num_atoms, start, min(total, start + _CHUNK))
        if not np.array_equal(_theory_mask(t, bits), _cnf_mask(cnf, bits)):
            return False
    return True


def reference_break_count(
    t: Theory, a: Assignment, x: int, cap: int = DEFAULT_CAP, cnf: Sequence[PropClause] | None = None
) -> int:
    """Expansion clauses satisfied under ``a`` and falsified once ``x`` flips.
    Pass a precomputed ``cnf`` to avoid re-expanding."""
    if cnf is None:
        cnf = expand_theory(t, cap)
    b = a.copy()
    b.flip(x)
    return sum(1 for c in cnf if c.satisfied(a) and not c.satisfied(b))


# -- problem-level oracles (independent of the PL^cc encodings) -----------------------


def min_vertex_cover(num_vertices: int, edges: Iterable[tuple[int, int]]) -> tuple[int, list[int]]:
    """Exact minimum vertex cover by branch and bound.

    Branch on a maximum-degree vertex v: either v is in the cover, or all of its
    neighbours are. Lower bound: size of a greedy maximal matching.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(1, num_vertices + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = [num_vertices + 1, []]

    def matching_bound(g):
        used = set()
        size = 0
        for u in g:
            if u in used:
                continue
            for w in g[u]:
                if w not in used:
                    used.add(u)
                    used.add(w)
                    size += 1
                    break
        return size

    def remove(g, vs):
        h = {u: nb - vs for u, nb in g.items() if u not in vs}
        return {u: nb for u, nb in h.items() if nb}

    def rec(g, chosen):
        if not g:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), sorted(chosen)
            return
        if len(chosen) + matching_bound(g) >= best[0]:
            return
        # degree-1 vertices: taking the neighbour is always safe
        for u, nb in g.items():
            if len(nb) == 1:
                (w,) = nb
                rec(remove(g, {w}), chosen + [w])
                return
        v = max(g, key=lambda u: (len(g[u]), -u))
        rec(remove(g, {v}), chosen + [v])
        nb = g[v]
        rec(remove(g, nb | {v}), chosen + sorted(nb))

    rec({u: nb for u, nb in adj.items() if nb}, [])
    return best[0], best[1]


def count_vertex_covers(num_vertices: int, edges: Sequence[tuple[int, int]], max_size: int) -> int:
    """Subsets of at most ``max_size`` vertices covering every edge (exhaustive)."""
    if num_vertices > DEFAULT_ATOM_CAP:
        raise OracleRefused("too many vertices for exhaustive cover counting")
    n = 0
    for mask in range(1 << num_vertices):
        if bin(mask).count("1") > max_size:
            continue
        if all((mask >> (u - 1)) & 1 or (mask >> (v - 1)) & 1 for u, v in edges):
            n += 1
    return n


def _queens_search(n: int, fixed: dict[int, int], limit: int | None, node_budget: int | None = None):
    """Backtracking over rows; ``fixed`` maps 0-based row -> column.
    Raises :class:`OracleRefused` after ``node_budget`` placements."""
    cols: list[int] = [-1] * n
    used_c, used_d1, used_d2 = set(), set(), set()
    for r, c in fixed.items():
        if c in used_c or r - c in used_d1 or r + c in used_d2:
            return []
        used_c.add(c)
        used_d1.add(r - c)
        used_d2.add(r + c)
        cols[r] = c
    found: list[list[int]] = []
    nodes = 0

    def rec(r):
        nonlocal nodes
        if limit is not None and len(found) >= limit:
            return
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise OracleRefused(f"queens search exceeded {node_budget} nodes")
        if r == n:
            found.append(list(cols))
            return
        if r in fixed:
            rec(r + 1)
            return
        for c in range(n):
            if c in used_c or r - c in used_d1 or r + c in used_d2:
                continue
            cols[r] = c
            used_c.add(c)
            used_d1.add(r - c)
            used_d2.add(r + c)
            rec(r + 1)
            used_c.discard(c)
            used_d1.discard(r - c)
            used_d2.discard(r + c)
            cols[r] = -1

    rec(0)
    return found


def queens_completion(
    n: int, preassigned: Iterable[tuple[int, int]], node_budget: int | None = None
) -> list[int] | None:
    """One attack-free completion (0-based column per row) or ``None``.
    ``preassigned`` holds 1-based ``(row, col)`` pairs."""
    fixed = {r - 1: c - 1 for r, c in preassigned}
    sols = _queens_search(n, fixed, 1, node_budget)
    return sols[0] if sols else None


def count_queens_completions(n: int, preassigned: Iterable[tuple[int, int]] = ()) -> int:
    fixed = {r - 1: c - 1 for r, c in preassigned}
    return len(_queens_search(n, fixed, None))
