"""Benchmark families as PL^cc theories: vertex cover and open n-queens.

Atom numbering is fixed: vertex ``v`` is atom ``v``; queen cell ``(i, j)``
(1-based) is atom ``(i - 1) * n + j``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import combinations

from .model import CAtom, Clause, Theory

log = logging.getLogger(__name__)

__all__ = [
    "GraphInstance",
    "QueensInstance",
    "RejectionBudgetExceeded",
    "gen_random_graph",
    "encode_vertex_cover",
    "gen_preassignment",
    "encode_open_queens",
    "attack_free",
    "queen_atom",
]


class RejectionBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GraphInstance:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    seed: int | None = None

    def __post_init__(self) -> None:
        seen = set()
        for u, v in self.edges:
            if u == v or not (1 <= u <= self.num_vertices and 1 <= v <= self.num_vertices):
                raise ValueError(f"bad edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)

    def is_cover(self, vertices) -> bool:
        s = set(vertices)
        return all(u in s or v in s for u, v in self.edges)


@dataclass(frozen=True)
class QueensInstance:
    n: int
    queens: tuple[tuple[int, int], ...]  # 1-based (row, col)
    seed: int | None = None


def gen_random_graph(num_vertices: int, num_edges: int, seed: int) -> GraphInstance:
    """``num_edges`` distinct edges drawn uniformly without replacement."""
    total = num_vertices * (num_vertices - 1) // 2
    if num_edges > total:
        raise ValueError(f"{num_edges} edges do not fit in a simple graph on {num_vertices} vertices")
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(total), num_edges))
    # picks are lexicographic indices of pairs (u, v), u < v; decode in one sweep
    edges = []
    u, base = 1, 0
    for idx in picks:
        while idx - base >= num_vertices - u:
            base += num_vertices - u
            u += 1
        edges.append((u, u + 1 + idx - base))
    return GraphInstance(num_vertices, tuple(edges), seed)


def encode_vertex_cover(g: GraphInstance, max_size: int) -> Theory:
    """Cover of at most ``max_size`` vertices: one bounding c-atom plus an edge clause per edge."""
    if not 0 <= max_size <= g.num_vertices:
        raise ValueError("cover size bound outside 0..V")
    V = g.num_vertices
    clauses = [Clause((), (CAtom(0, max_size, tuple(range(1, V + 1))),))]
    clauses += [Clause((), (u, v)) for u, v in g.edges]
    return Theory(V, tuple(clauses))


def attack_free(queens) -> bool:
    qs = list(queens)
    for (r1, c1), (r2, c2) in combinations(qs, 2):
        if r1 == r2 or c1 == c2 or abs(r1 - r2) == abs(c1 - c2):
            return False
    return True


def gen_preassignment(n: int, k: int, seed: int, budget: int = 100_000, reseeds: int = 10) -> QueensInstance:
    """``k`` mutually non-attacking queens, uniform over such placements (rejection sampling)."""
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    for attempt in range(reseeds):
        rng = random.Random(seed if attempt == 0 else f"{seed}:{attempt}")
        for _ in range(budget):
            qs = rng.sample(cells, k)
            if attack_free(qs):
                return QueensInstance(n, tuple(sorted(qs)), seed)
        log.warning("rejection budget of %d exhausted for n=%d k=%d seed=%s; reseeding", budget, n, k, seed)
    raise RejectionBudgetExceeded(f"no attack-free placement of {k} queens on {n}x{n} found")


def queen_atom(n: int, i: int, j: int) -> int:
    return (i - 1) * n + j


def encode_open_queens(q: QueensInstance) -> Theory:
    n = q.n
    if not attack_free(q.queens):
        raise ValueError("preassigned queens attack each other")
    at = lambda i, j: queen_atom(n, i, j)  # noqa: E731
    rng1 = range(1, n + 1)
    clauses = [Clause((), (CAtom(1, 1, tuple(at(i, j) for j in rng1)),)) for i in rng1]
    clauses += [Clause((), (CAtom(1, 1, tuple(at(i, j) for i in rng1)),)) for j in rng1]
    clauses += [Clause((), (at(i, j),)) for i, j in q.queens]
    cells = [(i, j) for i in rng1 for j in rng1]
    for (i1, j1), (i2, j2) in combinations(cells, 2):
        if i1 != i2 and abs(i1 - i2) == abs(j1 - j2):
            clauses.append(Clause((at(i1, j1), at(i2, j2)), ()))
    return Theory(n * n, tuple(clauses))
