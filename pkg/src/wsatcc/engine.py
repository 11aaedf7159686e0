"""Try/flip local-search driver.

Each try reseeds the kernel RNG with ``seed + try_index`` (mod 2**64),
initialises the assignment through the active strategy and performs flips
until no clause is unsatisfied or the flip budget is spent. A reported model
is always re-checked with :func:`~wsatcc.model.eval_theory`.
"""

from __future__ import annotations

import secrets
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from ._compile import CompiledTheory, compile_theory
from .kernel import default_backend, kernel_class
from .model import Assignment, Theory, eval_theory
from .strategies import Move, Strategy, df_check, pf_check

__all__ = [
    "SolverParams",
    "RunStats",
    "RunResult",
    "SearchState",
    "UnverifiedModel",
    "prepare",
    "run",
]

M64 = (1 << 64) - 1


class UnverifiedModel(RuntimeError):
    """The kernel reported a model that fails independent evaluation (a bug)."""


@dataclass(frozen=True)
class SolverParams:
    strategy: Strategy = Strategy.VB
    max_tries: int = 10
    max_flips: int = 100_000
    noise_num: int = 50
    noise_den: int = 100
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.max_tries < 1:
            raise ValueError("max_tries must be >= 1")
        if self.max_flips < 1:
            raise ValueError("max_flips must be >= 1")
        if self.noise_den < 1 or not 0 <= self.noise_num <= self.noise_den:
            raise ValueError("noise must be p/q with 0 <= p <= q and q >= 1")
        if self.seed is not None and not 0 <= self.seed <= M64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def noise(self) -> Fraction:
        return Fraction(self.noise_num, self.noise_den)


@dataclass
class RunStats:
    solved: bool = False
    tries_used: int = 0
    total_flips: int = 0
    flips_in_successful_try: int | None = None
    wall_seconds: float = 0.0
    per_try_flips: list[int] = field(default_factory=list)
    per_try_seconds: list[float] = field(default_factory=list)


@dataclass
class RunResult:
    status: str  # "SATISFIABLE" or "UNKNOWN"
    model: Assignment | None
    stats: RunStats
    seed: int
    backend: str


def strategy_view(t: Theory, strategy: Strategy, grid=None):
    """Applicability check; raises :class:`~wsatcc.strategies.StrategyError`."""
    if strategy is Strategy.DF:
        return df_check(t)
    if strategy is Strategy.PF:
        return pf_check(t, grid)
    return None


def prepare(t: Theory, strategy: Strategy, grid=None) -> CompiledTheory:
    return compile_theory(t, strategy, strategy_view(t, strategy, grid))


class SearchState:
    """One worker's mutable search state over a theory, wrapping a kernel."""

    def __init__(self, t: Theory, params: SolverParams, backend: str | None = None, grid=None,
                 compiled: CompiledTheory | None = None):
        self.theory = t
        self.params = params
        self.backend = backend or default_backend()
        ct = compiled if compiled is not None else prepare(t, params.strategy, grid)
        self.kernel = kernel_class(self.backend)(ct, params.noise_num, params.noise_den)
        self.kernel.seed(params.seed or 0)

    @property
    def assignment(self) -> Assignment:
        return Assignment(self.theory.num_atoms, self.kernel.get_values())

    @assignment.setter
    def assignment(self, a: Assignment) -> None:
        self.kernel.set_values(a.values)

    @property
    def flips(self) -> int:
        return self.kernel.flip_count

    def reseed(self, seed: int) -> None:
        self.kernel.seed(seed)

    def init_try(self) -> None:
        self.kernel.init_try()

    def unsatisfied(self) -> list[int]:
        return self.kernel.unsat_list()

    def select_clause(self) -> int:
        return self.kernel.select_clause()

    def select_atom(self, clause: int) -> Move:
        return Move(tuple(self.kernel.pick(clause)), self.params.strategy)

    def apply_and_book(self, move: Move) -> None:
        self.kernel.apply(list(move.atoms))
        self.kernel.flip_count += 1

    def step(self) -> Move:
        return Move(tuple(self.kernel.step()), self.params.strategy)

    def consistent(self) -> bool:
        """Cached bookkeeping equals a from-scratch recomputation."""
        return self.kernel.check()


def _try_seed(seed: int, i: int) -> int:
    return (seed + i) & M64


def _one_try(kernel, seed: int, i: int, max_flips: int):
    kernel.seed(_try_seed(seed, i))
    kernel.init_try()
    t0 = time.perf_counter()
    flips = kernel.run_try(max_flips)
    return flips, time.perf_counter() - t0, kernel.num_unsat == 0, kernel.get_values()


_worker_kernel = None


def _worker_init(ct, backend, p, q):
    global _worker_kernel
    _worker_kernel = kernel_class(backend)(ct, p, q)


def _worker_try(seed, i, max_flips):
    return _one_try(_worker_kernel, seed, i, max_flips)


def run(t: Theory, params: SolverParams, backend: str | None = None, grid=None,
        parallel_tries: int = 1) -> RunResult:
    """Search for a model of ``t``. Deterministic in ``(t, params)`` given a seed."""
    backend = backend or default_backend()
    seed = params.seed if params.seed is not None else secrets.randbits(64)
    t_start = time.perf_counter()
    ct = prepare(t, params.strategy, grid)
    stats = RunStats()
    values = None

    def record(res) -> bool:
        nonlocal values
        flips, secs, solved, vals = res
        stats.tries_used += 1
        stats.total_flips += flips
        stats.per_try_flips.append(flips)
        stats.per_try_seconds.append(secs)
        if solved:
            stats.solved = True
            stats.flips_in_successful_try = flips
            values = vals
        return solved

    if parallel_tries <= 1:
        kernel = kernel_class(backend)(ct, params.noise_num, params.noise_den)
        for i in range(params.max_tries):
            if record(_one_try(kernel, seed, i, params.max_flips)):
                break
    else:
        with ProcessPoolExecutor(
            max_workers=parallel_tries, initializer=_worker_init,
            initargs=(ct, backend, params.noise_num, params.noise_den),
        ) as pool:
            done = False
            for start in range(0, params.max_tries, parallel_tries):
                idx = range(start, min(params.max_tries, start + parallel_tries))
                futures = [pool.submit(_worker_try, seed, i, params.max_flips) for i in idx]
                # first success in try order wins; later tries of the batch are discarded
                for f in futures:
                    if not done and record(f.result()):
                        done = True
                if done:
                    break

    model = None
    if stats.solved:
        model = Assignment(t.num_atoms, values)
        ok, violated = eval_theory(t, model)
        if not ok:
            raise UnverifiedModel(f"kernel model violates clauses {violated[:10]}")
    stats.wall_seconds = time.perf_counter() - t_start
    return RunResult("SATISFIABLE" if model is not None else "UNKNOWN", model, stats, seed, backend)
