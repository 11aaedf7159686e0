"""WSAT(CC): stochastic local search for propositional theories with cardinality atoms."""

from .engine import RunResult, RunStats, SearchState, SolverParams, run
from .kernel import default_backend
from .model import Assignment, CAtom, Clause, Theory, eval_clause, eval_theory
from .plcc_io import ParseError, parse_theory, serialize_theory
from .strategies import Strategy, StrategyError

__all__ = [
    "Assignment",
    "CAtom",
    "Clause",
    "ParseError",
    "RunResult",
    "RunStats",
    "SearchState",
    "SolverParams",
    "Strategy",
    "StrategyError",
    "Theory",
    "default_backend",
    "eval_clause",
    "eval_theory",
    "parse_theory",
    "run",
    "serialize_theory",
]

__version__ = "0.1.0"
