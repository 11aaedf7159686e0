import random

import pytest

from wsatcc.kernel import BACKENDS
from wsatcc.model import CAtom, Clause, Theory


def random_theory(rng: random.Random, num_atoms=8, max_clauses=6, max_scope=5, catom_p=0.35,
                  max_body=2, max_head=3) -> Theory:
    """Random PL^cc theory with c-atoms in both body and head positions."""

    def member():
        if rng.random() < catom_p:
            n = rng.randint(0, min(max_scope, num_atoms))
            scope = rng.sample(range(1, num_atoms + 1), n)
            k = rng.randint(0, n)
            return CAtom(k, rng.randint(k, n), tuple(scope))
        return rng.randint(1, num_atoms)

    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        body = tuple(member() for _ in range(rng.randint(0, max_body)))
        head = tuple(member() for _ in range(rng.randint(0, max_head)))
        clauses.append(Clause(body, head))
    return Theory(num_atoms, tuple(clauses))


def random_simple_theory(rng: random.Random, num_atoms=30, num_units=3, num_plain=40) -> Theory:
    """DF-simple: disjoint unit c-atoms plus plain clauses."""
    atoms = list(range(1, num_atoms + 1))
    rng.shuffle(atoms)
    clauses = []
    pos = 0
    for _ in range(num_units):
        n = rng.randint(2, 6)
        scope = tuple(atoms[pos:pos + n])
        pos += n
        k = rng.randint(0, n - 1)
        m = rng.randint(max(k, 1), n)
        clauses.append(Clause((), (CAtom(k, m, scope),)))
    for _ in range(num_plain):
        lits = rng.sample(range(1, num_atoms + 1), 3)
        cut = rng.randint(0, 3)
        clauses.append(Clause(tuple(lits[:cut]), tuple(lits[cut:])))
    rng.shuffle(clauses)
    return Theory(num_atoms, tuple(clauses))


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
