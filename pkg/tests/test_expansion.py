import io
import random
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from wsatcc.expansion import (
    ExpansionTooLarge,
    PropClause,
    expand_atleast,
    expand_atmost,
    expand_clause,
    expand_theory,
    write_dimacs,
)
from wsatcc.model import Assignment, CAtom, Clause, Theory
from wsatcc.oracle import check_equivalence, cnf_models, enumerate_models

from conftest import random_theory


def P(*atoms):
    return PropClause(positive=frozenset(atoms))


def N(*atoms):
    return PropClause(negative=frozenset(atoms))


def as_set(cnf):
    return {(c.positive, c.negative) for c in cnf}


def truth_table_agrees(scope, cnf, pred):
    for bits in product((0, 1), repeat=len(scope)):
        vals = {a: b for a, b in zip(scope, bits)}
        sat = all(c.satisfied(vals) for c in cnf)
        assert sat == pred(sum(bits))


def test_atleast_examples():
    assert as_set(expand_atleast([1, 2], 1)) == as_set([P(1, 2)])
    assert expand_atleast([1, 2, 3], 0) == []
    assert as_set(expand_atleast([1, 2, 3], 2)) == as_set([P(1, 2), P(1, 3), P(2, 3)])


def test_atmost_examples():
    assert as_set(expand_atmost([1, 2], 1)) == as_set([N(1, 2)])
    assert expand_atmost([1, 2, 3], 3) == []
    assert as_set(expand_atmost([1], 0)) == as_set([N(1)])


def test_out_of_range_bounds_give_empty_clause():
    assert expand_atleast([1, 2], 3) == [PropClause()]
    assert expand_atmost([1, 2], -1) == [PropClause()]
    with pytest.raises(ValueError):
        expand_atleast([1, 2], 4)


@pytest.mark.parametrize("n", range(0, 7))
def test_size_formulas_and_truth_tables(n):
    scope = list(range(1, n + 1))
    for k in range(0, n + 1):
        cnf = expand_atleast(scope, k)
        assert len(cnf) == (comb(n, n - k + 1) if k >= 1 else 0)
        truth_table_agrees(scope, cnf, lambda c, k=k: c >= k)
    for m in range(0, n + 1):
        cnf = expand_atmost(scope, m)
        assert len(cnf) == (comb(n, m + 1) if m <= n - 1 else 0)
        truth_table_agrees(scope, cnf, lambda c, m=m: c <= m)


def test_expand_clause_examples():
    e = expand_clause(Clause((), (CAtom(1, 1, (1, 2)),)))
    assert as_set(e.clauses) == as_set([P(1, 2), N(1, 2)])
    e = expand_clause(Clause((3,), (1, 2)))
    assert list(e.clauses) == [PropClause({1, 2}, {3})]
    e = expand_clause(Clause((CAtom(1, 2, (1, 2)),), (4,)))
    assert as_set(e.clauses) == as_set([PropClause({4}, {1}), PropClause({4}, {2})])


def test_body_catom_spanning_all_counts_is_deleted():
    # not(0{a,b}2) is false, so the clause reduces to its head
    e = expand_clause(Clause((CAtom(0, 2, (1, 2)),), (3,)))
    assert list(e.clauses) == [P(3)]


def test_expand_theory_examples():
    plain = Theory(3, (Clause((1,), (2,)), Clause((), (3,))))
    assert expand_theory(plain) == [PropClause({2}, {1}), P(3)]
    t = Theory(2, (Clause((), (CAtom(1, 1, (1, 2)),)),))
    cnf = expand_theory(t)
    assert len(cnf) == 2 and cnf_models(2, cnf).count == 2
    contra = Theory(1, (Clause((), (CAtom(0, 0, (1,)),)), Clause((), (1,))))
    assert cnf_models(1, expand_theory(contra)).count == 0


def test_tautologies_removed():
    # body atom 1 and head c-atom over {1,2}: the product contains (-1 v 1 v 2)
    cnf = expand_clause(Clause((1,), (CAtom(1, 2, (1, 2)),))).clauses
    assert all(not c.tautology for c in cnf)


def test_cap_enforced():
    big = CAtom(6, 6, tuple(range(1, 13)))
    with pytest.raises(ExpansionTooLarge):
        expand_clause(Clause((), (big,)), cap=100)
    with pytest.raises(ExpansionTooLarge):
        expand_clause(Clause((big, big), ()), cap=10**4)


def test_dimacs_output():
    buf = io.StringIO()
    write_dimacs(3, [PropClause({2}, {1}), N(3)], buf)
    assert buf.getvalue() == "p cnf 3 2\n-1 2 0\n-3 0\n"


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_expansion_equivalent_to_theory(seed):
    rng = random.Random(seed)
    t = random_theory(rng, num_atoms=rng.randint(1, 10), max_scope=8, max_clauses=4)
    cnf = expand_theory(t)
    assert check_equivalence(t, cnf)
    assert enumerate_models(t) == cnf_models(t.num_atoms, cnf)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_plain_clause_expands_to_itself(seed):
    rng = random.Random(seed)
    body = tuple(rng.sample(range(1, 9), rng.randint(0, 3)))
    head = tuple(a for a in rng.sample(range(1, 9), rng.randint(0, 3)) if a not in body)
    cnf = expand_clause(Clause(body, head)).clauses
    assert list(cnf) == [PropClause(set(head), set(body))]
