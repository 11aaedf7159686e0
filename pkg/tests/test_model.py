import random

import pytest
from hypothesis import given, settings, strategies as st

from wsatcc.model import (
    Assignment,
    CAtom,
    Clause,
    StructureError,
    Theory,
    eval_catom,
    eval_clause,
    eval_literalish,
    eval_theory,
    true_count,
)

from conftest import random_theory


def A(n, *true):
    return Assignment.from_true(n, true)


@pytest.mark.parametrize(
    "c, true, expected",
    [
        (CAtom(1, 2, (1, 2, 3)), [1], 1),
        (CAtom(0, 2, (1, 2)), [], 0),
        (CAtom(2, 2, (1, 2)), [1, 2], 2),
    ],
)
def test_true_count(c, true, expected):
    assert true_count(c, A(3, *true)) == expected


def test_true_count_out_of_range():
    with pytest.raises(StructureError):
        true_count(CAtom(0, 1, (5,)), A(3))


def test_eval_catom_examples():
    assert eval_catom(CAtom(1, 2, (1, 2, 3)), A(3, 1))
    assert not eval_catom(CAtom(2, 2, (1, 2)), A(3, 1))
    for mask in range(8):
        assert eval_catom(CAtom(0, 3, (1, 2, 3)), A(3, *[i + 1 for i in range(3) if mask >> i & 1]))


def test_eval_literalish_examples():
    assert eval_literalish(1, A(2, 1), "head")
    assert not eval_literalish(CAtom(1, 1, (1, 2)), A(2), "head")
    assert not eval_literalish(1, A(2), "body")


def test_eval_clause_examples():
    assert eval_clause(Clause((1,), (2,)), A(2, 1, 2))
    assert not eval_clause(Clause((1,), ()), A(2, 1))
    assert not eval_clause(Clause((), (CAtom(1, 1, (1, 2)),)), A(2, 1, 2))
    # empty clause is false, atom in body and head is evaluated literally
    assert not eval_clause(Clause(), A(1))
    assert eval_clause(Clause((1,), (1,)), A(1))


def test_eval_theory_examples():
    assert eval_theory(Theory(0), A(0)) == (True, [])
    t = Theory(1, (Clause((), (1,)), Clause((1,), ())))
    assert eval_theory(t, A(1, 1)) == (False, [2])
    assert eval_theory(Theory(2, (Clause((), (CAtom(1, 1, (1, 2)),)),)), A(2, 1)) == (True, [])


def test_empty_scope_catom_is_vacuous():
    c = CAtom(0, 0, ())
    assert eval_catom(c, A(1)) and eval_catom(c, A(1, 1))


@pytest.mark.parametrize("k, m, scope", [(2, 1, (1, 2)), (0, 3, (1, 2)), (-1, 0, (1,)), (1, 1, (1, 1))])
def test_catom_rejects_bad_structure(k, m, scope):
    with pytest.raises(StructureError):
        CAtom(k, m, scope)


def test_theory_rejects_atom_out_of_range():
    with pytest.raises(StructureError):
        Theory(2, (Clause((), (3,)),))
    with pytest.raises(StructureError):
        Theory(2, (Clause((), (CAtom(0, 1, (1, 3)),)),))


@given(
    st.lists(st.integers(1, 8), min_size=0, max_size=8, unique=True),
    st.integers(0, 255),
    st.data(),
)
def test_catom_definition_matches_naive_count(scope, mask, data):
    k = data.draw(st.integers(0, len(scope)))
    m = data.draw(st.integers(k, len(scope)))
    c = CAtom(k, m, tuple(scope))
    a = A(8, *[i for i in range(1, 9) if mask >> (i - 1) & 1])
    cnt = len(set(scope) & a.true_set)
    assert true_count(c, a) == cnt
    assert eval_catom(c, a) == (k <= cnt <= m)


@given(st.lists(st.integers(1, 8), min_size=1, max_size=8, unique=True), st.integers(0, 255), st.integers(1, 8))
def test_flip_changes_count_by_one_inside_scope_only(scope, mask, x):
    c = CAtom(0, len(scope), tuple(scope))
    a = A(8, *[i for i in range(1, 9) if mask >> (i - 1) & 1])
    before = true_count(c, a)
    a.flip(x)
    diff = true_count(c, a) - before
    assert abs(diff) == (1 if x in scope else 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_eval_theory_is_clause_conjunction(seed):
    rng = random.Random(seed)
    t = random_theory(rng, num_atoms=rng.randint(1, 6))
    for mask in range(1 << t.num_atoms):
        a = A(t.num_atoms, *[i for i in range(1, t.num_atoms + 1) if mask >> (i - 1) & 1])
        ok, viol = eval_theory(t, a)
        per = [eval_clause(cl, a) for cl in t.clauses]
        assert ok == all(per)
        assert viol == [i + 1 for i, v in enumerate(per) if not v]
