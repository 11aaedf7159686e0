"""Acceptance gate. Each test prints one PASS/FAIL line for its criterion.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are repeated in
the "acceptance criteria" section of the terminal summary.
"""

import contextlib
import random
import statistics
import subprocess
import sys
import time
from pathlib import Path

import pytest

from wsatcc.engine import SearchState, SolverParams, run
from wsatcc.expansion import expand_theory
from wsatcc.generators import encode_open_queens, encode_vertex_cover, gen_preassignment, gen_random_graph
from wsatcc.model import Assignment, CAtom, eval_theory
from wsatcc.oracle import (
    OracleRefused,
    cnf_models,
    enumerate_models,
    min_vertex_cover,
    queens_completion,
    reference_break_count,
)
from wsatcc.plcc_io import parse_theory, read_theory, serialize_theory
from wsatcc.strategies import Strategy, df_check, pf_check

from conftest import ACCEPTANCE_LINES, random_simple_theory, random_theory

DATA = Path(__file__).parent / "data"

# Pinned limits
SEMANTICS_SECONDS = 60
BREAK_SECONDS = 60
BENCH_SECONDS = 600
SUCCESS_VB_DF = 0.90
NOISE = (10, 100)


@contextlib.contextmanager
def criterion(num, title):
    t0 = time.perf_counter()
    detail = []
    try:
        yield detail
    except BaseException as e:
        line = f"[{num}] FAIL {title}: {e}".splitlines()[0]
        print(line)
        ACCEPTANCE_LINES.append(line)
        raise
    line = f"[{num}] PASS {title} ({time.perf_counter() - t0:.1f}s{'; ' if detail else ''}{'; '.join(detail)})"
    print(line)
    ACCEPTANCE_LINES.append(line)


def test_1_semantics_oracle():
    with criterion(1, "semantics oracle: models verify, enumeration equals expansion") as d:
        rng = random.Random(1001)
        t0 = time.perf_counter()
        solved = 0
        for i in range(500):
            t = random_theory(rng, num_atoms=rng.randint(1, 16), max_clauses=10, max_scope=6)
            r = run(t, SolverParams(max_tries=3, max_flips=500, seed=i))
            if r.model is not None:
                solved += 1
                assert eval_theory(t, r.model)[0], f"unverified model on theory {i}"
            models = enumerate_models(t)
            assert models == cnf_models(t.num_atoms, expand_theory(t)), f"model sets differ on theory {i}"
            if r.model is not None:
                assert r.model.true_atoms() in [list(m) for m in models.models]
        elapsed = time.perf_counter() - t0
        assert elapsed < SEMANTICS_SECONDS, f"took {elapsed:.1f}s"
        d.append(f"{solved} models found and verified")


def test_2_virtual_break_exactness():
    with criterion(2, "virtual break-count equals materialised expansion") as d:
        rng = random.Random(2002)
        t0 = time.perf_counter()
        triples = body = 0
        while triples < 1000:
            t = random_theory(rng, num_atoms=rng.randint(2, 12), max_clauses=5, max_scope=6, catom_p=0.5)
            cnf = expand_theory(t)
            s = SearchState(t, SolverParams())
            has_body = any(isinstance(m, CAtom) for cl in t.clauses for m in cl.body)
            for _ in range(5):
                a = Assignment.from_true(t.num_atoms, [x for x in range(1, t.num_atoms + 1) if rng.random() < 0.5])
                s.assignment = a
                x = rng.randint(1, t.num_atoms)
                got, ref = s.kernel.vb_break(x), reference_break_count(t, a, x, cnf=cnf)
                assert got == ref, f"atom {x}: {got} != {ref}\n{serialize_theory(t)}"
                triples += 1
                body += has_body
        elapsed = time.perf_counter() - t0
        assert body >= 200, "too few triples with body c-atoms"
        assert elapsed < BREAK_SECONDS, f"took {elapsed:.1f}s"
        d.append(f"{triples} triples, {body} with body c-atoms")


def _walk(t, strategy, flips, check_move, seed):
    """Step the kernel ``flips`` times, re-initialising when a try solves the theory.
    ``check_move`` sees an independently maintained copy of the assignment."""
    s = SearchState(t, SolverParams(strategy, noise_num=NOISE[0], noise_den=NOISE[1], seed=seed))
    k = s.kernel
    k.seed(seed)
    k.init_try()
    vals = bytearray(k.get_values())
    check_move(vals, None)
    tries = 1
    for _ in range(flips):
        while not k.num_unsat:
            k.init_try()
            tries += 1
            vals = bytearray(k.get_values())
            check_move(vals, None)
        mv = k.step()
        for x in mv:
            vals[x] ^= 1
        check_move(vals, mv)
    assert bytes(vals) == bytes(k.get_values()) and k.check()
    return tries


def test_3_df_invariant():
    with criterion(3, "DF keeps unit c-atom clauses satisfied after every flip") as d:
        rng = random.Random(3003)
        violations = 0
        for i in range(20):
            t = random_simple_theory(rng, num_atoms=40, num_units=4, num_plain=rng.randint(120, 180))
            view = df_check(t)
            units = [c for _, c in view.units]
            owner = {a: u for u in units for a in u.scope}

            def check(vals, mv):
                nonlocal violations
                touched = units if mv is None else {owner[x] for x in mv if x in owner}
                for u in touched:
                    if not u.lower <= sum(vals[a] for a in u.scope) <= u.upper:
                        violations += 1

            _walk(t, Strategy.DF, 100_000, check, seed=i)
        assert violations == 0, f"{violations} violations"
        d.append("20 theories x 100000 flips, 0 violations")


def test_4_pf_invariant():
    with criterion(4, "PF keeps the grid a permutation after every flip") as d:
        violations = 0
        for n in (5, 8, 12):
            t = encode_open_queens(gen_preassignment(n, n // 3, seed=n))
            pf_check(t)
            at = lambda i, j: i * n + j + 1  # noqa: E731

            def check(vals, mv):
                nonlocal violations
                rows = range(n) if mv is None else {(x - 1) // n for x in mv}
                cols = range(n) if mv is None else {(x - 1) % n for x in mv}
                for i in rows:
                    violations += sum(vals[at(i, j)] for j in range(n)) != 1
                for j in cols:
                    violations += sum(vals[at(i, j)] for i in range(n)) != 1
                if mv is not None and len(set(mv)) != 4:
                    violations += 1

            tries = _walk(t, Strategy.PF, 100_000, check, seed=n)
            d.append(f"n={n}: {tries} tries")
        assert violations == 0, f"{violations} violations"


def test_5_vertex_cover():
    with criterion(5, "vertex cover V=60 E=120 K=min: VB and DF >= 90% success") as d:
        t0 = time.perf_counter()
        wins = {Strategy.VB: 0, Strategy.DF: 0}
        flips = {Strategy.VB: [], Strategy.DF: []}
        for g_seed in range(50):
            g = gen_random_graph(60, 120, g_seed)
            k, _ = min_vertex_cover(60, g.edges)
            t = encode_vertex_cover(g, k)
            for strat in wins:
                r = run(t, SolverParams(strat, 20, 100_000, *NOISE, seed=g_seed))
                if r.model is not None:
                    cover = r.model.true_atoms()
                    assert g.is_cover(cover) and len(cover) <= k, f"bad cover on graph {g_seed}"
                    wins[strat] += 1
                    flips[strat].append(r.stats.total_flips)
        elapsed = time.perf_counter() - t0
        rates = {s.value: wins[s] / 50 for s in wins}
        d.append(", ".join(f"{s}: {rates[s]:.0%} mean flips {statistics.mean(flips[x] or [0]):.0f}"
                           for x, s in ((x, x.value) for x in wins)))
        assert all(r >= SUCCESS_VB_DF for r in rates.values()), f"success rates {rates}"
        assert elapsed < BENCH_SECONDS, f"took {elapsed:.1f}s"


def test_6_open_queens():
    with criterion(6, "open queens n=20 k=4: PF solves all, fewer mean flips than VB") as d:
        t0 = time.perf_counter()
        instances = []
        seed = 0
        while len(instances) < 55:
            q = gen_preassignment(20, 4, seed)
            seed += 1
            try:
                if queens_completion(20, q.queens, node_budget=2_000_000) is not None:
                    instances.append(q)
            except OracleRefused:
                continue
        res = {Strategy.PF: [], Strategy.VB: []}
        for i, q in enumerate(instances):
            t = encode_open_queens(q)
            for strat in res:
                r = run(t, SolverParams(strat, 20, 100_000, *NOISE, seed=i))
                if r.model is not None:
                    assert eval_theory(t, r.model)[0]
                res[strat].append((r.stats.solved, r.stats.total_flips))
        elapsed = time.perf_counter() - t0
        solved = {s: sum(ok for ok, _ in v) for s, v in res.items()}
        mean = {s: statistics.mean(f for _, f in v) for s, v in res.items()}
        d.append(f"PF {solved[Strategy.PF]}/55 mean {mean[Strategy.PF]:.0f} flips, "
                 f"VB {solved[Strategy.VB]}/55 mean {mean[Strategy.VB]:.0f} flips, {seed - 55} unsat seeds skipped")
        assert solved[Strategy.PF] == 55, f"PF solved {solved[Strategy.PF]}/55"
        assert mean[Strategy.PF] < mean[Strategy.VB], f"means {mean}"
        assert elapsed < BENCH_SECONDS, f"took {elapsed:.1f}s"


def _cli(*argv, cwd=None):
    return subprocess.run([sys.executable, "-m", "wsatcc", *argv], capture_output=True, text=True, cwd=cwd)


def test_7_determinism(tmp_path):
    with criterion(7, "same seed gives byte-identical v lines and flip counts") as d:
        rng = random.Random(7007)
        for i in range(20):
            kind = i % 3
            if kind == 0:
                t, flag = random_theory(rng, num_atoms=14, max_clauses=12), "-VB"
            elif kind == 1:
                t, flag = random_simple_theory(rng, num_atoms=30, num_plain=60), "-DF"
            else:
                t, flag = encode_open_queens(gen_preassignment(8, 2, i)), "-PF"
            f = tmp_path / f"t{i}.plcc"
            f.write_text(serialize_theory(t))
            args = ["-f", str(f), flag, "-t", "3", "-c", "2000", "--seed", str(rng.getrandbits(64)),
                    "--stat-file", str(tmp_path / "stat")]
            a, b = _cli(*args), _cli(*args)
            assert a.returncode == b.returncode and a.returncode in (0, 1), a.stderr
            va = [l for l in a.stdout.splitlines() if l[:2] in ("s ", "v ")]
            vb = [l for l in b.stdout.splitlines() if l[:2] in ("s ", "v ")]
            fa = [l.split(" seconds")[0] for l in a.stdout.splitlines() if l.startswith("c tries")]
            fb = [l.split(" seconds")[0] for l in b.stdout.splitlines() if l.startswith("c tries")]
            assert va == vb and fa == fb and fa, f"configuration {i} differs"
        d.append("20 configurations")


def test_8_format(tmp_path):
    with criterion(8, "format round-trip, golden file, one stat record per invocation") as d:
        rng = random.Random(8008)
        for _ in range(200):
            t = random_theory(rng, num_atoms=rng.randint(0, 14) or 1, max_clauses=8)
            text = serialize_theory(t)
            assert parse_theory(text) == t and serialize_theory(parse_theory(text)) == text
        golden = read_theory(DATA / "golden.plcc")
        assert serialize_theory(golden).splitlines()[:3] == ["p 5 4", "1 , 2", ", {1 2 1 2 3}"]

        sat, unsat, bad = tmp_path / "sat.plcc", tmp_path / "unsat.plcc", tmp_path / "bad.plcc"
        sat.write_text("p 3 1\n, {1 1 1 2 3}\n")
        unsat.write_text("p 1 2\n, 1\n1 ,\n")
        bad.write_text("p 3 1\n, 4\n")
        script = [
            ["-f", "sat.plcc", "--seed", "1"],
            ["-f", "unsat.plcc", "-t", "2", "-c", "5"],
            ["-f", "bad.plcc"],
            ["-f", "missing.plcc"],
            ["-f", "sat.plcc", "-DF"],
            ["-f", "sat.plcc", "-PF"],
            ["-f", "sat.plcc", "-DF", "-PF"],
            ["solve", "-f", "sat.plcc", "-N", "10", "100"],
            ["-f", "unsat.plcc", "-t", "1", "-c", "1", "--seed", "3"],
            ["-f", "sat.plcc", "--backend", "python"],
        ]
        codes = [_cli(*argv, cwd=tmp_path).returncode for argv in script]
        records = (tmp_path / "wsatcc.stat").read_text().splitlines()
        assert len(records) == 10, f"{len(records)} records for 10 invocations"
        assert all(len(r.split("\t")) == 11 for r in records)
        d.append(f"exit codes {codes}")
