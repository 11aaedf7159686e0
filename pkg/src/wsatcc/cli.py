"""Command line front end.

    wsatcc -f theory.plcc -t 200 -c 150000 -N 10 100 [-VB | -DF | -PF] [--seed S]
    wsatcc gen vc -V 60 -E 120 -K 31 --seed 1
    wsatcc gen queens -n 20 -k 4 --seed 1
    wsatcc expand -f theory.plcc
    wsatcc enumerate -f theory.plcc

Exit status of ``solve``: 0 model found, 1 none found, 2 input or strategy error.
"""

from __future__ import annotations

import argparse
import logging
import secrets
import sys
from typing import Sequence, TextIO

from .engine import SolverParams, run
from .expansion import DEFAULT_CAP, ExpansionTooLarge, expand_theory, write_dimacs
from .generators import encode_open_queens, encode_vertex_cover, gen_preassignment, gen_random_graph
from .kernel import BACKENDS
from .model import StructureError
from .oracle import OracleRefused, enumerate_models
from .plcc_io import ParseError, StatRecord, append_stat_record, read_theory, serialize_theory, write_model
from .strategies import Strategy, StrategyError

log = logging.getLogger("wsatcc")

SUBCOMMANDS = ("solve", "gen", "expand", "enumerate")
EXIT_FOUND, EXIT_NOT_FOUND, EXIT_ERROR = 0, 1, 2


def _add_solve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-f", dest="input", required=True, help="PL^cc theory file")
    p.add_argument("-t", dest="tries", type=int, default=10, help="maximum number of tries (default 10)")
    p.add_argument("-c", dest="flips", type=int, default=100_000, help="maximum flips per try (default 100000)")
    p.add_argument("-N", dest="noise", type=int, nargs=2, default=[50, 100], metavar=("P", "Q"),
                   help="noise level P/Q (default 50 100)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("-VB", dest="strategy", action="store_const", const=Strategy.VB,
                   help="virtual break-count (default)")
    g.add_argument("-DF", dest="strategy", action="store_const", const=Strategy.DF, help="double flip")
    g.add_argument("-PF", dest="strategy", action="store_const", const=Strategy.PF, help="permutation flip")
    p.add_argument("--seed", type=int, default=None, help="64-bit RNG seed (default: random, reported)")
    p.add_argument("-o", "--output", default=None, help="write the model here instead of stdout")
    p.add_argument("--stat-file", default="wsatcc.stat", help="append-only run log (default wsatcc.stat)")
    p.add_argument("--parallel-tries", type=int, default=1, metavar="N", help="run N tries concurrently")
    p.add_argument("--backend", choices=sorted(BACKENDS), default=None, help="search kernel implementation")
    p.add_argument("--grid", default=None,
                   help="-PF grid override: file with n lines of n atom ids (row-major)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wsatcc", allow_abbrev=False,
                                     description="Local search for PL^cc theories.")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_solve_args(sub.add_parser("solve", allow_abbrev=False, help="search for a model (default)"))

    gen = sub.add_parser("gen", help="emit benchmark instances").add_subparsers(dest="family", required=True)
    vc = gen.add_parser("vc", help="vertex cover on a random graph")
    vc.add_argument("-V", type=int, required=True, help="vertices")
    vc.add_argument("-E", type=int, required=True, help="edges")
    vc.add_argument("-K", type=int, required=True, help="cover size bound")
    vc.add_argument("--seed", type=int, default=0)
    vc.add_argument("-o", "--output", default=None)
    qn = gen.add_parser("queens", help="open n-queens with random preassignment")
    qn.add_argument("-n", type=int, required=True, help="board size")
    qn.add_argument("-k", type=int, required=True, help="preassigned queens")
    qn.add_argument("--seed", type=int, default=0)
    qn.add_argument("-o", "--output", default=None)

    ex = sub.add_parser("expand", help="write the CNF expansion in DIMACS format")
    ex.add_argument("-f", dest="input", required=True)
    ex.add_argument("-o", "--output", default=None)
    ex.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum expansion size in clauses")

    en = sub.add_parser("enumerate", help="list all models by exhaustive enumeration (small theories)")
    en.add_argument("-f", dest="input", required=True)
    en.add_argument("--cap", type=int, default=25, help="maximum number of atoms")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in SUBCOMMANDS + ("-h", "--help"):
        argv.insert(0, "solve")
    args = build_parser().parse_args(argv)
    if args.command == "solve":
        if args.strategy is None:
            args.strategy = Strategy.VB
        p, q = args.noise
        if args.tries < 1 or args.flips < 1:
            build_parser().error("-t and -c must be positive")
        if q < 1 or not 0 <= p <= q:
            build_parser().error("-N P Q needs 0 <= P <= Q and Q >= 1")
        if args.seed is not None and not 0 <= args.seed < 2**64:
            build_parser().error("--seed must fit in 64 bits")
    return args


def _open_out(path: str | None) -> TextIO:
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def _read_grid(path: str) -> list[list[int]]:
    with open(path, encoding="utf-8") as fh:
        return [[int(x) for x in line.split()] for line in fh if line.strip()]


def cmd_solve(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else secrets.randbits(64)
    p, q = args.noise
    record = StatRecord(args.input, args.strategy.value, args.tries, args.flips, p, q, seed,
                        False, 0, 0, 0.0)
    try:
        theory = read_theory(args.input)
        grid = _read_grid(args.grid) if args.grid else None
        params = SolverParams(args.strategy, args.tries, args.flips, p, q, seed)
        result = run(theory, params, backend=args.backend, grid=grid, parallel_tries=args.parallel_tries)
    except (OSError, ParseError, StructureError, StrategyError, ValueError) as e:
        print(f"wsatcc: error: {e}", file=sys.stderr)
        append_stat_record(args.stat_file, record)
        return EXIT_ERROR

    st = result.stats
    record.solved, record.tries_used, record.total_flips, record.wall_seconds = (
        st.solved, st.tries_used, st.total_flips, st.wall_seconds)
    out = _open_out(args.output)
    try:
        write_model(result.model, out)
        out.write(f"c strategy {args.strategy.value} seed {seed} backend {result.backend}\n")
        out.write(f"c tries {st.tries_used} flips {st.total_flips}"
                  f" flips-last-try {st.flips_in_successful_try if st.solved else 0}"
                  f" seconds {st.wall_seconds:.3f}\n")
        out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    append_stat_record(args.stat_file, record)
    return EXIT_FOUND if st.solved else EXIT_NOT_FOUND


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "vc":
        g = gen_random_graph(args.V, args.E, args.seed)
        theory = encode_vertex_cover(g, args.K)
        meta = [f"vertex-cover V={args.V} E={args.E} K={args.K} seed={args.seed}"]
    else:
        inst = gen_preassignment(args.n, args.k, args.seed)
        theory = encode_open_queens(inst)
        meta = [f"open-queens n={args.n} k={args.k} seed={args.seed}",
                "preassigned " + " ".join(f"{r},{c}" for r, c in inst.queens)]
    out = _open_out(args.output)
    try:
        out.write(serialize_theory(theory, meta))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    try:
        theory = read_theory(args.input)
        cnf = expand_theory(theory, args.cap)
    except (OSError, ParseError, ExpansionTooLarge) as e:
        print(f"wsatcc: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    out = _open_out(args.output)
    try:
        write_dimacs(theory.num_atoms, cnf, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        models = enumerate_models(read_theory(args.input), args.cap)
    except (OSError, ParseError, OracleRefused) as e:
        print(f"wsatcc: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    print(f"c models {models.count}")
    for m in models.models:
        print("m " + " ".join(map(str, m + (0,))))
    return 0 if models.count else 1


def _usage_error_record(argv: list[str]) -> None:
    """Best-effort stat record for a ``solve`` invocation whose flags did not parse."""
    lenient = argparse.ArgumentParser(add_help=False)
    lenient.add_argument("-f", dest="input", default="")
    lenient.add_argument("--stat-file", default="wsatcc.stat")
    try:
        known, _ = lenient.parse_known_args(argv)
    except SystemExit:
        known = argparse.Namespace(input="", stat_file="wsatcc.stat")
    append_stat_record(known.stat_file, StatRecord(known.input, "", 0, 0, 0, 0, 0, False, 0, 0, 0.0))


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    raw = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(raw)
    except SystemExit as e:
        if e.code in (0, None):
            raise
        if not raw or raw[0] not in SUBCOMMANDS[1:]:
            _usage_error_record(raw)
        return EXIT_ERROR
    return {"solve": cmd_solve, "gen": cmd_gen, "expand": cmd_expand, "enumerate": cmd_enumerate}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
