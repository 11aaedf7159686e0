"""Reading and writing the PL^cc text format and solver output.

Input format::

    c optional comment lines
    p <num_atoms> <num_clauses>
    1 2 , 3 {1 2 4 5 6}

One clause per line: body members, a comma, head members. A member is an atom
id or a c-atom ``{k m a1 ... an}``.
"""

from __future__ import annotations

import enum
import logging
import os
import re
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import TextIO

from .model import Assignment, CAtom, Clause, StructureError, Theory

log = logging.getLogger(__name__)

__all__ = [
    "SourceLocation",
    "ParseErrorKind",
    "ParseError",
    "parse_theory",
    "read_theory",
    "serialize_theory",
    "write_model",
    "StatRecord",
    "append_stat_record",
    "format_stat_record",
]


@dataclass(frozen=True)
class SourceLocation:
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseErrorKind(enum.Enum):
    BAD_HEADER = "bad-header"
    ATOM_OUT_OF_RANGE = "atom-out-of-range"
    MALFORMED_CATOM = "malformed-catom"
    BOUND_VIOLATION = "bound-violation"
    MISSING_COMMA = "missing-comma"
    CLAUSE_COUNT_MISMATCH = "clause-count-mismatch"
    DUPLICATE_SCOPE_ATOM = "duplicate-scope-atom"
    BAD_TOKEN = "bad-token"

    @property
    def code(self) -> str:
        return self.value


class ParseError(ValueError):
    def __init__(self, kind: ParseErrorKind, location: SourceLocation, message: str):
        self.kind = kind
        self.location = location
        self.message = message
        super().__init__(f"{location}: {kind.code}: {message}")


_TOKEN = re.compile(r"[{},]|[^\s{},]+")
_INT = re.compile(r"[+-]?\d+")


def _tokens(line: str):
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _is_comment(stripped: str) -> bool:
    return stripped == "c" or stripped.startswith("c ") or stripped.startswith("c\t")


def _parse_header(line: str, lineno: int) -> tuple[int, int]:
    toks = _tokens(line)
    if len(toks) != 3 or toks[0][0] != "p":
        raise ParseError(
            ParseErrorKind.BAD_HEADER, SourceLocation(lineno, 1), f"expected 'p <na> <nc>', got {line.strip()!r}"
        )
    vals = []
    for tok, col in toks[1:]:
        if not tok.isdigit():
            raise ParseError(ParseErrorKind.BAD_HEADER, SourceLocation(lineno, col), f"expected a count, got {tok!r}")
        vals.append(int(tok))
    return vals[0], vals[1]


def _parse_clause(line: str, lineno: int, na: int) -> Clause:
    toks = _tokens(line)
    body: list = []
    head: list = []
    cur = body
    seen_comma = False
    i = 0

    def loc(col):
        return SourceLocation(lineno, col)

    def atom(tok: str, col: int) -> int:
        if not _INT.fullmatch(tok):
            raise ParseError(ParseErrorKind.BAD_TOKEN, loc(col), f"expected an atom id, got {tok!r}")
        v = int(tok)
        if not 1 <= v <= na:
            raise ParseError(ParseErrorKind.ATOM_OUT_OF_RANGE, loc(col), f"atom {v} outside 1..{na}")
        return v

    while i < len(toks):
        tok, col = toks[i]
        if tok == ",":
            if seen_comma:
                raise ParseError(ParseErrorKind.BAD_TOKEN, loc(col), "second comma in clause")
            seen_comma = True
            cur = head
            i += 1
        elif tok == "{":
            j = i + 1
            inner = []
            while j < len(toks) and toks[j][0] != "}":
                if toks[j][0] in ("{", ","):
                    raise ParseError(ParseErrorKind.MALFORMED_CATOM, loc(toks[j][1]), f"unexpected {toks[j][0]!r} in c-atom")
                inner.append(toks[j])
                j += 1
            if j == len(toks):
                raise ParseError(ParseErrorKind.MALFORMED_CATOM, loc(col), "unterminated c-atom")
            if len(inner) < 2:
                raise ParseError(ParseErrorKind.MALFORMED_CATOM, loc(col), "c-atom needs bounds k and m")
            for t, c in inner[:2]:
                if not t.isdigit():
                    raise ParseError(ParseErrorKind.MALFORMED_CATOM, loc(c), f"bad c-atom bound {t!r}")
            k, m = int(inner[0][0]), int(inner[1][0])
            scope = []
            seen: set[int] = set()
            for t, c in inner[2:]:
                if not _INT.fullmatch(t):
                    raise ParseError(ParseErrorKind.MALFORMED_CATOM, loc(c), f"bad c-atom scope entry {t!r}")
                a = atom(t, c)
                if a in seen:
                    raise ParseError(ParseErrorKind.DUPLICATE_SCOPE_ATOM, loc(c), f"atom {a} repeated in c-atom")
                seen.add(a)
                scope.append(a)
            if not k <= m <= len(scope):
                raise ParseError(
                    ParseErrorKind.BOUND_VIOLATION, loc(col), f"need 0 <= k <= m <= n, got k={k} m={m} n={len(scope)}"
                )
            cur.append(CAtom(k, m, tuple(scope)))
            i = j + 1
        elif tok == "}":
            raise ParseError(ParseErrorKind.MALFORMED_CATOM, loc(col), "unmatched '}'")
        else:
            cur.append(atom(tok, col))
            i += 1
    if not seen_comma:
        raise ParseError(ParseErrorKind.MISSING_COMMA, loc(1), "clause has no ',' separating body and head")
    return Clause(tuple(body), tuple(head))


def parse_theory(text: str | TextIO) -> Theory:
    """Parse PL^cc text. Raises :class:`ParseError` on the first problem found."""
    if not isinstance(text, str):
        text = text.read()
    lines = text.splitlines()
    header = None
    clauses: list[Clause] = []
    na = nc = 0
    last = 0
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or _is_comment(stripped):
            continue
        last = lineno
        if header is None:
            na, nc = _parse_header(line, lineno)
            header = lineno
            continue
        if len(clauses) == nc:
            raise ParseError(
                ParseErrorKind.CLAUSE_COUNT_MISMATCH, SourceLocation(lineno, 1), f"more than the declared {nc} clauses"
            )
        clauses.append(_parse_clause(line, lineno, na))
    if header is None:
        raise ParseError(ParseErrorKind.BAD_HEADER, SourceLocation(max(len(lines), 1), 1), "missing 'p <na> <nc>' line")
    if len(clauses) != nc:
        raise ParseError(
            ParseErrorKind.CLAUSE_COUNT_MISMATCH,
            SourceLocation(last + 1, 1),
            f"declared {nc} clauses, found {len(clauses)}",
        )
    try:
        return Theory(na, tuple(clauses))
    except StructureError as e:  # pragma: no cover - parser checks are stricter
        raise ParseError(ParseErrorKind.BAD_TOKEN, SourceLocation(1, 1), str(e)) from e


def read_theory(path: str | os.PathLike) -> Theory:
    with open(path, encoding="utf-8") as fh:
        return parse_theory(fh.read())


def serialize_theory(t: Theory, comments: list[str] | None = None) -> str:
    out = [f"c {c}\n" for c in comments or ()]
    out.append(f"p {t.num_atoms} {len(t.clauses)}\n")
    for cl in t.clauses:
        toks = [str(x) for x in cl.body] + [","] + [str(x) for x in cl.head]
        out.append(" ".join(toks) + "\n")
    return "".join(out)


_V_PER_LINE = 20


def write_model(m: Assignment | None, sink: TextIO) -> None:
    """``s``/``v`` output. ``None`` means no model was found."""
    if m is None:
        sink.write("s UNKNOWN\n")
        return
    sink.write("s SATISFIABLE\n")
    toks = m.true_atoms() + [0]
    for i in range(0, len(toks), _V_PER_LINE):
        sink.write("v " + " ".join(map(str, toks[i : i + _V_PER_LINE])) + "\n")


@dataclass
class StatRecord:
    input_name: str
    strategy: str
    max_tries: int
    max_flips: int
    noise_num: int
    noise_den: int
    seed: int
    solved: bool
    tries_used: int
    total_flips: int
    wall_seconds: float
    timestamp: datetime | None = None


def format_stat_record(r: StatRecord) -> str:
    ts = (r.timestamp or datetime.now(timezone.utc)).isoformat(timespec="seconds")
    fields = [
        ts,
        r.input_name,
        r.strategy,
        r.max_tries,
        r.max_flips,
        f"{r.noise_num}/{r.noise_den}",
        r.seed,
        int(r.solved),
        r.tries_used,
        r.total_flips,
        f"{r.wall_seconds:.2f}",
    ]
    return "\t".join(map(str, fields)) + "\n"


def append_stat_record(path: str | os.PathLike, record: StatRecord) -> bool:
    """Append one tab-separated line. Failures are logged and reported as ``False``."""
    line = format_stat_record(record)
    try:
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(line)
    except OSError as e:
        log.warning("could not append to %s: %s", path, e)
        return False
    return True
