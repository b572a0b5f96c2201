"""Command-line front end.

Matrix files hold a header line ``m n`` followed by m rows of n
whitespace-separated rationals (``-7/36``, ``3``, ``0``); lines starting
with ``#`` are comments. Output matrices use the same format in canonical
form: lowest terms, single spaces, LF line endings. ``--pretty`` switches
to an aligned table for human eyes.

Exit codes: 0 success, 1 domain error (violated precondition), 2 parse or
usage error. Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import re
import sys

from .errors import GenInvError, ParseError
from .exact import RMatrix, format_rational, parse_rational
from .factorize import full_rank_reduce
from .penrose import check
from .rect import (g1_inverse, g12_inverse, g123_inverse, g124_inverse,
                   g13_inverse, g134_inverse, g14_inverse, g2_inverse,
                   moore_penrose)
from .square import (drazin_inverse, group_inverse_block, group_inverse_poly,
                     index_of, is_ep, minimal_polynomial, poly_str, q_polynomial)

PROG = "geninv"

_TOKEN_RE = re.compile(r"\S+")


def parse_matrix_text(text: str, filename: str = "<input>") -> RMatrix:
    """Parse MatrixFile text; raises ParseError with line/column on bad input."""
    header = None
    data_rows: list[tuple] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if header is None:
            parts = stripped.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ParseError("header must be two counts: m n",
                                 filename=filename, line=lineno, column=1)
            m, n = int(parts[0]), int(parts[1])
            if m < 1 or n < 1:
                raise ParseError("matrix dimensions must be at least 1",
                                 filename=filename, line=lineno, column=1)
            header = (m, n)
            continue
        if len(data_rows) == header[0]:
            raise ParseError("unexpected content after the last matrix row",
                             filename=filename, line=lineno, column=1)
        tokens = list(_TOKEN_RE.finditer(raw))
        if len(tokens) != header[1]:
            raise ParseError(f"expected {header[1]} entries, found {len(tokens)}",
                             filename=filename, line=lineno, column=1)
        values = []
        for tok in tokens:
            try:
                values.append(parse_rational(tok.group()))
            except ValueError as exc:
                raise ParseError(str(exc), filename=filename, line=lineno,
                                 column=tok.start() + 1) from exc
        data_rows.append(tuple(values))
    if header is None:
        raise ParseError("empty input: missing m n header",
                         filename=filename, line=max(last_line, 1), column=1)
    if len(data_rows) != header[0]:
        raise ParseError(f"expected {header[0]} matrix rows, found {len(data_rows)}",
                         filename=filename, line=max(last_line, 1), column=1)
    return RMatrix(header[0], header[1], tuple(data_rows))


def write_matrix(a: RMatrix) -> str:
    """Canonical MatrixFile text (round-trips byte-identically through the parser)."""
    lines = [f"{a.rows} {a.cols}"]
    lines += [" ".join(format_rational(v) for v in row) for row in a.entries]
    return "\n".join(lines) + "\n"


def pretty_matrix(a: RMatrix) -> str:
    cells = [[format_rational(v) for v in row] for row in a.entries]
    widths = [max(len(cells[i][j]) for i in range(a.rows)) for j in range(a.cols)]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths))
                     for row in cells) + "\n"


class _UsageError(Exception):
    pass


def _load(path: str) -> RMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read(), filename=path)


def _load_opt(args, name: str):
    path = getattr(args, name, None)
    return _load(path) if path else None


def _no_zero_conflict(args, names) -> None:
    if getattr(args, "zero", False) and any(getattr(args, n, None) for n in names):
        raise _UsageError("--zero cannot be combined with explicit block files")


def _emit(mat: RMatrix, args) -> int:
    sys.stdout.write(pretty_matrix(mat) if args.pretty else write_matrix(mat))
    return 0


def _cmd_factor(args) -> int:
    f = full_rank_reduce(_load(args.matrix))
    render = pretty_matrix if args.pretty else write_matrix
    sys.stdout.write("# P\n" + render(f.p))
    sys.stdout.write("# Q\n" + render(f.q))
    sys.stdout.write(f"# r\n{f.r}\n")
    return 0


def _cmd_pinv(args) -> int:
    return _emit(moore_penrose(_load(args.matrix)), args)


def _cmd_g1(args) -> int:
    _no_zero_conflict(args, ("x1", "x2", "x3"))
    f = full_rank_reduce(_load(args.matrix))
    return _emit(g1_inverse(f, x1=_load_opt(args, "x1"), x2=_load_opt(args, "x2"),
                            x3=_load_opt(args, "x3")), args)


def _cmd_g2(args) -> int:
    _no_zero_conflict(args, ("x0", "f", "g"))
    f = full_rank_reduce(_load(args.matrix))
    return _emit(g2_inverse(f, x0=_load_opt(args, "x0"), fblk=_load_opt(args, "f"),
                            gblk=_load_opt(args, "g")), args)


def _cmd_g12(args) -> int:
    _no_zero_conflict(args, ("x1", "x2"))
    f = full_rank_reduce(_load(args.matrix))
    return _emit(g12_inverse(f, x1=_load_opt(args, "x1"), x2=_load_opt(args, "x2")), args)


def _cmd_g13(args) -> int:
    _no_zero_conflict(args, ("x2", "x3"))
    f = full_rank_reduce(_load(args.matrix))
    return _emit(g13_inverse(f, x2=_load_opt(args, "x2"), x3=_load_opt(args, "x3")), args)


def _cmd_g123(args) -> int:
    _no_zero_conflict(args, ("x2",))
    f = full_rank_reduce(_load(args.matrix))
    return _emit(g123_inverse(f, x2=_load_opt(args, "x2")), args)


def _cmd_g14(args) -> int:
    _no_zero_conflict(args, ("x1", "x3"))
    f = full_rank_reduce(_load(args.matrix))
    return _emit(g14_inverse(f, x1=_load_opt(args, "x1"), x3=_load_opt(args, "x3")), args)


def _cmd_g124(args) -> int:
    _no_zero_conflict(args, ("x1",))
    f = full_rank_reduce(_load(args.matrix))
    return _emit(g124_inverse(f, x1=_load_opt(args, "x1")), args)


def _cmd_g134(args) -> int:
    _no_zero_conflict(args, ("x3",))
    f = full_rank_reduce(_load(args.matrix))
    return _emit(g134_inverse(f, x3=_load_opt(args, "x3")), args)


def _cmd_group(args) -> int:
    a = _load(args.matrix)
    x = group_inverse_poly(a) if args.method == "poly" else group_inverse_block(a)
    return _emit(x, args)


def _cmd_drazin(args) -> int:
    return _emit(drazin_inverse(_load(args.matrix)), args)


def _cmd_index(args) -> int:
    print(index_of(_load(args.matrix)))
    return 0


def _cmd_minpoly(args) -> int:
    print(poly_str(minimal_polynomial(_load(args.matrix)).coeffs))
    return 0


def _cmd_qpoly(args) -> int:
    print(poly_str(q_polynomial(minimal_polynomial(_load(args.matrix))).coeffs))
    return 0


def _cmd_ep(args) -> int:
    print("true" if is_ep(_load(args.matrix)) else "false")
    return 0


def _cmd_verify(args) -> int:
    rep = check(_load(args.matrix), _load(args.candidate))

    def word(v):
        return "n/a" if v is None else ("yes" if v else "no")

    print(f"eq1 AXA=A: {word(rep.eq1)}")
    print(f"eq2 XAX=X: {word(rep.eq2)}")
    print(f"eq3 (AX)^T=AX: {word(rep.eq3)}")
    print(f"eq4 (XA)^T=XA: {word(rep.eq4)}")
    print(f"eq5 AX=XA: {word(rep.eq5)}")
    print(f"eq6 A^kXA=A^k: {word(rep.eq6)}")
    print("classes: " + (" ".join(rep.classes) if rep.classes else "(none)"))
    return 0


_HANDLERS = {
    "factor": _cmd_factor,
    "pinv": _cmd_pinv,
    "g1": _cmd_g1,
    "g2": _cmd_g2,
    "g12": _cmd_g12,
    "g13": _cmd_g13,
    "g123": _cmd_g123,
    "g14": _cmd_g14,
    "g124": _cmd_g124,
    "g134": _cmd_g134,
    "group": _cmd_group,
    "drazin": _cmd_drazin,
    "index": _cmd_index,
    "minpoly": _cmd_minpoly,
    "qpoly": _cmd_qpoly,
    "ep": _cmd_ep,
    "verify": _cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact generalized matrix inverses over the rationals.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_: str):
        p = sub.add_parser(name, help=help_)
        p.add_argument("matrix", metavar="FILE", help="input matrix file")
        p.add_argument("--pretty", action="store_true",
                       help="print an aligned table instead of MatrixFile text")
        return p

    def add_free(p, *names):
        for n in names:
            p.add_argument(f"--{n}", metavar="FILE", help=f"file for free block {n}")
        p.add_argument("--zero", action="store_true",
                       help="use zero free blocks (the default)")

    add("factor", "full-rank reduction: print P, Q and r")
    add("pinv", "Moore-Penrose inverse")
    add_free(add("g1", "a {1}-inverse"), "x1", "x2", "x3")
    add_free(add("g2", "a {2}-inverse from an idempotent core"), "x0", "f", "g")
    add_free(add("g12", "a {1,2}-inverse"), "x1", "x2")
    add_free(add("g13", "a {1,3}-inverse"), "x2", "x3")
    add_free(add("g123", "a {1,2,3}-inverse"), "x2")
    add_free(add("g14", "a {1,4}-inverse"), "x1", "x3")
    add_free(add("g124", "a {1,2,4}-inverse"), "x1")
    add_free(add("g134", "a {1,3,4}-inverse"), "x3")
    g = add("group", "group inverse (index <= 1)")
    g.add_argument("--method", choices=("poly", "block"), default="poly",
                   help="polynomial route or block route (default: poly)")
    add("drazin", "Drazin inverse")
    add("index", "index of a square matrix")
    add("minpoly", "minimal polynomial of a square matrix")
    add("qpoly", "q-polynomial of a square matrix")
    add("ep", "report whether a square matrix is EP")
    v = add("verify", "check a candidate inverse against the defining equations")
    v.add_argument("--candidate", metavar="FILE", required=True,
                   help="file with the candidate inverse X")
    return parser


def run(argv) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"{PROG}: parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    except GenInvError as exc:
        print(f"{PROG}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
