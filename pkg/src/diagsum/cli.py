"""Command-line interface.

Exit codes: 0 affirmative decision or success, 1 negative decision,
2 error (with a one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import constructors as cons
from .assignment import diagonal_width, extreme_diagonal_sums
from .matrix import RatMatrix, format_matrix, is_doubly_stochastic, parse_matrix
from .oracle import DEFAULT_LIMIT, brute_diagonal_stats
from .pattern import format_pattern, parse_pattern
from .permanent import cps_report, gray_graph_pattern, permanent
from .potentials import decide_rcds_pattern
from .search import SearchConfig, discover, record

OK, NO, ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_matrix(path: str, fmt: str) -> RatMatrix:
    text = _read(path)
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "plain"
    return parse_matrix(text, fmt)


def _fracs(xs) -> list[str]:
    return [str(x) for x in xs]


def _rows(X: RatMatrix) -> list[list[str]]:
    return [_fracs(r) for r in X.rows]


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print("\n".join(lines))


def cmd_check(args) -> int:
    X = _load_matrix(args.matrix, args.format)
    if not X.is_square:
        raise CliError("matrix must be square")
    if not is_doubly_stochastic(X):
        _emit(args, {"doubly_stochastic": False, "rcds": False},
              ["not doubly stochastic"])
        return NO
    lo, hi = extreme_diagonal_sums(X)
    if lo.value == hi.value:
        _emit(args, {"doubly_stochastic": True, "rcds": True,
                     "sum": str(lo.value)},
              [f"RCDS, sum = {lo.value}"])
        return OK
    width = hi.value - lo.value
    _emit(args, {"doubly_stochastic": True, "rcds": False,
                 "min": str(lo.value), "max": str(hi.value), "width": str(width)},
          [f"doubly stochastic, not RCDS: min = {lo.value}, "
           f"max = {hi.value}, width = {width}"])
    return NO


def cmd_width(args) -> int:
    X = _load_matrix(args.matrix, args.format)
    w = diagonal_width(X)
    _emit(args, {"width": str(w)}, [str(w)])
    return OK


def cmd_pattern(args) -> int:
    A = parse_pattern(_read(args.pattern))
    d = decide_rcds_pattern(A)
    pot = d.potentials
    payload = {"rcds_pattern": d.is_rcds_pattern, "u": _fracs(pot.u),
               "v": _fracs(pot.v)}
    lines = ["u = " + " ".join(_fracs(pot.u)), "v = " + " ".join(_fracs(pot.v))]
    if d.is_rcds_pattern:
        payload.update(rows=_rows(d.realization), sum=str(d.constant_sum))
        lines = ["RCDS pattern"] + lines + [format_matrix(d.realization),
                                            f"sum = {d.constant_sum}"]
        _emit(args, payload, lines)
        return OK
    payload["violations"] = [list(p) for p in d.violating_positions]
    lines = ["not an RCDS pattern"] + lines + [
        "nonpositive cells: " + " ".join(f"({i},{j})" for i, j in
                                         d.violating_positions)]
    _emit(args, payload, lines)
    return NO


def _construct(family: str, params: list[str]):
    def ints(k):
        if len(params) != k:
            raise CliError(f"{family} expects {k} integer parameter(s)")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise CliError(f"{family} parameters must be integers") from None

    if family == "uniform":
        return cons.uniform(*ints(1))
    if family == "tridiagonal":
        return cons.tridiagonal_rcds(*ints(1))
    if family == "star":
        return cons.star_rcds(*ints(1))
    if family == "corner":
        return cons.corner_block(*ints(3))
    if family == "class1":
        return cons.class1(*ints(3))
    if family == "derangement":
        return cons.derangement_rcds(*ints(1))
    if family == "block2x2":
        return cons.two_by_two_block(*ints(5))
    if family == "regular":
        if len(params) != 2:
            raise CliError("regular expects PATTERNFILE K")
        return cons.regular_rcds(parse_pattern(_read(params[0])), int(params[1]))
    if family == "zigzag":
        if len(params) != 1:
            raise CliError("zigzag expects one JSON spec file")
        obj = json.loads(_read(params[0]))
        spec = cons.ZigZagSpec(tuple(map(tuple, obj["block_dims"])),
                               tuple(obj["constants"]),
                               bool(obj.get("last_block_void",
                                            len(obj["block_dims"]) % 2 == 1)))
        return cons.zigzag(spec)
    raise CliError(f"unknown family {family!r}")


def cmd_construct(args) -> int:
    X = _construct(args.family, args.params)
    if X is None:
        _emit(args, {"feasible": False}, ["infeasible for n ≥ 5"])
        return NO
    _emit(args, {"feasible": True, "n": X.n_rows, "rows": _rows(X)},
          [format_matrix(X)])
    return OK


def cmd_cps(args) -> int:
    A = parse_pattern(_read(args.pattern))
    rep = cps_report(A)
    hat = [["*" if x is None else str(x) for x in r] for r in rep.minor_matrix]
    verdict = rep.gamma is not None
    _emit(args, {"permanent": rep.permanent, "hat": hat, "cps": verdict,
                 "gamma": rep.gamma},
          [f"per = {rep.permanent}"] + [" ".join(r) for r in hat]
          + [f"CPS, gamma = {rep.gamma}" if verdict else "not CPS"])
    return OK if verdict else NO


def cmd_permanent(args) -> int:
    A = parse_pattern(_read(args.pattern))
    p = permanent(A)
    _emit(args, {"permanent": p}, [str(p)])
    return OK


def cmd_search(args) -> int:
    config = SearchConfig(args.n, Fraction(args.density), args.trials, args.seed)
    for P, X in discover(config, workers=args.workers):
        print(record(P, X), flush=True)
    return OK


def _oracle_limit(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("DIAGSUM_ORACLE_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise CliError("DIAGSUM_ORACLE_LIMIT must be an integer") from None
    return DEFAULT_LIMIT


def cmd_oracle(args) -> int:
    X = _load_matrix(args.matrix, args.format)
    st = brute_diagonal_stats(X, _oracle_limit(args.limit))
    _emit(args, {"min": str(st.min), "max": str(st.max),
                 "all_equal": st.all_equal, "count": st.count},
          [f"diagonals = {st.count}", f"min = {st.min}", f"max = {st.max}",
           f"all equal = {'yes' if st.all_equal else 'no'}"])
    return OK


def cmd_gray(args) -> int:
    A = gray_graph_pattern()
    _emit(args, {"n": 27, "pattern": ["".join(map(str, r)) for r in A.rows]},
          [format_pattern(A)])
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagsum",
        description="Doubly stochastic matrices with constant restricted "
                    "diagonal sums.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_cmd(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("matrix", help="matrix file, '-' for stdin")
        p.add_argument("--format", choices=["auto", "plain", "json"],
                       default="auto")
        p.set_defaults(func=fn)
        return p

    matrix_cmd("check", cmd_check, "doubly stochastic / RCDS status")
    matrix_cmd("width", cmd_width, "diagonal width")
    p = matrix_cmd("oracle", cmd_oracle, "brute-force diagonal statistics")
    p.add_argument("--limit", type=int, default=None)

    for name, fn, help in [("pattern", cmd_pattern, "decide an RCDS pattern"),
                           ("cps", cmd_cps, "permanental minors and CPS test"),
                           ("permanent", cmd_permanent, "permanent of a pattern")]:
        p = sub.add_parser(name, help=help)
        p.add_argument("pattern", help="pattern file, '-' for stdin")
        p.set_defaults(func=fn)

    p = sub.add_parser("construct", help="build a matrix from a family")
    p.add_argument("family", choices=["uniform", "regular", "tridiagonal",
                                      "star", "corner", "zigzag", "block2x2",
                                      "class1", "derangement"])
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="random RCDS pattern discovery")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gray", help="print the embedded Gray-graph pattern")
    p.set_defaults(func=cmd_gray)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its usage line
        return OK if exc.code == 0 else ERROR
    try:
        return args.func(args)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); stop quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return OK
    except (CliError, ValueError, ArithmeticError, RuntimeError, OSError,
            KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"diagsum: error: {exc}", file=sys.stderr)
        return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
