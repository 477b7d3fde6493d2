"""Command-line interface.

Subcommands:
  decompose  read a matrix (JSON) and print its cell label and witnesses
  eval       read a matrix and print the exact Whittaker value
  table      sweep cell labels (k_n = 0) and print one row per cell
  verify     run the identity suites and report pass/fail per check

Matrices are JSON objects {"p": prime, "entries": [["a/b", ...], ...]}
read from a file path or "-" for standard input.  Reports go to
standard output, diagnostics to standard error.  Exit codes: 0 success,
1 verification failure, 2 parse or configuration error, 3 singular
input matrix, 4 table size guard violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import re
import sys

from .hecke import verify_presentation
from .padic import (
    MatrixFormatError,
    SingularMatrixError,
    iwahori_cell,
    matrix_from_json,
)
from .principal_series import run_eigen_checks
from .reporting import CheckResult
from .weyl import all_permutations
from .whittaker import (
    WhittakerValue,
    eval_cell,
    eval_matrix,
    parahoric_check,
    serialize,
    verify_functional_equations,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_SINGULAR = 3
EXIT_GUARD = 4

_TABLE_MAX_RANGE = 6
_TABLE_MAX_N = 4

_SCALE_RE = re.compile(r"^([+-]?)(?:1|q(?:\^(-?\d+))?)$")


class UsageError(Exception):
    """Configuration or input problem; maps to exit code 2."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _parse_scale(text: str) -> tuple[int, int]:
    """Parse a monomial normalization factor: 1, -1, q, -q, q^k, -q^k."""
    m = _SCALE_RE.match(text.strip())
    if m is None:
        raise UsageError(f"bad --scale value {text!r}; expected a signed power of q")
    sign = -1 if m.group(1) == "-" else 1
    if "q" not in text:
        return sign, 0
    exp = m.group(2)
    return sign, int(exp) if exp is not None else 1


def _apply_scale(value: WhittakerValue, sign: int, q_exp: int) -> WhittakerValue:
    if value.zero or (sign, q_exp) == (1, 0):
        return value
    return WhittakerValue.monomial(
        value.sign * sign, value.eps_exp, value.q_exp + q_exp, value.psi
    )


def _read_matrix(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
    return matrix_from_json(text)


def _check_config(n: int, p: int, eps_exp: int) -> int:
    if n < 2:
        raise UsageError(f"--n must be at least 2, got {n}")
    if not _is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")
    return eps_exp % n


def _entries_as_strings(m) -> list[list[str]]:
    return [[str(e) for e in row] for row in m.entries]


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _read_matrix(args.matrix)
    cell = iwahori_cell(g)
    kbar = list(cell.kbar)
    doc = {
        "p": g.p,
        "w": list(cell.w.window),
        "n_factor": _entries_as_strings(cell.n_factor),
        "t0_factor": _entries_as_strings(cell.t0_factor),
        "j_factor": _entries_as_strings(cell.j_factor),
    }
    if args.mod_center:
        central = kbar[-1]
        doc["kbar"] = [k - central for k in kbar]
        doc["central_power"] = central
    else:
        doc["kbar"] = kbar
    print(json.dumps(doc, sort_keys=True))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    g = _read_matrix(args.matrix)
    eps_exp = _check_config(g.n, g.p, args.eps_exp)
    value = eval_matrix(g, eps_exp)
    sign, q_exp = _parse_scale(args.scale)
    value = _apply_scale(value, sign, q_exp)
    print(json.dumps(serialize(value), sort_keys=True))
    return EXIT_OK


def _table_rows(n: int, eps_exp: int, bound: int, include_zeros: bool, sign: int, q_shift: int):
    for tail in itertools.product(range(-bound, bound + 1), repeat=n - 1):
        kbar = tail + (0,)
        for w in all_permutations(n):
            value = _apply_scale(eval_cell(kbar, w, eps_exp), sign, q_shift)
            if value.zero and not include_zeros:
                continue
            yield kbar, w, value


def cmd_table(args: argparse.Namespace) -> int:
    eps_exp = _check_config(args.n, args.p, args.eps_exp)
    if args.range > _TABLE_MAX_RANGE or args.n > _TABLE_MAX_N:
        print(
            f"table guard: need range <= {_TABLE_MAX_RANGE} and n <= {_TABLE_MAX_N}",
            file=sys.stderr,
        )
        return EXIT_GUARD
    if args.range < 0:
        raise UsageError(f"--range must be non-negative, got {args.range}")
    sign, q_shift = _parse_scale(args.scale)
    rows = _table_rows(args.n, eps_exp, args.range, args.include_zeros, sign, q_shift)
    if args.format == "json":
        out = []
        for kbar, w, value in rows:
            doc = {"kbar": list(kbar), "w": list(w.window)}
            doc.update(serialize(value))
            out.append(doc)
        print(json.dumps(out, sort_keys=True))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kbar", "w", "zero", "sign", "eps_exp", "q_exp"])
        for kbar, w, value in rows:
            writer.writerow(
                [
                    " ".join(str(k) for k in kbar),
                    " ".join(str(x) for x in w.window),
                    int(value.zero),
                    value.sign,
                    value.eps_exp,
                    value.q_exp,
                ]
            )
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def _verify_suites(args: argparse.Namespace) -> list[tuple[str, CheckResult]]:
    eps_exp = _check_config(args.n, args.p, args.eps_exp)
    named: list[tuple[str, CheckResult]] = []
    if args.suite in ("hecke", "all"):
        for r in verify_presentation(args.n):
            named.append(("hecke", r))
    if args.suite in ("principal", "all"):
        for r in run_eigen_checks(args.n, args.p, eps_exp, args.samples, args.seed):
            named.append(("principal", r))
    if args.suite in ("whittaker", "all"):
        for r in verify_functional_equations(args.n, args.p, eps_exp, args.samples, args.seed):
            named.append(("whittaker", r))
        for i in range(1, args.n):
            for r in parahoric_check(i, args.n, eps_exp):
                named.append(("whittaker", r))
    return named


def cmd_verify(args: argparse.Namespace) -> int:
    named = _verify_suites(args)
    docs = [
        {"suite": suite, "name": r.name, "passed": r.passed, "detail": r.detail}
        for suite, r in named
    ]
    if args.format == "json":
        print(json.dumps(docs, sort_keys=True))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "name", "passed"])
        for doc in docs:
            writer.writerow([doc["suite"], doc["name"], int(doc["passed"])])
        sys.stdout.write(buf.getvalue())
    failures = [doc for doc in docs if not doc["passed"]]
    for doc in failures:
        print(f"FAIL {doc['suite']}:{doc['name']} {doc['detail']}", file=sys.stderr)
    return EXIT_VERIFY if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinwhit",
        description="Exact Whittaker values on Iwahori cells of GL(n, Q_p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="print the cell label and witnesses of a matrix")
    p_dec.add_argument("matrix", help="matrix JSON path, or - for stdin")
    p_dec.add_argument("--mod-center", action="store_true", help="shift kbar so its last entry is 0")
    p_dec.set_defaults(func=cmd_decompose)

    p_eval = sub.add_parser("eval", help="print the Whittaker value at a matrix")
    p_eval.add_argument("matrix", help="matrix JSON path, or - for stdin")
    p_eval.add_argument("--eps-exp", type=int, default=0)
    p_eval.add_argument("--scale", default="1", help="monomial normalization, e.g. -q^2")
    p_eval.set_defaults(func=cmd_eval)

    p_tab = sub.add_parser("table", help="sweep cell labels with k_n = 0")
    p_tab.add_argument("--n", type=int, required=True)
    p_tab.add_argument("--p", type=int, default=2, help="unused by the closed form; kept for config symmetry")
    p_tab.add_argument("--eps-exp", type=int, default=0)
    p_tab.add_argument("--range", type=int, default=2)
    p_tab.add_argument("--format", choices=("json", "csv"), default="json")
    p_tab.add_argument("--include-zeros", action="store_true")
    p_tab.add_argument("--scale", default="1")
    p_tab.set_defaults(func=cmd_table)

    p_ver = sub.add_parser("verify", help="run the identity suites")
    p_ver.add_argument("suite", choices=("hecke", "principal", "whittaker", "all"))
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--p", type=int, required=True)
    p_ver.add_argument("--eps-exp", type=int, default=0)
    p_ver.add_argument("--samples", type=int, default=20)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--format", choices=("json", "csv"), default="json")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SingularMatrixError as exc:
        print(f"error: singular matrix: {exc}", file=sys.stderr)
        return EXIT_SINGULAR


if __name__ == "__main__":
    sys.exit(main())
