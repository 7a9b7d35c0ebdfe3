"""Command-line front end.

Subcommands: table, kernel, verify, bench, bernoulli, euler, a-coeff,
eval, compositions.  Exit codes: 0 success, 1 verification mismatch,
2 invalid flags or values, 3 refused brute-force size (pass --force).

If KERNEL_CACHE_DIR is set, the exact kernel tables are reloaded from
"<dir>/kernel_b.txt" / "<dir>/kernel_e.txt" at startup and written back
after the command runs.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from mpmath import mp

from . import __version__
from .compositions import compositions
from .exactnum import beta_even, format_rational
from .kernels import (
    BRUTE_FORCE_SOFT_LIMIT,
    KernelCache,
    KernelKind,
    kernel_compositions,
    kernel_determinant,
    kernel_recursive,
    read_cache_file,
    shared_cache,
    write_cache_file,
)
from .oracles import bernoulli_even, euler_even
from .sequences import (
    a_from_bernoulli,
    a_from_kb,
    a_recursive,
    bernoulli,
    euler,
    g_bruteforce,
    g_closed,
)
from .specfun import (
    TruncationParams,
    eval_digamma,
    eval_gamma,
    eval_hurwitz_expansion,
    eval_polygamma,
)

_CACHE_FILES = {KernelKind.BERNOULLI: "kernel_b.txt", KernelKind.EULER: "kernel_e.txt"}
_EVAL_DIGITS = 30  # significant digits printed for high-precision floats

_METHODS = {
    "recursion": lambda kind, n: kernel_recursive(kind, n),
    "compositions": kernel_compositions,
    "determinant": kernel_determinant,
}


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def precision_arg(text: str) -> int:
    value = int(text)
    if value < 15:
        raise argparse.ArgumentTypeError(f"working precision must be >= 15, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bekernels",
        description="Exact kernel tables for Bernoulli/Euler numbers and "
        "truncated Gamma-family evaluations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print K(n) for n = 1..upto")
    p.add_argument("--kind", choices=["b", "e"], required=True)
    p.add_argument("--upto", type=positive_int, required=True)
    p.add_argument(
        "--method",
        choices=sorted(_METHODS),
        default="recursion",
    )
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.add_argument("--force", action="store_true", help="allow compositions past n=22")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("kernel", help="print a single K(n)")
    p.add_argument("--kind", choices=["b", "e"], required=True)
    p.add_argument("--n", type=nonnegative_int, required=True)
    p.add_argument("--method", choices=sorted(_METHODS), default="recursion")
    p.add_argument("--force", action="store_true")
    p.set_defaults(handler=cmd_kernel)

    p = sub.add_parser("verify", help="run the cross-method and oracle checks")
    p.add_argument("--exact", type=positive_int, default=40, help="depth for O(n^2) routes")
    p.add_argument("--brute", type=positive_int, default=12, help="depth for brute-force routes")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", help="time each method at each size")
    p.add_argument("--kind", choices=["b", "e"], required=True)
    p.add_argument("--upto", type=positive_int, required=True)
    p.add_argument("--repeats", type=positive_int, default=3)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("bernoulli", help="print B_2..B_(2*upto)")
    p.add_argument("--upto", type=positive_int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=cmd_bernoulli)

    p = sub.add_parser("euler", help="print E_2..E_(2*upto)")
    p.add_argument("--upto", type=positive_int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=cmd_euler)

    p = sub.add_parser("a-coeff", help="print the expansion coefficients a_1..a_upto")
    p.add_argument("--upto", type=positive_int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=cmd_a_coeff)

    p = sub.add_parser("eval", help="evaluate a truncated expansion")
    p.add_argument("target", choices=["gamma", "digamma", "polygamma", "hurwitz"])
    p.add_argument("--x", required=True, help="argument offset (decimal)")
    p.add_argument("--y", type=positive_int, help="polygamma order (polygamma only)")
    p.add_argument("--m0", type=positive_int, help="leading index (hurwitz only, default 1)")
    p.add_argument("--terms", type=nonnegative_int, required=True)
    p.add_argument("--precision", type=precision_arg, default=34)
    p.add_argument("--format", choices=["json", "plain"], default="json")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("compositions", help="list the compositions of n")
    p.add_argument("--n", type=positive_int, required=True)
    p.set_defaults(handler=cmd_compositions)

    return parser


def cmd_table(args: argparse.Namespace) -> int:
    kind = KernelKind(args.kind)
    if args.method == "compositions" and args.upto > BRUTE_FORCE_SOFT_LIMIT and not args.force:
        print(
            f"error: compositions method at upto={args.upto} walks 2**{args.upto - 1} "
            f"tuples; rerun with --force to insist",
            file=sys.stderr,
        )
        return 3
    compute = _METHODS[args.method]
    rows = [(n, compute(kind, n)) for n in range(1, args.upto + 1)]
    if args.format == "json":
        payload = [
            {"n": n, "value": format_rational(value), "method": args.method, "kind": kind.value}
            for n, value in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        separator = "," if args.format == "csv" else "\t"
        for n, value in rows:
            print(f"{n}{separator}{format_rational(value)}")
    return 0


def cmd_kernel(args: argparse.Namespace) -> int:
    kind = KernelKind(args.kind)
    if args.method != "recursion" and args.n == 0:
        print(f"error: method {args.method} requires n >= 1", file=sys.stderr)
        return 2
    if args.method == "compositions" and args.n > BRUTE_FORCE_SOFT_LIMIT and not args.force:
        print(
            f"error: compositions method at n={args.n} walks 2**{args.n - 1} tuples; "
            f"rerun with --force to insist",
            file=sys.stderr,
        )
        return 3
    print(format_rational(_METHODS[args.method](kind, args.n)))
    return 0


def _first_difference(pairs) -> Optional[str]:
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            return f"first difference at {label}: {format_rational(lhs)} vs {format_rational(rhs)}"
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    if args.brute > args.exact:
        print(
            f"error: --brute ({args.brute}) must not exceed --exact ({args.exact})",
            file=sys.stderr,
        )
        return 2
    checks: List[Tuple[str, Optional[str]]] = []
    # Verification always recomputes from scratch; preloaded cache files
    # must not be able to vouch for themselves.
    for kind in KernelKind:
        cache = KernelCache(kind)
        checks.append(
            (
                f"three-way kernel agreement (kind={kind.value}, n=1..{args.brute})",
                _first_difference(
                    (f"n={n} ({route})", kernel_recursive(kind, n, cache), other)
                    for n in range(1, args.brute + 1)
                    for route, other in (
                        ("compositions", kernel_compositions(kind, n)),
                        ("determinant", kernel_determinant(kind, n)),
                    )
                ),
            )
        )
        checks.append(
            (
                f"recursion vs determinant (kind={kind.value}, n=1..{args.exact})",
                _first_difference(
                    (f"n={n}", kernel_recursive(kind, n, cache), kernel_determinant(kind, n))
                    for n in range(1, args.exact + 1)
                ),
            )
        )
    cache_b = KernelCache(KernelKind.BERNOULLI)
    cache_e = KernelCache(KernelKind.EULER)
    checks.append(
        (
            f"coefficient route agreement (n=1..{args.exact})",
            _first_difference(
                (f"n={n} ({route})", a_from_kb(n, cache_b), other)
                for n in range(1, args.exact + 1)
                for route, other in (
                    ("recursion", a_recursive(n)),
                    ("scaled Bernoulli", a_from_bernoulli(n)),
                )
            ),
        )
    )
    checks.append(
        (
            f"Bernoulli numbers vs Akiyama-Tanigawa oracle (n=1..{args.exact})",
            _first_difference(
                (f"n={n}", bernoulli(n, cache_b), bernoulli_even(n))
                for n in range(1, args.exact + 1)
            ),
        )
    )
    checks.append(
        (
            f"Euler numbers vs Seidel oracle (n=1..{args.exact})",
            _first_difference(
                (f"n={n}", euler(n, cache_e), Fraction(euler_even(n)))
                for n in range(1, args.exact + 1)
            ),
        )
    )
    checks.append(
        (
            f"g closed form vs brute force (n=1..{args.brute}, m0=1..5)",
            _first_difference(
                (f"n={n}, m0={m0}", g_closed(n, m0, cache_b), g_bruteforce(n, m0))
                for n in range(1, args.brute + 1)
                for m0 in range(1, 6)
            ),
        )
    )
    checks.append(
        (
            f"beta-scaled g independent of m0 (n=1..{args.brute})",
            _first_difference(
                (f"n={n}, m0={m0}", -beta_even(n, m0) * g_closed(n, m0, cache_b), a_from_kb(n, cache_b))
                for n in range(1, args.brute + 1)
                for m0 in range(1, 6)
            ),
        )
    )
    failed = False
    for name, problem in checks:
        if problem is None:
            print(f"PASS {name}")
        else:
            print(f"FAIL {name}: {problem}")
            failed = True
    return 1 if failed else 0


def _digits(value: Fraction) -> int:
    return max(len(str(abs(value.numerator))), len(str(value.denominator)))


def cmd_bench(args: argparse.Namespace) -> int:
    kind = KernelKind(args.kind)
    records = []
    running_digits = {name: 1 for name in _METHODS}
    for n in range(1, args.upto + 1):
        for method in sorted(_METHODS):
            if method == "compositions" and n > BRUTE_FORCE_SOFT_LIMIT:
                continue
            timings = []
            for _ in range(args.repeats):
                # Recursion gets a fresh cache per repeat so each timing
                # covers the full O(n^2) fill, not a lookup.
                if method == "recursion":
                    cache = KernelCache(kind)
                    start = time.perf_counter_ns()
                    value = kernel_recursive(kind, n, cache)
                else:
                    start = time.perf_counter_ns()
                    value = _METHODS[method](kind, n)
                timings.append(max(1, time.perf_counter_ns() - start))
            running_digits[method] = max(running_digits[method], _digits(value))
            records.append(
                {
                    "method": method,
                    "kind": kind.value,
                    "n": n,
                    "wall_nanos": int(statistics.median(timings)),
                    "max_digits": running_digits[method],
                }
            )
    if args.format == "json":
        print(json.dumps(records, indent=2))
    else:
        print("method,kind,n,wall_nanos,max_digits")
        for r in records:
            print(f"{r['method']},{r['kind']},{r['n']},{r['wall_nanos']},{r['max_digits']}")
    return 0


def _print_indexed(rows: List[Tuple[int, Fraction]], fmt: str) -> None:
    if fmt == "json":
        payload = [{"index": i, "value": format_rational(v)} for i, v in rows]
        print(json.dumps(payload, indent=2))
    else:
        for i, v in rows:
            print(f"{i},{format_rational(v)}")


def cmd_bernoulli(args: argparse.Namespace) -> int:
    _print_indexed([(2 * n, bernoulli(n)) for n in range(1, args.upto + 1)], args.format)
    return 0


def cmd_euler(args: argparse.Namespace) -> int:
    _print_indexed([(2 * n, euler(n)) for n in range(1, args.upto + 1)], args.format)
    return 0


def cmd_a_coeff(args: argparse.Namespace) -> int:
    _print_indexed([(n, a_from_kb(n)) for n in range(1, args.upto + 1)], args.format)
    return 0


def _render_float(value) -> Optional[str]:
    if value is None:
        return None
    return mp.nstr(value, _EVAL_DIGITS)


def cmd_eval(args: argparse.Namespace) -> int:
    if args.y is not None and args.target != "polygamma":
        print("error: --y only applies to the polygamma target", file=sys.stderr)
        return 2
    if args.m0 is not None and args.target != "hurwitz":
        print("error: --m0 only applies to the hurwitz target", file=sys.stderr)
        return 2
    if args.target == "polygamma" and args.y is None:
        print("error: the polygamma target requires --y", file=sys.stderr)
        return 2
    params = TruncationParams(args.terms, args.precision)
    if args.target == "gamma":
        report = eval_gamma(args.x, params)
    elif args.target == "digamma":
        report = eval_digamma(args.x, params)
    elif args.target == "polygamma":
        report = eval_polygamma(args.y, args.x, params)
    else:
        report = eval_hurwitz_expansion(args.m0 or 1, args.x, params)
    payload = {
        "value": _render_float(report.value),
        "terms": report.terms_used,
        "bound": _render_float(report.first_omitted_term_bound),
        "reference": _render_float(report.reference),
        "abs_error": _render_float(report.abs_error),
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, rendered in payload.items():
            print(f"{key} = {rendered}")
    return 0


def cmd_compositions(args: argparse.Namespace) -> int:
    for parts in compositions(args.n):
        print(",".join(map(str, parts)))
    return 0


def _cache_dir() -> Optional[Path]:
    raw = os.environ.get("KERNEL_CACHE_DIR")
    return Path(raw) if raw else None


def _load_persisted() -> None:
    directory = _cache_dir()
    if directory is None:
        return
    for kind, filename in _CACHE_FILES.items():
        path = directory / filename
        if not path.exists():
            continue
        loaded = read_cache_file(path, kind)
        target = shared_cache(kind)
        for n, value in loaded.items():
            target.put(n, value)


def _store_persisted() -> None:
    directory = _cache_dir()
    if directory is None:
        return
    directory.mkdir(parents=True, exist_ok=True)
    for kind, filename in _CACHE_FILES.items():
        write_cache_file(shared_cache(kind), directory / filename)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _load_persisted()
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        code = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        _store_persisted()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


def run() -> None:
    sys.exit(main())
