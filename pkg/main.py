"""
fano-lines - Command Line
=========================

Exact counts of lines on generic hypersurfaces of degree 2n-3 in CP^n
and on complete intersections, computed by independent methods that
cross-check one another.

Usage:
------
    # C_n by one method, or all of them with an agreement verdict
    python main.py lines --n 4 --method all

    # The sequence C_2..C_N
    python main.py seq --max 20

    # Recursion coefficients and generating function rows
    python main.py recursion --n 5
    python main.py genfun --terms 6

    # Complete intersections
    python main.py ci --degrees 3,5
    python main.py ci-table --codim 2 --max-degree 9

    # Every verification suite, with a JSON report in reports/
    python main.py verify --max 12 --save-report

Notes:
------
- Values go to stdout, logs to stderr. --quiet keeps only warnings.
- Exit codes: 0 ok, 1 usage or out-of-range request, 2 failed verification.
- FANO_THREADS (environment or .env) sets the joblib worker count.
"""

import argparse
import json
import logging
import sys
import time
from typing import Optional

from src.config import SEQUENCE_DEFAULT_METHOD, VERIFY_DEFAULT_MAX
from src.exceptions import DomainError, FanoError
from src.intersections.complete import ci_dimension_check, ci_grid, ci_lines, ci_table
from src.methods import ALL, METHOD_CHOICES, METHODS, compute_lines, get_method
from src.schubert.recursion import recursion_coeffs, theta_matrix, z_series_check
from src.validation.storage import save_verify_report
from src.validation.verify import run_verification, summary_frame
from src.zblocks.bombieri import bombieri_decomposition


logger = logging.getLogger("fano_lines")

EXIT_OK           = 0
EXIT_USAGE        = 1
EXIT_VERIFICATION = 2


# ---------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------

def emit(line: str) -> None:
    print(line)


def emit_json(payload: dict) -> None:
    print(json.dumps(payload))


# ---------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------

def cmd_lines(n: int, method: str, as_json: bool = False, explain: bool = False) -> int:
    """
    C_n by one method, or a per-method table and verdict for method=all.
    Methods whose range excludes n are listed as skipped.
    """
    if method != ALL:
        logger.info(f"[COMPUTE] C_{n} via {method}")
        value = compute_lines(n, method)
        if as_json:
            emit_json({"n": n, "method": method, "value": str(value)})
        else:
            emit(str(value))
        if explain:
            _explain(n, method)
        return EXIT_OK

    values = {}
    for name, m in METHODS.items():
        if not m.accepts(n):
            values[name] = None
            continue
        logger.info(f"[COMPUTE] C_{n} via {name}")
        values[name] = m.compute(n)

    computed = {v for v in values.values() if v is not None}
    if not computed:
        raise DomainError(f"No method accepts n={n}")
    verdict = "AGREE" if len(computed) == 1 else "DISAGREE"

    for name, value in values.items():
        shown = "skipped" if value is None else str(value)
        if as_json:
            emit_json({"n": n, "method": name, "value": None if value is None else shown})
        else:
            emit(f"{name:<17}{shown}")
    if as_json:
        emit_json({"n": n, "verdict": verdict})
    else:
        emit(f"verdict: {verdict}")

    if verdict == "DISAGREE":
        logger.error(f"[FAIL] methods disagree on C_{n}")
        return EXIT_VERIFICATION
    ran = sum(1 for v in values.values() if v is not None)
    logger.info(f"[OK] {ran} methods agree on C_{n}")
    return EXIT_OK


def _explain(n: int, method: str) -> None:
    if method != "bombieri":
        logger.warning(f"[WARN] --explain only breaks down the bombieri method; ignored for {method}")
        return
    for term in bombieri_decomposition(n):
        emit(
            f"h={term.h}  compositions={term.compositions}  W={term.w}  "
            f"length_sum={term.weighted_sum}  term={term.contribution}"
        )


def cmd_seq(max_n: int, method: str = SEQUENCE_DEFAULT_METHOD, as_json: bool = False) -> int:
    """One value per line for n = 2..max_n (from the method's first valid n)."""
    if max_n < 2:
        raise DomainError(f"seq needs --max >= 2, got {max_n}")
    m = get_method(method)
    start = max(2, m.min_n)
    if start > 2:
        logger.warning(f"[WARN] {method} starts at n={start}")
    m.check(max_n)

    for n in range(start, max_n + 1):
        value = m.compute(n)
        if as_json:
            emit_json({"n": n, "method": method, "value": str(value)})
        else:
            emit(str(value))
    return EXIT_OK


def cmd_recursion(n: int, as_json: bool = False) -> int:
    """B_{n,k} for k = n-1 down to 2, then F_n."""
    coeffs, inhomogeneous = recursion_coeffs(n)
    terms = list(zip(range(2, n), coeffs))[::-1]
    if as_json:
        emit_json({
            "n": n,
            "B": {str(k): str(b) for k, b in terms},
            "F": str(inhomogeneous),
        })
    else:
        emit(" ".join([f"B[{k}]={b}" for k, b in terms] + [f"F={inhomogeneous}"]))
    return EXIT_OK


def cmd_genfun(terms: int, as_json: bool = False) -> int:
    """Rows of theta = A^-1 and the series they produce, checked against Z(x)."""
    theta = theta_matrix(terms)
    series = z_series_check(terms)
    if as_json:
        emit_json({
            "theta": [[str(v) for v in row] for row in theta.rows],
            "u": [str(v) for v in series],
        })
    else:
        for t, row in enumerate(theta.rows):
            emit(f"theta[{t}]: " + " ".join(str(v) for v in row))
        emit("u: " + " ".join(str(v) for v in series))
    return EXIT_OK


def cmd_ci(degrees: list[int], as_json: bool = False) -> int:
    t = ci_dimension_check(degrees)
    if t.ambiguous_even_rule:
        logger.warning(
            f"[WARN] {t.even_count} even degrees: Catalan index shifted by even_count/2 = {t.even_count // 2}"
        )
    logger.info(f"[COMPUTE] lines on a complete intersection {list(t.degrees)} in CP^{t.ambient_dim}")
    value = ci_lines(t)
    if as_json:
        emit_json({"degrees": list(t.degrees), "value": str(value)})
    else:
        emit(str(value))
    return EXIT_OK


def cmd_ci_table(codim: int, max_degree: int, as_json: bool = False) -> int:
    table = ci_table(codim, max_degree)
    if as_json:
        for degrees, value in table.items():
            emit_json({"degrees": list(degrees), "value": str(value)})
    elif codim == 2:
        emit(ci_grid(table, max_degree).to_string())
    else:
        for degrees, value in table.items():
            emit(f"{','.join(map(str, degrees))}: {value}")
    return EXIT_OK


def cmd_verify(max_n: int = VERIFY_DEFAULT_MAX, save_report: bool = False, as_json: bool = False) -> int:
    start = time.time()
    results = run_verification(max_n)
    logger.info(f"[VERIFY] completed in {time.time() - start:.1f}s")

    if as_json:
        for r in results:
            emit_json(r.to_dict())
    else:
        emit(summary_frame(results).to_string(index=False))

    if save_report:
        save_verify_report(results, max_n)

    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.error(f"[FAIL] {len(failed)} suite(s) failed: {', '.join(failed)}")
        return EXIT_VERIFICATION
    logger.info(f"[OK] all {len(results)} suites passed up to n={max_n}")
    return EXIT_OK


# ---------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------

class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EXIT_USAGE."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"[ERROR] {message}\n")
        sys.exit(EXIT_USAGE)


def parse_degrees(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}") from None


def build_parser() -> CliParser:
    parser = CliParser(
        prog="main.py",
        description="fano-lines - exact line counts on hypersurfaces and complete intersections",
        formatter_class=argparse.RawTextHelpFormatter,
        epilog="""
                Examples:
                python main.py lines --n 4 --method all
                python main.py seq --max 20
                python main.py recursion --n 4
                python main.py ci --degrees 3,5
                python main.py verify --max 12 --save-report
        """,
    )
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("lines", help="C_n by one or all methods")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method",
        default=SEQUENCE_DEFAULT_METHOD,
        choices=METHOD_CHOICES,
        metavar="METHOD",
        help=f"One of: {', '.join(METHOD_CHOICES)} (default: {SEQUENCE_DEFAULT_METHOD})",
    )
    p.add_argument("--json", action="store_true", dest="as_json")
    p.add_argument("--explain", action="store_true", help="Per-h breakdown (bombieri only)")

    p = sub.add_parser("seq", help="C_2..C_max")
    p.add_argument("--max", type=int, required=True, dest="max_n")
    p.add_argument("--method", default=SEQUENCE_DEFAULT_METHOD, choices=list(METHODS), metavar="METHOD")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("recursion", help="Coefficients B_{n,k} and F_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("genfun", help="theta rows and the Z(x) series")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("ci", help="Lines on a complete intersection")
    p.add_argument("--degrees", type=parse_degrees, required=True, help="Comma-separated, e.g. 3,5")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("ci-table", help="All complete intersections of a codimension")
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True, dest="max_degree")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("verify", help="Run every verification suite")
    p.add_argument("--max", type=int, default=VERIFY_DEFAULT_MAX, dest="max_n")
    p.add_argument("--save-report", action="store_true", dest="save_report")
    p.add_argument("--json", action="store_true", dest="as_json")

    return parser


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "lines":
        return cmd_lines(args.n, args.method, args.as_json, args.explain)
    if args.command == "seq":
        return cmd_seq(args.max_n, args.method, args.as_json)
    if args.command == "recursion":
        return cmd_recursion(args.n, args.as_json)
    if args.command == "genfun":
        return cmd_genfun(args.terms, args.as_json)
    if args.command == "ci":
        return cmd_ci(args.degrees, args.as_json)
    if args.command == "ci-table":
        return cmd_ci_table(args.codim, args.max_degree, args.as_json)
    return cmd_verify(args.max_n, args.save_report, args.as_json)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    try:
        return dispatch(args)
    except DomainError as e:
        logger.error(f"[ERROR] {e}")
        return EXIT_USAGE
    except FanoError as e:
        logger.error(f"[ERROR] {e}")
        return EXIT_VERIFICATION


# ---------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------

if __name__ == "__main__":
    sys.exit(main())
