"""Command-line front end.

Each subcommand is a thin client of the report builders that also back the
HTTP service; pass --server to send the same request to a running instance
instead of computing in-process.
"""

import argparse
import json
import os
import sys

from . import __version__, reports
from .suites import SUITE_NAMES


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="bubblecalc",
        description="Half-space bubble constants, quadratic-form certificates, "
                    "threshold tables and verification suites.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--server", help="base URL of a running service to query")

    p = sub.add_parser("constants", parents=[common],
                       help="A, B, S_c (both routes), the remainder weight and cap data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, default=0.0)

    p = sub.add_parser("qmatrix", parents=[common],
                       help="the 4x4 form, its reduction, kappa and the sign certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, default=0.0)
    p.add_argument("--a", type=float, default=2.0 / 3.0)

    p = sub.add_parser("threshold", parents=[common], help="c0(n) table")
    p.add_argument("--n", type=int, nargs="+", required=True, metavar="N",
                   help="single dimension or `min max` range")
    p.add_argument("--tol", type=float, default=1e-8)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=None,
                   help="override the per-case default tolerances")
    p.add_argument("--deterministic", action="store_true",
                   help="suppress the timestamp for byte-stable output")
    p.add_argument("--out", help="write the report to this file instead of stdout")
    p.add_argument("--server", help="base URL of a running service to query")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _use_color():
    return os.environ.get("NO_COLOR") is None and sys.stderr.isatty()


def _status_line(label, ok):
    if _use_color():
        return f"\x1b[32m{label} PASS\x1b[0m" if ok else f"\x1b[31m{label} FAIL\x1b[0m"
    return f"{label} {'PASS' if ok else 'FAIL'}"


def _remote(server, endpoint, payload):
    import httpx

    response = httpx.post(server.rstrip("/") + endpoint, json=payload, timeout=600.0)
    response.raise_for_status()
    return response.json()


def _run_constants(args, parser):
    if args.n < 3:
        parser.error("n must be >= 3")
    if args.server:
        report = _remote(args.server, "/constants", {"n": args.n, "c": args.c})
    else:
        try:
            report = reports.constants_report(args.n, args.c)
        except ValueError as exc:
            parser.error(str(exc))
    text = reports.constants_csv(report) if args.format == "csv" \
        else reports.render_report(report)
    _emit(text, args.out)
    return 0


def _run_qmatrix(args, parser):
    if args.n < 7:
        parser.error("n must be >= 7")
    if args.c > 0.0:
        parser.error("c must be <= 0 for the quadratic form")
    if args.server:
        report = _remote(args.server, "/qmatrix", {"n": args.n, "c": args.c, "a": args.a})
    else:
        try:
            report = reports.qmatrix_report(args.n, args.c, args.a)
        except ValueError as exc:
            parser.error(str(exc))
    if not report["admissible_a"]:
        print(f"warning: a={args.a:g} is outside the admissible interval; "
              "no negative sign is guaranteed", file=sys.stderr)
    text = reports.qmatrix_csv(report) if args.format == "csv" \
        else reports.render_report(report)
    _emit(text, args.out)
    return 0


def _run_threshold(args, parser):
    if len(args.n) == 1:
        n_min = n_max = args.n[0]
    elif len(args.n) == 2:
        n_min, n_max = args.n
    else:
        parser.error("--n takes one or two values")
    if not 7 <= n_min <= n_max:
        parser.error("need 7 <= n_min <= n_max")
    if args.server:
        report = _remote(args.server, "/threshold",
                         {"n_min": n_min, "n_max": n_max, "tol": args.tol})
    else:
        try:
            report = reports.threshold_report(n_min, n_max, args.tol)
        except ValueError as exc:
            parser.error(str(exc))
    text = reports.threshold_csv(report) if args.format == "csv" \
        else reports.render_report(report)
    _emit(text, args.out)
    return 0


def _run_verify(args):
    if args.server:
        report = _remote(args.server, "/verify", {
            "suite": args.suite, "seed": args.seed, "tol": args.tol,
            "deterministic": args.deterministic,
        })
        text = json.dumps(report, indent=2) + "\n"
    else:
        report = reports.verify_report(args.suite, seed=args.seed, tol=args.tol,
                                       deterministic=args.deterministic)
        text = reports.render_report(report)
    _emit(text, args.out)
    summary = report["summary"]
    ok = summary["fail"] == 0
    print(_status_line(f"suite {args.suite}: {summary['pass']} passed, "
                       f"{summary['fail']} failed --", ok), file=sys.stderr)
    return 0 if ok else 1


def _run_serve(args):
    import uvicorn

    uvicorn.run("bubblecalc.service:app", host=args.host, port=args.port)
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "constants":
        return _run_constants(args, parser)
    if args.command == "qmatrix":
        return _run_qmatrix(args, parser)
    if args.command == "threshold":
        return _run_threshold(args, parser)
    if args.command == "verify":
        return _run_verify(args)
    return _run_serve(args)


if __name__ == "__main__":
    sys.exit(main())
