"""Command-line front end: a thin client over the job layer.

One command per invocation, JSON report on standard output.  Exit codes:
0 success, 1 solver failure, 2 malformed flags or input.  ``LOG_LEVEL``
(e.g. DEBUG) turns on diagnostics on standard error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from pydantic import ValidationError

from .errors import SolverError
from .jobs import JobOptions, JobSpec, render_json, run_job

COMMANDS = ("root", "all-roots", "preimage", "certify", "demo-composite")


def _pair(text: str) -> tuple[float, float]:
    try:
        re_s, im_s = text.split(",")
        return float(re_s), float(im_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycert",
        description="Certified complex polynomial root and preimage solver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--coeffs",
        help='JSON array of [re,im] pairs, ascending degree, e.g. "[[1,0],[0,0],[1,0]]"',
    )
    common.add_argument("--coeffs-file", help="path to a JSON file with the same array")
    common.add_argument("--target", type=_pair, default=(0.0, 0.0), metavar="RE,IM")
    common.add_argument("--start", type=_pair, default=(0.0, 0.0), metavar="RE,IM")
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--max-steps", type=int, default=10_000)
    common.add_argument("--rho-cap", type=float, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="compact machine output")
    common.add_argument(
        "--trace", action="store_true", help="include the continuation trace"
    )

    for name in COMMANDS:
        sub.add_parser(name, parents=[common])

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _load_coeffs(parser: argparse.ArgumentParser, ns: argparse.Namespace) -> list:
    if ns.coeffs is not None and ns.coeffs_file is not None:
        parser.error("--coeffs and --coeffs-file are mutually exclusive")
    text = ns.coeffs
    if ns.coeffs_file is not None:
        try:
            with open(ns.coeffs_file, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            parser.error(f"cannot read --coeffs-file: {exc}")
    if text is None:
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        parser.error(f"malformed coefficient JSON: {exc}")
    if not isinstance(data, list):
        parser.error("coefficient JSON must be an array of [re, im] pairs")
    return data


def parse_job(argv: list[str]) -> JobSpec:
    """Parse CLI arguments into a job; exits with code 2 on bad input."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "serve":
        parser.error("serve is not a job command")
    coeffs = _load_coeffs(parser, ns)
    try:
        return JobSpec(
            command=ns.command,
            coeffs=coeffs,
            options=JobOptions(
                target=ns.target,
                start=ns.start,
                tol=ns.tol,
                max_steps=ns.max_steps,
                rho_cap=ns.rho_cap,
                seed=ns.seed,
                trace=ns.trace,
                output_format="json" if ns.json else "pretty",
            ),
        )
    except ValidationError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")  # parser.error exits


def render_args(job: JobSpec) -> list[str]:
    """Inverse of ``parse_job`` for valid jobs (round-trips exactly)."""
    opts = job.options
    argv = [job.command]
    if job.coeffs:
        argv += ["--coeffs", json.dumps([[re, im] for re, im in job.coeffs])]
    argv += ["--target", f"{opts.target[0]!r},{opts.target[1]!r}"]
    argv += ["--start", f"{opts.start[0]!r},{opts.start[1]!r}"]
    argv += ["--tol", repr(opts.tol)]
    argv += ["--max-steps", str(opts.max_steps)]
    if opts.rho_cap is not None:
        argv += ["--rho-cap", repr(opts.rho_cap)]
    argv += ["--seed", str(opts.seed)]
    if opts.trace:
        argv.append("--trace")
    if opts.output_format == "json":
        argv.append("--json")
    return argv


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        stream=sys.stderr,
        level=os.environ.get("LOG_LEVEL", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    if argv is None:
        argv = sys.argv[1:]
    if argv and argv[0] == "serve":
        ns = build_parser().parse_args(argv)
        import uvicorn

        from .service import app

        uvicorn.run(app, host=ns.host, port=ns.port)
        return 0
    job = parse_job(argv)
    indent = None if job.options.output_format == "json" else 2
    try:
        report = run_job(job)
    except SolverError as exc:
        print(render_json({"error": type(exc).__name__, "message": str(exc)}, indent=indent))
        return 1
    print(render_json(report, indent=indent))
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
