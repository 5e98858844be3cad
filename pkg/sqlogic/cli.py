"""Command line interface."""
from __future__ import annotations

import argparse
from collections.abc import Sequence
import json
import logging
import sys
from typing import Any

from sqlogic.__version__ import __version__
from sqlogic.compiler import dump_circuit, validate
from sqlogic.const import DEFAULT_RESTART_TRIALS, DEFAULT_SHOTS
from sqlogic.exceptions import AttemptsExhausted, SQLogicException
from sqlogic.harness import VerifyOptions
from sqlogic.models import PrepPath, VerifyMode
from sqlogic.sqltester import SQLogicTester

_LOGGER = logging.getLogger("sqlogic.log")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _is_nested(item: Any) -> bool:
    if isinstance(item, dict):
        return bool(item)
    return isinstance(item, list) and any(isinstance(value, dict) for value in item)


def _format_text(value: Any, indent: int = 0) -> list[str]:
    """Human readable rendering of a report; the data is the same as in JSON mode."""
    pad = "  " * indent
    if isinstance(value, list):
        return [line for item in value for line in _format_text(item, indent)]
    if not isinstance(value, dict):
        return [f"{pad}{json.dumps(value)}"]
    if "passed" in value and "name" in value:
        status = "PASS" if value["passed"] else "FAIL"
        return [
            f"{pad}{status} {value['name']} = {value['value']!r} "
            f"({value['kind']} {value['threshold']!r})"
        ]
    lines: list[str] = []
    for key, item in value.items():
        if key == "tree":
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {line}" for line in item)
        elif _is_nested(item):
            lines.append(f"{pad}{key}:")
            lines.extend(_format_text(item, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(item)}")
    return lines


def _emit(report: Any, output_format: str) -> None:
    if output_format == "json":
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(_format_text(report)))


def _path(value: str | None) -> PrepPath | None:
    return PrepPath(value) if value else None


def _tester(args: argparse.Namespace) -> SQLogicTester:
    return SQLogicTester.from_file(
        args.proposition, args.assignment, _path(getattr(args, "path", None)) or PrepPath.DIRECT
    )


def cmd_parse(args: argparse.Namespace) -> int:
    """Print tree, canonical form and counts."""
    _emit(SQLogicTester(args.proposition).parse_report(), args.format)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    """Print the physicality report."""
    _emit(_tester(args).check(), args.format)
    return EXIT_OK


def cmd_compile(args: argparse.Namespace) -> int:
    """Print the circuit dump; validation findings go to stderr."""
    circuit = _tester(args).compile()
    print(dump_circuit(circuit), end="")
    violations = validate(circuit)
    for violation in violations:
        print(f"violation {violation.index}: {violation.message}", file=sys.stderr)
    return EXIT_FAILED if violations else EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    """Shot statistics, or a single restart-until-success run with --retry."""
    tester = _tester(args)
    if args.retry:
        _emit(tester.run_until_success(args.seed, args.max_attempts), args.format)
    else:
        _emit(tester.run(args.shots, args.seed, args.jobs), args.format)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Verification report; exit status reflects the result."""
    tester = _tester(args)
    paths = (PrepPath(args.path),) if args.path else None
    report = tester.verify(
        VerifyOptions(
            mode=VerifyMode(args.mode),
            prep_paths=paths,
            shots=args.shots,
            seed=args.seed,
            restart_trials=args.restart_trials,
            jobs=args.jobs,
        )
    )
    _emit(report, args.format)
    return EXIT_OK if report["passed"] else EXIT_FAILED


def cmd_analytic(args: argparse.Namespace) -> int:
    """Oracle quantities."""
    _emit(_tester(args).analyze(), args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per tool."""
    parser = argparse.ArgumentParser(
        prog="sqlogic", description="Sequential quantum logic protocol toolchain"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("proposition", help='proposition such as "!(a&b)&c"')
    with_file = argparse.ArgumentParser(add_help=False, parents=[common])
    with_file.add_argument("assignment", help="assignment JSON file")

    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("parse", parents=[common], help="parse a proposition").set_defaults(
        handler=cmd_parse
    )
    subparsers.add_parser(
        "check", parents=[with_file], help="physicality of the coarse-grained test"
    ).set_defaults(handler=cmd_check)

    compile_parser = subparsers.add_parser(
        "compile", parents=[with_file], help="dump the compiled protocol"
    )
    compile_parser.add_argument("--path", choices=[p.value for p in PrepPath], default="direct")
    compile_parser.set_defaults(handler=cmd_compile)

    run_parser = subparsers.add_parser("run", parents=[with_file], help="simulate the protocol")
    run_parser.add_argument("--path", choices=[p.value for p in PrepPath], default="direct")
    run_parser.add_argument("--shots", type=int, default=DEFAULT_SHOTS)
    run_parser.add_argument("--seed", type=int, default=0)
    run_parser.add_argument("--jobs", type=int, default=1)
    run_parser.add_argument("--retry", action="store_true", help="restart until success")
    run_parser.add_argument("--max-attempts", type=int, default=None)
    run_parser.set_defaults(handler=cmd_run)

    verify_parser = subparsers.add_parser(
        "verify", parents=[with_file], help="check the simulator against the oracle"
    )
    verify_parser.add_argument("--mode", choices=[m.value for m in VerifyMode], default="exact")
    verify_parser.add_argument(
        "--path", choices=[p.value for p in PrepPath], default=None, help="default: all supported"
    )
    verify_parser.add_argument("--shots", type=int, default=DEFAULT_SHOTS)
    verify_parser.add_argument("--seed", type=int, default=0)
    verify_parser.add_argument("--restart-trials", type=int, default=DEFAULT_RESTART_TRIALS)
    verify_parser.add_argument("--jobs", type=int, default=1)
    verify_parser.set_defaults(handler=cmd_verify)

    subparsers.add_parser(
        "analytic", parents=[with_file], help="oracle quantities"
    ).set_defaults(handler=cmd_analytic)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line interface and return the exit status."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return int(args.handler(args))
    except AttemptsExhausted as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (SQLogicException, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
