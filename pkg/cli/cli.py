from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import core
from cli import harness


def _fail(message: str) -> int:
    core.logger.error(message)
    print(f"✗ {message}", file=sys.stderr)
    return 2


def build_parser(settings: dict) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", type=Path, default=[])
    common.add_argument("--format", choices=core.FORMATS)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="output", action="store_const", const="json")
    output.add_argument("--tsv", dest="output", action="store_const", const="tsv")
    common.add_argument("--max-k", type=int, default=settings["max_k"])
    common.add_argument("--timeout-ms", type=int, default=settings["timeout_ms"])
    common.add_argument("--jobs", type=int, default=settings["jobs"])
    common.add_argument("--timings", action="store_true")

    parser = argparse.ArgumentParser("surface-walks")
    sub = parser.add_subparsers(dest="cmd", required=True)

    sub.add_parser("min-walk", parents=[common])
    sub.add_parser("min-trail", parents=[common])

    decompose_p = sub.add_parser("decompose", parents=[common])
    decompose_p.add_argument("--m", type=int, default=2)

    verify_p = sub.add_parser("verify")
    checks = verify_p.add_subparsers(dest="check", required=True)
    checks.add_parser("halin", parents=[common])
    walk_p = checks.add_parser("walk-theorem", parents=[common])
    walk_p.add_argument("--chi", type=int, required=True)
    trail_p = checks.add_parser("trail-theorem", parents=[common])
    trail_p.add_argument("--chi", type=int, required=True)

    reduce_p = sub.add_parser("reduce", parents=[common])
    reduce_p.add_argument("--k", type=int, required=True)

    embed_p = sub.add_parser("embed")
    embeds = embed_p.add_subparsers(dest="what", required=True)
    chi_p = embeds.add_parser("chi", parents=[common])
    chi_p.add_argument("--rotation", type=Path, required=True)

    lower_p = sub.add_parser("lower-bound", parents=[common])
    lower_p.add_argument("--chi", type=int, required=True)

    # Settings and log viewing
    config_p = sub.add_parser("config")
    config_p.add_argument("key", nargs="?")
    config_p.add_argument("value", nargs="?")

    logs_p = sub.add_parser("logs")
    logs_p.add_argument("--count", type=int, default=20)

    return parser


def _command_name(args: argparse.Namespace) -> str:
    if args.cmd == "verify":
        return f"verify {args.check}"
    if args.cmd == "embed":
        return f"embed {args.what}"
    return args.cmd


def _check_parameters(command: str, args: argparse.Namespace) -> Optional[str]:
    """A usage problem with the numeric flags, if any."""
    if args.jobs < 1:
        return "--jobs must be at least 1"
    if args.max_k < 1:
        return "--max-k must be at least 1"
    if command == "decompose" and args.m < 1:
        return "--m must be at least 1"
    if command == "reduce" and args.k < 3:
        return "--k must be at least 3"
    if command in ("verify walk-theorem", "verify trail-theorem") and args.chi > 0:
        return "--chi must be at most 0 for the theorem pipelines"
    if command == "lower-bound" and args.chi > 3:
        return "--chi must be at most 3 for lower-bound"
    return None


def run_command(args: argparse.Namespace) -> int:
    """Run one verification command and print its report."""
    command = _command_name(args)
    problem = _check_parameters(command, args)
    if problem:
        return _fail(problem)

    rotation_text = ""
    if command == "embed chi":
        try:
            rotation_text = args.rotation.read_text(encoding="utf-8")
        except OSError as e:
            return _fail(f"cannot read rotation file: {e}")

    if command == "lower-bound":
        items = [harness.lower_bound_input(args.chi)]
    else:
        if not args.input:
            return _fail("--input is required")
        try:
            items = harness.load_inputs(args.input, args.format)
        except (core.ParseError, OSError, ValueError) as e:
            return _fail(str(e))

    options = harness.RunOptions(
        max_k=args.max_k,
        timeout_ms=args.timeout_ms,
        m=getattr(args, "m", 2),
        k=getattr(args, "k", 3),
        chi=getattr(args, "chi", 0),
        rotation_text=rotation_text,
    )
    core.logger.info(f"{command} on {len(items)} graphs with {args.jobs} jobs")
    records = harness.run_pipeline(command, items, options, args.jobs)

    errors = [r for r in records if r.outcome == harness.ERROR]
    if errors:
        for record in errors:
            _fail(f"{record.graph_id}: {record.detail}")
        return 2

    if args.output == "tsv":
        print(harness.render_tsv(records))
    else:
        print(harness.render_json(records, timings=args.timings))

    summary = harness.summarize(records)
    core.logger.success(
        f"{command}: {summary['pass']} pass, {summary['fail']} fail, {summary['skip']} skip"
    )
    return harness.exit_code(records)


def main(argv: Optional[List[str]] = None) -> int:
    settings = core.load_settings()
    log_file = settings.get("log_file")
    core.logger.configure(Path(log_file) if log_file else None, bool(settings.get("debug")))

    parser = build_parser(settings)
    args = parser.parse_args(argv)

    if args.cmd == "config":
        if args.key is None:
            for key, value in settings.items():
                print(f"{key} = {value}")
            return 0
        if args.value is None:
            return _fail("config needs both KEY and VALUE")
        try:
            core.save_setting(args.key, args.value)
        except (KeyError, ValueError) as e:
            return _fail(str(e).strip("'\""))
        print(f"✓ {args.key} = {core.load_settings()[args.key]}")
        return 0

    if args.cmd == "logs":
        logs = core.logger.tail(args.count)
        if logs:
            print("Recent logs:")
            for log in logs:
                print(log)
        else:
            print("No logs available")
        return 0

    return run_command(args)


if __name__ == "__main__":
    sys.exit(main())
