"""Command-line entry point: `logse run|validate|presets`."""

from __future__ import annotations

import argparse
import sys

from ..core import ConfigurationError
from .config import parse_config
from .presets import preset_lines, preset_text
from .studies import run_study


def _config_from_arg(arg: str, paper: bool) -> str:
    if arg.startswith("preset:"):
        return preset_text(arg.removeprefix("preset:"), paper)
    with open(arg, "r") as fh:
        return fh.read()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="logse",
        description="Solver workbench for the regularized logarithmic "
                    "Schrodinger equation on periodic 1D domains.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a study config")
    p_run.add_argument("config", help="config file path, or preset:NAME")
    p_run.add_argument("-o", "--output", help="output directory override")
    p_run.add_argument("--paper", action="store_true",
                       help="paper-faithful variant of a preset (slow)")
    p_run.add_argument("--workers", type=int, help="parallel runs per study")

    p_val = sub.add_parser("validate", help="check a config file")
    p_val.add_argument("config", help="config file path, or preset:NAME")
    p_val.add_argument("--paper", action="store_true")

    p_pre = sub.add_parser("presets", help="list or write named presets")
    p_pre.add_argument("--write", metavar="NAME", help="emit a preset config")
    p_pre.add_argument("--paper", action="store_true")
    p_pre.add_argument("-o", "--output", help="file to write (default stdout)")

    args = parser.parse_args(argv)

    if args.command == "presets":
        if args.write:
            try:
                text = preset_text(args.write, args.paper)
            except KeyError as exc:
                print(exc.args[0], file=sys.stderr)
                return 2
            if args.output:
                with open(args.output, "w") as fh:
                    fh.write(text)
            else:
                print(text, end="")
        else:
            for line in preset_lines():
                print(line)
        return 0

    try:
        text = _config_from_arg(args.config, args.paper)
        cfg = parse_config(text)
    except (OSError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "validate":
        print(f"OK: {cfg.kind} study, schemes {', '.join(cfg.schemes)}, "
              f"grid M={cfg.grid_M} on ({cfg.grid_a:g}, {cfg.grid_b:g}), "
              f"T={cfg.T:g}")
        return 0

    if args.output:
        cfg.output = args.output
    if args.workers:
        cfg.workers = args.workers
    report = run_study(cfg)
    for line in report.summary_lines():
        print(line)
    print(f"outputs in {cfg.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
