from __future__ import annotations

import argparse
import sys
from pathlib import Path

from src.cli.commands import (
    COMMANDS,
    EXIT_USAGE,
    PRODUCERS,
    RunOptions,
    run,
)
from src.cli.document import parse_documents
from src.config import Config
from src.errors import LcifError
from src.mlcif.named import NAMED_FAMILIES
from src.scan.base import BaseScanner
from src.scan.serial import SerialScanner
from src.utils.event_bus import CLIQUE_FOUND, CLOSURE_ADDED, SHIFT_APPLIED, EventBus
from src.utils.logger import set_level, setup_logger

logger = setup_logger("lcif")

SHIFT_ORDER_HELP = (
    "compress sweeps the pairs (i,j), i < j, in lexicographic order until a full sweep "
    "changes nothing; within one (i,j) pass every decision is taken against the family "
    "as it stood when the pass began. The fixed point depends on this order."
)


def build_scanner(config: Config) -> BaseScanner:
    if config.search.threads > 1:
        from src.scan.threaded import ThreadedScanner
        return ThreadedScanner(config.search.threads)
    return SerialScanner()


def build_event_bus() -> EventBus:
    bus = EventBus()
    bus.on(SHIFT_APPLIED, lambda data: logger.debug(
        f"shift ({data[0].i},{data[0].j}) moved {data[0].moved}; family now {len(data[1])} sets"))
    bus.on(CLOSURE_ADDED, lambda data: logger.debug(f"closure of {data[0]} added {data[1]} sets"))
    bus.on(CLIQUE_FOUND, lambda entry: logger.debug(
        f"left-compressed maximal family with generators {' '.join(map(str, entry.generators))}"))
    return bus


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="Read documents from this file (default: stdin)")
    common.add_argument("--output", help="Write results to this file (default: stdout)")
    common.add_argument("--n", type=int, help="Universe size for producing commands")
    common.add_argument("--k", type=int, help="Uniformity for producing commands")
    common.add_argument("--seed", type=int, help="Seed for the sample command")
    common.add_argument("--budget", type=int, help="Max C(n,k) for enumerate-mlcif")
    common.add_argument("--threads", type=int, help="Worker threads for pair and clique scans")
    common.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"),
                        help="1-based indices of the two sets used by bond/oracle")
    common.add_argument("--config", default="config.yaml",
                        help="Path to config file (default: config.yaml)")
    common.add_argument("--log-level", help="Override the configured log level")

    parser = argparse.ArgumentParser(
        prog="lcif",
        description="Left-compressed intersecting families: construct, check, certify, explore.",
        epilog=SHIFT_ORDER_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in COMMANDS:
        p = sub.add_parser(command, parents=[common],
                           epilog=SHIFT_ORDER_HELP if command == "compress" else None)
        if command == "named":
            p.add_argument("name", choices=sorted(NAMED_FAMILIES))
        if command == "sample":
            p.add_argument("--compressed", action="store_true",
                           help="Compress the sample into a left-compressed intersecting family")
    return parser


def apply_overrides(config: Config, args: argparse.Namespace) -> None:
    if args.log_level:
        config.logging.level = args.log_level
    if args.seed is not None:
        config.search.seed = args.seed
    if args.budget is not None:
        config.search.budget = args.budget
    if args.threads is not None:
        config.search.threads = args.threads
    config._validate()


def read_input(path: str | None) -> str:
    if path:
        return Path(path).read_text(encoding="utf-8")
    return sys.stdin.read()


def write_output(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        config = Config.load(args.config)
        apply_overrides(config, args)
    except ValueError as e:
        logger.error(str(e))
        return EXIT_USAGE
    set_level(config.logging.level)

    opts = RunOptions(
        config=config,
        scanner=build_scanner(config),
        bus=build_event_bus(),
        n=args.n,
        k=args.k,
        pair=tuple(args.pair) if args.pair else None,
        name=getattr(args, "name", None),
        compressed=getattr(args, "compressed", False),
    )
    logger.debug(f"Running {args.command} ({opts.scanner.describe()}).")

    try:
        docs = [] if args.command in PRODUCERS else parse_documents(read_input(args.input))
        outcome = run(args.command, docs, opts)
    except (LcifError, FileNotFoundError) as e:
        logger.error(str(e))
        return EXIT_USAGE

    write_output(args.output, outcome.text())
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
