"""Subcommand handlers. Each returns an exit code and the lines for stdout.

Exit codes: 0 the property holds or the construction succeeded, 1 the
property fails (a certificate is printed), 2 usage or parse error.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from src.cli.document import InputDocument, format_document
from src.config import Config
from src.errors import PreconditionError, UsageError
from src.genfam.generators import build_family, extract_generators, pi_collection
from src.mlcif.enumeration import enumerate_mlcif
from src.mlcif.extension import extend_and_audit
from src.mlcif.maximality import is_maximal_intersecting
from src.mlcif.named import named_family
from src.scan.base import BaseScanner
from src.setcore.order import find_downclosure_violation, find_shift_violation, has_common_element
from src.setcore.sets import GeneratorCollection, GroundContext, SetFamily, SortedSet
from src.shifting.shift import compress, sample_intersecting_family, sample_lcif
from src.sicheck.bond import bond_condition
from src.sicheck.collection import check_collection, check_cross_collections
from src.sicheck.oracle import find_disjoint_pair, find_dominated_disjoint_pair
from src.utils.event_bus import EventBus
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2


@dataclass
class Outcome:
    code: int
    lines: list[str] = field(default_factory=list)

    def text(self) -> str:
        return "".join(line if line.endswith("\n") else line + "\n" for line in self.lines)


@dataclass
class RunOptions:
    config: Config
    scanner: BaseScanner
    bus: EventBus
    n: int | None = None
    k: int | None = None
    pair: tuple[int, int] | None = None
    name: str | None = None
    compressed: bool = False


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def pair_text(a: SortedSet, b: SortedSet) -> str:
    return f"({a},{b})"


def witness_line(witness: tuple) -> str:
    return f"witness {pair_text(witness[0], witness[1])}"


def _verdict(flag: bool) -> int:
    return EXIT_HOLDS if flag else EXIT_FAILS


def _generators(doc: InputDocument, command: str) -> GeneratorCollection:
    if not doc.is_generators:
        raise UsageError(f"{command} expects a generator document (G lines)")
    return doc.payload


def _family(doc: InputDocument, opts: RunOptions) -> SetFamily:
    """S documents as given; G documents are built first."""
    if doc.is_generators:
        return build_family(doc.payload, opts.scanner)
    return doc.payload


def _context(opts: RunOptions, command: str) -> GroundContext:
    if opts.n is None or opts.k is None:
        raise UsageError(f"{command} needs --n and --k")
    return GroundContext(opts.n, opts.k)


def _selected_pair(doc: InputDocument, opts: RunOptions, command: str) -> tuple[SortedSet, SortedSet]:
    if opts.pair is None:
        raise UsageError(f"{command} needs --pair I J")
    items = doc.payload.generators if doc.is_generators else doc.payload.members
    i, j = opts.pair
    for index in (i, j):
        if not 1 <= index <= len(items):
            raise UsageError(f"pair index {index} outside 1..{len(items)}")
    return items[i - 1], items[j - 1]


def cmd_build(doc: InputDocument, opts: RunOptions) -> Outcome:
    family = build_family(_generators(doc, "build"), opts.scanner)
    logger.info(f"Built {len(family)} k-sets on {doc.context}.")
    return Outcome(EXIT_HOLDS, [format_document(InputDocument(doc.context, family))])


def cmd_check_generators(doc: InputDocument, opts: RunOptions) -> Outcome:
    verdict = check_collection(_generators(doc, "check-generators"), opts.scanner)
    lines = []
    for p in verdict.pairs:
        if p.verdict.holds:
            lines.append(f"pair {pair_text(p.first, p.second)} level {p.verdict.level}")
        else:
            lines.append(f"pair {pair_text(p.first, p.second)} fails")
    if verdict.witness is not None:
        if opts.config.output.trace:
            for rec in verdict.witness.levels:
                g_part = "{" + ",".join(map(str, rec.g_part)) + "}"
                h_part = "{" + ",".join(map(str, rec.h_part)) + "}"
                lines.append(f"# level {rec.level} x {rec.x} y {rec.y} z {rec.z} G {g_part} H {h_part}")
        lines.append(witness_line(verdict.witness.pair))
    return Outcome(_verdict(verdict.passes), lines)


def cmd_check_family(doc: InputDocument, opts: RunOptions) -> Outcome:
    family = _family(doc, opts)
    disjoint = find_disjoint_pair(family, family, opts.config.search.mask_chunk)
    lines = [f"intersecting {yes_no(disjoint is None)}"]
    if disjoint is not None:
        lines.append(witness_line(disjoint))
    common = has_common_element(family)
    lines.append(f"common-element {yes_no(common)}")
    lines.append(f"empty-intersection {yes_no(not common)}")
    return Outcome(_verdict(disjoint is None), lines)


def cmd_compressed(doc: InputDocument, opts: RunOptions) -> Outcome:
    family = _family(doc, opts)
    lines = []
    down = find_downclosure_violation(family)
    if down is None:
        lines.append("downclosed yes")
    else:
        lines.append(f"downclosed no violation {pair_text(*down)}")
    shift = find_shift_violation(family)
    if shift is None:
        lines.append("shiftstable yes")
    else:
        a, shifted, i, j = shift
        lines.append(f"shiftstable no violation {pair_text(a, shifted)} shift {i} {j}")
    return Outcome(_verdict(down is None and shift is None), lines)


def cmd_compress(doc: InputDocument, opts: RunOptions) -> Outcome:
    family, report = compress(_family(doc, opts), opts.bus)
    comments = [f"rounds {report.rounds}"] + [f"shift {line}" for line in report.lines()]
    return Outcome(EXIT_HOLDS, [format_document(InputDocument(doc.context, family), comments)])


def cmd_generators(doc: InputDocument, opts: RunOptions) -> Outcome:
    gc = extract_generators(_family(doc, opts))
    return Outcome(EXIT_HOLDS, [format_document(InputDocument(doc.context, gc))])


def cmd_pi(doc: InputDocument, opts: RunOptions) -> Outcome:
    gc = pi_collection(_generators(doc, "pi"))
    return Outcome(EXIT_HOLDS, [format_document(InputDocument(doc.context, gc))])


def cmd_bond(doc: InputDocument, opts: RunOptions) -> Outcome:
    a, b = _selected_pair(doc, opts, "bond")
    k = doc.context.k
    if len(a) != k or len(b) != k:
        raise UsageError(f"bond needs two k-sets, got {a} and {b}")
    holds = bond_condition(a, b)
    return Outcome(_verdict(holds), [f"bond {pair_text(a, b)} {yes_no(holds)}"])


def cmd_oracle(doc: InputDocument, opts: RunOptions) -> Outcome:
    g, h = _selected_pair(doc, opts, "oracle")
    witness = find_dominated_disjoint_pair(g, h)
    lines = [f"strongly-intersecting {pair_text(g, h)} {yes_no(witness is None)}"]
    if witness is not None:
        lines.append(witness_line(witness))
    return Outcome(_verdict(witness is None), lines)


def cmd_maximal(doc: InputDocument, opts: RunOptions) -> Outcome:
    verdict = is_maximal_intersecting(_family(doc, opts))
    lines = [f"maximal {yes_no(verdict.is_maximal)}"]
    if verdict.blocker is not None:
        lines.append(f"blocker {verdict.blocker}")
    return Outcome(_verdict(verdict.is_maximal), lines)


def cmd_extend(doc: InputDocument, opts: RunOptions) -> Outcome:
    outcome = extend_and_audit(_family(doc, opts), opts.bus)
    comments = []
    if outcome.finding is not None:
        comments.append(f"finding {outcome.finding} blocker {outcome.verdict.blocker}")
    return Outcome(EXIT_HOLDS, [format_document(InputDocument(doc.context, outcome.family), comments)])


def cmd_named(opts: RunOptions) -> Outcome:
    if opts.name is None:
        raise UsageError("named needs a family name")
    ctx = _context(opts, "named")
    family = named_family(opts.name, ctx)
    return Outcome(EXIT_HOLDS, [format_document(InputDocument(ctx, family), [f"named {opts.name}"])])


def cmd_enumerate_mlcif(opts: RunOptions) -> Outcome:
    ctx = _context(opts, "enumerate-mlcif")
    catalogue = enumerate_mlcif(ctx, opts.config.search.budget, opts.scanner, opts.bus)
    blocks = [f"# mlcif n {ctx.n} k {ctx.k} count {len(catalogue)}\n"]
    for entry in catalogue.entries:
        gens = " ".join(str(g) for g in entry.generators)
        blocks.append(format_document(InputDocument(ctx, entry.family), [f"generators: {gens}"]))
    return Outcome(EXIT_HOLDS, ["\n".join(blocks)])


def cmd_sample(opts: RunOptions) -> Outcome:
    ctx = _context(opts, "sample")
    seed = opts.config.search.seed
    rng = random.Random(seed)
    family = sample_lcif(ctx, rng) if opts.compressed else sample_intersecting_family(ctx, rng)
    comments = [f"sample seed {seed}" + (" compressed" if opts.compressed else "")]
    return Outcome(EXIT_HOLDS, [format_document(InputDocument(ctx, family), comments)])


def cmd_cross(docs: list[InputDocument], opts: RunOptions) -> Outcome:
    if len(docs) != 2:
        raise UsageError(f"cross expects exactly two generator documents, got {len(docs)}")
    first, second = (_generators(d, "cross") for d in docs)
    verdict = check_cross_collections(first, second, opts.scanner)
    lines = [f"cross-intersecting {yes_no(verdict.passes)}"]
    if verdict.failure is not None:
        lines.append(f"pair {pair_text(verdict.failure.first, verdict.failure.second)} fails")
        lines.append(witness_line(verdict.witness.pair))
    return Outcome(_verdict(verdict.passes), lines)


PER_DOCUMENT: dict[str, Callable[[InputDocument, RunOptions], Outcome]] = {
    "build": cmd_build,
    "check-generators": cmd_check_generators,
    "check-family": cmd_check_family,
    "compressed?": cmd_compressed,
    "compress": cmd_compress,
    "generators": cmd_generators,
    "pi": cmd_pi,
    "bond": cmd_bond,
    "oracle": cmd_oracle,
    "maximal?": cmd_maximal,
    "extend": cmd_extend,
}

PRODUCERS: dict[str, Callable[[RunOptions], Outcome]] = {
    "named": cmd_named,
    "enumerate-mlcif": cmd_enumerate_mlcif,
    "sample": cmd_sample,
}

WHOLE_INPUT: dict[str, Callable[[list[InputDocument], RunOptions], Outcome]] = {
    "cross": cmd_cross,
}

COMMANDS = sorted([*PER_DOCUMENT, *PRODUCERS, *WHOLE_INPUT])


def _guarded(fn: Callable[[], Outcome]) -> Outcome:
    """Turn a failed precondition into exit 1 with its certificate."""
    try:
        return fn()
    except PreconditionError as e:
        lines = [f"precondition-failed {e}"]
        if e.witness is not None:
            lines.append(witness_line(e.witness))
        return Outcome(EXIT_FAILS, lines)


def run(command: str, docs: list[InputDocument], opts: RunOptions) -> Outcome:
    """Dispatch one subcommand; documents are processed in order, exit code is the worst."""
    if command in PRODUCERS:
        return _guarded(lambda: PRODUCERS[command](opts))
    if command in WHOLE_INPUT:
        return _guarded(lambda: WHOLE_INPUT[command](docs, opts))
    if command not in PER_DOCUMENT:
        raise UsageError(f"unknown command '{command}'")
    if not docs:
        raise UsageError(f"{command} needs an input document")

    handler = PER_DOCUMENT[command]
    outcomes = [_guarded(lambda d=d: handler(d, opts)) for d in docs]
    if len(outcomes) == 1:
        return outcomes[0]
    lines = []
    for index, outcome in enumerate(outcomes):
        if index:
            lines.append("")
        lines.extend(outcome.lines)
    return Outcome(max(o.code for o in outcomes), lines)
