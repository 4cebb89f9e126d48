"""Line-based text format shared by every command.

    # comment
    n 10
    k 3
    G 1 3        (generator)        or      S 1 2 3   (k-set)

A document holds either G lines or S lines. Several documents may follow one
another; a new one starts at each `n` line after the first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from src.errors import DomainError, ParseError
from src.setcore.sets import GeneratorCollection, GroundContext, SetFamily, SortedSet

Payload = Union[GeneratorCollection, SetFamily]

GENERATOR = "G"
MEMBER = "S"


@dataclass(frozen=True)
class InputDocument:
    context: GroundContext
    payload: Payload

    @property
    def is_generators(self) -> bool:
        return isinstance(self.payload, GeneratorCollection)


@dataclass
class _Block:
    start: int
    n: int | None = None
    k: int | None = None
    context_line: int = 0
    tag: str | None = None
    sets: list[tuple[int, list[int]]] = field(default_factory=list)


def _integers(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line, f"expected integers, got '{' '.join(tokens)}'") from None


def _read_blocks(text: str) -> list[_Block]:
    blocks: list[_Block] = []
    current: _Block | None = None
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        directive, *rest = line.split()
        if directive == "n" and (current is None or current.n is not None):
            current = _Block(start=number)
            blocks.append(current)
        if current is None:
            raise ParseError(number, f"expected 'n' before '{directive}'")

        if directive in ("n", "k"):
            values = _integers(rest, number)
            if len(values) != 1:
                raise ParseError(number, f"'{directive}' takes exactly one integer")
            if directive == "k" and current.k is not None:
                raise ParseError(number, "duplicate 'k' directive")
            if current.sets:
                raise ParseError(number, f"'{directive}' must precede all set lines")
            setattr(current, directive, values[0])
            current.context_line = number
        elif directive in (GENERATOR, MEMBER):
            if current.tag is not None and current.tag != directive:
                raise ParseError(number, "a document holds either G lines or S lines, not both")
            current.tag = directive
            if not rest:
                raise ParseError(number, "empty set")
            current.sets.append((number, _integers(rest, number)))
        else:
            raise ParseError(number, f"unknown directive '{directive}'")
    if not blocks:
        raise ParseError(max(last_line, 1), "empty input: no document found")
    return blocks


def _build(block: _Block) -> InputDocument:
    if block.n is None or block.k is None:
        raise ParseError(block.start, "document needs both 'n' and 'k'")
    try:
        ctx = GroundContext(block.n, block.k)
    except DomainError as e:
        raise ParseError(block.context_line, str(e)) from None
    if not block.sets:
        raise ParseError(block.context_line, "empty input: no G or S lines")

    seen: dict[SortedSet, int] = {}
    for number, elements in block.sets:
        try:
            item = ctx.generator(elements) if block.tag == GENERATOR else ctx.kset(elements)
        except DomainError as e:
            raise ParseError(number, str(e)) from None
        if item in seen:
            raise ParseError(number, f"duplicate set {item} (first on line {seen[item]})")
        seen[item] = number

    if block.tag == GENERATOR:
        return InputDocument(ctx, GeneratorCollection.of(ctx, seen))
    return InputDocument(ctx, SetFamily.of(ctx, seen))


def parse_documents(text: str) -> list[InputDocument]:
    return [_build(block) for block in _read_blocks(text)]


def parse_document(text: str) -> InputDocument:
    docs = parse_documents(text)
    if len(docs) != 1:
        raise ParseError(1, f"expected a single document, found {len(docs)}")
    return docs[0]


def format_set_line(tag: str, s: SortedSet) -> str:
    return " ".join([tag, *(str(e) for e in s)])


def format_document(doc: InputDocument, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"n {doc.context.n}", f"k {doc.context.k}"]
    if doc.is_generators:
        lines += [format_set_line(GENERATOR, g) for g in doc.payload]
    else:
        lines += [format_set_line(MEMBER, s) for s in doc.payload]
    return "\n".join(lines) + "\n"
