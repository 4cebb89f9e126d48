import pytest

from helpers import FIXTURES
from src.cli.document import (
    InputDocument,
    format_document,
    format_set_line,
    parse_document,
    parse_documents,
)
from src.errors import ParseError
from src.setcore.sets import GroundContext


def test_parse_generator_document():
    doc = parse_document("n 10\nk 3\nG 1 3\nG 2 3 5\n")
    ctx = GroundContext(10, 3)
    assert doc.context == ctx
    assert doc.is_generators
    assert doc.payload == ctx.collection([[1, 3], [2, 3, 5]])


def test_parse_family_document():
    doc = parse_document("n 5\nk 2\nS 1 2\nS 2 3\n")
    assert not doc.is_generators
    assert doc.payload == GroundContext(5, 2).family([[1, 2], [2, 3]])


def test_parse_rejects_small_universe():
    with pytest.raises(ParseError) as info:
        parse_document("n 3\nk 2\nS 1 2\n")
    assert "2k ≤ n" in str(info.value)
    assert info.value.line == 2


def test_comments_and_blank_lines_are_ignored():
    doc = parse_document("# header\n\nn 6\n  # indented\nk 2\n\nS 1 2\n")
    assert doc.payload == GroundContext(6, 2).family([[1, 2]])


@pytest.mark.parametrize("text,line,fragment", [
    ("k 2\nn 5\nS 1 2\n", 1, "expected 'n'"),
    ("n 5\nk 2\nX 1 2\n", 3, "unknown directive"),
    ("n 5\nk 2\nk 2\nS 1 2\n", 3, "duplicate 'k'"),
    ("n 5\nk 2\nS 1 2\nG 1\n", 4, "either G lines or S lines"),
    ("n 5\nk 2\n", 2, "empty input"),
    ("n 5\nk 2\nS 1 2\nS 1 2\n", 4, "duplicate set"),
    ("n 5\nk 2\nS 2 1\n", 3, "strictly increasing"),
    ("n 5\nk 2\nS 1 6\n", 3, ""),
    ("n 5\nk 2\nS 1 2 3\n", 3, ""),
    ("n 5\nk 2\nG 1 2 3\n", 3, ""),
    ("n 5\nk two\nS 1 2\n", 2, "expected integers"),
    ("n 5\nk 2\nS\n", 3, "empty set"),
    ("n 5\nS 1 2\n", 1, "both 'n' and 'k'"),
    ("", 1, "empty input"),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_document(text)
    assert info.value.line == line
    assert fragment in info.value.reason
    assert str(info.value).startswith(f"line {line}: ")


def test_sets_are_stored_in_lexicographic_order():
    doc = parse_document("n 10\nk 3\nG 2 3 5\nG 1 3\n")
    assert [g.elements for g in doc.payload] == [(1, 3), (2, 3, 5)]


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.txt")), ids=lambda p: p.name)
def test_fixture_documents_round_trip(path):
    doc = parse_document(path.read_text())
    assert parse_document(format_document(doc)) == doc
    assert parse_document(format_document(doc, ["a comment"])) == doc


def test_family_round_trip(ctx73):
    doc = InputDocument(ctx73, ctx73.family([[1, 2, 3], [1, 2, 4], [1, 3, 4]]))
    text = format_document(doc)
    assert text == "n 7\nk 3\nS 1 2 3\nS 1 2 4\nS 1 3 4\n"
    assert parse_document(text) == doc


def test_format_set_line(ctx103):
    assert format_set_line("G", ctx103.generator([2, 3, 5])) == "G 2 3 5"


def test_multiple_documents():
    text = "n 10\nk 3\nG 2 3\n\nn 10\nk 3\nG 2 4 5\n# trailing\n"
    docs = parse_documents(text)
    assert [len(d.payload) for d in docs] == [1, 1]
    assert docs[1].payload == GroundContext(10, 3).collection([[2, 4, 5]])
    with pytest.raises(ParseError, match="single document"):
        parse_document(text)


def test_second_document_errors_point_at_their_line():
    with pytest.raises(ParseError) as info:
        parse_documents("n 5\nk 2\nS 1 2\nn 5\nk 2\nS 3 9\n")
    assert info.value.line == 6
