"""Answer values and their canonical textual literal form.

Every step of a prompting program produces an answer: plain text, an
(item, position) pair, or an arbitrarily nested list of answers. The
literal grammar defined here is the single on-the-wire form used wherever
an answer appears on a line: `A:` trace lines, prompt files, dataset gold
fields, and cassette completions.

Grammar (one literal per line):

* text renders double-quoted, with ``\\``, ``\"``, ``\\n``, ``\\r`` escapes;
  the parser also accepts unquoted bare text for robustness against
  model generations
* lists render bracketed, elements separated by comma + space
* pairs render ``(item, position)``; the item is left bare when it
  contains no delimiter characters, quoted otherwise

Strings are sequences of Unicode scalar values; a "letter" means one
scalar value, not a grapheme cluster.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "AnswerValue",
    "Text",
    "Pair",
    "ListAnswer",
    "AnswerParseError",
    "UnbalancedBrackets",
    "UnterminatedQuote",
    "EmptyLiteral",
    "parse_answer_literal",
    "serialize_answer",
    "render_unquoted",
]


class AnswerParseError(ValueError):
    """An answer literal could not be parsed (malformed generation)."""


class UnbalancedBrackets(AnswerParseError):
    pass


class UnterminatedQuote(AnswerParseError):
    pass


class EmptyLiteral(AnswerParseError):
    pass


@dataclass(frozen=True)
class Text:
    value: str


@dataclass(frozen=True)
class Pair:
    """An item tagged with its 1-based position, e.g. a letter in a word."""

    item: str
    position: int

    def __post_init__(self) -> None:
        if not self.item:
            raise ValueError("Pair item must be a non-empty string")
        if self.position < 1:
            raise ValueError("Pair position must be >= 1")


@dataclass(frozen=True, init=False)
class ListAnswer:
    items: tuple["AnswerValue", ...]

    def __init__(self, items: Iterable["AnswerValue"] = ()) -> None:
        object.__setattr__(self, "items", tuple(items))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


AnswerValue = Union[Text, Pair, ListAnswer]

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {"\\": "\\", '"': '"', "n": "\n", "r": "\r"}

# Characters that force quoting of a pair item; they would otherwise be
# swallowed by the surrounding list/pair structure.
_PAIR_ITEM_UNSAFE = re.compile(r'[()\[\],"\\\n\r]')


def _quote(s: str) -> str:
    return '"' + "".join(_ESCAPES.get(ch, ch) for ch in s) + '"'


def serialize_answer(v: AnswerValue) -> str:
    """Render an answer value as its canonical literal.

    The output re-parses to an equal value via parse_answer_literal.
    """
    if isinstance(v, Text):
        return _quote(v.value)
    if isinstance(v, Pair):
        item = v.item
        if _PAIR_ITEM_UNSAFE.search(item) or item != item.strip() or not item:
            item = _quote(item)
        return f"({item}, {v.position})"
    if isinstance(v, ListAnswer):
        return "[" + ", ".join(serialize_answer(e) for e in v.items) + "]"
    raise TypeError(f"not an answer value: {v!r}")


def render_unquoted(v: AnswerValue) -> str:
    """Render for inline use inside question text: top-level text loses
    its quotes so generated sub-questions read naturally."""
    if isinstance(v, Text):
        return v.value
    return serialize_answer(v)


def parse_answer_literal(raw: str) -> AnswerValue:
    """Parse the text after an ``A:`` marker into an answer value.

    Bracketed forms parse as lists (``(x, n)`` elements as pairs, quoted
    strings unescaped); a lone double-quoted token parses as text with the
    quotes stripped; anything else is bare text.
    """
    s = raw.strip()
    if not s:
        raise EmptyLiteral("empty answer literal")
    if s.startswith("["):
        value, end = _parse_list(s, 0)
        if s[end:].strip():
            raise UnbalancedBrackets(f"trailing content after list: {raw!r}")
        return value
    if s.startswith('"'):
        text, end = _parse_quoted(s, 0)
        if not s[end:].strip():
            return Text(text)
        return Text(s)  # quoted fragment inside larger bare text
    pair = _try_parse_pair(s)
    if pair is not None:
        return pair
    return Text(s)


def _parse_quoted(s: str, start: int) -> tuple[str, int]:
    """Parse a double-quoted token at s[start]; returns (text, end index)."""
    assert s[start] == '"'
    out: list[str] = []
    i = start + 1
    while i < len(s):
        ch = s[i]
        if ch == "\\":
            if i + 1 >= len(s):
                raise UnterminatedQuote(f"dangling escape in {s!r}")
            out.append(_UNESCAPES.get(s[i + 1], s[i + 1]))
            i += 2
            continue
        if ch == '"':
            return "".join(out), i + 1
        out.append(ch)
        i += 1
    raise UnterminatedQuote(f"unterminated quote in {s!r}")


def _split_bracketed(s: str, start: int) -> tuple[list[str], int]:
    """Split the bracketed region at s[start] into top-level element
    strings, honoring nested brackets and quoted spans."""
    assert s[start] == "["
    elements: list[str] = []
    depth = 1
    buf: list[str] = []
    i = start + 1
    while i < len(s):
        ch = s[i]
        if ch == '"':
            _, end = _parse_quoted(s, i)
            buf.append(s[i:end])
            i = end
            continue
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                elements.append("".join(buf))
                return elements, i + 1
        elif ch == "," and depth == 1:
            elements.append("".join(buf))
            buf = []
            i += 1
            continue
        buf.append(ch)
        i += 1
    raise UnbalancedBrackets(f"unbalanced brackets in {s!r}")


def _parse_list(s: str, start: int) -> tuple[ListAnswer, int]:
    raw_elements, end = _split_bracketed(s, start)
    items: list[AnswerValue] = []
    for raw in raw_elements:
        element = raw.strip()
        if not element:
            continue  # tolerate stray commas in generations
        items.append(_parse_element(element))
    return ListAnswer(items), end


def _parse_element(s: str) -> AnswerValue:
    if s.startswith("["):
        value, end = _parse_list(s, 0)
        if s[end:].strip():
            raise UnbalancedBrackets(f"trailing content after list: {s!r}")
        return value
    if s.startswith('"'):
        text, end = _parse_quoted(s, 0)
        if not s[end:].strip():
            return Text(text)
        return Text(s)
    pair = _try_parse_pair(s)
    if pair is not None:
        return pair
    return Text(s)


def _try_parse_pair(s: str) -> Pair | None:
    """Parse ``(item, position)`` if s is exactly that shape, else None."""
    if not (s.startswith("(") and s.endswith(")")):
        return None
    inner = s[1:-1]
    # Split at the last top-level comma; the item may be quoted.
    parts: list[str] = []
    buf: list[str] = []
    i = 0
    while i < len(inner):
        ch = inner[i]
        if ch == '"':
            try:
                _, end = _parse_quoted(inner, i)
            except UnterminatedQuote:
                return None
            buf.append(inner[i:end])
            i = end
            continue
        if ch == ",":
            parts.append("".join(buf))
            buf = []
            i += 1
            continue
        buf.append(ch)
        i += 1
    parts.append("".join(buf))
    if len(parts) != 2:
        return None
    item_raw, pos_raw = parts[0].strip(), parts[1].strip()
    if not re.fullmatch(r"\d+", pos_raw):
        return None
    position = int(pos_raw)
    if position < 1:
        return None
    if item_raw.startswith('"'):
        try:
            item, end = _parse_quoted(item_raw, 0)
        except UnterminatedQuote:
            return None
        if item_raw[end:].strip():
            return None
    else:
        item = item_raw
    if not item:
        return None
    return Pair(item, position)
