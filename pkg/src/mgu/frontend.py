"""Text syntax for types, constraint files, substitutions, and traces.

Grammar, with arrows associating to the right:

    type   := atom | atom "->" type
    atom   := ident | "(" type ")"
    ident  := letter (letter | digit | "_")*

A constraint file holds one ``type = type`` equation per line. ``#``
starts a comment that runs to the end of the line; blank lines are
skipped. All positions reported in errors are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .constraint import Constraint
from .substitution import Substitution
from .term import Arrow, TypeTerm, TypeVar, Var
from .unify import Rule, TraceEvent


class ParseError(Exception):
    """Syntax error with position info and a hint at what was expected."""

    def __init__(
        self, line: int, column: int, message: str, expected: Sequence[str] = ()
    ) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.expected = list(expected)


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | arrow | lparen | rparen | equals | end
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return "end of input" if self.kind == "end" else f"'{self.text}'"


_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
_IDENT_BODY = _IDENT_START | set("0123456789_")


def _tokenize(text: str, line: int = 1) -> list[_Token]:
    tokens: list[_Token] = []
    col = 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t\r":
            i += 1
            col += 1
        elif ch == "\n":
            i += 1
            line += 1
            col = 1
        elif ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
                col += 1
        elif ch == "(":
            tokens.append(_Token("lparen", "(", line, col))
            i += 1
            col += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ")", line, col))
            i += 1
            col += 1
        elif ch == "=":
            tokens.append(_Token("equals", "=", line, col))
            i += 1
            col += 1
        elif ch == "-" and text[i : i + 2] == "->":
            tokens.append(_Token("arrow", "->", line, col))
            i += 2
            col += 2
        elif ch in _IDENT_START:
            start = i
            start_col = col
            while i < len(text) and text[i] in _IDENT_BODY:
                i += 1
                col += 1
            tokens.append(_Token("ident", text[start:i], line, start_col))
        else:
            raise ParseError(
                line,
                col,
                f"unexpected character {ch!r}",
                expected=["identifier", "'('", "'->'", "'='"],
            )
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self._tokens = tokens
        self._pos = 0

    def peek(self) -> _Token:
        return self._tokens[self._pos]

    def advance(self) -> _Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def expect(self, kind: str, label: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                tok.line,
                tok.column,
                f"expected {label}, found {tok.describe()}",
                expected=[label],
            )
        return self.advance()

    def type_(self) -> TypeTerm:
        t = self.atom()
        if self.peek().kind == "arrow":
            self.advance()
            return Arrow(t, self.type_())
        return t

    def atom(self) -> TypeTerm:
        tok = self.peek()
        if tok.kind == "ident":
            self.advance()
            return Var(TypeVar(tok.text))
        if tok.kind == "lparen":
            self.advance()
            t = self.type_()
            self.expect("rparen", "')'")
            return t
        raise ParseError(
            tok.line,
            tok.column,
            f"expected a type, found {tok.describe()}",
            expected=["identifier", "'('"],
        )


def parse_type(text: str) -> TypeTerm:
    """Parse a single type term; trailing input is an error."""
    parser = _Parser(_tokenize(text))
    t = parser.type_()
    parser.expect("end", "end of input")
    return t


def parse_constraints(text: str) -> list[Constraint]:
    """Parse a constraint file into its list of equations, in file order."""
    constraints: list[Constraint] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        parser = _Parser(_tokenize(raw, line=lineno))
        if parser.peek().kind == "end":
            continue
        lhs = parser.type_()
        parser.expect("equals", "'='")
        rhs = parser.type_()
        parser.expect("end", "end of line")
        constraints.append(Constraint(lhs, rhs))
    return constraints


def print_type(t: TypeTerm) -> str:
    """Render a term with the fewest parentheses that still round-trip."""
    return str(t)


def print_subst(s: Substitution) -> str:
    """Render a substitution as ``{a |-> b, b |-> c}``, keys ascending."""
    return str(s)


def _measure_text(m) -> str:
    return f"[{m.uniq_vars},{m.arrows},{m.length}]"


def print_trace(events: Iterable[TraceEvent]) -> str:
    """Render a solver trace, one step per line."""
    lines = []
    for e in events:
        if e.rule is Rule.EMPTY_DONE:
            lines.append(f"EmptyDone {_measure_text(e.measure_before)}")
        elif e.rule is Rule.OCCURS_FAIL:
            lines.append(f"OccursFail: {e.head} {_measure_text(e.measure_before)}")
        else:
            lines.append(
                f"{e.rule.value}: {e.head} {_measure_text(e.measure_before)}"
                f" -> {_measure_text(e.measure_after)}"
            )
    return "\n".join(lines)
