"""Simple type terms: variables and arrows.

There are no base types. A term is either a type variable or an arrow
between two terms, so every closed question about a term reduces to
questions about its variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, order=True)
class TypeVar:
    """A named type variable; equality and ordering follow the name."""

    name: str

    def __post_init__(self) -> None:
        if not _NAME.match(self.name):
            raise ValueError(f"bad type variable name: {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Var:
    """A type term that is just a variable occurrence."""

    var: TypeVar

    def __str__(self) -> str:
        return self.var.name


@dataclass(frozen=True)
class Arrow:
    """A function type; arrows nest to the right when printed."""

    left: "TypeTerm"
    right: "TypeTerm"

    def __str__(self) -> str:
        # only a left child needs parentheses to survive a round trip
        left = f"({self.left})" if isinstance(self.left, Arrow) else str(self.left)
        return f"{left} -> {self.right}"


TypeTerm = Var | Arrow


def ftv_type(t: TypeTerm) -> list[TypeVar]:
    """Every variable occurrence of t, left to right, duplicates kept."""
    match t:
        case Var(v):
            return [v]
        case Arrow(left, right):
            return ftv_type(left) + ftv_type(right)
    raise TypeError(f"not a type term: {t!r}")


def occurs(v: TypeVar, t: TypeTerm) -> bool:
    """True iff v occurs anywhere in t."""
    match t:
        case Var(w):
            return w == v
        case Arrow(left, right):
            return occurs(v, left) or occurs(v, right)
    raise TypeError(f"not a type term: {t!r}")


def subterms(t: TypeTerm) -> list[TypeTerm]:
    """Proper subterms of t; t itself is never included.

    An arrow contributes both children before their own subterms, so the
    result for ``(a -> b) -> c`` is ``[a -> b, c, a, b]``.
    """
    match t:
        case Var(_):
            return []
        case Arrow(left, right):
            return [left, right, *subterms(left), *subterms(right)]
    raise TypeError(f"not a type term: {t!r}")
