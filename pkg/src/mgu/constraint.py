"""Equational constraints between type terms.

A constraint list is an ordered sequence; order and duplicates matter to
the solver's step-by-step behaviour even though they do not change which
substitutions satisfy the list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .term import Arrow, TypeTerm, TypeVar, ftv_type

if TYPE_CHECKING:
    from .substitution import Substitution


@dataclass(frozen=True)
class Constraint:
    """An ordered equation ``lhs = rhs`` between two type terms."""

    lhs: TypeTerm
    rhs: TypeTerm

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


ConstraintList = list[Constraint]


def ftv_list(constraints: Iterable[Constraint]) -> list[TypeVar]:
    """Variable occurrences of the whole list, in reading order."""
    out: list[TypeVar] = []
    for c in constraints:
        out += ftv_type(c.lhs)
        out += ftv_type(c.rhs)
    return out


def satisfies(s: "Substitution", constraints: Iterable[Constraint]) -> bool:
    """True iff applying s makes both sides of every constraint identical."""
    return all(s.apply_type(c.lhs) == s.apply_type(c.rhs) for c in constraints)


def unique_ftv_count(constraints: Iterable[Constraint]) -> int:
    """Number of distinct variables in the list."""
    return len(set(ftv_list(constraints)))


def arrow_count(constraints: Iterable[Constraint]) -> int:
    """Total number of arrow nodes on both sides of every constraint."""
    return sum(_arrows(c.lhs) + _arrows(c.rhs) for c in constraints)


def _arrows(t: TypeTerm) -> int:
    if isinstance(t, Arrow):
        return 1 + _arrows(t.left) + _arrows(t.right)
    return 0
