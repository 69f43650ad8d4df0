"""Finite-map substitutions and their composition algebra.

A substitution binds finitely many type variables to terms and acts as the
identity elsewhere. Composition is a key-wise merge rather than a closure:
``compose(s, s2)`` rewrites the range of s with s2 and then adds the
bindings of s2 for keys s does not cover. Applying the composite to any
term equals applying s first and s2 second.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional

from .constraint import Constraint
from .term import Arrow, TypeTerm, TypeVar, Var, ftv_type


class Substitution:
    """Immutable finite map from type variables to type terms.

    Keys are unique and iteration follows ascending variable name, so two
    equal substitutions print, hash, and iterate identically.
    """

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Optional[Mapping[TypeVar, TypeTerm]] = None) -> None:
        items = sorted((bindings or {}).items(), key=lambda kv: kv[0])
        object.__setattr__(self, "_bindings", dict(items))

    @classmethod
    def empty(cls) -> "Substitution":
        return cls()

    @classmethod
    def singleton(cls, v: TypeVar, t: TypeTerm) -> "Substitution":
        """One binding v |-> t; the identity binding v |-> v is rejected."""
        if t == Var(v):
            raise ValueError(f"identity binding {v} |-> {t} rejected")
        return cls({v: t})

    def get(self, v: TypeVar) -> Optional[TypeTerm]:
        return self._bindings.get(v)

    def __contains__(self, v: TypeVar) -> bool:
        return v in self._bindings

    def __len__(self) -> int:
        return len(self._bindings)

    def __iter__(self) -> Iterator[TypeVar]:
        return iter(self._bindings)

    def items(self) -> list[tuple[TypeVar, TypeTerm]]:
        return list(self._bindings.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return self._bindings == other._bindings

    def __hash__(self) -> int:
        return hash(tuple(self._bindings.items()))

    def __str__(self) -> str:
        body = ", ".join(f"{v} |-> {t}" for v, t in self._bindings.items())
        return "{" + body + "}"

    def __repr__(self) -> str:
        return f"Substitution({self})"

    def apply_type(self, t: TypeTerm) -> TypeTerm:
        """Replace every bound variable of t in a single pass.

        Bindings never apply to their own output, so {a |-> b, b |-> c}
        sends a to b, not to c.
        """
        match t:
            case Var(v):
                return self._bindings.get(v, t)
            case Arrow(left, right):
                return Arrow(self.apply_type(left), self.apply_type(right))
        raise TypeError(f"not a type term: {t!r}")

    def apply_constraint(self, c: Constraint) -> Constraint:
        return Constraint(self.apply_type(c.lhs), self.apply_type(c.rhs))

    def apply_list(self, constraints: Iterable[Constraint]) -> list[Constraint]:
        return [self.apply_constraint(c) for c in constraints]

    def dom(self) -> list[TypeVar]:
        """Bound variables in ascending name order."""
        return list(self._bindings)

    def range_vars(self) -> list[TypeVar]:
        """Variable occurrences in the bound terms, domain order, duplicates kept."""
        out: list[TypeVar] = []
        for t in self._bindings.values():
            out += ftv_type(t)
        return out

    def ftv_subst(self) -> list[TypeVar]:
        """Domain followed by range occurrences."""
        return self.dom() + self.range_vars()


def choose(first: Optional[TypeTerm], second: Optional[TypeTerm]) -> Optional[TypeTerm]:
    """Key-wise merge rule: a binding in the first map wins over the second."""
    return first if first is not None else second


def subst_diff(s: Substitution, s2: Substitution) -> Substitution:
    """Merge two substitutions key-wise, s shadowing s2."""
    merged: dict[TypeVar, TypeTerm] = {}
    for k in set(s.dom()) | set(s2.dom()):
        merged[k] = choose(s.get(k), s2.get(k))  # type: ignore[assignment]
    return Substitution(merged)


def map_range(s2: Substitution, s: Substitution) -> Substitution:
    """Apply s2 to every term in the range of s; the domain is unchanged.

    Identity bindings this creates (say {b |-> a} rewritten by {a |-> b})
    are kept, not dropped.
    """
    return Substitution({v: s2.apply_type(t) for v, t in s.items()})


def compose(s: Substitution, s2: Substitution) -> Substitution:
    """Sequence two substitutions: the composite applies s first, then s2."""
    return subst_diff(map_range(s2, s), s2)


def ext_eq(s: Substitution, s2: Substitution) -> bool:
    """Pointwise agreement on every variable.

    Both maps act as the identity outside their domains, so agreement on
    the union of the two domains settles all variables, and agreement on
    variables extends to all terms.
    """
    for v in set(s.dom()) | set(s2.dom()):
        probe = Var(v)
        if s.apply_type(probe) != s2.apply_type(probe):
            return False
    return True
