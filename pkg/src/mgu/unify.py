"""The unification engine.

Constraints are consumed head-first. Equal variables are dropped, a
variable facing a different term is bound and eliminated from the rest of
the list, and a pair of arrows is split into its components. Binding a
variable to a larger term that contains it is the one way to fail.

The worklist loop below is a reformulation of the head-recursive solver:
instead of composing the head's binding with the solution of the rewritten
tail, it folds bindings into an accumulator from the left. Both shapes
build the same map because the key-wise composition is associative and has
the empty substitution as a unit, which the test suite checks directly.
The loop form keeps deep constraint lists (tens of thousands of steps)
clear of the interpreter's recursion limit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum, unique
from typing import Iterable, Optional

from .constraint import Constraint, arrow_count, unique_ftv_count
from .substitution import Substitution, compose
from .term import Arrow, TypeTerm, TypeVar, Var, occurs


@dataclass(frozen=True)
class OccursCheck:
    """A variable equated with a strictly larger term containing it."""

    variable: TypeVar
    term: TypeTerm


@dataclass(frozen=True)
class Success:
    subst: Substitution


@dataclass(frozen=True)
class Failure:
    cause: OccursCheck


UnifyOutcome = Success | Failure


@dataclass(frozen=True, order=True)
class MeasureTriple:
    """Termination measure of a constraint list.

    Compared lexicographically with uniq_vars most significant; every
    solver step strictly decreases it.
    """

    uniq_vars: int
    arrows: int
    length: int


@unique
class Rule(Enum):
    DELETE = "Delete"
    VAR_VAR = "VarVar"
    VAR_TERM = "VarTerm"
    TERM_VAR = "TermVar"
    DECOMPOSE = "Decompose"
    EMPTY_DONE = "EmptyDone"
    OCCURS_FAIL = "OccursFail"


@dataclass(frozen=True)
class TraceEvent:
    """One solver step.

    measure_after and binding_emitted are absent on the two terminal rules;
    head is absent on EMPTY_DONE, which fires on the empty list.
    """

    rule: Rule
    head: Optional[Constraint]
    measure_before: MeasureTriple
    measure_after: Optional[MeasureTriple]
    binding_emitted: Optional[tuple[TypeVar, TypeTerm]] = None


def measure(constraints: Iterable[Constraint]) -> MeasureTriple:
    items = list(constraints)
    return MeasureTriple(unique_ftv_count(items), arrow_count(items), len(items))


def unify(constraints: Iterable[Constraint]) -> UnifyOutcome:
    """Solve a constraint list, yielding a substitution or an occurs failure."""
    return _run(constraints, None)


def unify_traced(
    constraints: Iterable[Constraint],
) -> tuple[UnifyOutcome, list[TraceEvent]]:
    """Like unify, but also reports every step taken, in order."""
    events: list[TraceEvent] = []
    return _run(constraints, events), events


def _run(
    constraints: Iterable[Constraint], events: Optional[list[TraceEvent]]
) -> UnifyOutcome:
    work = deque(constraints)
    acc = Substitution.empty()
    while work:
        before = measure(work) if events is not None else None
        head = work.popleft()
        binding: Optional[tuple[TypeVar, TypeTerm]] = None
        match head.lhs, head.rhs:
            case (Var(a), Var(b)) if a == b:
                rule = Rule.DELETE
            case (Var(a), Var(_)):
                rule = Rule.VAR_VAR
                binding = (a, head.rhs)
            case (Var(a), Arrow()):
                if occurs(a, head.rhs):
                    return _fail(events, head, before, a, head.rhs)
                rule = Rule.VAR_TERM
                binding = (a, head.rhs)
            case (Arrow(), Var(a)):
                if occurs(a, head.lhs):
                    return _fail(events, head, before, a, head.lhs)
                rule = Rule.TERM_VAR
                binding = (a, head.lhs)
            case _:
                rule = Rule.DECOMPOSE
                work.appendleft(Constraint(head.lhs.right, head.rhs.right))
                work.appendleft(Constraint(head.lhs.left, head.rhs.left))
        if binding is not None:
            single = Substitution.singleton(*binding)
            work = deque(single.apply_constraint(c) for c in work)
            acc = compose(acc, single)
        if events is not None:
            events.append(TraceEvent(rule, head, before, measure(work), binding))
    if events is not None:
        events.append(TraceEvent(Rule.EMPTY_DONE, None, MeasureTriple(0, 0, 0), None))
    return Success(acc)


def _fail(
    events: Optional[list[TraceEvent]],
    head: Constraint,
    before: Optional[MeasureTriple],
    v: TypeVar,
    t: TypeTerm,
) -> Failure:
    if events is not None:
        events.append(TraceEvent(Rule.OCCURS_FAIL, head, before, None))
    return Failure(OccursCheck(v, t))
