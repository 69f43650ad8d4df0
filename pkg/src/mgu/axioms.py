"""Randomized checks of the seven laws an idempotent most general unifier obeys.

With s the substitution unify returns on a constraint list C, and ~ the
pointwise agreement of two substitutions on every variable:

    i.    s satisfies C
    ii.   every satisfier s' of C factors through s: s' ~ compose(s, s')
    iii.  every variable of s appears in C
    iv.   if C has a satisfier at all, unify succeeds on C
    v.    compose(s, s) ~ s
    vi.   unify([]) is the empty substitution
    vii.  for any split C = C1 ++ C2: s ~ compose(s1, s2), where s1 solves
          C1 and s2 solves C2 rewritten by s1

The factoring witness in ii is the satisfier itself, which is the right
witness exactly because the result is idempotent and most general.

Checks that presuppose a successful or satisfiable list are counted as
inapplicable on the remaining inputs; a configuration whose inputs leave a
check applicable in under 30% of cases is rejected outright instead of
reporting a hollow pass.

Randomness comes from ``random.Random`` (the Mersenne Twister). Each case
draws from a fresh generator whose 64-bit seed is derived from the
configured seed and the case index via SHA-256, so a seed pins down every
case on every platform and Python version.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .constraint import Constraint, ftv_list, satisfies
from .substitution import Substitution, compose, ext_eq
from .term import Arrow, TypeTerm, TypeVar, Var
from .unify import Failure, Success, unify

AXIOM_IDS = ("i", "ii", "iii", "iv", "v", "vi", "vii")

# (applicable, problem); problem is (expected, actual) when the check fails
CheckResult = tuple[bool, Optional[tuple[str, str]]]


@dataclass(frozen=True)
class GenConfig:
    """Bounds for random case generation.

    max_depth caps term depth counting a lone variable as depth 1;
    max_vars fixes the alphabet v0 .. v{max_vars-1}; max_len caps the
    number of constraints per generated list.
    """

    seed: int = 0
    max_depth: int = 4
    max_vars: int = 6
    max_len: int = 6
    cases: int = 1000

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer: {self.seed}")
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be at least 1: {self.max_depth}")
        if self.max_vars < 1:
            raise ValueError(f"max_vars must be at least 1: {self.max_vars}")
        if self.max_len < 0 or self.cases < 0:
            raise ValueError("max_len and cases must be non-negative")


@dataclass(frozen=True)
class CheckFailure:
    """One counterexample: which case, what inputs, what went wrong."""

    case_index: int
    inputs: str
    expected: str
    actual: str


@dataclass
class AxiomReport:
    axiom: str
    cases_run: int = 0
    cases_applicable: int = 0
    failures: list[CheckFailure] = field(default_factory=list)


class VacuousSuiteError(Exception):
    """A configuration left some axiom with too few applicable cases."""

    def __init__(self, axiom: str, cases_run: int, cases_applicable: int) -> None:
        super().__init__(
            f"axiom {axiom} applicable in only {cases_applicable} of "
            f"{cases_run} cases (below the 30% floor); widen the generator "
            f"bounds or change the seed"
        )
        self.axiom = axiom
        self.cases_run = cases_run
        self.cases_applicable = cases_applicable


def _case_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def _alphabet(cfg: GenConfig) -> list[TypeVar]:
    return [TypeVar(f"v{i}") for i in range(cfg.max_vars)]


def gen_type(cfg: GenConfig, rng: random.Random) -> TypeTerm:
    """A random term within cfg's depth bound over the v0.. alphabet."""
    return _gen_type(rng, cfg.max_depth, _alphabet(cfg))


def _gen_type(rng: random.Random, depth: int, alphabet: Sequence[TypeVar]) -> TypeTerm:
    if depth <= 1 or rng.random() < 0.5:
        return Var(rng.choice(list(alphabet)))
    return Arrow(
        _gen_type(rng, depth - 1, alphabet), _gen_type(rng, depth - 1, alphabet)
    )


def _gen_idempotent_subst(cfg: GenConfig, rng: random.Random) -> Substitution:
    # ranges draw only on variables outside the domain, so applying the
    # result twice is the same as applying it once
    alphabet = _alphabet(cfg)
    k = rng.randrange(max(1, cfg.max_vars))
    dom = rng.sample(alphabet, k)
    rest = [v for v in alphabet if v not in dom]
    return Substitution({v: _gen_type(rng, cfg.max_depth, rest) for v in dom})


def _gen_subst(cfg: GenConfig, rng: random.Random) -> Substitution:
    alphabet = _alphabet(cfg)
    k = rng.randrange(cfg.max_vars + 1)
    dom = rng.sample(alphabet, k)
    return Substitution({v: gen_type(cfg, rng) for v in dom})


def gen_case(
    cfg: GenConfig, rng: random.Random
) -> tuple[list[Constraint], Optional[Substitution]]:
    """A random constraint list, half the time satisfiable by construction.

    The second component is a substitution known to satisfy the list, or
    None when the list was drawn with no such guarantee (it may still be
    satisfiable by luck).
    """
    n = rng.randrange(cfg.max_len + 1)
    if rng.random() < 0.5:
        witness = _gen_idempotent_subst(cfg, rng)
        dom = witness.dom()
        items = []
        for _ in range(n):
            t = gen_type(cfg, rng)
            mode = rng.randrange(3) if dom else 0
            if mode == 0:
                other = t
            elif mode == 1:
                other = witness.apply_type(t)
            else:
                a = rng.choice(dom)
                other = Substitution({a: witness.get(a)}).apply_type(t)
            if rng.random() < 0.5:
                items.append(Constraint(t, other))
            else:
                items.append(Constraint(other, t))
        return items, witness
    items = [Constraint(gen_type(cfg, rng), gen_type(cfg, rng)) for _ in range(n)]
    return items, None


def gen_constraints(cfg: GenConfig, rng: random.Random) -> list[Constraint]:
    """A random constraint list within cfg's bounds."""
    return gen_case(cfg, rng)[0]


def gen_satisfier(
    constraints: Sequence[Constraint], cfg: GenConfig, rng: random.Random
) -> Optional[Substitution]:
    """A random satisfier of the list: the unifier composed with a random
    substitution. None when the list is unsolvable."""
    out = unify(constraints)
    if isinstance(out, Failure):
        return None
    return compose(out.subst, _gen_subst(cfg, rng))


def _show_list(constraints: Sequence[Constraint]) -> str:
    return "[" + "; ".join(str(c) for c in constraints) + "]"


def _show_vars(vs) -> str:
    return ", ".join(v.name for v in sorted(vs))


def check_axiom_i(constraints: Sequence[Constraint]) -> CheckResult:
    out = unify(constraints)
    if isinstance(out, Failure):
        return False, None
    if satisfies(out.subst, constraints):
        return True, None
    return True, (
        f"result satisfies {_show_list(constraints)}",
        f"{out.subst} leaves some constraint unequal",
    )


def check_axiom_ii(
    constraints: Sequence[Constraint], satisfier: Optional[Substitution]
) -> CheckResult:
    out = unify(constraints)
    if isinstance(out, Failure) or satisfier is None:
        return False, None
    composite = compose(out.subst, satisfier)
    if ext_eq(satisfier, composite):
        return True, None
    return True, (
        "satisfier ~ compose(result, satisfier)",
        f"satisfier {satisfier} vs composite {composite}",
    )


def check_axiom_iii(constraints: Sequence[Constraint]) -> CheckResult:
    out = unify(constraints)
    if isinstance(out, Failure):
        return False, None
    extra = set(out.subst.ftv_subst()) - set(ftv_list(constraints))
    if not extra:
        return True, None
    return True, (
        "every variable of the result appears in the list",
        f"foreign variables: {_show_vars(extra)}",
    )


def check_axiom_iv(
    constraints: Sequence[Constraint], witness: Optional[Substitution]
) -> CheckResult:
    if witness is None:
        return False, None
    if not satisfies(witness, constraints):
        return True, (
            "generator witness satisfies its own list",
            f"{witness} does not satisfy {_show_list(constraints)}",
        )
    out = unify(constraints)
    if isinstance(out, Success):
        return True, None
    cause = out.cause
    return True, (
        "unify succeeds on a satisfiable list",
        f"occurs-check: {cause.variable} in {cause.term}",
    )


def check_axiom_v(constraints: Sequence[Constraint]) -> CheckResult:
    out = unify(constraints)
    if isinstance(out, Failure):
        return False, None
    twice = compose(out.subst, out.subst)
    if ext_eq(twice, out.subst):
        return True, None
    return True, (
        "compose(result, result) ~ result",
        f"{twice} vs {out.subst}",
    )


def check_axiom_vi() -> CheckResult:
    out = unify([])
    if isinstance(out, Success) and len(out.subst) == 0:
        return True, None
    return True, ("unify([]) = Success({})", repr(out))


def check_axiom_vii(constraints: Sequence[Constraint], split_index: int) -> CheckResult:
    items = list(constraints)
    if not 0 <= split_index <= len(items):
        raise ValueError(
            f"split index {split_index} out of range for length {len(items)}"
        )
    out = unify(items)
    if isinstance(out, Failure):
        return False, None
    first, second = items[:split_index], items[split_index:]
    out1 = unify(first)
    if isinstance(out1, Failure):
        return True, (
            "prefix of a solvable list is solvable",
            f"unify failed on {_show_list(first)}",
        )
    out2 = unify(out1.subst.apply_list(second))
    if isinstance(out2, Failure):
        return True, (
            "rewritten suffix of a solvable list is solvable",
            f"unify failed on the suffix rewritten by {out1.subst}",
        )
    composite = compose(out1.subst, out2.subst)
    if ext_eq(out.subst, composite):
        return True, None
    return True, (
        "whole solution ~ compose(prefix solution, suffix solution)",
        f"{out.subst} vs {composite}",
    )


def _tally(
    report: AxiomReport, index: int, inputs: str, result: CheckResult
) -> None:
    applicable, problem = result
    report.cases_run += 1
    if applicable:
        report.cases_applicable += 1
    if problem is not None:
        report.failures.append(CheckFailure(index, inputs, *problem))


def _tally_splits(
    report: AxiomReport,
    index: int,
    constraints: list[Constraint],
    rng: random.Random,
) -> None:
    n = len(constraints)
    splits = {0, n}
    if n >= 2:
        splits.add(rng.randrange(1, n))
    report.cases_run += 1
    applicable = False
    for k in sorted(splits):
        app, problem = check_axiom_vii(constraints, k)
        applicable = applicable or app
        if problem is not None:
            report.failures.append(
                CheckFailure(
                    index, f"{_show_list(constraints)} split at {k}", *problem
                )
            )
    if applicable:
        report.cases_applicable += 1


def run_suite(cfg: GenConfig) -> list[AxiomReport]:
    """Run every axiom check over cfg.cases generated cases.

    Raises VacuousSuiteError when a conditional axiom (all but vi) ends up
    applicable in under 30% of its cases.
    """
    reports = {a: AxiomReport(axiom=a) for a in AXIOM_IDS}
    for index in range(cfg.cases):
        rng = random.Random(_case_seed(cfg.seed, index))
        constraints, witness = gen_case(cfg, rng)
        satisfier = gen_satisfier(constraints, cfg, rng)
        shown = _show_list(constraints)
        _tally(reports["i"], index, shown, check_axiom_i(constraints))
        _tally(reports["ii"], index, shown, check_axiom_ii(constraints, satisfier))
        _tally(reports["iii"], index, shown, check_axiom_iii(constraints))
        _tally(reports["iv"], index, shown, check_axiom_iv(constraints, witness))
        _tally(reports["v"], index, shown, check_axiom_v(constraints))
        _tally(reports["vi"], index, shown, check_axiom_vi())
        _tally_splits(reports["vii"], index, constraints, rng)
    for axiom in ("i", "ii", "iii", "iv", "v", "vii"):
        r = reports[axiom]
        if r.cases_applicable < 0.3 * r.cases_run:
            raise VacuousSuiteError(axiom, r.cases_run, r.cases_applicable)
    return [reports[a] for a in AXIOM_IDS]


def suite_passed(reports: Sequence[AxiomReport]) -> bool:
    return all(not r.failures for r in reports)


def format_reports(cfg: GenConfig, reports: Sequence[AxiomReport]) -> str:
    """Human-readable suite summary, one line per axiom."""
    lines = [
        f"seed={cfg.seed} cases={cfg.cases} max_depth={cfg.max_depth}"
        f" max_vars={cfg.max_vars} max_len={cfg.max_len}"
    ]
    for r in reports:
        lines.append(
            f"axiom {r.axiom}: cases_run={r.cases_run}"
            f" cases_applicable={r.cases_applicable} failures={len(r.failures)}"
        )
        if r.failures:
            first = r.failures[0]
            lines.append(
                f"  first counterexample (case {first.case_index}): {first.inputs}"
            )
            lines.append(f"    expected: {first.expected}")
            lines.append(f"    actual: {first.actual}")
    lines.append("ok" if suite_passed(reports) else "FAIL")
    return "\n".join(lines)


def reports_to_doc(cfg: GenConfig, reports: Sequence[AxiomReport]) -> dict:
    """JSON-ready document for the suite outcome."""
    entries = []
    for r in reports:
        entry: dict = {
            "axiom": r.axiom,
            "cases_run": r.cases_run,
            "cases_applicable": r.cases_applicable,
            "failures": len(r.failures),
        }
        if r.failures:
            first = r.failures[0]
            entry["first_failure"] = {
                "case_index": first.case_index,
                "inputs": first.inputs,
                "expected": first.expected,
                "actual": first.actual,
            }
        entries.append(entry)
    return {
        "seed": cfg.seed,
        "config": {
            "cases": cfg.cases,
            "max_depth": cfg.max_depth,
            "max_vars": cfg.max_vars,
            "max_len": cfg.max_len,
        },
        "reports": entries,
    }
