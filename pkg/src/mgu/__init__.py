"""First-order unification over arrow types.

The solver returns idempotent most general unifiers, exposes its
lexicographic termination measure and per-step traces, and ships a
randomized suite that checks the laws the solver claims to satisfy.
"""

from .axioms import (
    AXIOM_IDS,
    AxiomReport,
    CheckFailure,
    GenConfig,
    VacuousSuiteError,
    check_axiom_i,
    check_axiom_ii,
    check_axiom_iii,
    check_axiom_iv,
    check_axiom_v,
    check_axiom_vi,
    check_axiom_vii,
    gen_case,
    gen_constraints,
    gen_satisfier,
    gen_type,
    run_suite,
    suite_passed,
)
from .constraint import (
    Constraint,
    ConstraintList,
    arrow_count,
    ftv_list,
    satisfies,
    unique_ftv_count,
)
from .frontend import (
    ParseError,
    parse_constraints,
    parse_type,
    print_subst,
    print_trace,
    print_type,
)
from .substitution import (
    Substitution,
    choose,
    compose,
    ext_eq,
    map_range,
    subst_diff,
)
from .term import Arrow, TypeTerm, TypeVar, Var, ftv_type, occurs, subterms
from .unify import (
    Failure,
    MeasureTriple,
    OccursCheck,
    Rule,
    Success,
    TraceEvent,
    UnifyOutcome,
    measure,
    unify,
    unify_traced,
)

__version__ = "0.1.0"
