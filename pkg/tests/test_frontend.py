import random

import pytest
from hypothesis import given

from conftest import type_terms
from oracles import random_term
from mgu import (
    Arrow,
    Constraint,
    Substitution,
    TypeVar,
    Var,
    unify_traced,
)
from mgu.frontend import (
    ParseError,
    parse_constraints,
    parse_type,
    print_subst,
    print_trace,
    print_type,
)

a, b, c = TypeVar("a"), TypeVar("b"), TypeVar("c")
A, B, C = Var(a), Var(b), Var(c)


class TestParseType:
    def test_atoms(self):
        assert parse_type("a") == A
        assert parse_type("(a)") == A
        assert parse_type("((a))") == A
        assert parse_type("x_1") == Var(TypeVar("x_1"))

    def test_arrows_associate_right(self):
        assert parse_type("a -> b -> c") == Arrow(A, Arrow(B, C))
        assert parse_type("a->b->c") == Arrow(A, Arrow(B, C))
        assert parse_type("(a -> b) -> c") == Arrow(Arrow(A, B), C)

    def test_whitespace_and_newlines_are_insignificant(self):
        assert parse_type("  a\t->\n  b ") == Arrow(A, B)

    def test_error_positions_are_one_based(self):
        with pytest.raises(ParseError) as exc:
            parse_type("->")
        assert (exc.value.line, exc.value.column) == (1, 1)
        with pytest.raises(ParseError) as exc:
            parse_type("a ->")
        assert (exc.value.line, exc.value.column) == (1, 5)

    def test_empty_input(self):
        with pytest.raises(ParseError) as exc:
            parse_type("")
        assert "end of input" in exc.value.message
        assert exc.value.expected

    def test_trailing_input(self):
        with pytest.raises(ParseError) as exc:
            parse_type("a b")
        assert (exc.value.line, exc.value.column) == (1, 3)

    def test_unbalanced_parens(self):
        with pytest.raises(ParseError) as exc:
            parse_type("(a -> b")
        assert (exc.value.line, exc.value.column) == (1, 8)
        assert "')'" in exc.value.message

    def test_bad_character(self):
        with pytest.raises(ParseError) as exc:
            parse_type("a -> $")
        assert (exc.value.line, exc.value.column) == (1, 6)

    def test_error_fields_are_meaningful(self):
        with pytest.raises(ParseError) as exc:
            parse_type("(")
        err = exc.value
        assert err.message
        assert err.expected
        assert str(err).startswith("1:2:")


class TestParseConstraints:
    def test_one_per_line(self):
        assert parse_constraints("a = b\nb = c") == [
            Constraint(A, B),
            Constraint(B, C),
        ]

    def test_empty_and_comment_lines_are_skipped(self):
        text = "# header\n\na = b\n   \n# tail\n"
        assert parse_constraints(text) == [Constraint(A, B)]

    def test_inline_comments(self):
        assert parse_constraints("a = b # bind a\n") == [Constraint(A, B)]

    def test_empty_file(self):
        assert parse_constraints("") == []
        assert parse_constraints("\n\n") == []

    def test_crlf_lines(self):
        assert parse_constraints("a = b\r\nb = c\r\n") == [
            Constraint(A, B),
            Constraint(B, C),
        ]

    def test_arrow_types_on_both_sides(self):
        got = parse_constraints("a -> b = (a -> b) -> c")
        assert got == [Constraint(Arrow(A, B), Arrow(Arrow(A, B), C))]

    def test_double_equals_is_an_error(self):
        with pytest.raises(ParseError) as exc:
            parse_constraints("a = = b")
        assert (exc.value.line, exc.value.column) == (1, 5)
        assert "expected a type" in exc.value.message

    def test_missing_equals(self):
        with pytest.raises(ParseError) as exc:
            parse_constraints("a b")
        assert (exc.value.line, exc.value.column) == (1, 3)
        assert "'='" in exc.value.message

    def test_error_line_numbers_count_from_the_file_start(self):
        with pytest.raises(ParseError) as exc:
            parse_constraints("a = b\n# fine\nc = ->\n")
        assert (exc.value.line, exc.value.column) == (3, 5)

    def test_trailing_junk_after_constraint(self):
        with pytest.raises(ParseError) as exc:
            parse_constraints("a = b c")
        assert (exc.value.line, exc.value.column) == (1, 7)


class TestPrinters:
    def test_print_type_minimal_parens(self):
        assert print_type(Arrow(A, Arrow(B, C))) == "a -> b -> c"
        assert print_type(Arrow(Arrow(A, B), C)) == "(a -> b) -> c"
        assert print_type(Arrow(Arrow(A, Arrow(B, B)), Arrow(A, C))) == (
            "(a -> b -> b) -> a -> c"
        )

    def test_print_subst_orders_keys(self):
        s = Substitution({b: C, a: B})
        assert print_subst(s) == "{a |-> b, b |-> c}"
        assert print_subst(Substitution.empty()) == "{}"

    def test_print_trace_lines(self):
        out, events = unify_traced([Constraint(Arrow(A, B), Arrow(B, A))])
        assert print_trace(events) == (
            "Decompose: a -> b = b -> a [2,2,1] -> [2,0,2]\n"
            "VarVar: a = b [2,0,2] -> [1,0,1]\n"
            "Delete: b = b [1,0,1] -> [0,0,0]\n"
            "EmptyDone [0,0,0]"
        )

    def test_print_trace_failure(self):
        _, events = unify_traced([Constraint(A, Arrow(A, B))])
        assert print_trace(events) == "OccursFail: a = a -> b [2,1,1]"


class TestRoundTrip:
    @given(type_terms)
    def test_print_then_parse_is_identity(self, t):
        assert parse_type(print_type(t)) == t

    def test_seeded_sweep(self):
        rng = random.Random(31)
        for _ in range(2000):
            t = random_term(rng, rng.randrange(1, 7))
            assert parse_type(print_type(t)) == t
