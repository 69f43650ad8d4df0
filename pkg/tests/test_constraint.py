from hypothesis import given

from conftest import type_terms
from mgu import (
    Arrow,
    Constraint,
    Substitution,
    TypeVar,
    Var,
    arrow_count,
    ftv_list,
    satisfies,
    unique_ftv_count,
)

a, b, c = TypeVar("a"), TypeVar("b"), TypeVar("c")
A, B, C = Var(a), Var(b), Var(c)


def test_constraint_is_an_ordered_pair():
    assert Constraint(A, B) != Constraint(B, A)
    assert Constraint(A, B) == Constraint(Var(TypeVar("a")), B)
    assert str(Constraint(Arrow(A, B), C)) == "a -> b = c"


def test_ftv_list_reads_left_to_right_with_duplicates():
    cs = [Constraint(A, Arrow(B, C)), Constraint(B, A)]
    assert ftv_list(cs) == [a, b, c, b, a]
    assert ftv_list([]) == []


def test_counts():
    cs = [Constraint(A, Arrow(B, C)), Constraint(B, A)]
    assert unique_ftv_count(cs) == 3
    assert arrow_count(cs) == 1
    deep = [Constraint(Arrow(Arrow(A, A), A), Arrow(B, B))]
    assert arrow_count(deep) == 3
    assert unique_ftv_count([]) == 0 and arrow_count([]) == 0


def test_satisfies_examples():
    assert satisfies(Substitution({a: B}), [Constraint(A, B)])
    assert not satisfies(Substitution({a: B}), [Constraint(A, C)])
    assert satisfies(Substitution({a: Arrow(B, B)}), [Constraint(A, Arrow(B, B))])
    # both sides get the substitution
    assert satisfies(Substitution({a: C, b: C}), [Constraint(A, B)])


def test_empty_list_satisfied_by_anything():
    assert satisfies(Substitution.empty(), [])
    assert satisfies(Substitution({a: Arrow(B, C)}), [])


@given(type_terms, type_terms)
def test_satisfies_splits_over_concatenation(t1, t2):
    s = Substitution({a: t1, b: t2})
    c1, c2 = [Constraint(A, t1)], [Constraint(B, t2)]
    assert satisfies(s, c1 + c2) == (satisfies(s, c1) and satisfies(s, c2))


def test_duplicates_count_twice_in_ftv_but_not_in_unique():
    cs = [Constraint(A, B), Constraint(A, B)]
    assert ftv_list(cs) == [a, b, a, b]
    assert unique_ftv_count(cs) == 2
