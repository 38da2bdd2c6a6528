from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gcdegen.errors import ShapeMismatchError
from gcdegen.grid import Permutation
from gcdegen.polyalg import (
    HighestWeight,
    MultiPolynomial,
    demazure_character,
    demazure_dim,
    demazure_operator,
    divided_difference,
    schubert_divided_difference,
    schubert_pipedreams,
    schur_ssyt,
    ssyt_contents,
    weyl_dim,
)

perm = Permutation.from_string


def poly(n, terms):
    return MultiPolynomial(n, terms)


@st.composite
def polynomials(draw, n=3, max_degree=3):
    exps = st.tuples(*[st.integers(min_value=0, max_value=max_degree)] * n)
    terms = draw(st.dictionaries(exps, st.integers(min_value=-5, max_value=5), max_size=5))
    return MultiPolynomial(n, terms)


def test_zero_coefficients_are_dropped():
    p = poly(2, {(1, 0): 3, (0, 1): 0})
    assert p.terms() == {(1, 0): 3}
    assert (p - p).is_zero()
    assert MultiPolynomial.zero(2).terms() == {}


def test_arithmetic():
    x1, x2 = MultiPolynomial.variable(2, 1), MultiPolynomial.variable(2, 2)
    assert ((x1 + x2) * (x1 - x2)).terms() == {(0, 2): -1, (2, 0): 1}
    assert (3 * x1).terms() == {(1, 0): 3}
    assert -x1 == poly(2, {(1, 0): -1})
    with pytest.raises(ShapeMismatchError):
        x1 + MultiPolynomial.variable(3, 1)


def test_arbitrary_precision_coefficients():
    big = 10**40
    p = poly(1, {(1,): big}) * poly(1, {(1,): big})
    assert p.terms() == {(2,): big * big}
    assert p.to_json() == [{"exponents": [2], "coeff": str(big * big)}]


def test_json_is_sorted_by_exponents():
    p = poly(2, {(0, 1): 1, (1, 0): -2})
    assert p.to_json() == [{"exponents": [0, 1], "coeff": "1"}, {"exponents": [1, 0], "coeff": "-2"}]
    assert MultiPolynomial.from_json(2, p.to_json()) == p


def test_divided_difference_examples():
    assert divided_difference(MultiPolynomial.monomial((2, 0)), 1) == poly(2, {(1, 0): 1, (0, 1): 1})
    assert divided_difference(MultiPolynomial.monomial((1, 1)), 1).is_zero()
    assert divided_difference(MultiPolynomial.monomial((2, 1, 0)), 2) == MultiPolynomial.monomial((2, 0, 0))


@given(polynomials(), st.integers(min_value=1, max_value=2))
def test_divided_difference_squares_to_zero(f, i):
    assert divided_difference(divided_difference(f, i), i).is_zero()


@given(polynomials(), st.integers(min_value=1, max_value=2))
def test_demazure_operator_is_idempotent(f, i):
    once = demazure_operator(f, i)
    assert demazure_operator(once, i) == once


@given(polynomials(), st.integers(min_value=1, max_value=2))
def test_divided_difference_is_symmetric_in_swapped_pair(f, i):
    g = divided_difference(f, i)
    assert g.swap(i) == g


def test_schubert_examples():
    assert schubert_divided_difference(Permutation.identity(3)) == MultiPolynomial.one(3)
    assert schubert_divided_difference(perm("321")) == MultiPolynomial.monomial((2, 1, 0))
    assert schubert_divided_difference(perm("132")) == poly(3, {(1, 0, 0): 1, (0, 1, 0): 1})
    assert schubert_pipedreams(Permutation.identity(3)) == MultiPolynomial.one(3)
    assert schubert_pipedreams(perm("21")) == MultiPolynomial.monomial((1, 0))
    assert schubert_pipedreams(perm("132")) == poly(3, {(1, 0, 0): 1, (0, 1, 0): 1})


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_schubert_constructions_agree(n):
    for w in Permutation.all(n):
        expected = schubert_pipedreams(w)
        assert schubert_divided_difference(w, "leftmost") == expected
        assert schubert_divided_difference(w, "rightmost") == expected


def test_schubert_rejects_unknown_rule():
    with pytest.raises(ValueError):
        schubert_divided_difference(perm("21"), "middle")


def test_highest_weight():
    lam = HighestWeight((3, 1, 1, 0))
    assert [lam.a(k) for k in range(1, 5)] == [2, 0, 1, 0]
    assert lam.is_integral() and not lam.is_strict()
    assert str(lam) == "3,1,1,0"
    assert HighestWeight.from_string("5/2,1,0").parts == (Fraction(5, 2), 1, 0)
    assert HighestWeight.staircase(4).parts == (3, 2, 1, 0)
    assert len(HighestWeight.all(3, 2)) == 10
    for bad in ((0, 1), (1, -1), ()):
        with pytest.raises(ValueError):
            HighestWeight(bad)
    with pytest.raises(ValueError):
        HighestWeight.from_string("2,x")


def test_demazure_examples():
    lam = HighestWeight((2, 1, 0))
    assert demazure_character(Permutation.identity(3), lam) == MultiPolynomial.monomial((2, 1, 0))
    assert demazure_character(perm("21"), HighestWeight((1, 0))) == poly(2, {(1, 0): 1, (0, 1): 1})
    assert demazure_dim(perm("21"), HighestWeight((1, 0))) == 2
    with pytest.raises(ShapeMismatchError):
        demazure_character(perm("21"), lam)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_demazure_of_longest_element_is_schur(n):
    w0 = Permutation.longest(n)
    for lam in HighestWeight.all(n, 2 if n == 4 else 3):
        assert demazure_character(w0, lam) == schur_ssyt(lam)
        assert demazure_character(w0, lam, "rightmost") == schur_ssyt(lam)


def test_weyl_dim_examples():
    for n in range(1, 7):
        assert weyl_dim(HighestWeight((1,) + (0,) * (n - 1))) == n
    assert weyl_dim(HighestWeight((1, 1))) == 1
    assert weyl_dim(HighestWeight((2, 1, 0))) == 8
    assert weyl_dim(HighestWeight.staircase(4)) == 64


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weyl_dim_counts_tableaux(n):
    for lam in HighestWeight.all(n, 3):
        assert weyl_dim(lam) == schur_ssyt(lam).evaluate_ones()


def test_schur_examples():
    assert schur_ssyt(HighestWeight((1, 0))) == poly(2, {(1, 0): 1, (0, 1): 1})
    assert schur_ssyt(HighestWeight((1, 1))) == MultiPolynomial.monomial((1, 1))
    s = schur_ssyt(HighestWeight((2, 1, 0)))
    assert s.evaluate_ones() == 8
    assert s.terms()[(1, 1, 1)] == 2
    assert s.is_symmetric()
    assert len(list(ssyt_contents(HighestWeight((0, 0, 0))))) == 1
