import itertools

import pytest
from hypothesis import given, strategies as st

from gcdegen.checks import CONJUGATION_DISPLAY_N5
from gcdegen.config import Limits
from gcdegen.errors import BoundExceededError, HypothesisNotMetError
from gcdegen.polyalg import HighestWeight, weyl_dim
from gcdegen.sagbi import (
    BINOMIAL_VARIANTS,
    ColumnSet,
    ExponentVector,
    MinorSpec,
    alpha,
    antidiagonal_is_min,
    binomial_relation_holds,
    conjugation_exponents,
    conjugation_t_exponent,
    delta,
    lattice_geq,
    lattice_join,
    lattice_leq,
    lattice_meet,
    minor_terms,
    omega,
    omega_J,
    omega_weight,
    plucker_minor,
    semigroup_rank,
    special_fiber_zeroed,
    t_valuations,
    upsilon,
)

cs = ColumnSet.from_string


@st.composite
def column_sets(draw, n=5):
    elements = draw(st.sets(st.integers(min_value=1, max_value=n), min_size=1))
    return ColumnSet(tuple(elements))


def test_omega_examples():
    assert omega(5).to_list() == [
        [27, 9, 3, 1, 0],
        [9, 3, 1, 0, 0],
        [3, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
    ]
    assert omega(2).to_list() == [[1, 0], [0, 0]]
    assert omega(3)[1, 2] == 1
    assert omega(40)[1, 1] == 3**38
    with pytest.raises(ValueError):
        omega(0)


def test_column_set_parsing():
    assert cs("134").elements == (1, 3, 4)
    assert cs("4,1,3") == cs("134")
    assert str(ColumnSet.of(1, 12)) == "1,12"
    assert cs("13").reflect(4) == cs("24")
    assert [str(J) for J in ColumnSet.all(3)] == ["1", "2", "3", "12", "13", "23", "123"]
    for bad in ((), (1, 1), (0, 2)):
        with pytest.raises(ValueError):
            ColumnSet(bad)
    with pytest.raises(ValueError):
        cs("13").check_range(2)


def test_exponent_vector():
    e = ExponentVector.from_cells(3, [(1, 2), (1, 2), (3, 1)])
    assert e[1, 2] == 2
    assert e.support() == [(1, 2), (3, 1)]
    assert ExponentVector.from_json(e.to_json()) == e
    assert e.reflect_columns().support() == [(1, 2), (3, 3)]
    assert len({e, ExponentVector.from_cells(3, [(3, 1), (1, 2), (1, 2)])}) == 1
    with pytest.raises(ValueError):
        ExponentVector([[0, -1], [0, 0]])


def test_alpha_examples():
    assert alpha(cs("124"), 4).support() == [(1, 4), (2, 2), (3, 1)]
    assert alpha(cs("13"), 4).support() == [(1, 3), (2, 1)]
    assert alpha(cs("1"), 3).support() == [(1, 1)]
    assert delta(cs("124"), 4).support() == [(1, 1), (2, 2), (3, 4)]
    with pytest.raises(ValueError):
        alpha(cs("15"), 4)


def test_omega_J_examples():
    assert omega_J(cs("12"), 5) == 18
    for n in range(1, 7):
        assert omega_J(ColumnSet.of(n), n) == 0
        assert omega_J(ColumnSet(tuple(range(1, n + 1))), n) == 0


def test_minor_terms_examples():
    terms = minor_terms(MinorSpec((1,), (1,)), 3)
    assert [(t.exponents.support(), t.sign) for t in terms] == [([(1, 1)], 1)]

    terms = minor_terms(MinorSpec((1, 2), (1, 2)), 2)
    assert [t.sign for t in terms] == [1, -1]
    assert terms[0].exponents.support() == [(1, 1), (2, 2)]
    assert terms[-1].exponents.support() == [(1, 2), (2, 1)]

    terms = minor_terms(MinorSpec((1, 2, 3), (1, 2, 3)), 3)
    assert len(terms) == 6
    assert sorted(t.sign for t in terms) == [-1, -1, -1, 1, 1, 1]
    assert len({t.exponents for t in terms}) == 6


def test_minor_terms_respects_bound():
    with pytest.raises(BoundExceededError):
        minor_terms(MinorSpec((1, 2, 3), (1, 2, 3)), 3, Limits(max_minor_size=2))


def test_minor_spec_validation():
    with pytest.raises(ValueError):
        MinorSpec((1, 2), (1,))
    with pytest.raises(ValueError):
        MinorSpec((1, 1), (1, 2))
    assert MinorSpec((2, 1), (3, 1)).rows == (1, 2)


def test_t_valuations_examples():
    assert [v for _, v in t_valuations(cs("12"), 2)] == [1, 0]
    assert [v for _, v in t_valuations(cs("12"), 5)] == [12, 0]
    assert [v for _, v in t_valuations(ColumnSet.of(4), 4)] == [0]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_antidiagonal_term_is_unique_minimum(n):
    for J in ColumnSet.all(n):
        vals = [v for _, v in t_valuations(J, n)]
        assert min(vals) == 0
        assert vals.count(0) == 1
        assert vals[-1] == 0
        assert antidiagonal_is_min(plucker_minor(J), n)


def test_antidiagonal_is_min_examples():
    assert antidiagonal_is_min(MinorSpec((1, 2), (1, 2)), 5)
    for i, j in [(1, 1), (2, 3), (4, 1)]:
        assert antidiagonal_is_min(MinorSpec((i,), (j,)), 5)
    with pytest.raises(HypothesisNotMetError):
        antidiagonal_is_min(MinorSpec((2, 3), (2, 3)), 3)


def test_lattice_examples():
    I, J = cs("14"), cs("23")
    assert lattice_meet(I, J) == cs("13")
    assert lattice_join(I, J) == cs("24")
    assert not lattice_leq(I, J) and not lattice_leq(J, I)

    I, J = cs("25"), cs("134")
    assert lattice_geq(I, J)
    assert lattice_meet(I, J) == J
    assert lattice_join(I, J) == I

    assert lattice_meet(I, I) == lattice_join(I, I) == I


@given(column_sets(), column_sets(), column_sets())
def test_lattice_laws(I, J, K):
    meet, join = lattice_meet(I, J), lattice_join(I, J)
    assert lattice_leq(meet, I) and lattice_leq(meet, J)
    assert lattice_geq(join, I) and lattice_geq(join, J)
    assert lattice_meet(I, lattice_join(J, K)) == lattice_join(lattice_meet(I, J), lattice_meet(I, K))
    assert lattice_join(I, lattice_meet(J, K)) == lattice_meet(lattice_join(I, J), lattice_join(I, K))


def test_binomial_relation_examples():
    assert binomial_relation_holds(cs("14"), cs("234"), 4)
    assert binomial_relation_holds(cs("23"), cs("14"), 4)
    assert binomial_relation_holds(cs("25"), cs("134"), 5)
    assert binomial_relation_holds(cs("14"), cs("234"), 4, "antidiagonal")
    assert not binomial_relation_holds(cs("14"), cs("234"), 4, "mixed")
    with pytest.raises(ValueError):
        binomial_relation_holds(cs("1"), cs("2"), 2, "sideways")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_binomial_relations_hold_for_all_pairs(n):
    for I, J in itertools.product(ColumnSet.all(n), repeat=2):
        for variant in BINOMIAL_VARIANTS[:2]:
            assert binomial_relation_holds(I, J, n, variant)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_reflection_intertwines_diagonal_and_antidiagonal(n):
    for I in ColumnSet.all(n):
        assert alpha(I.reflect(n), n) == delta(I, n).reflect_columns()


def test_upsilon_examples():
    e = ExponentVector.from_cells
    assert upsilon(HighestWeight((1, 0))) == {e(2, [(1, 1)]), e(2, [(1, 2)])}
    assert upsilon(HighestWeight((1, 1))) == {alpha(cs("12"), 2)}
    assert upsilon(HighestWeight((0, 0, 0))) == {ExponentVector.zero(3)}


@pytest.mark.parametrize("n, max_part", [(1, 4), (2, 4), (3, 4), (4, 2)])
def test_upsilon_size_is_weyl_dim(n, max_part):
    for lam in HighestWeight.all(n, max_part):
        assert len(upsilon(lam)) == weyl_dim(lam)


def test_upsilon_respects_bound():
    with pytest.raises(BoundExceededError):
        upsilon(HighestWeight((3, 0)), Limits(max_upsilon_indices=2))


@pytest.mark.parametrize("n, rank", [(1, 1), (2, 3), (3, 6), (4, 10), (5, 15), (6, 21)])
def test_semigroup_rank(n, rank):
    assert semigroup_rank(n) == rank


def test_omega_weight_of_diagonal_term():
    assert omega_weight(delta(cs("12"), 5)) == 30


def test_conjugation_examples():
    assert conjugation_t_exponent(2, 1, 1, 5) == 18
    assert conjugation_t_exponent(5, 4, 1, 5) == 1
    assert all(conjugation_t_exponent(k, k, j, 5) == 0 for k in range(1, 6) for j in range(1, 6))
    with pytest.raises(ValueError):
        conjugation_t_exponent(1, 2, 1, 5)


def test_conjugation_display():
    for j, expected in enumerate(CONJUGATION_DISPLAY_N5, start=1):
        assert conjugation_exponents(j, 5) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugation_sign_pattern(n):
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            for k in range(1, i + 1):
                e = conjugation_t_exponent(i, k, j, n)
                assert e >= 0
                assert (e > 0) == special_fiber_zeroed(i, k, j, n)
