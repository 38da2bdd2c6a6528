import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gcdegen.config import Limits
from gcdegen.errors import BoundExceededError
from gcdegen.grid import (
    Diagram,
    Permutation,
    PipeDream,
    enumerate_pipe_dreams,
    is_reduced,
    length,
    rank_fn,
    staircase,
    trace_pipes,
)

perm = Permutation.from_string


@st.composite
def permutations(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def test_permutation_parsing():
    assert perm("15423").word == (1, 5, 4, 2, 3)
    assert Permutation.from_string("2,1,3").word == (2, 1, 3)
    assert str(Permutation(tuple(range(10, 0, -1)))) == "10,9,8,7,6,5,4,3,2,1"
    with pytest.raises(ValueError):
        perm("1123")
    with pytest.raises(ValueError):
        perm("12a")


def test_permutation_call_and_compose():
    w = perm("231")
    assert [w(i) for i in (1, 2, 3)] == [2, 3, 1]
    assert (w * w.inverse()) == Permutation.identity(3)
    assert Permutation.longest(3) * Permutation.longest(3) == Permutation.identity(3)
    with pytest.raises(ValueError):
        w * Permutation.identity(2)


@pytest.mark.parametrize("w, expected", [("123", 0), ("321", 3), ("15423", 5), ("21534", 3)])
def test_length(w, expected):
    assert length(perm(w)) == expected


@given(permutations())
def test_reduced_word_multiplies_back(w):
    for rule in ("leftmost", "rightmost"):
        word = w.reduced_word(rule)
        assert len(word) == length(w)
        product = Permutation.identity(w.n)
        for i in word:
            product = product.times_simple(i)
        assert product == w


@given(permutations())
def test_rothe_diagram_has_length_cells(w):
    assert len(w.rothe_diagram()) == length(w)
    assert w.essential_set() <= w.rothe_diagram()


def test_essential_set_of_longest_element():
    assert perm("321").rothe_diagram() == {(1, 1), (1, 2), (2, 1)}
    assert perm("321").essential_set() == {(1, 2), (2, 1)}
    assert Permutation.identity(4).essential_set() == frozenset()


def test_staircase():
    assert staircase(3) == [(1, 1), (1, 2), (2, 1)]
    assert len(staircase(5)) == 10


@pytest.mark.parametrize(
    "n, cells, expected",
    [
        (5, {(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)}, "15423"),
        (3, set(), "123"),
        (2, {(1, 1)}, "21"),
    ],
)
def test_trace_pipes(n, cells, expected):
    assert trace_pipes(Diagram(n, frozenset(cells))) == perm(expected)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_full_staircase_traces_to_longest_element(n):
    assert trace_pipes(Diagram(n, frozenset(staircase(n)))) == Permutation.longest(n)


def test_is_reduced():
    assert is_reduced(Diagram(5, frozenset({(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)})))
    assert not is_reduced(Diagram(5, frozenset({(1, 2), (2, 1), (2, 2), (3, 1)})))
    for n in (1, 3, 6):
        assert is_reduced(Diagram(n))


def test_pipe_dream_rejects_non_reduced():
    with pytest.raises(ValueError, match="not a reduced pipe dream"):
        PipeDream(5, frozenset({(1, 2), (2, 1), (2, 2), (3, 1)}))


def test_diagram_rejects_cells_outside_grid():
    with pytest.raises(ValueError):
        Diagram(2, frozenset({(3, 1)}))


def test_diagram_json():
    d = Diagram(3, frozenset({(2, 1), (1, 2)}))
    assert d.to_json() == {"n": 3, "cells": [[1, 2], [2, 1]]}
    assert Diagram.from_json('{"n": 3, "cells": [[2, 1], [1, 2]]}') == d
    assert d.row_counts() == (1, 1, 0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduced_iff_length_matches_on_staircase(n):
    cells = staircase(n)
    for k in range(len(cells) + 1):
        for subset in itertools.combinations(cells, k):
            d = Diagram(n, frozenset(subset))
            assert is_reduced(d) == (len(d) == length(trace_pipes(d)))


@st.composite
def grid_diagrams(draw, max_n=4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    cells = draw(st.sets(st.tuples(st.integers(min_value=1, max_value=n), st.integers(min_value=1, max_value=n))))
    return Diagram(n, frozenset(cells))


@settings(max_examples=500)
@given(grid_diagrams())
def test_reduced_iff_length_matches_on_full_grid(d):
    assert is_reduced(d) == (len(d) == length(trace_pipes(d)))


@pytest.mark.parametrize("n", [2, 3])
def test_reduced_diagrams_stay_in_staircase(n):
    grid = list(itertools.product(range(1, n + 1), repeat=2))
    for k in range(len(grid) + 1):
        for subset in itertools.combinations(grid, k):
            if is_reduced(Diagram(n, frozenset(subset))):
                assert all(i + j <= n for i, j in subset)


def test_enumerate_examples():
    assert enumerate_pipe_dreams(Permutation.identity(4)) == [PipeDream(4)]
    assert enumerate_pipe_dreams(perm("21")) == [PipeDream(2, frozenset({(1, 1)}))]
    assert enumerate_pipe_dreams(perm("321")) == [PipeDream(3, frozenset({(1, 1), (1, 2), (2, 1)}))]
    assert [R.sorted_cells() for R in enumerate_pipe_dreams(perm("132"))] == [((1, 2),), ((2, 1),)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_pipe_dream_traces_back(n):
    for w in Permutation.all(n):
        dreams = enumerate_pipe_dreams(w)
        assert dreams
        for R in dreams:
            assert R.permutation == w
            assert len(R) == length(w)


def test_enumerate_respects_bound():
    with pytest.raises(BoundExceededError):
        enumerate_pipe_dreams(Permutation.identity(4), Limits(max_pipe_dream_n=3))


def test_rank_fn():
    w = Permutation.identity(4)
    assert all(rank_fn(w, q, p) == min(q, p) for q in range(1, 5) for p in range(1, 5))
    assert rank_fn(perm("21534"), 2, 1) == 1
    assert rank_fn(perm("321"), 2, 2) == 1
    with pytest.raises(ValueError):
        rank_fn(perm("321"), 0, 1)
