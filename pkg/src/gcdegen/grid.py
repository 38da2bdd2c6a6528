"""Permutations, diagrams, pipe tracing and reduced pipe dreams (rc-graphs)."""

import itertools
import json
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import TypeAlias

from .config import Limits, resolve

logger = logging.getLogger(__name__)

Cell: TypeAlias = tuple[int, int]
"""Grid cell ``(i, j)``: row ``i`` from the top, column ``j`` from the left, both 1-indexed."""


@dataclass(frozen=True)
class Permutation:
    """Element of the symmetric group ``S_n`` in one-line notation.

    ``word[i - 1]`` is ``w(i)``; calling the permutation evaluates it, so ``w(1)``
    is the first letter of the word.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if not word:
            raise ValueError("A permutation needs at least one letter.")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(word)}: {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def from_string(cls, s: str) -> "Permutation":
        """Parse ``"15423"`` (one digit per letter) or ``"1,5,10,..."`` (comma-separated)."""
        s = s.strip()
        if "," in s:
            return cls(tuple(int(x) for x in s.split(",")))
        if not s.isdigit():
            raise ValueError(f"Invalid permutation string: {s!r}")
        return cls(tuple(int(c) for c in s))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The longest element ``w_0 = n ... 2 1``."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def all(cls, n: int) -> list["Permutation"]:
        """All of ``S_n`` in lexicographic order of one-line notation."""
        return [cls(p) for p in itertools.permutations(range(1, n + 1))]

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(x) for x in self.word)
        return ",".join(str(x) for x in self.word)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(i) = self(other(i))``."""
        if other.n != self.n:
            raise ValueError(f"Cannot compose permutations of sizes {self.n} and {other.n}.")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.word, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def times_simple(self, i: int) -> "Permutation":
        """Right multiplication by ``s_i``: swaps positions ``i`` and ``i + 1``."""
        if not 1 <= i < self.n:
            raise ValueError(f"Simple transposition s_{i} does not exist in S_{self.n}.")
        word = list(self.word)
        word[i - 1], word[i] = word[i], word[i - 1]
        return Permutation(tuple(word))

    def descents(self) -> list[int]:
        """Positions ``i`` with ``w(i) > w(i + 1)``, i.e. ``l(w s_i) < l(w)``."""
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]

    def ascents(self) -> list[int]:
        return [i for i in range(1, self.n) if self(i) < self(i + 1)]

    def reduced_word(self, rule: str = "leftmost") -> tuple[int, ...]:
        """Reduced word ``(i_1, ..., i_l)`` with ``w = s_{i_1} ... s_{i_l}``.

        Built by repeatedly stripping a right descent; ``rule`` picks the
        ``"leftmost"`` or ``"rightmost"`` descent at each step.
        """
        if rule not in ("leftmost", "rightmost"):
            raise ValueError(f"Unknown reduced word rule: {rule}. Must be 'leftmost' or 'rightmost'.")
        letters = []
        current = self
        while descents := current.descents():
            i = descents[0] if rule == "leftmost" else descents[-1]
            letters.append(i)
            current = current.times_simple(i)
        return tuple(reversed(letters))

    def rothe_diagram(self) -> frozenset[Cell]:
        """Cells ``(i, j)`` with ``j < w(i)`` and ``i < w^{-1}(j)``."""
        inv = self.inverse()
        return frozenset(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if j < self(i) and i < inv(j)
        )

    def essential_set(self) -> frozenset[Cell]:
        """Fulton's essential set: south-east corners of the Rothe diagram."""
        diagram = self.rothe_diagram()
        return frozenset(
            (i, j) for (i, j) in diagram if (i + 1, j) not in diagram and (i, j + 1) not in diagram
        )


def length(w: Permutation) -> int:
    """Number of inversions ``#{(i, j) : i < j, w(i) > w(j)}``."""
    return sum(1 for a, b in itertools.combinations(w.word, 2) if a > b)


def staircase(n: int) -> list[Cell]:
    """Cells strictly above the main antidiagonal, ``i + j <= n``, in lexicographic order."""
    return [(i, j) for i in range(1, n) for j in range(1, n + 1 - i)]


@dataclass(frozen=True)
class Diagram:
    """Finite set of crossing cells in the ``n x n`` grid."""

    n: int
    cells: frozenset[Cell] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Grid size must be positive, got {self.n}.")
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        for i, j in cells:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"Cell {(i, j)} lies outside the {self.n}x{self.n} grid.")
        object.__setattr__(self, "cells", cells)

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def row_counts(self) -> tuple[int, ...]:
        """Number of crossings in each row; the exponent vector of ``prod x_i``."""
        counts = Counter(i for i, _ in self.cells)
        return tuple(counts.get(i, 0) for i in range(1, self.n + 1))

    def to_json(self) -> dict:
        return {"n": self.n, "cells": [list(c) for c in self.sorted_cells()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Diagram":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), frozenset(tuple(c) for c in data["cells"]))


@dataclass(frozen=True)
class PipeDream(Diagram):
    """Reduced diagram: no two pipes cross twice."""

    def __post_init__(self):
        super().__post_init__()
        if not is_reduced(self):
            raise ValueError(f"Diagram {self.sorted_cells()} is not a reduced pipe dream.")

    @cached_property
    def permutation(self) -> Permutation:
        return trace_pipes(self)


@dataclass(frozen=True)
class _Routing:
    exits: tuple[int, ...]
    """Exit rank of the pipes entering rows ``1..n`` on the west edge."""
    crossings: tuple[tuple[int, int], ...]
    """``(horizontal pipe, vertical pipe)`` at every crossing cell."""


def _route(diagram: Diagram) -> _Routing:
    # Pipes 1..n enter on the west edge, pipe n + j enters column j on the south edge.
    # Crossings pass straight through; elbows send west->north and south->east.
    n = diagram.n
    from_below = [n + j for j in range(1, n + 1)]
    east_exit_row = {}
    crossings = []
    for i in range(n, 0, -1):
        from_west = i
        for j in range(1, n + 1):
            from_south = from_below[j - 1]
            if (i, j) in diagram.cells:
                crossings.append((from_west, from_south))
                up, right = from_south, from_west
            else:
                up, right = from_west, from_south
            from_below[j - 1] = up
            from_west = right
        east_exit_row[from_west] = i
    # a pipe leaving row r eastwards would reach column n + r in an unbounded grid of elbows
    rank = {pipe: j for j, pipe in enumerate(from_below, start=1)}
    rank.update({pipe: n + r for pipe, r in east_exit_row.items()})
    return _Routing(exits=tuple(rank[p] for p in range(1, n + 1)), crossings=tuple(crossings))


def trace_pipes(diagram: Diagram) -> Permutation:
    """Permutation ``w_R``: the pipe entering row ``i`` exits column ``w_R(i)``.

    Pipes that leave through the east edge (possible only for diagrams
    reaching below the antidiagonal) are ranked after every north exit, in row
    order, and the exit ranks are standardized to ``1..n``.
    """
    exits = _route(diagram).exits
    order = sorted(range(diagram.n), key=lambda p: exits[p])
    word = [0] * diagram.n
    for value, p in enumerate(order, start=1):
        word[p] = value
    return Permutation(tuple(word))


def is_reduced(diagram: Diagram) -> bool:
    """True iff no two pipes cross twice.

    Crossings involving a pipe that enters from the south edge also make the
    diagram non-reduced, so that ``is_reduced(D)`` agrees with
    ``len(D) == length(trace_pipes(D))`` on the whole grid.
    """
    n = diagram.n
    pairs = Counter()
    for horizontal, vertical in _route(diagram).crossings:
        if horizontal > n or vertical > n:
            return False
        pairs[frozenset((horizontal, vertical))] += 1
    return all(count == 1 for count in pairs.values())


def enumerate_pipe_dreams(w: Permutation, limits: None | Limits = None) -> list[PipeDream]:
    """All reduced pipe dreams ``R`` with ``w_R = w``, ordered by sorted cell list.

    Exhaustive search over the ``l(w)``-subsets of the staircase.

    Raises
    ------
    BoundExceededError
        If ``w.n`` is above ``limits.max_pipe_dream_n``.
    """
    limits = resolve(limits)
    limits.check("pipe dream n", w.n, limits.max_pipe_dream_n)
    ell = length(w)
    found = []
    for subset in itertools.combinations(staircase(w.n), ell):
        diagram = Diagram(w.n, frozenset(subset))
        if trace_pipes(diagram) == w and is_reduced(diagram):
            found.append(PipeDream(w.n, diagram.cells))
    found.sort(key=lambda r: r.sorted_cells())
    logger.debug("w=%s: %d pipe dreams", w, len(found))
    return found


def rank_fn(w: Permutation, q: int, p: int) -> int:
    """``w_qp = #{i <= q : w(i) <= p}``."""
    if not (1 <= q <= w.n and 1 <= p <= w.n):
        raise ValueError(f"Rank function arguments {(q, p)} out of range 1..{w.n}.")
    return sum(1 for i in range(1, q + 1) if w(i) <= p)
