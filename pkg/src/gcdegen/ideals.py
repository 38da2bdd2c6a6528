"""Schubert determinantal ideals, their antidiagonal initial ideals and pipe-dream primes.

Squarefree monomials in the variables ``z_{i,j}`` are stored as bit masks, bit
``(i - 1) * n + (j - 1)`` standing for ``z_{i,j}``.
"""

import itertools
import logging
import time
from dataclasses import dataclass

import sympy

from .config import Limits, resolve
from .errors import BoundExceededError, GcDegenError, ShapeMismatchError
from .grid import Cell, Permutation, PipeDream, enumerate_pipe_dreams, rank_fn
from .sagbi import ColumnSet, MinorSpec

logger = logging.getLogger(__name__)

MAX_MASK_N = 8
"""Fixed bound on ``n``: the ``n * n`` variables must fit one 64-bit mask. Not configurable."""


@dataclass(frozen=True)
class SqfMonomial:
    """Squarefree monomial ``prod z_{i,j}`` over its support, as a bit mask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n > MAX_MASK_N:
            raise BoundExceededError(f"n = {self.n} exceeds the bit mask width bound {MAX_MASK_N}")
        if self.mask < 0 or self.mask >> (self.n * self.n):
            raise ValueError(f"Mask {self.mask:#x} has bits outside the {self.n}x{self.n} grid.")

    @classmethod
    def from_cells(cls, n: int, cells) -> "SqfMonomial":
        mask = 0
        for i, j in cells:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"Cell {(i, j)} lies outside the {n}x{n} grid.")
            mask |= 1 << ((i - 1) * n + (j - 1))
        return cls(n, mask)

    def cells(self) -> list[Cell]:
        return [(b // self.n + 1, b % self.n + 1) for b in range(self.n * self.n) if self.mask >> b & 1]

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def divides(self, other: "SqfMonomial") -> bool:
        return self.mask & ~other.mask == 0

    def lcm(self, other: "SqfMonomial") -> "SqfMonomial":
        return SqfMonomial(self.n, self.mask | other.mask)

    def sort_key(self) -> tuple:
        return (self.degree, self.cells())

    def __str__(self) -> str:
        if not self.mask:
            return "1"
        return "*".join(f"z{i}{j}" if self.n <= 9 else f"z{i}_{j}" for i, j in self.cells())


def _minimalize(monomials) -> list[SqfMonomial]:
    kept = []
    for m in sorted(set(monomials), key=SqfMonomial.sort_key):
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal held by its minimal generators.

    No generators means the zero ideal.
    """

    n: int
    generators: tuple[SqfMonomial, ...] = ()

    def __post_init__(self):
        for g in self.generators:
            if g.n != self.n:
                raise ShapeMismatchError(f"Generator {g} lives in n={g.n}, ideal in n={self.n}.")
        object.__setattr__(self, "generators", tuple(_minimalize(self.generators)))

    @classmethod
    def from_cells(cls, n: int, generators) -> "MonomialIdeal":
        """``MonomialIdeal.from_cells(2, [[(1, 1)], [(1, 2), (2, 1)]])`` is ``<z11, z12*z21>``."""
        return cls(n, tuple(SqfMonomial.from_cells(n, cells) for cells in generators))

    def __len__(self) -> int:
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def contains_monomial(self, m: SqfMonomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def to_json(self) -> list[list[list[int]]]:
        return [[list(c) for c in g.cells()] for g in self.generators]

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def _check_same_n(A: MonomialIdeal, B: MonomialIdeal) -> None:
    if A.n != B.n:
        raise ShapeMismatchError(f"Ideals in n={A.n} and n={B.n} variables cannot be compared.")


def fulton_generators(w: Permutation, essential: bool = False, limits: None | Limits = None) -> list[MinorSpec]:
    """All minors of size ``1 + w_qp`` in the top-left ``q x p`` submatrices.

    With ``essential`` set, only the ``(q, p)`` of the essential set of ``w``
    contribute; the ideal generated is the same.
    """
    limits = resolve(limits)
    limits.check("Fulton n", w.n, limits.max_fulton_n)
    n = w.n
    corners = sorted(w.essential_set()) if essential else list(itertools.product(range(1, n + 1), repeat=2))
    minors = set()
    for q, p in corners:
        size = 1 + rank_fn(w, q, p)
        if size > min(q, p):
            continue
        for rows in itertools.combinations(range(1, q + 1), size):
            for cols in itertools.combinations(range(1, p + 1), size):
                minors.add(MinorSpec(rows, cols))
    return sorted(minors, key=lambda M: (M.k, M.rows, M.cols))


def antidiag_monomial(M: MinorSpec, n: int) -> SqfMonomial:
    """Support ``{(i_s, j_{k+1-s})}``."""
    M.check_range(n)
    return SqfMonomial.from_cells(n, M.antidiagonal())


def initial_ideal(w: Permutation, essential: bool = False, limits: None | Limits = None) -> MonomialIdeal:
    """Ideal of antidiagonal terms of the Fulton generators of ``I_w``."""
    return MonomialIdeal(w.n, tuple(antidiag_monomial(M, w.n) for M in fulton_generators(w, essential, limits)))


def pipe_dream_prime(R: PipeDream) -> MonomialIdeal:
    """``<z_{i,j} : (i, j) in R>``."""
    return MonomialIdeal(R.n, tuple(SqfMonomial.from_cells(R.n, [c]) for c in R.cells))


def intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of ``A`` and ``B`` combined by pairwise lcm."""
    _check_same_n(A, B)
    return MonomialIdeal(A.n, tuple(g.lcm(h) for g in A.generators for h in B.generators))


def intersect_all(ideals: list[MonomialIdeal]) -> MonomialIdeal:
    """Fold :func:`intersect` over ``ideals``, fewest generators first."""
    if not ideals:
        raise ValueError("Cannot intersect an empty family of ideals.")
    ordered = sorted(ideals, key=len)
    result = ordered[0]
    for ideal in ordered[1:]:
        result = intersect(result, ideal)
    return result


def ideal_contains(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    """``A`` is a subset of ``B``: every generator of ``A`` is divisible by one of ``B``."""
    _check_same_n(A, B)
    return all(B.contains_monomial(g) for g in A.generators)


def ideal_equals(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    return ideal_contains(A, B) and ideal_contains(B, A)


@dataclass(kw_only=True)
class DegenerationReport:
    """Outcome of comparing ``in(I_w)`` with the intersection of pipe-dream primes."""

    w: Permutation
    equal: bool
    initial: MonomialIdeal
    intersection: MonomialIdeal
    pipe_dream_count: int
    millis: int

    def to_json(self, timing: bool = True) -> dict:
        """Report record; ``timing=False`` drops ``millis`` so reruns are byte-identical."""
        data = {
            "w": str(self.w),
            "equal": self.equal,
            "initial_generators": self.initial.to_json(),
            "intersection_generators": self.intersection.to_json(),
            "pipe_dream_count": self.pipe_dream_count,
        }
        if timing:
            data["millis"] = self.millis
        return data


def verify_degeneration(w: Permutation, limits: None | Limits = None) -> DegenerationReport:
    """Compare ``in(I_w)`` with the intersection of ``<z_{i,j} : (i, j) in R>`` over pipe dreams ``R`` of ``w``.

    Raises
    ------
    BoundExceededError
        If ``w.n`` is above ``limits.verify_n``.
    """
    limits = resolve(limits)
    limits.check("verification n", w.n, limits.verify_n)
    start = time.perf_counter()
    initial = initial_ideal(w, limits=limits)
    dreams = enumerate_pipe_dreams(w, limits)
    intersection = intersect_all([pipe_dream_prime(R) for R in dreams])
    millis = round((time.perf_counter() - start) * 1000)
    report = DegenerationReport(
        w=w,
        equal=ideal_equals(initial, intersection),
        initial=initial,
        intersection=intersection,
        pipe_dream_count=len(dreams),
        millis=millis,
    )
    logger.debug("w=%s: %d pipe dreams, equal=%s, %d ms", w, len(dreams), report.equal, millis)
    return report


def vanishing_pluckers(w: Permutation, literal: bool = False) -> list[ColumnSet]:
    """Column sets ``I`` whose Plücker coordinate vanishes on the matrix Schubert variety of ``w``.

    ``p_I`` survives iff some permutation matrix ``v`` with rank matrix
    bounded by that of ``w`` has ``sorted(v(1..k)) <= I`` entrywise. Those
    ``v`` lie above ``w`` in Bruhat order, so by the tableau criterion the
    smallest such row set is ``sorted(w(1..k))`` itself. With ``literal``
    set, only the sets with ``k > w_{k, max I}`` are returned.
    """
    subsets = ColumnSet.all(w.n)
    if literal:
        return [I for I in subsets if I.k > rank_fn(w, I.k, I.elements[-1])]
    return [
        I for I in subsets
        if any(a > b for a, b in zip(sorted(w.word[: I.k]), I.elements))
    ]


def _fulton_polynomial(M: MinorSpec, z: list[list[sympy.Symbol]]) -> sympy.Expr:
    return sympy.Matrix([[z[i - 1][j - 1] for j in M.cols] for i in M.rows]).det()


def groebner_initial_ideal(w: Permutation, limits: None | Limits = None) -> MonomialIdeal:
    """Lead monomials of a reduced Gröbner basis of ``I_w`` under an antidiagonal lex order.

    Variables are ordered row by row from the top and right to left within a
    row, so the lead term of every minor is its antidiagonal term.
    """
    limits = resolve(limits)
    limits.check("Buchberger n", w.n, limits.max_buchberger_n)
    n = w.n
    z = [[sympy.Symbol(f"z{i}{j}") for j in range(1, n + 1)] for i in range(1, n + 1)]
    gens = [z[i][j] for i in range(n) for j in reversed(range(n))]
    polys = [_fulton_polynomial(M, z) for M in fulton_generators(w, limits=limits)]
    if not polys:
        return MonomialIdeal(n)
    basis = sympy.groebner(polys, *gens, order="lex")
    leads = []
    for g in basis.exprs:
        exps = sympy.Poly(g, *gens).monoms(order="lex")[0]
        if max(exps) > 1:
            raise GcDegenError(f"Lead monomial of {g} is not squarefree.")
        cells = [(k // n + 1, n - k % n) for k, e in enumerate(exps) if e]
        leads.append(SqfMonomial.from_cells(n, cells))
    return MonomialIdeal(n, tuple(leads))
