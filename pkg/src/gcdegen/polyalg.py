"""Integer polynomials in ``x_1..x_n`` and the representation-theoretic oracles built on them."""

import itertools
import logging
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from typing import TypeAlias

import sympy
from sympy import ZZ, Poly

from .config import Limits
from .errors import ShapeMismatchError
from .grid import Permutation, enumerate_pipe_dreams

logger = logging.getLogger(__name__)

Exponents: TypeAlias = tuple[int, ...]
"""Exponent vector of a monomial ``x_1^{e_1} ... x_n^{e_n}``."""


@cache
def _gens(n: int) -> tuple[sympy.Symbol, ...]:
    return tuple(sympy.symbols(f"x1:{n + 1}"))


class MultiPolynomial:
    """Polynomial in ``x_1..x_n`` with arbitrary-precision integer coefficients.

    Values are immutable; arithmetic returns new polynomials. Zero coefficients
    are never stored.
    """

    __slots__ = ("_poly",)

    def __init__(self, n: int, terms: None | Mapping[Exponents, int] = None):
        """Build a polynomial from a map of exponent tuples to coefficients.

        Parameters
        ----------
        n : int
            Number of variables.
        terms : Mapping[Exponents, int], optional
            Coefficients keyed by exponent tuples of length ``n``.
        """
        if n < 1:
            raise ValueError(f"A polynomial needs at least one variable, got n={n}.")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"Invalid exponent vector {exps} for {n} variables.")
            if coeff != 0:
                clean[exps] = clean.get(exps, 0) + int(coeff)
        if clean:
            self._poly = Poly.from_dict(clean, *_gens(n), domain=ZZ)
        else:
            self._poly = Poly(0, *_gens(n), domain=ZZ)

    @classmethod
    def _wrap(cls, poly: Poly) -> "MultiPolynomial":
        out = cls.__new__(cls)
        out._poly = poly
        return out

    @classmethod
    def zero(cls, n: int) -> "MultiPolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "MultiPolynomial":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exps: Exponents, coeff: int = 1) -> "MultiPolynomial":
        """``coeff * x^exps``."""
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> "MultiPolynomial":
        """The variable ``x_i``."""
        if not 1 <= i <= n:
            raise ValueError(f"Variable x_{i} does not exist among x_1..x_{n}.")
        return cls.monomial(tuple(1 if k == i else 0 for k in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self._poly.gens)

    def terms(self) -> dict[Exponents, int]:
        """Nonzero coefficients keyed by exponent tuple, sorted by exponent tuple."""
        return {e: int(c) for e, c in sorted(self._poly.as_dict().items()) if c != 0}

    def is_zero(self) -> bool:
        return self._poly.is_zero

    def _check(self, other: "MultiPolynomial") -> None:
        if other.n != self.n:
            raise ShapeMismatchError(f"Polynomials in {self.n} and {other.n} variables cannot be combined.")

    def __add__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        self._check(other)
        return MultiPolynomial._wrap(self._poly + other._poly)

    def __sub__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        self._check(other)
        return MultiPolynomial._wrap(self._poly - other._poly)

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial._wrap(-self._poly)

    def __mul__(self, other: "MultiPolynomial | int") -> "MultiPolynomial":
        if isinstance(other, int):
            return MultiPolynomial._wrap(self._poly * other)
        self._check(other)
        return MultiPolynomial._wrap(self._poly * other._poly)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.terms().items())))

    def __repr__(self) -> str:
        return f"MultiPolynomial({self})"

    def __str__(self) -> str:
        return str(self._poly.as_expr())

    def swap(self, i: int) -> "MultiPolynomial":
        """``s_i f``: exchange ``x_i`` and ``x_{i+1}``."""
        if not 1 <= i < self.n:
            raise ValueError(f"Cannot swap x_{i} and x_{i + 1} among x_1..x_{self.n}.")
        swapped = {}
        for exps, coeff in self.terms().items():
            e = list(exps)
            e[i - 1], e[i] = e[i], e[i - 1]
            swapped[tuple(e)] = coeff
        return MultiPolynomial(self.n, swapped)

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    def evaluate_ones(self) -> int:
        """Value at ``x_1 = ... = x_n = 1``."""
        return sum(self.terms().values())

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.terms().items()]

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> "MultiPolynomial":
        return cls(n, {tuple(t["exponents"]): int(t["coeff"]) for t in data})


@dataclass(frozen=True)
class HighestWeight:
    """Weakly decreasing sequence of nonnegative parts ``lambda_1 >= ... >= lambda_n``.

    Parts are integers, or :class:`~fractions.Fraction` values for face
    dimension computations over the rationals.
    """

    parts: tuple[int | Fraction, ...]

    def __post_init__(self):
        parts = tuple(_exact(p) for p in self.parts)
        if not parts:
            raise ValueError("A highest weight needs at least one part.")
        if any(p < 0 for p in parts):
            raise ValueError(f"Weight parts must be nonnegative: {parts}")
        if any(a < b for a, b in itertools.pairwise(parts)):
            raise ValueError(f"Weight parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_string(cls, s: str) -> "HighestWeight":
        """Parse ``"2,1,0"``; parts may also be written as fractions, e.g. ``"5/2,1,0"``."""
        try:
            return cls(tuple(Fraction(x.strip()) for x in s.split(",")))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Invalid highest weight string: {s!r}") from None

    @classmethod
    def all(cls, n: int, max_part: int) -> list["HighestWeight"]:
        """Every weight with ``n`` parts in ``0..max_part``, in lexicographic order."""
        combos = itertools.combinations_with_replacement(range(max_part, -1, -1), n)
        return [cls(p) for p in sorted(combos)]

    @classmethod
    def staircase(cls, n: int) -> "HighestWeight":
        """The strictly decreasing weight ``(n-1, ..., 1, 0)``."""
        return cls(tuple(range(n - 1, -1, -1)))

    @property
    def n(self) -> int:
        return len(self.parts)

    def a(self, k: int) -> int | Fraction:
        """``a_k = lambda_k - lambda_{k+1}`` with ``lambda_{n+1} = 0``."""
        if not 1 <= k <= self.n:
            raise ValueError(f"a_{k} is undefined for a weight with {self.n} parts.")
        nxt = self.parts[k] if k < self.n else 0
        return self.parts[k - 1] - nxt

    def is_integral(self) -> bool:
        return all(isinstance(p, int) for p in self.parts)

    def is_strict(self) -> bool:
        return all(a > b for a, b in itertools.pairwise(self.parts))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def _exact(value) -> int | Fraction:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def _require_integral(lam: HighestWeight) -> None:
    if not lam.is_integral():
        raise ValueError(f"Weight {lam} must have integer parts here.")


def divided_difference(f: MultiPolynomial, i: int) -> MultiPolynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``; the division is exact."""
    num = f - f.swap(i)
    x = _gens(f.n)
    den = Poly(x[i - 1] - x[i], *x, domain=ZZ)
    return MultiPolynomial._wrap(num._poly.exquo(den))


def demazure_operator(f: MultiPolynomial, i: int) -> MultiPolynomial:
    """Isobaric divided difference ``pi_i f = d_i(x_i f)``."""
    return divided_difference(MultiPolynomial.variable(f.n, i) * f, i)


def schubert_divided_difference(w: Permutation, rule: str = "leftmost") -> MultiPolynomial:
    """Schubert polynomial from ``S_{w0} = prod x_i^{n-i}`` by descending divided differences.

    ``S_w = d_i S_{w s_i}`` for an ascent ``i`` of ``w``; ``rule`` picks the
    ``"leftmost"`` or ``"rightmost"`` ascent, and the result does not depend on it.
    """
    if rule not in ("leftmost", "rightmost"):
        raise ValueError(f"Unknown ascent rule: {rule}. Must be 'leftmost' or 'rightmost'.")
    return _schubert(w, rule)


@lru_cache(maxsize=4096)
def _schubert(w: Permutation, rule: str) -> MultiPolynomial:
    ascents = w.ascents()
    if not ascents:
        return MultiPolynomial.monomial(tuple(w.n - i for i in range(1, w.n + 1)))
    i = ascents[0] if rule == "leftmost" else ascents[-1]
    return divided_difference(_schubert(w.times_simple(i), rule), i)


def schubert_pipedreams(w: Permutation, limits: None | Limits = None) -> MultiPolynomial:
    """``sum_R prod_{(i, j) in R} x_i`` over the reduced pipe dreams of ``w``."""
    terms = Counter(r.row_counts() for r in enumerate_pipe_dreams(w, limits))
    return MultiPolynomial(w.n, terms)


def demazure_character(w: Permutation, lam: HighestWeight, rule: str = "leftmost") -> MultiPolynomial:
    """``pi_{i_1} ... pi_{i_l} x^lambda`` over a reduced word of ``w``."""
    if lam.n != w.n:
        raise ShapeMismatchError(f"Weight {lam} has {lam.n} parts but w={w} lies in S_{w.n}.")
    _require_integral(lam)
    f = MultiPolynomial.monomial(lam.parts)
    for i in reversed(w.reduced_word(rule)):
        f = demazure_operator(f, i)
    return f


def demazure_dim(w: Permutation, lam: HighestWeight) -> int:
    """Dimension of the Demazure module: the character at ``x = 1``."""
    return demazure_character(w, lam).evaluate_ones()


def weyl_dim(lam: HighestWeight) -> int:
    """Weyl's dimension formula ``prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)``."""
    _require_integral(lam)
    result = Fraction(1)
    for i, j in itertools.combinations(range(lam.n), 2):
        result *= Fraction(lam.parts[i] - lam.parts[j] + j - i, j - i)
    assert result.denominator == 1
    return result.numerator


def ssyt_contents(lam: HighestWeight):
    """Yield the content vector of every semistandard tableau of shape ``lambda``, entries ``<= n``."""
    _require_integral(lam)
    n = lam.n
    shape = [p for p in lam.parts if p > 0]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    tableau = [[0] * length for length in shape]
    content = [0] * n

    def backtrack(pos):
        if pos == len(cells):
            yield tuple(content)
            return
        row, col = cells[pos]
        low = 1
        if col > 0:
            low = max(low, tableau[row][col - 1])
        if row > 0:
            low = max(low, tableau[row - 1][col] + 1)
        # column needs room below for the remaining rows of the shape
        high = n - sum(1 for r in range(row + 1, len(shape)) if shape[r] > col)
        for val in range(low, high + 1):
            tableau[row][col] = val
            content[val - 1] += 1
            yield from backtrack(pos + 1)
            content[val - 1] -= 1
        tableau[row][col] = 0

    yield from backtrack(0)


def schur_ssyt(lam: HighestWeight) -> MultiPolynomial:
    """Schur polynomial ``s_lambda(x_1..x_n)`` as the tableau sum of ``x^content``."""
    return MultiPolynomial(lam.n, Counter(ssyt_contents(lam)))
