"""Weight matrix, exponent vectors of Plücker coordinates and the lattice of column sets.

Everything here is exponent bookkeeping: a monomial in the matrix entries
``z_{i,j}`` is an :class:`ExponentVector` over the ``n x n`` grid, and weights
are integer dot products with :func:`omega`.
"""

import itertools
import json
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import QQ, ZZ
from sympy.combinatorics import Permutation as SymPermutation
from sympy.polys.matrices import DomainMatrix

from .config import Limits, resolve
from .errors import HypothesisNotMetError, ShapeMismatchError
from .grid import Cell
from .polyalg import HighestWeight

logger = logging.getLogger(__name__)


class WeightMatrix:
    """The ``n x n`` matrix ``omega_{i,j} = 3^{n-i-j}`` for ``i + j <= n``, ``0`` otherwise.

    Entries are Python integers (``object`` dtype), so weights never overflow.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"Weight matrix size must be positive, got {n}.")
        entries = np.zeros((n, n), dtype=object)
        for i, j in itertools.product(range(1, n + 1), repeat=2):
            entries[i - 1, j - 1] = 3 ** (n - i - j) if i + j <= n else 0
        entries.flags.writeable = False
        self.n = n
        self.entries = entries

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.entries[i - 1, j - 1]

    def to_list(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]


@lru_cache(maxsize=64)
def omega(n: int) -> WeightMatrix:
    return WeightMatrix(n)


class ExponentVector:
    """Nonnegative integer exponents ``e_{i,j}`` over the ``n x n`` grid."""

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        entries = np.array(entries, dtype=np.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"Exponent vector must be a square array, got shape {entries.shape}.")
        if (entries < 0).any():
            raise ValueError("Exponents must be nonnegative.")
        entries.flags.writeable = False
        self.entries = entries

    @classmethod
    def zero(cls, n: int) -> "ExponentVector":
        return cls(np.zeros((n, n), dtype=np.int64))

    @classmethod
    def from_cells(cls, n: int, cells) -> "ExponentVector":
        """Sum of unit vectors ``e_{(i, j)}``; repeated cells add up."""
        entries = np.zeros((n, n), dtype=np.int64)
        for i, j in cells:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"Cell {(i, j)} lies outside the {n}x{n} grid.")
            entries[i - 1, j - 1] += 1
        return cls(entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return int(self.entries[i - 1, j - 1])

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if other.n != self.n:
            raise ShapeMismatchError(f"Cannot add exponent vectors of sizes {self.n} and {other.n}.")
        return ExponentVector(self.entries + other.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExponentVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.n, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"ExponentVector({self.to_json()})"

    def key(self) -> tuple[int, ...]:
        """Row-major entries, used to sort vectors deterministically."""
        return tuple(int(x) for x in self.entries.ravel())

    def support(self) -> list[Cell]:
        return [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(self.entries))]

    def reflect_columns(self) -> "ExponentVector":
        """Reindex columns ``j -> n + 1 - j``."""
        return ExponentVector(self.entries[:, ::-1])

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[i, j, self[i, j]] for i, j in self.support()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "ExponentVector":
        if isinstance(data, str):
            data = json.loads(data)
        entries = np.zeros((data["n"], data["n"]), dtype=np.int64)
        for i, j, e in data["entries"]:
            entries[i - 1, j - 1] = e
        return cls(entries)


@dataclass(frozen=True)
class ColumnSet:
    """Nonempty set ``J = {j_1 < ... < j_k}`` of column indices."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elements = tuple(sorted(int(x) for x in self.elements))
        if not elements:
            raise ValueError("A column set must be nonempty.")
        if len(set(elements)) != len(elements) or elements[0] < 1:
            raise ValueError(f"Column set must hold distinct positive indices: {self.elements}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def of(cls, *elements: int) -> "ColumnSet":
        return cls(elements)

    @classmethod
    def from_string(cls, s: str) -> "ColumnSet":
        """Parse ``"134"`` or ``"1,3,4"``."""
        s = s.strip()
        if "," in s:
            return cls(tuple(int(x) for x in s.split(",")))
        if not s.isdigit():
            raise ValueError(f"Invalid column set string: {s!r}")
        return cls(tuple(int(c) for c in s))

    @classmethod
    def all(cls, n: int) -> list["ColumnSet"]:
        """Every nonempty subset of ``{1..n}``, by size and then lexicographically."""
        return [
            cls(c) for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k)
        ]

    @property
    def k(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        if self.elements[-1] <= 9:
            return "".join(str(x) for x in self.elements)
        return ",".join(str(x) for x in self.elements)

    def check_range(self, n: int) -> None:
        if self.elements[-1] > n:
            raise ValueError(f"Column set {self} is not a subset of 1..{n}.")

    def reflect(self, n: int) -> "ColumnSet":
        """``iota(J) = {n + 1 - j : j in J}``."""
        self.check_range(n)
        return ColumnSet(tuple(n + 1 - j for j in self.elements))


@dataclass(frozen=True)
class MinorSpec:
    """Square minor with rows ``I`` and columns ``J``, both sorted ascending."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(sorted(int(x) for x in self.rows))
        cols = tuple(sorted(int(x) for x in self.cols))
        if not rows or len(rows) != len(cols):
            raise ValueError(f"Minor needs equally many rows and columns: {rows} vs {cols}")
        for name, seq in (("rows", rows), ("cols", cols)):
            if len(set(seq)) != len(seq) or seq[0] < 1:
                raise ValueError(f"Minor {name} must be distinct positive indices: {seq}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def k(self) -> int:
        return len(self.rows)

    def check_range(self, n: int) -> None:
        if self.rows[-1] > n or self.cols[-1] > n:
            raise ValueError(f"Minor {self} does not fit in a {n}x{n} matrix.")

    def antidiagonal(self) -> list[Cell]:
        """Cells ``(i_s, j_{k+1-s})``."""
        return [(self.rows[s], self.cols[self.k - 1 - s]) for s in range(self.k)]

    def diagonal(self) -> list[Cell]:
        return list(zip(self.rows, self.cols))

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}


@dataclass(frozen=True)
class MinorTerm:
    """One Leibniz term of a minor: the permutation monomial and its sign."""

    exponents: ExponentVector
    sign: int


def plucker_minor(J: ColumnSet) -> MinorSpec:
    """The top-justified minor ``p_J`` on rows ``1..|J|`` and columns ``J``."""
    return MinorSpec(tuple(range(1, J.k + 1)), J.elements)


def alpha(J: ColumnSet, n: int) -> ExponentVector:
    """Exponent vector of the antidiagonal term of ``p_J``: support ``{(s, j_{k+1-s})}``."""
    J.check_range(n)
    return ExponentVector.from_cells(n, plucker_minor(J).antidiagonal())


def delta(J: ColumnSet, n: int) -> ExponentVector:
    """Exponent vector of the diagonal term of ``p_J``: support ``{(s, j_s)}``."""
    J.check_range(n)
    return ExponentVector.from_cells(n, plucker_minor(J).diagonal())


def omega_weight(e: ExponentVector) -> int:
    """``sum e_{i,j} omega_{i,j}``."""
    return int(np.dot(e.entries.ravel().astype(object), omega(e.n).entries.ravel()))


def omega_J(J: ColumnSet, n: int) -> int:
    """Weight of the antidiagonal term of the top-justified minor ``p_J``."""
    return omega_weight(alpha(J, n))


def minor_terms(M: MinorSpec, n: int, limits: None | Limits = None) -> list[MinorTerm]:
    """Leibniz expansion of the minor, one term per permutation in lexicographic order.

    The first term is the diagonal one, the last the antidiagonal one.
    """
    limits = resolve(limits)
    limits.check("minor size", M.k, limits.max_minor_size)
    M.check_range(n)
    terms = []
    for perm in itertools.permutations(range(M.k)):
        cells = [(M.rows[s], M.cols[perm[s]]) for s in range(M.k)]
        terms.append(MinorTerm(ExponentVector.from_cells(n, cells), SymPermutation(list(perm)).signature()))
    return terms


def t_valuations(J: ColumnSet, n: int, limits: None | Limits = None) -> list[tuple[MinorTerm, int]]:
    """``t``-valuation ``omega_weight(m) - omega_J`` of every term ``m`` of ``p_J``."""
    base = omega_J(J, n)
    return [(term, omega_weight(term.exponents) - base) for term in minor_terms(plucker_minor(J), n, limits)]


def antidiagonal_is_min(M: MinorSpec, n: int, limits: None | Limits = None) -> bool:
    """True iff the antidiagonal term is the unique lowest-weight term of the minor.

    Raises
    ------
    HypothesisNotMetError
        If some antidiagonal cell of ``M`` lies strictly below the main antidiagonal.
    """
    M.check_range(n)
    below = [(i, j) for i, j in M.antidiagonal() if i + j > n + 1]
    if below:
        raise HypothesisNotMetError(f"Antidiagonal cells {below} of {M} lie below the main antidiagonal (n={n}).")
    anti = ExponentVector.from_cells(n, M.antidiagonal())
    anti_weight = omega_weight(anti)
    return all(
        omega_weight(term.exponents) > anti_weight
        for term in minor_terms(M, n, limits)
        if term.exponents != anti
    )


def lattice_geq(I: ColumnSet, J: ColumnSet) -> bool:
    """``I >= J`` iff ``|I| <= |J|`` and ``i_s >= j_s`` for ``s <= |I|``."""
    return I.k <= J.k and all(i >= j for i, j in zip(I.elements, J.elements))


def lattice_leq(I: ColumnSet, J: ColumnSet) -> bool:
    return lattice_geq(J, I)


def _short_long(I: ColumnSet, J: ColumnSet) -> tuple[ColumnSet, ColumnSet]:
    return (I, J) if I.k <= J.k else (J, I)


def lattice_meet(I: ColumnSet, J: ColumnSet) -> ColumnSet:
    """Componentwise minima over the shorter length, followed by the tail of the longer set."""
    short, long = _short_long(I, J)
    head = tuple(min(a, b) for a, b in zip(short.elements, long.elements))
    return ColumnSet(head + long.elements[short.k:])


def lattice_join(I: ColumnSet, J: ColumnSet) -> ColumnSet:
    """Componentwise maxima over the shorter length."""
    short, long = _short_long(I, J)
    return ColumnSet(tuple(max(a, b) for a, b in zip(short.elements, long.elements)))


BINOMIAL_VARIANTS = ("diagonal", "antidiagonal", "mixed")
"""Conventions for :func:`binomial_relation_holds`.

``"diagonal"`` pairs diagonal exponents with the plain meet and join,
``"antidiagonal"`` pairs antidiagonal exponents with meet and join conjugated
by the column reflection, and ``"mixed"`` pairs antidiagonal exponents with the
plain meet and join, which is not a valid combination.
"""


def binomial_relation_holds(I: ColumnSet, J: ColumnSet, n: int, variant: str = "diagonal") -> bool:
    """Degenerate Plücker relation ``x_I x_J = x_{I meet J} x_{I join J}`` on exponent vectors."""
    match variant:
        case "diagonal":
            return delta(I, n) + delta(J, n) == delta(lattice_meet(I, J), n) + delta(lattice_join(I, J), n)
        case "antidiagonal":
            ri, rj = I.reflect(n), J.reflect(n)
            meet = lattice_meet(ri, rj).reflect(n)
            join = lattice_join(ri, rj).reflect(n)
            return alpha(I, n) + alpha(J, n) == alpha(meet, n) + alpha(join, n)
        case "mixed":
            return alpha(I, n) + alpha(J, n) == alpha(lattice_meet(I, J), n) + alpha(lattice_join(I, J), n)
        case _:
            raise ValueError(f"Unknown binomial variant: {variant}. Must be one of {BINOMIAL_VARIANTS}.")


def upsilon(lam: HighestWeight, limits: None | Limits = None) -> frozenset[ExponentVector]:
    """All sums of ``alpha_I`` using exactly ``a_k`` subsets ``I`` of each size ``k``."""
    limits = resolve(limits)
    if not lam.is_integral():
        raise ValueError(f"Weight {lam} must have integer parts here.")
    n = lam.n
    limits.check("upsilon summands", sum(lam.a(k) for k in range(1, n + 1)), limits.max_upsilon_indices)
    by_size = {k: [alpha(J, n) for J in ColumnSet.all(n) if J.k == k] for k in range(1, n + 1)}
    sums = {ExponentVector.zero(n)}
    for k in range(1, n + 1):
        for _ in range(lam.a(k)):
            sums = {s + a for s in sums for a in by_size[k]}
    logger.debug("lambda=%s: |upsilon| = %d", lam, len(sums))
    return frozenset(sums)


def semigroup_rank(n: int, limits: None | Limits = None) -> int:
    """Rank of the lattice spanned by ``alpha_I`` over all nonempty ``I``; equals ``n(n+1)/2``."""
    limits = resolve(limits)
    limits.check("semigroup n", n, limits.max_semigroup_n)
    rows = [[ZZ(int(x)) for x in alpha(J, n).entries.ravel()] for J in ColumnSet.all(n)]
    matrix = DomainMatrix(rows, (len(rows), n * n), ZZ)
    return matrix.convert_to(QQ).rank()


def _check_conjugation_args(i: int, k: int, j: int, n: int) -> None:
    if not (1 <= k <= i <= n and 1 <= j <= n):
        raise ValueError(f"Conjugation position (i={i}, k={k}, j={j}) is outside the lower triangle for n={n}.")


def conjugation_t_exponent(i: int, k: int, j: int, n: int) -> int:
    """Exponent ``omega_{k,j} - omega_{i,j}`` acquired by entry ``(i, k)`` of the ``j``-th component."""
    _check_conjugation_args(i, k, j, n)
    om = omega(n)
    return om[k, j] - om[i, j]


def special_fiber_zeroed(i: int, k: int, j: int, n: int) -> bool:
    """True iff entry ``(i, k)`` of the ``j``-th component vanishes at ``t = 0``.

    These are the entries in columns ``1..n-j`` strictly below the diagonal.
    """
    _check_conjugation_args(i, k, j, n)
    return i > k and k + j <= n


def conjugation_exponents(j: int, n: int) -> list[list[None | int]]:
    """Lower-triangular exponent matrix of the ``j``-th component; ``None`` above the diagonal."""
    return [
        [conjugation_t_exponent(i, k, j, n) if k <= i else None for k in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
