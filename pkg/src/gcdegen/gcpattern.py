"""Gel'fand-Cetlin patterns, the polytope ``P_lambda`` and its rc-faces."""

import itertools
import json
import logging
import math
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import TypeAlias
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .config import Limits, resolve
from .errors import OrientationError, ShapeMismatchError
from .grid import Cell, Diagram, Permutation, enumerate_pipe_dreams
from .polyalg import HighestWeight, MultiPolynomial, demazure_dim
from .sagbi import ColumnSet, ExponentVector

logger = logging.getLogger(__name__)

Entry: TypeAlias = int | Fraction
"""Pattern entry: an integer, or a rational for face-dimension computations."""


def _triangle(n: int) -> list[Cell]:
    """Cells ``(i, j)`` with ``i + j <= n + 1``, row by row."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 2 - i)]


def _json_number(x: Entry) -> int | str:
    return x if isinstance(x, int) else str(x)


def _parse_number(x) -> Entry:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class GCPattern:
    """Triangular array ``lambda_{i,j}``, ``i + j <= n + 1``; ``rows[i - 1]`` is row ``i``.

    Column ``1`` holds the highest weight. Interlacing is not enforced here,
    see :func:`is_pattern`.
    """

    rows: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_parse_number(x) for x in row) for row in self.rows)
        n = len(rows)
        if n < 1:
            raise ValueError("A pattern needs at least one row.")
        for i, row in enumerate(rows, start=1):
            if len(row) != n + 1 - i:
                raise ValueError(f"Row {i} of a size-{n} pattern must have {n + 1 - i} entries, got {len(row)}.")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_entries(cls, n: int, entries: dict[Cell, Entry]) -> "GCPattern":
        return cls(tuple(tuple(entries[i, j] for j in range(1, n + 2 - i)) for i in range(1, n + 1)))

    @classmethod
    def from_columns(cls, columns: list[tuple[Entry, ...]]) -> "GCPattern":
        """Build from columns; column ``j`` holds ``lambda_{1,j}, ..., lambda_{n+1-j,j}``."""
        n = len(columns)
        return cls(tuple(tuple(columns[j - 1][i - 1] for j in range(1, n + 2 - i)) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, cell: Cell) -> Entry:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[Entry, ...]:
        return tuple(self.rows[i - 1][j - 1] for i in range(1, self.n + 2 - j))

    def free_entries(self) -> tuple[Entry, ...]:
        """Entries with ``j >= 2``, in row-major order."""
        return tuple(x for row in self.rows for x in row[1:])

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[_json_number(x) for x in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict | str) -> "GCPattern":
        if isinstance(data, str):
            data = json.loads(data)
        pattern = cls(tuple(tuple(row) for row in data["rows"]))
        if pattern.n != data["n"]:
            raise ShapeMismatchError(f"Pattern JSON declares n={data['n']} but holds {pattern.n} rows.")
        return pattern


@dataclass(frozen=True)
class ExponentArray:
    """Nonnegative integers ``a_{i,j}`` on the triangle ``i + j <= n + 1``."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        n = len(rows)
        if n < 1:
            raise ValueError("An exponent array needs at least one row.")
        for i, row in enumerate(rows, start=1):
            if len(row) != n + 1 - i:
                raise ValueError(f"Row {i} of a size-{n} array must have {n + 1 - i} entries, got {len(row)}.")
            if any(x < 0 for x in row):
                raise ValueError(f"Exponent array entries must be nonnegative, row {i} is {row}.")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zero(cls, n: int) -> "ExponentArray":
        return cls(tuple((0,) * (n + 1 - i) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def to_vector(self) -> ExponentVector:
        """Place ``a_{i,j}`` at cell ``(i, j)`` of the ``n x n`` grid."""
        return ExponentVector.from_cells(self.n, [c for c in _triangle(self.n) for _ in range(self[c])])

    @classmethod
    def from_vector(cls, e: ExponentVector) -> "ExponentArray":
        outside = [(i, j) for i, j in e.support() if i + j > e.n + 1]
        if outside:
            raise ValueError(f"Exponent vector has support {outside} below the triangle i + j <= n + 1.")
        n = e.n
        return cls(tuple(tuple(e[i, j] for j in range(1, n + 2 - i)) for i in range(1, n + 1)))


FACE_CONVENTIONS = ("adjacent", "literal")
"""Equality attached to a crossing ``(i, j)``.

``"adjacent"`` imposes ``lambda_{i,j} = lambda_{i,j+1}`` (the coordinate
``a_{i,j}`` vanishes), ``"literal"`` imposes ``lambda_{i,j} = lambda_{i+1,j}``.
"""


@dataclass(frozen=True)
class GCFace:
    """Face of ``P_lambda`` cut out by one equality per cell."""

    lam: HighestWeight
    equalities: frozenset[Cell] = frozenset()
    convention: str = field(default="adjacent", kw_only=True)

    def __post_init__(self):
        if self.convention not in FACE_CONVENTIONS:
            raise ValueError(f"Unknown face convention: {self.convention}. Must be one of {FACE_CONVENTIONS}.")
        cells = frozenset((int(i), int(j)) for i, j in self.equalities)
        outside = sorted(c for c in cells if c[0] < 1 or c[1] < 1 or c[0] + c[1] > self.lam.n)
        if outside:
            raise ValueError(f"Face equalities {outside} lie outside the staircase i + j <= {self.lam.n}.")
        object.__setattr__(self, "equalities", cells)

    def constraints(self) -> list[tuple[Cell, Cell]]:
        """Pairs of pattern cells forced to be equal."""
        if self.convention == "adjacent":
            return [((i, j), (i, j + 1)) for i, j in sorted(self.equalities)]
        return [((i, j), (i + 1, j)) for i, j in sorted(self.equalities)]

    def contains(self, pattern: GCPattern) -> bool:
        return all(pattern[a] == pattern[b] for a, b in self.constraints())

    def to_json(self) -> dict:
        return {
            "lambda": [_json_number(p) for p in self.lam.parts],
            "equalities": [list(c) for c in sorted(self.equalities)],
            "convention": self.convention,
        }


def _check_shape(pattern: GCPattern, lam: HighestWeight) -> None:
    if pattern.n != lam.n:
        raise ShapeMismatchError(f"Pattern of size {pattern.n} cannot have first column {lam}.")


def is_pattern(pattern: GCPattern, lam: HighestWeight) -> bool:
    """True iff column ``1`` equals ``lambda`` and every interlacing inequality holds."""
    _check_shape(pattern, lam)
    if pattern.column(1) != lam.parts:
        return False
    n = pattern.n
    for i, j in _triangle(n):
        if j + 1 <= n + 1 - i and pattern[i, j] < pattern[i, j + 1]:
            return False
        if i + j <= n and pattern[i, j + 1] < pattern[i + 1, j]:
            return False
    return True


def interlaces(mu: HighestWeight, lam: HighestWeight) -> bool:
    """``lambda_i >= mu_i >= lambda_{i+1}`` for every ``i``."""
    if mu.n != lam.n - 1:
        raise ShapeMismatchError(f"Cannot interlace {mu.n} parts with {lam.n} parts.")
    return all(lam.parts[i] >= mu.parts[i] >= lam.parts[i + 1] for i in range(mu.n))


def _interlacing(parts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    ranges = [range(parts[i + 1], parts[i] + 1) for i in range(len(parts) - 1)]
    return itertools.product(*ranges)


def branch(lam: HighestWeight) -> list[HighestWeight]:
    """Every ``mu`` with ``n - 1`` parts interlacing ``lambda``, in lexicographic order."""
    if lam.n < 2:
        raise ValueError(f"Cannot branch a weight with {lam.n} part.")
    if not lam.is_integral():
        raise ValueError(f"Weight {lam} must have integer parts here.")
    return [HighestWeight(mu) for mu in _interlacing(lam.parts)]


def partial_chains(lam: HighestWeight, i: int) -> list[tuple[HighestWeight, ...]]:
    """Chains ``lambda = lambda^n, lambda^{n-1}, ..., lambda^i`` of successively interlacing weights."""
    if not 1 <= i <= lam.n:
        raise ValueError(f"Chain length {i} out of range 1..{lam.n}.")
    chains = [(lam,)]
    for _ in range(lam.n - i):
        chains = [chain + (mu,) for chain in chains for mu in branch(chain[-1])]
    return chains


def pattern_count_bound(lam: HighestWeight) -> int:
    """Product over free entries of the range ``lambda_{i+j-1} <= lambda_{i,j} <= lambda_i``."""
    n = lam.n
    return math.prod(
        lam.parts[i - 1] - lam.parts[i + j - 2] + 1 for i, j in _triangle(n) if j >= 2
    )


def enumerate_patterns(lam: HighestWeight, limits: None | Limits = None) -> list[GCPattern]:
    """All integer patterns with first column ``lambda``, column by column in lexicographic order.

    Raises
    ------
    BoundExceededError
        If the product of entry ranges is above ``limits.max_patterns``.
    """
    limits = resolve(limits)
    if not lam.is_integral():
        raise ValueError(f"Weight {lam} must have integer parts to enumerate lattice points.")
    limits.check("pattern candidates", pattern_count_bound(lam), limits.max_patterns)

    def extend(columns):
        if len(columns[-1]) == 1:
            yield GCPattern.from_columns(columns)
            return
        for nxt in _interlacing(columns[-1]):
            yield from extend(columns + [nxt])

    patterns = list(extend([lam.parts]))
    logger.debug("lambda=%s: %d patterns", lam, len(patterns))
    return patterns


def phi(a: ExponentArray) -> GCPattern:
    """Row suffix sums ``lambda_{i,j} = a_{i,j} + ... + a_{i,n+1-i}``."""
    return GCPattern(tuple(tuple(itertools.accumulate(reversed(row)))[::-1] for row in a.rows))


def psi(pattern: GCPattern) -> ExponentArray:
    """Row differences ``a_{i,j} = lambda_{i,j} - lambda_{i,j+1}``, with ``0`` past the row end."""
    return ExponentArray(tuple(tuple(x - y for x, y in zip(row, row[1:] + (0,))) for row in pattern.rows))


def greedy_decompose(pattern: GCPattern) -> list[ColumnSet]:
    """Peel ``alpha_I`` off ``psi(pattern)`` until nothing is left.

    Each step takes, in every nonzero row ``k``, the column ``i_k`` of the last
    nonzero entry, emits ``I = {i_k}`` and lowers ``lambda_{k,1..i_k}`` by one.
    Exactly ``a_k`` of the emitted sets have size ``k``.
    """
    lam = HighestWeight(pattern.column(1))
    if not is_pattern(pattern, lam) or not lam.is_integral():
        raise ValueError(f"Not an integer Gel'fand-Cetlin pattern: {pattern.rows}")
    rows = [list(row) for row in pattern.rows]
    out = []
    while rows[0][0] > 0:
        columns = []
        for row in rows:
            if row[0] == 0:
                break
            last = max(j for j, x in enumerate(row) if x != 0)
            for j in range(last + 1):
                row[j] -= 1
            columns.append(last + 1)
        out.append(ColumnSet(tuple(columns)))
    return out


def face_from_pipe_dream(R: Diagram, lam: HighestWeight, convention: str = "adjacent") -> GCFace:
    """The rc-face ``F_R``: one equality per crossing of ``R``."""
    if R.n != lam.n:
        raise ShapeMismatchError(f"Pipe dream on a {R.n}x{R.n} grid cannot cut P_lambda for lambda={lam}.")
    return GCFace(lam, R.cells, convention=convention)


def face_lattice_points(F: GCFace, limits: None | Limits = None) -> list[GCPattern]:
    return [p for p in enumerate_patterns(F.lam, limits) if F.contains(p)]


def face_dimension(F: GCFace, limits: None | Limits = None) -> int:
    """Dimension of the real face, ``-1`` when empty.

    The constraints are differences of coordinates, so the face is a lattice
    polytope once the denominators of ``lambda`` are cleared and its affine hull
    is spanned by its integer points.
    """
    scale = math.lcm(*(Fraction(p).denominator for p in F.lam.parts))
    lam = HighestWeight(tuple(p * scale for p in F.lam.parts)) if scale > 1 else F.lam
    points = face_lattice_points(GCFace(lam, F.equalities, convention=F.convention), limits)
    if not points:
        return -1
    base = points[0].free_entries()
    diffs = [[QQ(x - y) for x, y in zip(p.free_entries(), base)] for p in points[1:]]
    if not diffs or not base:
        return 0
    return DomainMatrix(diffs, (len(diffs), len(base)), QQ).rank()


def union_face_count(
    w: Permutation, lam: HighestWeight, limits: None | Limits = None, convention: str = "adjacent"
) -> int:
    """Number of lattice points in the union of the rc-faces of all pipe dreams of ``w``."""
    faces = [face_from_pipe_dream(R, lam, convention) for R in enumerate_pipe_dreams(w, limits)]
    return sum(1 for p in enumerate_patterns(lam, limits) if any(F.contains(p) for F in faces))


@dataclass(frozen=True)
class HRepresentation:
    """Inequalities ``A x <= b`` over the free entries ``variables`` of the pattern."""

    variables: tuple[Cell, ...]
    A: tuple[tuple[int, ...], ...]
    b: tuple[Entry, ...]

    def __len__(self) -> int:
        return len(self.b)

    def satisfied_by(self, pattern: GCPattern) -> bool:
        x = [pattern[c] for c in self.variables]
        return all(sum(a * v for a, v in zip(row, x)) <= bound for row, bound in zip(self.A, self.b))

    def to_json(self) -> dict:
        return {
            "variables": [list(c) for c in self.variables],
            "A": [list(row) for row in self.A],
            "b": [_json_number(x) for x in self.b],
        }


def h_representation(lam: HighestWeight) -> HRepresentation:
    """Interlacing inequalities of ``P_lambda`` with the first column substituted.

    Every free entry ``lambda_{i,j}`` contributes an upper bound
    ``lambda_{i,j} <= lambda_{i,j-1}`` and a lower bound
    ``lambda_{i,j} >= lambda_{i+1,j-1}``, so there are ``n(n-1)`` rows.
    """
    n = lam.n
    variables = tuple((i, j) for i, j in _triangle(n) if j >= 2)
    index = {c: k for k, c in enumerate(variables)}
    A, b = [], []

    def add(coeffs: dict[Cell, int], bound: Entry):
        row = [0] * len(variables)
        for cell, c in coeffs.items():
            if cell[1] == 1:
                bound -= c * lam.parts[cell[0] - 1]
            else:
                row[index[cell]] += c
        A.append(tuple(row))
        b.append(bound)

    for i, j in variables:
        add({(i, j): 1, (i, j - 1): -1}, 0)
        add({(i, j): -1, (i + 1, j - 1): 1}, 0)
    return HRepresentation(variables, tuple(A), tuple(b))


def pattern_weight(pattern: GCPattern) -> tuple[Entry, ...]:
    """``wt_k`` = sum of column ``n+1-k`` minus sum of column ``n+2-k`` (an empty column sums to 0)."""
    n = pattern.n
    sums = [sum(pattern.column(j)) for j in range(1, n + 1)] + [0]
    return tuple(sums[n - k] - sums[n + 1 - k] for k in range(1, n + 1))


def pattern_character(lam: HighestWeight, limits: None | Limits = None) -> MultiPolynomial:
    """``sum x^{wt(pattern)}`` over the lattice points of ``P_lambda``."""
    return MultiPolynomial(lam.n, Counter(pattern_weight(p) for p in enumerate_patterns(lam, limits)))


ORIENTATIONS: dict[str, Callable[[Permutation], Permutation]] = {
    "w": lambda w: w,
    "w^-1": lambda w: w.inverse(),
    "w0*w": lambda w: Permutation.longest(w.n) * w,
    "w*w0": lambda w: w * Permutation.longest(w.n),
    "w0*w^-1": lambda w: Permutation.longest(w.n) * w.inverse(),
    "w^-1*w0": lambda w: w.inverse() * Permutation.longest(w.n),
}
"""Candidate maps from a pipe-dream permutation to the Demazure index, tried in order."""

FROZEN_ORIENTATION = "w0*w"
"""Orientation found by :func:`resolve_orientation` at ``n = 2, 3``."""


def orient(w: Permutation, name: str = FROZEN_ORIENTATION) -> Permutation:
    if name not in ORIENTATIONS:
        raise ValueError(f"Unknown orientation: {name}. Must be one of {tuple(ORIENTATIONS)}.")
    return ORIENTATIONS[name](w)


def orientation_weights(n: int, max_part: int) -> list[HighestWeight]:
    """Weights with parts ``<= max_part`` together with the staircase ``(n-1, ..., 0)``."""
    weights = HighestWeight.all(n, max_part)
    staircase = HighestWeight.staircase(n)
    return weights if staircase in weights else weights + [staircase]


def resolve_orientation(
    ns: tuple[int, ...] = (2, 3),
    max_part: int = 1,
    limits: None | Limits = None,
    convention: str = "adjacent",
) -> str:
    """First orientation making union face counts equal Demazure dimensions on every test case.

    Raises
    ------
    OrientationError
        If no candidate in :data:`ORIENTATIONS` matches.
    """
    cases = [
        (w, lam, union_face_count(w, lam, limits, convention))
        for n in ns
        for lam in orientation_weights(n, max_part)
        for w in Permutation.all(n)
    ]
    for name, fn in ORIENTATIONS.items():
        if all(count == demazure_dim(fn(w), lam) for w, lam, count in cases):
            logger.info("orientation %s matches %d cases", name, len(cases))
            return name
        logger.debug("orientation %s rejected", name)
    raise OrientationError(f"No orientation in {tuple(ORIENTATIONS)} matches face counts for n in {ns}.")
