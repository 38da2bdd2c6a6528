"""Exact toolkit for the Gel'fand-Cetlin toric degeneration of flag and Schubert varieties."""

from .config import Limits
from .errors import (
    BoundExceededError,
    ConfigError,
    GcDegenError,
    HypothesisNotMetError,
    OrientationError,
    ShapeMismatchError,
)
from .gcpattern import (
    ExponentArray,
    GCFace,
    GCPattern,
    HRepresentation,
    enumerate_patterns,
    face_dimension,
    face_from_pipe_dream,
    greedy_decompose,
    h_representation,
    is_pattern,
    phi,
    psi,
    resolve_orientation,
    union_face_count,
)
from .grid import Cell, Diagram, Permutation, PipeDream, enumerate_pipe_dreams, is_reduced, length, rank_fn, trace_pipes
from .ideals import (
    DegenerationReport,
    MonomialIdeal,
    SqfMonomial,
    initial_ideal,
    intersect,
    intersect_all,
    pipe_dream_prime,
    vanishing_pluckers,
    verify_degeneration,
)
from .polyalg import (
    HighestWeight,
    MultiPolynomial,
    demazure_character,
    demazure_dim,
    schubert_divided_difference,
    schubert_pipedreams,
    schur_ssyt,
    weyl_dim,
)
from .sagbi import (
    ColumnSet,
    ExponentVector,
    MinorSpec,
    alpha,
    antidiagonal_is_min,
    lattice_join,
    lattice_meet,
    omega,
    omega_J,
    upsilon,
)
