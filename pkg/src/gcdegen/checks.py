"""Verification suites over the whole library, one per acceptance criterion.

Each suite sweeps its cases in a deterministic order and returns a
:class:`CheckResult`; the first failing case in that order is reported as the
counterexample.
"""

import functools
import itertools
import logging
import operator
import sys
from collections import Counter
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TypeVar

from tqdm import tqdm

from .config import Limits, resolve
from .errors import GcDegenError, OrientationError
from .grid import Permutation, enumerate_pipe_dreams, length
from .gcpattern import (
    FROZEN_ORIENTATION,
    ExponentArray,
    enumerate_patterns,
    face_dimension,
    face_from_pipe_dream,
    greedy_decompose,
    is_pattern,
    orient,
    partial_chains,
    pattern_character,
    phi,
    psi,
    resolve_orientation,
    union_face_count,
)
from .ideals import verify_degeneration
from .polyalg import (
    HighestWeight,
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
    alpha,
    antidiagonal_is_min,
    binomial_relation_holds,
    conjugation_exponents,
    conjugation_t_exponent,
    delta,
    lattice_join,
    lattice_leq,
    lattice_meet,
    plucker_minor,
    semigroup_rank,
    special_fiber_zeroed,
    t_valuations,
    upsilon,
)

logger = logging.getLogger(__name__)

CONJUGATION_DISPLAY_N5 = [
    [[0, None, None, None, None], [18, 0, None, None, None], [24, 6, 0, None, None], [26, 8, 2, 0, None], [27, 9, 3, 1, 0]],
    [[0, None, None, None, None], [6, 0, None, None, None], [8, 2, 0, None, None], [9, 3, 1, 0, None], [9, 3, 1, 0, 0]],
    [[0, None, None, None, None], [2, 0, None, None, None], [3, 1, 0, None, None], [3, 1, 0, 0, None], [3, 1, 0, 0, 0]],
    [[0, None, None, None, None], [1, 0, None, None, None], [1, 0, 0, None, None], [1, 0, 0, 0, None], [1, 0, 0, 0, 0]],
    [[0, None, None, None, None], [0, 0, None, None, None], [0, 0, 0, None, None], [0, 0, 0, 0, None], [0, 0, 0, 0, 0]],
]
"""Exponents of the five components of the torus conjugation at ``n = 5``, ``None`` above the diagonal."""

CHARACTER_WEIGHTS = ((1, 0), (1, 1), (2, 1, 0), (2, 1, 1, 0))
"""Weights of the character identity suite."""


@dataclass(kw_only=True)
class CheckResult:
    """Outcome of one verification suite."""

    criterion: str
    """Acceptance criterion identifier, ``"AC1"`` to ``"AC10"``."""
    title: str
    passed: bool
    cases: int
    """Number of cases examined."""
    counterexample: None | dict = None
    """First failing case, in sweep order."""
    records: list[dict] = field(default_factory=list, repr=False)
    """Per-case records, for commands that list them."""

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "title": self.title,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


T = TypeVar("T")
R = TypeVar("R")


def sweep(
    fn: Callable[[T], R], items: Iterable[T], *, jobs: int = 1, progress: bool = False, desc: None | str = None
) -> list[R]:
    """Map ``fn`` over ``items`` keeping input order, on ``jobs`` worker processes."""
    items = list(items)
    bar = {"total": len(items), "desc": desc, "disable": not progress, "file": sys.stderr}
    if jobs <= 1:
        return [fn(x) for x in tqdm(items, **bar)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(tqdm(pool.map(fn, items), **bar))


def _result(criterion: str, title: str, cases: list[dict], ok: Callable[[dict], bool]) -> CheckResult:
    failing = next((c for c in cases if not ok(c)), None)
    result = CheckResult(
        criterion=criterion,
        title=title,
        passed=failing is None,
        cases=len(cases),
        counterexample=failing,
        records=cases,
    )
    log = logger.info if result.passed else logger.warning
    log("%s %s: %d cases, %s", criterion, title, len(cases), "pass" if result.passed else "FAIL")
    return result


def _permutations(ns: Iterable[int], ws: None | Iterable[Permutation]) -> list[Permutation]:
    if ws is not None:
        return sorted(ws, key=lambda w: (w.n, w.word))
    return [w for n in ns for w in Permutation.all(n)]


def _degeneration_case(w: Permutation, limits: Limits, timing: bool = False) -> dict:
    return verify_degeneration(w, limits).to_json(timing=timing)


def check_initial_ideal(
    ns: Iterable[int] = (2, 3, 4, 5),
    ws: None | Iterable[Permutation] = None,
    *,
    limits: None | Limits = None,
    jobs: int = 1,
    progress: bool = False,
    timing: bool = False,
) -> CheckResult:
    """``in(I_w)`` equals the intersection of pipe-dream primes for every ``w``."""
    limits = resolve(limits)
    perms = _permutations(ns, ws)
    task = functools.partial(_degeneration_case, limits=limits, timing=timing)
    cases = sweep(task, perms, jobs=jobs, progress=progress, desc="initial ideal")
    return _result("AC1", "initial ideal = intersection of pipe-dream primes", cases, lambda c: c["equal"])


def _schubert_case(w: Permutation, limits: Limits) -> dict:
    pipes = schubert_pipedreams(w, limits)
    left = schubert_divided_difference(w, "leftmost")
    right = schubert_divided_difference(w, "rightmost")
    return {
        "w": str(w),
        "equal": pipes == left == right,
        "terms": len(pipes.terms()),
        "value_at_ones": pipes.evaluate_ones(),
        "pipedream": pipes.to_json(),
        "divided_difference": left.to_json(),
    }


def check_schubert(
    ns: Iterable[int] = (1, 2, 3, 4, 5),
    ws: None | Iterable[Permutation] = None,
    *,
    limits: None | Limits = None,
    jobs: int = 1,
    progress: bool = False,
) -> CheckResult:
    """Pipe-dream Schubert polynomials equal the divided-difference ones, for both descent rules."""
    limits = resolve(limits)
    perms = _permutations(ns, ws)
    task = functools.partial(_schubert_case, limits=limits)
    cases = sweep(task, perms, jobs=jobs, progress=progress, desc="schubert")
    return _result("AC2", "pipe-dream sum = divided differences", cases, lambda c: c["equal"])


def dimension_cases(n: int, max_part: int, with_upsilon: bool, limits: None | Limits = None) -> list[dict]:
    """Per weight: lattice points, Weyl dimension and the partial branching sums for ``i = 1..n``."""
    cases = []
    for lam in HighestWeight.all(n, max_part):
        case = {
            "lambda": str(lam),
            "patterns": len(enumerate_patterns(lam, limits)),
            "weyl_dim": weyl_dim(lam),
            "chain_sums": [sum(weyl_dim(c[-1]) for c in partial_chains(lam, i)) for i in range(1, n + 1)],
        }
        if with_upsilon:
            case["upsilon"] = len(upsilon(lam, limits))
        cases.append(case)
    return cases


def _dims_agree(case: dict) -> bool:
    dim = case["weyl_dim"]
    return case["patterns"] == dim == case.get("upsilon", dim) and all(s == dim for s in case["chain_sums"])


def check_dimensions(
    scales: Iterable[tuple[int, int, bool]] = ((4, 2, True), (3, 4, True), (4, 4, False)),
    *,
    limits: None | Limits = None,
) -> CheckResult:
    """``|Pi_lambda| = weyl_dim(lambda)``, and ``= |Upsilon_lambda|`` where requested.

    Every partial branching sum ``sum weyl_dim(lambda^i)`` over chains
    ``lambda = lambda^n > ... > lambda^i`` must also equal ``weyl_dim(lambda)``.

    ``scales`` lists ``(n, max_part, with_upsilon)`` triples.
    """
    cases = []
    for n, max_part, with_upsilon in scales:
        cases += [{"n": n, **c} for c in dimension_cases(n, max_part, with_upsilon, limits)]
    return _result("AC3", "lattice points = Weyl dimension = |Upsilon|", cases, _dims_agree)


def _sum_alpha(sets: list[ColumnSet], n: int) -> ExponentVector:
    return functools.reduce(operator.add, (alpha(I, n) for I in sets), ExponentVector.zero(n))


def _gc_maps_case(lam: HighestWeight, limits: None | Limits) -> dict:
    n = lam.n
    patterns = enumerate_patterns(lam, limits)
    pattern_set = set(patterns)
    ups = upsilon(lam, limits)
    failures = []
    for p in patterns:
        a = psi(p)
        if phi(a) != p:
            failures.append({"check": "phi(psi) = id", "pattern": p.to_json()})
        if a.to_vector() not in ups:
            failures.append({"check": "psi(Pi) in Upsilon", "pattern": p.to_json()})
        sets = greedy_decompose(p)
        sizes = Counter(I.k for I in sets)
        if _sum_alpha(sets, n) != a.to_vector() or any(sizes[k] != lam.a(k) for k in range(1, n + 1)):
            failures.append({"check": "greedy decomposition", "pattern": p.to_json(), "sets": [str(I) for I in sets]})
    for e in ups:
        a = ExponentArray.from_vector(e)
        image = phi(a)
        if image not in pattern_set or not is_pattern(image, lam):
            failures.append({"check": "phi(Upsilon) in Pi", "exponents": e.to_json()})
        if psi(image) != a:
            failures.append({"check": "psi(phi) = id", "exponents": e.to_json()})
    return {"lambda": str(lam), "patterns": len(patterns), "upsilon": len(ups), "failures": failures[:1]}


def check_gc_maps(n: int = 4, max_part: int = 2, *, limits: None | Limits = None) -> CheckResult:
    """phi and psi are inverse bijections between ``Pi_lambda`` and ``Upsilon_lambda``; greedy decomposition."""
    cases = [
        _gc_maps_case(lam, limits) for m in range(1, n + 1) for lam in HighestWeight.all(m, max_part)
    ]
    return _result("AC4", "phi/psi bijection and greedy decomposition", cases, lambda c: not c["failures"])


def _lemma_ok(case: dict) -> bool:
    return (
        case["antidiagonal_is_min"]
        and case["min_valuation"] == 0
        and case["zeros"] == 1
        and case["antidiagonal_valuation"] == 0
    )


def check_lemma_weights(n: int = 6, *, limits: None | Limits = None) -> CheckResult:
    """The antidiagonal term of every Plücker minor is the unique lowest-weight term."""
    cases = []
    for m in range(1, n + 1):
        for J in ColumnSet.all(m):
            vals = [v for _, v in t_valuations(J, m, limits)]
            try:
                is_min = antidiagonal_is_min(plucker_minor(J), m, limits)
            except GcDegenError as e:
                is_min, reason = False, str(e)
            else:
                reason = None
            cases.append({
                "n": m,
                "J": str(J),
                "antidiagonal_is_min": is_min,
                "min_valuation": min(vals),
                "zeros": vals.count(0),
                "antidiagonal_valuation": vals[-1],
                "reason": reason,
            })
    return _result("AC5", "antidiagonal term is the unique omega-minimum", cases, _lemma_ok)


def _lattice_failure(I: ColumnSet, J: ColumnSet, K: ColumnSet) -> None | str:
    meet, join = lattice_meet, lattice_join
    if meet(I, J) != meet(J, I) or join(I, J) != join(J, I):
        return "commutativity"
    if meet(meet(I, J), K) != meet(I, meet(J, K)) or join(join(I, J), K) != join(I, join(J, K)):
        return "associativity"
    if meet(I, join(I, J)) != I or join(I, meet(I, J)) != I:
        return "absorption"
    if meet(I, join(J, K)) != join(meet(I, J), meet(I, K)):
        return "distributivity"
    if (lattice_leq(K, I) and lattice_leq(K, J)) != lattice_leq(K, meet(I, J)):
        return "meet is not the greatest lower bound"
    if (lattice_leq(I, K) and lattice_leq(J, K)) != lattice_leq(join(I, J), K):
        return "join is not the least upper bound"
    return None


def check_lattice(n_lattice: int = 5, n_relations: int = 6) -> CheckResult:
    """Distributive lattice laws, degenerate Plücker relations and the reflection intertwiner."""
    cases = []
    subsets = ColumnSet.all(n_lattice)
    failures = []
    for I, J, K in itertools.product(subsets, repeat=3):
        reason = _lattice_failure(I, J, K)
        if reason:
            failures.append({"I": str(I), "J": str(J), "K": str(K), "law": reason})
            break
    cases.append({"n": n_lattice, "check": "lattice laws", "triples": len(subsets) ** 3, "failure": failures[:1]})
    for m in range(1, n_relations + 1):
        subsets = ColumnSet.all(m)
        bad = [
            {"I": str(I), "J": str(J), "variant": variant}
            for I, J in itertools.product(subsets, repeat=2)
            for variant in ("diagonal", "antidiagonal")
            if not binomial_relation_holds(I, J, m, variant)
        ]
        bad += [
            {"I": str(I), "intertwiner": True}
            for I in subsets
            if alpha(I.reflect(m), m) != delta(I, m).reflect_columns()
        ]
        cases.append({"n": m, "check": "binomial relations", "pairs": len(subsets) ** 2, "failure": bad[:1]})
    return _result("AC6", "distributive lattice and degenerate binomial relations", cases, lambda c: not c["failure"])


def check_semigroup(n: int = 6, *, limits: None | Limits = None) -> CheckResult:
    """The ``alpha_I`` span a lattice of rank ``n(n+1)/2``."""
    cases = [{"n": m, "rank": semigroup_rank(m, limits), "expected": m * (m + 1) // 2} for m in range(1, n + 1)]
    return _result("AC7", "rank of the alpha semigroup", cases, lambda c: c["rank"] == c["expected"])


def check_conjugation(n: int = 8) -> CheckResult:
    """Conjugation exponents are nonnegative, positive exactly where ``B(0)`` vanishes; the ``n = 5`` display."""
    cases = []
    for m in range(1, n + 1):
        bad = [
            {"i": i, "k": k, "j": j, "exponent": conjugation_t_exponent(i, k, j, m)}
            for j in range(1, m + 1)
            for i in range(1, m + 1)
            for k in range(1, i + 1)
            if conjugation_t_exponent(i, k, j, m) < 0
            or (conjugation_t_exponent(i, k, j, m) > 0) != special_fiber_zeroed(i, k, j, m)
        ]
        cases.append({"n": m, "check": "sign pattern", "failure": bad[:1]})
    if n >= 5:
        bad = [
            {"j": j, "expected": expected, "got": conjugation_exponents(j, 5)}
            for j, expected in enumerate(CONJUGATION_DISPLAY_N5, start=1)
            if conjugation_exponents(j, 5) != expected
        ]
        cases.append({"n": 5, "check": "display", "failure": bad[:1]})
    return _result("AC8", "conjugation exponents", cases, lambda c: not c["failure"])


def face_cases(n: int, lam: HighestWeight, orientation: str, limits: None | Limits = None) -> list[dict]:
    """One record per ``w``: rc-face dimensions and the union count against the Demazure dimension."""
    top = n * (n - 1) // 2
    cases = []
    for w in Permutation.all(n):
        dims = [face_dimension(face_from_pipe_dream(R, lam), limits) for R in enumerate_pipe_dreams(w, limits)]
        expected_dim = top - length(w) if lam.is_strict() else None
        cases.append({
            "w": str(w),
            "face_dimensions": dims,
            "expected_dimension": expected_dim,
            "union_count": union_face_count(w, lam, limits),
            "demazure_dim": demazure_dim(orient(w, orientation), lam),
        })
    return cases


def _face_ok(case: dict) -> bool:
    expected = case["expected_dimension"]
    dims_ok = expected is None or all(d == expected for d in case["face_dimensions"])
    return dims_ok and min(case["face_dimensions"]) >= 0 and case["union_count"] == case["demazure_dim"]


def check_faces(
    n: int = 4,
    lam: None | HighestWeight = None,
    orientation_ns: tuple[int, ...] = (2, 3),
    *,
    limits: None | Limits = None,
) -> CheckResult:
    """rc-faces are nonempty of the expected dimension; union counts match Demazure dimensions.

    The orientation is resolved again at ``orientation_ns`` and must agree
    with :data:`~gcdegen.gcpattern.FROZEN_ORIENTATION`, which is then applied
    at ``n``; ``lam`` defaults to the staircase ``(n-1, ..., 1, 0)``.
    """
    lam = lam if lam is not None else HighestWeight.staircase(n)
    title = "rc-face dimensions and Demazure dimensions"
    try:
        resolved = resolve_orientation(orientation_ns, limits=limits)
    except OrientationError as e:
        return CheckResult(criterion="AC9", title=title, passed=False, cases=0, counterexample={"orientation": str(e)})
    if resolved != FROZEN_ORIENTATION:
        counterexample = {"orientation": resolved, "frozen": FROZEN_ORIENTATION}
        return CheckResult(criterion="AC9", title=title, passed=False, cases=0, counterexample=counterexample)
    cases = [{"orientation": resolved, **c} for c in face_cases(n, lam, resolved, limits)]
    return _result("AC9", title, cases, _face_ok)


def check_characters(
    weights: Iterable[tuple[int, ...]] = CHARACTER_WEIGHTS, *, limits: None | Limits = None
) -> CheckResult:
    """Gel'fand-Cetlin character = Schur polynomial = Demazure character of ``w0``."""
    cases = []
    for parts in weights:
        lam = HighestWeight(parts)
        gc = pattern_character(lam, limits)
        schur = schur_ssyt(lam)
        demazure = demazure_character(Permutation.longest(lam.n), lam)
        cases.append({"lambda": str(lam), "equal": gc == schur == demazure, "character": schur.to_json()})
    return _result("AC10", "GC character = Schur = Demazure(w0)", cases, lambda c: c["equal"])


def run_all(
    n: None | int = None, *, limits: None | Limits = None, jobs: int = 1, progress: bool = False
) -> list[CheckResult]:
    """Every suite at its acceptance scale, clipped to ``n`` when given."""
    limits = resolve(limits)

    def clip(scale: int) -> int:
        return scale if n is None else min(n, scale)

    dims = [(clip(4), 2, True), (clip(3), 4, True), (clip(4), 4, False)]
    return [
        check_initial_ideal(range(2, clip(5) + 1), limits=limits, jobs=jobs, progress=progress),
        check_schubert(range(1, clip(5) + 1), limits=limits, jobs=jobs, progress=progress),
        check_dimensions(dims, limits=limits),
        check_gc_maps(clip(4), limits=limits),
        check_lemma_weights(clip(6), limits=limits),
        check_lattice(clip(5), clip(6)),
        check_semigroup(clip(6), limits=limits),
        check_conjugation(clip(8)),
        check_faces(clip(4), limits=limits),
        check_characters(
            [w for w in CHARACTER_WEIGHTS if n is None or len(w) <= n], limits=limits
        ),
    ]
