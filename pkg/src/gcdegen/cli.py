"""Command-line interface: data emitters and verification suites.

Exit codes: ``0`` every check passed, ``1`` a mathematical check failed (the
first counterexample is printed as JSON on stdout, or on stderr with
``--format csv``), ``2`` usage, parse, configuration or bound error (message
on stderr).
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import TextIO, TypeVar

import pandas as pd

from . import checks
from .config import Limits
from .errors import GcDegenError
from .gcpattern import (
    FACE_CONVENTIONS,
    FROZEN_ORIENTATION,
    enumerate_patterns,
    face_dimension,
    face_from_pipe_dream,
    face_lattice_points,
    h_representation,
    orient,
    union_face_count,
)
from .grid import Permutation, enumerate_pipe_dreams, length
from .polyalg import HighestWeight, demazure_dim, schubert_divided_difference, schubert_pipedreams
from .sagbi import upsilon

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass(kw_only=True)
class RunConfig:
    """Everything a command needs, resolved from the command line and the environment."""

    command: str
    """Command path, e.g. ``"gc enumerate"`` or ``"verify all"``."""
    n: None | int = None
    w: None | Permutation = None
    lam: None | HighestWeight = None
    max_part: int = 2
    method: str = "pipedream"
    convention: str = "adjacent"
    format: str = "json"
    jobs: int = 1
    progress: bool = False
    timing: bool = False
    """Include wall-clock milliseconds in degeneration reports."""
    limits: Limits = field(default_factory=Limits)


@dataclass(kw_only=True)
class Output:
    """Result of a command: a JSON payload, its tabular projection and any checks run."""

    payload: object
    records: list[dict]
    results: list[checks.CheckResult] = field(default_factory=list)


T = TypeVar("T")


def _require(value: None | T, flag: str) -> T:
    if value is None:
        raise ValueError(f"{flag} is required for this command.")
    return value


def _pipedreams(config: RunConfig) -> Output:
    w = _require(config.w, "W")
    dreams = enumerate_pipe_dreams(w, config.limits)
    records = [
        {"w": str(w), "index": k, "cells": [list(c) for c in R.sorted_cells()], "row_counts": list(R.row_counts())}
        for k, R in enumerate(dreams)
    ]
    payload = {"w": str(w), "length": length(w), "count": len(dreams), "pipe_dreams": [R.to_json() for R in dreams]}
    return Output(payload=payload, records=records)


def _schubert(config: RunConfig) -> Output:
    w = _require(config.w, "W")
    if config.method == "pipedream":
        poly = schubert_pipedreams(w, config.limits)
    else:
        poly = schubert_divided_difference(w)
    payload = {
        "w": str(w),
        "method": config.method,
        "polynomial": poly.to_json(),
        "value_at_ones": poly.evaluate_ones(),
    }
    records = [{"w": str(w), "exponents": t["exponents"], "coeff": t["coeff"]} for t in poly.to_json()]
    return Output(payload=payload, records=records)


def _gc_enumerate(config: RunConfig) -> Output:
    lam = _require(config.lam, "--lambda")
    patterns = enumerate_patterns(lam, config.limits)
    records = [
        {f"l{i}_{j}": x for i, row in enumerate(p.rows, start=1) for j, x in enumerate(row, start=1)}
        for p in patterns
    ]
    payload = {"lambda": str(lam), "count": len(patterns), "patterns": [p.to_json() for p in patterns]}
    return Output(payload=payload, records=records)


def _gc_hrep(config: RunConfig) -> Output:
    hrep = h_representation(_require(config.lam, "--lambda"))
    data = hrep.to_json()
    records = [{"row": k, "A": row, "b": b} for k, (row, b) in enumerate(zip(data["A"], data["b"]))]
    return Output(payload=data, records=records)


def _gc_face(config: RunConfig) -> Output:
    w = _require(config.w, "--w")
    lam = _require(config.lam, "--lambda")
    integral = lam.is_integral()
    records = []
    for R in enumerate_pipe_dreams(w, config.limits):
        F = face_from_pipe_dream(R, lam, config.convention)
        records.append({
            "cells": [list(c) for c in R.sorted_cells()],
            "lattice_points": len(face_lattice_points(F, config.limits)) if integral else None,
            "dimension": face_dimension(F, config.limits),
        })
    payload = {
        "w": str(w),
        "lambda": str(lam),
        "convention": config.convention,
        "faces": records,
        "union_count": union_face_count(w, lam, config.limits, config.convention) if integral else None,
        "orientation": FROZEN_ORIENTATION,
        "demazure_dim": demazure_dim(orient(w), lam) if integral else None,
    }
    return Output(payload=payload, records=records)


def _upsilon(config: RunConfig) -> Output:
    lam = _require(config.lam, "--lambda")
    vectors = sorted(upsilon(lam, config.limits), key=lambda e: e.key())
    records = [{"index": k, "entries": e.to_json()["entries"]} for k, e in enumerate(vectors)]
    payload = {"lambda": str(lam), "count": len(vectors), "vectors": [e.to_json() for e in vectors]}
    return Output(payload=payload, records=records)


def _checked(results: list[checks.CheckResult], records: None | list[dict] = None) -> Output:
    if records is None:
        records = [r for result in results for r in result.records]
    payload = {"checks": [r.to_json() for r in results], "records": records}
    return Output(payload=payload, records=records, results=results)


def _verify_initial_ideal(config: RunConfig) -> Output:
    ws = [config.w] if config.w is not None else None
    ns = [config.n] if config.n is not None else []
    result = checks.check_initial_ideal(
        ns, ws, limits=config.limits, jobs=config.jobs, progress=config.progress, timing=config.timing
    )
    return _checked([result])


def _verify_lemma_weights(config: RunConfig) -> Output:
    return _checked([checks.check_lemma_weights(_require(config.n, "--n"), limits=config.limits)])


def _verify_sagbi_relations(config: RunConfig) -> Output:
    n = _require(config.n, "--n")
    return _checked([checks.check_lattice(n, n), checks.check_semigroup(n, limits=config.limits)])


def _verify_dims(config: RunConfig) -> Output:
    n = _require(config.n, "--n")
    return _checked([
        checks.check_dimensions([(n, config.max_part, True)], limits=config.limits),
        checks.check_gc_maps(n, config.max_part, limits=config.limits),
    ])


def _verify_faces(config: RunConfig) -> Output:
    return _checked([checks.check_faces(_require(config.n, "--n"), config.lam, limits=config.limits)])


def _verify_conjugation(config: RunConfig) -> Output:
    return _checked([checks.check_conjugation(_require(config.n, "--n"))])


def _verify_all(config: RunConfig) -> Output:
    results = checks.run_all(config.n, limits=config.limits, jobs=config.jobs, progress=config.progress)
    summary = [{k: v for k, v in r.to_json().items() if k != "counterexample"} for r in results]
    return _checked(results, summary)


COMMANDS: dict[str, Callable[[RunConfig], Output]] = {
    "pipedreams": _pipedreams,
    "schubert": _schubert,
    "gc enumerate": _gc_enumerate,
    "gc hrep": _gc_hrep,
    "gc face": _gc_face,
    "upsilon": _upsilon,
    "verify initial-ideal": _verify_initial_ideal,
    "verify lemma-weights": _verify_lemma_weights,
    "verify sagbi-relations": _verify_sagbi_relations,
    "verify dims": _verify_dims,
    "verify faces": _verify_faces,
    "verify conjugation": _verify_conjugation,
    "verify all": _verify_all,
}


def _cell(value: object) -> object:
    return json.dumps(value) if isinstance(value, (list, dict)) else value


def emit(output: Output, fmt: str, stream: TextIO) -> None:
    """Write ``output`` to ``stream``; CSV and text are projections of the records."""
    if fmt == "json":
        stream.write(json.dumps(output.payload, indent=2) + "\n")
        return
    frame = pd.DataFrame([{k: _cell(v) for k, v in r.items()} for r in output.records])
    if fmt == "csv":
        stream.write(frame.to_csv(index=False))
    elif frame.empty:
        stream.write("(no records)\n")
    else:
        stream.write(frame.to_string(index=False) + "\n")


def run(config: RunConfig, stream: None | TextIO = None) -> int:
    """Execute one command, writing to ``stream`` (stdout by default), and return its exit code."""
    stream = stream if stream is not None else sys.stdout
    logger.info("running %s", config.command)
    output = COMMANDS[config.command](config)
    emit(output, config.format, stream)
    failed = [c for c in output.results if not c.passed]
    if failed:
        line = json.dumps({"criterion": failed[0].criterion, "counterexample": failed[0].counterexample})
        # stdout stays a pure table in csv mode
        (sys.stderr if config.format == "csv" else stream).write(line + "\n")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="json", help="output format (default: json)")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps over S_n")
    parser.add_argument("--progress", action="store_true", help="show progress bars on stderr")
    parser.add_argument("--max-enum", type=int, default=None, help="override the pattern enumeration limit")
    parser.add_argument("--force", action="store_true", help="allow degeneration checks up to n = 6")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcdegen", description="Gel'fand-Cetlin degeneration toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pipedreams", help="list the reduced pipe dreams of a permutation")
    p.add_argument("w", metavar="W")
    _add_common(p)

    p = sub.add_parser("schubert", help="Schubert polynomial of a permutation")
    p.add_argument("w", metavar="W")
    p.add_argument("--method", choices=("pipedream", "dd"), default="pipedream")
    _add_common(p)

    gc = sub.add_parser("gc", help="Gel'fand-Cetlin patterns and faces").add_subparsers(dest="action", required=True)
    for name, help_text in (("enumerate", "lattice points of P_lambda"), ("hrep", "inequalities of P_lambda")):
        p = gc.add_parser(name, help=help_text)
        p.add_argument("--lambda", dest="lam", required=True)
        _add_common(p)
    p = gc.add_parser("face", help="rc-faces of the pipe dreams of a permutation")
    p.add_argument("--w", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--convention", choices=FACE_CONVENTIONS, default="adjacent")
    _add_common(p)

    p = sub.add_parser("upsilon", help="sums of antidiagonal exponent vectors")
    p.add_argument("--lambda", dest="lam", required=True)
    _add_common(p)

    verify = sub.add_parser("verify", help="verification suites").add_subparsers(dest="action", required=True)
    p = verify.add_parser("initial-ideal", help="in(I_w) against pipe-dream primes")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--w")
    p.add_argument("--timing", action="store_true", help="include milliseconds per permutation")
    _add_common(p)
    for name in ("lemma-weights", "sagbi-relations", "conjugation"):
        p = verify.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        _add_common(p)
    p = verify.add_parser("dims", help="lattice points, Weyl dimension and Upsilon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-part", type=int, default=2)
    _add_common(p)
    p = verify.add_parser("faces", help="rc-face dimensions and Demazure dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam")
    _add_common(p)
    p = verify.add_parser("all", help="every acceptance suite")
    p.add_argument("--n", type=int)
    _add_common(p)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Resolve parsed arguments into a :class:`RunConfig`; parse errors raise ``ValueError``."""
    command = args.command if getattr(args, "action", None) is None else f"{args.command} {args.action}"
    if args.jobs < 1:
        raise ValueError(f"--jobs must be positive, got {args.jobs}")
    w = getattr(args, "w", None)
    lam = getattr(args, "lam", None)
    limits = Limits.from_env().with_overrides(max_patterns=args.max_enum, force=args.force or None)
    return RunConfig(
        command=command,
        n=getattr(args, "n", None),
        w=Permutation.from_string(w) if w is not None else None,
        lam=HighestWeight.from_string(lam) if lam is not None else None,
        max_part=getattr(args, "max_part", 2),
        method=getattr(args, "method", "pipedream"),
        convention=getattr(args, "convention", "adjacent"),
        format=args.format,
        jobs=args.jobs,
        progress=args.progress,
        timing=getattr(args, "timing", False),
        limits=limits,
    )


def main(argv: None | list[str] = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        config = config_from_args(args)
        return run(config)
    except (GcDegenError, ValueError) as e:
        print(f"gcdegen: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
