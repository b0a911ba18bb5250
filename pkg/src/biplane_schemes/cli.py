"""Command-line front end.

Verbs: verify, extract, family, search, scheme, fixtures. Reports are
JSON on stdout with a schema_version field. Exit status meanings:

  0  success, or the checked property verified true
  1  the checked property verified false
  2  usage, file, or parse error
  3  internal counterexample trap: a consequence that should follow
     from verified hypotheses failed, or the search emitted a matrix
     its independent re-verification rejects

The default worker count for search comes from BIPLANE_SCHEMES_THREADS
when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .binmat import BinaryMatrix, DimensionError, ShapeError, format_matrix, parse_matrix
from .biplane import ParameterError, VerificationError, verify_biplane
from .extract import CounterexampleError, PreconditionError, extract_design, family_generate
from .incidence import IncidenceStructure, StructureError
from .pbibd import InconsistencyError, NotPbibdError, verify_pbibd
from .scheme import (
    AxiomError,
    InternalInconsistencyError,
    NotASchemeError,
    bose_mesner_check,
    from_relation_matrix,
    parse_relation,
)
from .search import SearchBugError, SearchConfig, search_symmetric_canonical

SCHEMA_VERSION = 1

THREADS_ENV = "BIPLANE_SCHEMES_THREADS"

# searches beyond this block size can run for hours and must be
# requested explicitly
LONG_RUN_K = 7


class CliInputError(Exception):
    """Bad file, bad value, or unreadable input."""


def _emit(payload: dict) -> None:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    print(json.dumps(payload, indent=2))


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from exc


def _read_matrix(path: str) -> BinaryMatrix:
    try:
        return parse_matrix(_read_text(path))
    except (ValueError, DimensionError) as exc:
        raise CliInputError(f"{path}: {exc}") from exc


def _cmd_verify(args: argparse.Namespace) -> int:
    m = _read_matrix(args.matrix)
    try:
        cert = verify_biplane(m)
    except (VerificationError, ShapeError, ParameterError) as exc:
        biplane_reason = str(exc)
    else:
        _emit({"verb": "verify", "verified": True, "kind": "biplane",
               "design": cert.report()})
        return 0

    try:
        report = verify_pbibd(IncidenceStructure(m))
    except (StructureError, NotPbibdError, ShapeError) as exc:
        _emit({"verb": "verify", "verified": False,
               "reasons": {"biplane": biplane_reason, "pbibd": str(exc)}})
        return 1

    if report["d"] == 0 or all(l == 0 for l in report["lambda"]):
        _emit({"verb": "verify", "verified": False,
               "reasons": {"biplane": biplane_reason,
                           "pbibd": "degenerate: no pair of points ever concurs"}})
        return 1

    _emit({"verb": "verify", "verified": True, "kind": "pbibd",
           "design": report, "not_a_biplane": biplane_reason})
    return 0


def _cmd_extract(args: argparse.Namespace) -> int:
    m = _read_matrix(args.matrix)
    try:
        result = extract_design(m)
    except PreconditionError as exc:
        _emit({"verb": "extract", "verified": False, "reason": str(exc)})
        return 1
    if args.core_out:
        with open(args.core_out, "w", encoding="utf-8") as fh:
            fh.write(format_matrix(result.core))
    _emit({"verb": "extract", "verified": True, **result.report()})
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    if args.m < 3:
        raise CliInputError(f"family needs m >= 3, got {args.m}")
    structure, report = family_generate(args.m)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(format_matrix(structure.matrix))
    _emit({"verb": "family", **report})
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.k >= LONG_RUN_K and not args.long_run:
        raise CliInputError(
            f"k = {args.k} searches can run for hours; pass --long-run "
            f"(ideally with --checkpoint) to proceed"
        )
    threads = args.threads
    if threads is None:
        raw = os.environ.get(THREADS_ENV, "1")
        try:
            threads = int(raw)
        except ValueError as exc:
            raise CliInputError(f"bad {THREADS_ENV} value {raw!r}") from exc
    try:
        cfg = SearchConfig(
            k=args.k,
            max_solutions=args.max_solutions,
            node_limit=args.node_limit,
            threads=threads,
        )
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    outcome = search_symmetric_canonical(cfg, checkpoint=args.checkpoint)
    if args.solutions_out:
        with open(args.solutions_out, "a", encoding="utf-8") as fh:
            for solution in outcome.solutions:
                fh.write(format_matrix(solution))
                fh.write("\n")
    _emit({"verb": "search", **outcome.report()})
    return 0


def _cmd_scheme(args: argparse.Namespace) -> int:
    try:
        relation = parse_relation(_read_text(args.relation))
    except ValueError as exc:
        raise CliInputError(f"{args.relation}: {exc}") from exc
    try:
        scheme = from_relation_matrix(relation)
    except AxiomError as exc:
        _emit({"verb": "scheme", "valid": False, "axiom": exc.axiom,
               "reason": str(exc)})
        return 1
    except NotASchemeError as exc:
        _emit({"verb": "scheme", "valid": False, "axiom": "intersection-numbers",
               "witness": exc.witness(), "reason": str(exc)})
        return 1
    algebra = bose_mesner_check(scheme)
    _emit({"verb": "scheme", "valid": True, "scheme": scheme.report(),
           "bose_mesner": algebra})
    return 0


def _cmd_fixtures(args: argparse.Namespace) -> int:
    from .fixtures import write_fixtures

    entries = write_fixtures(args.out)
    _emit({"verb": "fixtures", "directory": args.out,
           "files": sorted(entries)})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biplane-schemes",
        description="verify, extract, generate, and search block designs",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="check a matrix as a biplane or PBIBD")
    p.add_argument("matrix", help="matrix file (text format)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extract", help="extract the principal core design")
    p.add_argument("matrix", help="matrix file (text format)")
    p.add_argument("--core-out", help="write the core matrix here")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("family", help="generate the doubled design for a given m")
    p.add_argument("--m", type=int, required=True, help="half the point count, m >= 3")
    p.add_argument("--out", help="write the generated matrix here")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("search", help="search symmetric canonical biplane matrices")
    p.add_argument("--k", type=int, required=True, help="block size, k >= 3")
    p.add_argument("--max-solutions", type=int, help="stop after this many solutions")
    p.add_argument("--node-limit", type=int, help="stop after this many search nodes")
    p.add_argument("--threads", type=int, help=f"worker count (default ${THREADS_ENV} or 1)")
    p.add_argument("--checkpoint", help="progress file for resumable runs")
    p.add_argument("--solutions-out", help="append solution matrices to this file")
    p.add_argument("--long-run", action="store_true",
                   help=f"required for k >= {LONG_RUN_K}")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("scheme", help="check a relation table for the scheme axioms")
    p.add_argument("relation", help="relation table file")
    p.set_defaults(func=_cmd_scheme)

    p = sub.add_parser("fixtures", help="write the built-in reference tables")
    p.add_argument("--out", default="fixtures", help="target directory")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CounterexampleError, InconsistencyError,
            InternalInconsistencyError, SearchBugError) as exc:
        print(f"counterexample trap: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
