"""Command-line front end.

Standard output carries report payloads only; diagnostics go to standard
error, with verbosity controlled by HSTARKIT_LOG (error, warn, info,
debug). Exit codes: 0 success, 2 parse or parameter error, 3 cap exceeded,
4 verification mismatch or internal check failure, 5 hypothesis not met in
strict mode.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys

from . import families, verify
from .boxgroup import BoxGroup, BoxPoint, DEFAULT_VOLUME_CAP, enumerate_box_group
from .errors import (
    DocumentError,
    HstarkitError,
    HypothesisNotMetError,
    InternalCheckError,
    InvalidParametersError,
    NotASimplexError,
    DimensionMismatchError,
    PreconditionNotMetError,
    ScanTooLargeError,
    TooManyFacesError,
    VolumeTooLargeError,
)
from .hstar import HStarVector, ehrhart_from_hstar, hstar_from_box_group
from .io import (
    SCHEMA_VERSION,
    SimplexDocument,
    canonical_dumps,
    encode_int,
    load_simplex_document,
)
from .oracle import DEFAULT_SCAN_CAP, cross_validate
from .search import search_windows
from .simplex import LatticeSimplex, restrict_to_affine_lattice
from .theorem import ExtractionCertificate, condition_report, extract_face

log = logging.getLogger("hstarkit")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4
EXIT_HYPOTHESIS = 5

_ELEMENT_DUMP_LIMIT = 10**4


def _configure_logging() -> None:
    levels = {"error": logging.ERROR, "warn": logging.WARNING,
              "info": logging.INFO, "debug": logging.DEBUG}
    raw = os.environ.get("HSTARKIT_LOG", "warn").lower()
    logging.basicConfig(stream=sys.stderr, level=levels.get(raw, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def _coords_strings(point: BoxPoint) -> list[str]:
    return [str(c) for c in point.coords]


def _hstar_json(h: HStarVector) -> list:
    return [encode_int(c) for c in h.coeffs]


def _base_report(command: str, doc: SimplexDocument, group: BoxGroup, h: HStarVector) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": doc.to_json_dict(),
        "hstar": _hstar_json(h),
        "degree": h.degree,
        "volume": str(h.normalized_volume),
        "box_group_order": encode_int(group.order),
    }


def _load_full(path: str) -> tuple[SimplexDocument, LatticeSimplex]:
    doc = load_simplex_document(path)
    simplex = doc.to_simplex()
    full = simplex if simplex.is_full_dimensional else restrict_to_affine_lattice(simplex)
    return doc, full


def _emit(payload: dict) -> None:
    sys.stdout.write(canonical_dumps(payload))


def _certificate_json(cert: ExtractionCertificate) -> dict:
    out = {
        "k": cert.k,
        "strict": cert.strict,
        "window_ok": cert.window_ok,
        "hypothesis_met": cert.hypothesis_met,
        "hstar": _hstar_json(cert.hstar),
        "support": list(cert.support),
        "face_selector": list(cert.face_selector.indices),
        "face_hstar": _hstar_json(cert.face_hstar),
        "truncation": _hstar_json(cert.truncation),
        "lemma31_ok": cert.lemma31_ok,
        "subgroup_ok": cert.subgroup_ok,
        "support_bound_ok": cert.support_bound_ok,
        "hstar_match": cert.hstar_match,
    }
    if len(cert.lambda_prime) <= _ELEMENT_DUMP_LIMIT:
        out["lambda_prime"] = [_coords_strings(p) for p in cert.lambda_prime]
    return out


def cmd_hstar(args) -> int:
    doc, full = _load_full(args.file)
    group = enumerate_box_group(full, volume_cap=args.volume_cap)
    h = hstar_from_box_group(group)
    _emit(_base_report("hstar", doc, group, h))
    return EXIT_OK


def cmd_box_group(args) -> int:
    doc, full = _load_full(args.file)
    group = enumerate_box_group(full, volume_cap=args.volume_cap)
    h = hstar_from_box_group(group)
    report = _base_report("box-group", doc, group, h)
    report["invariant_factors"] = [encode_int(f) for f in group.invariant_factors]
    report["level_counts"] = {str(k): v for k, v in group.level_counts().items()}
    if group.order <= _ELEMENT_DUMP_LIMIT:
        report["elements"] = [_coords_strings(p) for p in group.elements]
    _emit(report)
    return EXIT_OK


def cmd_ehrhart(args) -> int:
    doc, full = _load_full(args.file)
    group = enumerate_box_group(full, volume_cap=args.volume_cap)
    h = hstar_from_box_group(group)
    report = _base_report("ehrhart", doc, group, h)
    report["n"] = args.n
    report["count"] = encode_int(ehrhart_from_hstar(h, full.dimension, args.n))
    _emit(report)
    return EXIT_OK


def cmd_oracle_verify(args) -> int:
    doc, full = _load_full(args.file)
    cv = cross_validate(full, volume_cap=args.volume_cap, scan_cap=args.scan_cap)
    group = enumerate_box_group(full, volume_cap=args.volume_cap)
    report = _base_report("oracle-verify", doc, group, cv.box_hstar)
    report["oracle_hstar"] = _hstar_json(cv.oracle_hstar)
    report["match"] = cv.match
    report["heldout_ok"] = cv.heldout_ok
    expected_ok = True
    if doc.expected_hstar is not None:
        expected_ok = cv.box_hstar.coeffs == tuple(doc.expected_hstar)
        report["expected_ok"] = expected_ok
    _emit(report)
    if not cv.match or cv.heldout_ok is False or not expected_ok:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_extract_face(args) -> int:
    doc, full = _load_full(args.file)
    cert = extract_face(full, args.k, strict=args.strict, volume_cap=args.volume_cap)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "extract-face",
        "input": doc.to_json_dict(),
        "certificate": _certificate_json(cert),
    }
    _emit(report)
    return EXIT_OK


def cmd_gen(args) -> int:
    name = args.name
    if args.family == "unit":
        simplex = families.unit_simplex(args.dim)
        name = name or f"unit_d{args.dim}"
    elif args.family == "delta_cm":
        simplex = families.delta_cm(args.c, args.m)
        name = name or f"delta_cm_c{args.c}_m{args.m}"
    elif args.family == "lemma41":
        simplex = families.lemma41_simplex(args.a, args.b, args.k, args.l)
        name = name or f"lemma41_a{args.a}_b{args.b}_k{args.k}_l{args.l}"
    elif args.family == "prop43":
        simplex = families.prop43_instance(args.k, args.j, args.p)
        name = name or f"prop43_k{args.k}_j{args.j}_p{args.p}"
    elif args.family == "remark44":
        simplex = families.remark44_simplex(args.k)
        name = name or f"remark44_k{args.k}"
    elif args.family == "join":
        left = load_simplex_document(args.left).to_simplex()
        right = load_simplex_document(args.right).to_simplex()
        simplex = families.join(left, right)
        name = name or "join"
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidParametersError(args.family)
    _emit(SimplexDocument.from_simplex(simplex, name=name).to_json_dict())
    return EXIT_OK


def _parse_hstar_arg(text: str) -> HStarVector:
    try:
        coeffs = [int(part.strip(), 10) for part in text.split(",")]
    except ValueError as exc:
        raise DocumentError(f"not a comma-separated integer list: {text!r}") from exc
    if not coeffs or coeffs[0] != 1 or any(c < 0 for c in coeffs):
        raise DocumentError("coefficients must be nonnegative and start with 1")
    return HStarVector.of(coeffs)


def cmd_check_conditions(args) -> int:
    h = _parse_hstar_arg(args.hstar)
    entries = condition_report(h, dim=args.dim)
    if args.json:
        _emit(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "check-conditions",
                "hstar": _hstar_json(h),
                "dim": args.dim,
                "conditions": [
                    {"name": e.name, "status": e.status, "detail": e.detail}
                    for e in entries
                ],
            }
        )
    else:
        width = max(len(e.name) for e in entries)
        sys.stdout.write(f"h* = {list(h.coeffs)}"
                         + (f"  (dim {args.dim})" if args.dim is not None else "")
                         + "\n")
        for e in entries:
            detail = " ".join(f"{k}={v}" for k, v in e.detail.items() if v is not None)
            sys.stdout.write(f"{e.name.ljust(width)}  {e.status}"
                             + (f"  [{detail}]" if detail else "") + "\n")
    return EXIT_OK


def cmd_verify_suite(args) -> int:
    try:
        records, ok = verify.run_suite(
            args.corpus, max_volume=args.max_volume, scan_cap=args.scan_cap
        )
    except HstarkitError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    for record in records:
        _emit(record.to_json_dict())
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_search(args) -> int:
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for hit in search_windows(
            args.k, args.window, args.max_order, args.max_dim, limit=args.limit
        ):
            out.write(canonical_dumps(hit.to_json_dict()))
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hstarkit",
        description="Exact h*-polynomials of lattice simplices, two independent ways.",
    )
    # Global flags accepted by every subcommand: --json is the default output
    # format everywhere except the check-conditions table, --strict only
    # changes behavior where a hypothesis can be enforced.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="machine-readable output (default for report commands)")
    common.add_argument("--strict", action="store_true",
                        help="enforce stated hypotheses instead of reporting")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p) -> None:
        p.add_argument("--volume-cap", type=int, default=DEFAULT_VOLUME_CAP,
                       help="largest group order that will be enumerated")
        p.add_argument("--scan-cap", type=int, default=DEFAULT_SCAN_CAP,
                       help="largest bounding-box candidate count for scans")

    p = sub.add_parser("hstar", parents=[common], help="h* via the weight-group path")
    p.add_argument("file")
    add_caps(p)
    p.set_defaults(fn=cmd_hstar)

    p = sub.add_parser("box-group", parents=[common],
                       help="full weight group with level counts")
    p.add_argument("file")
    add_caps(p)
    p.set_defaults(fn=cmd_box_group)

    p = sub.add_parser("ehrhart", parents=[common],
                       help="lattice-point count of a dilate")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    add_caps(p)
    p.set_defaults(fn=cmd_ehrhart)

    p = sub.add_parser("oracle-verify", parents=[common],
                       help="group path against counting oracle")
    p.add_argument("file")
    add_caps(p)
    p.set_defaults(fn=cmd_oracle_verify)

    p = sub.add_parser("extract-face", parents=[common],
                       help="face extraction certificate")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    add_caps(p)
    p.set_defaults(fn=cmd_extract_face)

    p = sub.add_parser("gen", help="generate a family instance document")
    fam_sub = p.add_subparsers(dest="family", required=True)
    f = fam_sub.add_parser("unit")
    f.add_argument("--dim", type=int, required=True)
    f = fam_sub.add_parser("delta_cm")
    f.add_argument("--c", type=int, required=True)
    f.add_argument("--m", type=int, required=True)
    f = fam_sub.add_parser("lemma41")
    f.add_argument("--a", type=int, required=True)
    f.add_argument("--b", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--l", type=int, required=True)
    f = fam_sub.add_parser("prop43")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--j", type=int, required=True)
    f.add_argument("--p", type=int, default=5)
    f = fam_sub.add_parser("remark44")
    f.add_argument("--k", type=int, required=True)
    f = fam_sub.add_parser("join")
    f.add_argument("--left", required=True)
    f.add_argument("--right", required=True)
    for f_parser in fam_sub.choices.values():
        f_parser.add_argument("--name")
        f_parser.add_argument("--json", action="store_true")
        f_parser.add_argument("--strict", action="store_true")
        f_parser.set_defaults(fn=cmd_gen)

    p = sub.add_parser("check-conditions", parents=[common],
                       help="condition report for a bare h*")
    p.add_argument("--hstar", required=True, help='comma-separated, e.g. "1,7,1"')
    p.add_argument("--dim", type=int)
    p.set_defaults(fn=cmd_check_conditions)

    p = sub.add_parser("verify-suite", parents=[common],
                       help="run every invariant over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--max-volume", type=int, default=DEFAULT_VOLUME_CAP)
    p.add_argument("--scan-cap", type=int, default=DEFAULT_SCAN_CAP)
    p.set_defaults(fn=cmd_verify_suite)

    p = sub.add_parser("search", parents=[common],
                       help="bounded search over cyclic weight groups")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--window", choices=("weak", "strong"), required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--limit", type=int)
    p.set_defaults(fn=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (VolumeTooLargeError, ScanTooLargeError) as exc:
        log.error("%s", exc)
        return EXIT_CAP
    except HypothesisNotMetError as exc:
        log.error("%s", exc)
        return EXIT_HYPOTHESIS
    except InternalCheckError as exc:
        log.error("internal check failed: %s", exc)
        return EXIT_MISMATCH
    except (
        DocumentError,
        InvalidParametersError,
        NotASimplexError,
        DimensionMismatchError,
        PreconditionNotMetError,
        TooManyFacesError,
        ValueError,
        OSError,
    ) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except HstarkitError as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
