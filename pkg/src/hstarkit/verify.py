"""Batch invariant verification over a corpus of simplex documents.

One record per (instance, invariant): status pass, fail, or skip (skips are
capacity gates, never verdicts). Records come out in a fixed order so two
runs over the same corpus are byte-identical.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from . import oracle
from .boxgroup import (
    DEFAULT_VOLUME_CAP,
    add,
    enumerate_box_group,
    enumerate_by_box_scan,
    neg,
)
from .errors import HstarkitError, ScanTooLargeError, VolumeTooLargeError
from .hstar import hstar_from_box_group, structural_facts
from .io import SimplexDocument, load_simplex_document
from .simplex import LatticeSimplex, all_faces, normalized_volume, restrict_to_affine_lattice
from .theorem import _is_prime, check_zero_window, extract_face

SUBGROUP_ORDER_GATE = 500
AXIOM_ORDER_GATE = 200
SCAN_AGREEMENT_GATE = 200
FACE_IDENTIFICATION_GATE = 200
FACE_VERTEX_GATE = 9
ORACLE_DIM_GATE = 5
ORACLE_VOLUME_GATE = 200


@dataclass(frozen=True)
class Record:
    instance: str
    invariant: str
    status: str  # "pass" | "fail" | "skip"
    detail: dict

    def to_json_dict(self) -> dict:
        return {
            "instance": self.instance,
            "invariant": self.invariant,
            "status": self.status,
            "detail": self.detail,
        }


def _ok(instance: str, invariant: str, ok: bool, detail: dict | None = None) -> Record:
    return Record(instance, invariant, "pass" if ok else "fail", detail or {})


def _skip(instance: str, invariant: str, reason: str) -> Record:
    return Record(instance, invariant, "skip", {"reason": reason})


def _instance_records(
    name: str, doc: SimplexDocument, max_volume: int, scan_cap: int
) -> Iterator[Record]:
    simplex = doc.to_simplex()
    full = simplex if simplex.is_full_dimensional else restrict_to_affine_lattice(simplex)
    volume = normalized_volume(full)
    try:
        group = enumerate_box_group(full, volume_cap=max_volume)
    except VolumeTooLargeError:
        yield _skip(name, "volume-order", f"volume {volume} above --max-volume")
        return
    h = hstar_from_box_group(group)

    yield _ok(name, "volume-order", group.order == volume, {"order": group.order, "volume": volume})
    yield _ok(name, "hstar-sum", h.normalized_volume == group.order, {"hstar": list(h.coeffs)})
    if doc.expected_hstar is not None:
        yield _ok(
            name,
            "expected-hstar",
            h.coeffs == tuple(doc.expected_hstar),
            {"computed": list(h.coeffs), "expected": list(doc.expected_hstar)},
        )
    else:
        yield _skip(name, "expected-hstar", "no expected_hstar in document")

    bad = [
        p
        for p in group.elements
        if p.support_size != p.height + neg(p).height
    ]
    yield _ok(name, "support-height-identity", not bad, {"violations": len(bad)})

    if group.order <= SUBGROUP_ORDER_GATE:
        sub_ok = True
        step_ok = True
        for a in group.elements:
            ha = a.height
            for b in group.elements:
                if add(a, b).height > ha + b.height:
                    sub_ok = False
                    break
            if not sub_ok:
                break
        for a in group.elements:
            if a.is_zero():
                continue
            prev = a
            while True:
                cur = add(prev, a)
                if cur.height > prev.height + a.height:
                    step_ok = False
                    break
                if cur.is_zero():
                    break
                prev = cur
            if not step_ok:
                break
        yield _ok(name, "height-subadditivity", sub_ok)
        yield _ok(name, "scalar-step-bound", step_ok)
    else:
        yield _skip(name, "height-subadditivity", f"order above {SUBGROUP_ORDER_GATE}")
        yield _skip(name, "scalar-step-bound", f"order above {SUBGROUP_ORDER_GATE}")

    if group.order <= AXIOM_ORDER_GATE:
        closed = all(add(a, b) in group for a in group.elements for b in group.elements)
        has_zero = group.zero.is_zero()
        inverses = all(neg(a) in group and add(a, neg(a)).is_zero() for a in group.elements)
        sample = group.elements[:5]
        assoc = all(
            add(add(a, b), c) == add(a, add(b, c))
            for a in sample
            for b in sample
            for c in sample
        )
        yield _ok(
            name,
            "group-axioms",
            closed and has_zero and inverses and assoc,
            {"closed": closed, "zero": has_zero, "inverses": inverses, "assoc_sampled": assoc},
        )
    else:
        yield _skip(name, "group-axioms", f"order above {AXIOM_ORDER_GATE}")

    if group.order <= SCAN_AGREEMENT_GATE and full.ambient_dim <= ORACLE_DIM_GATE:
        scanned = enumerate_by_box_scan(full, cap=SCAN_AGREEMENT_GATE)
        yield _ok(
            name,
            "scan-enumeration-agreement",
            scanned == group.elements,
            {"scanned": len(scanned)},
        )
    else:
        yield _skip(name, "scan-enumeration-agreement", "order or dimension above gate")

    restricted = restrict_to_affine_lattice(simplex)
    h_restricted = hstar_from_box_group(enumerate_box_group(restricted, volume_cap=max_volume))
    yield _ok(name, "restrict-invariance", h_restricted.coeffs == h.coeffs)

    rotated = LatticeSimplex(full.ambient_dim, full.vertices[1:] + full.vertices[:1])
    h_rotated = hstar_from_box_group(enumerate_box_group(rotated, volume_cap=max_volume))
    yield _ok(name, "permutation-invariance", h_rotated.coeffs == h.coeffs)

    if full.ambient_dim <= ORACLE_DIM_GATE and group.order <= ORACLE_VOLUME_GATE:
        try:
            cv = oracle.cross_validate(full, volume_cap=max_volume, scan_cap=scan_cap)
            yield _ok(
                name,
                "oracle-cross-validation",
                cv.match,
                {"box": list(cv.box_hstar.coeffs), "oracle": list(cv.oracle_hstar.coeffs)},
            )
            if cv.heldout_ok is None:
                yield _skip(name, "heldout-count", "scan cap")
            else:
                yield _ok(name, "heldout-count", cv.heldout_ok)
        except ScanTooLargeError:
            yield _skip(name, "oracle-cross-validation", "scan cap")
            yield _skip(name, "heldout-count", "scan cap")
        except HstarkitError as exc:
            yield Record(name, "oracle-cross-validation", "fail", {"error": str(exc)})
            yield _skip(name, "heldout-count", "oracle failed")
    else:
        yield _skip(name, "oracle-cross-validation", "dimension or volume above gate")
        yield _skip(name, "heldout-count", "dimension or volume above gate")

    try:
        facts = structural_facts(full, group, h, scan_cap=scan_cap)
        skipped = [c.name for c in facts.checks if c.skipped]
        yield _ok(name, "structural-facts", facts.ok, {"skipped": skipped})
    except HstarkitError as exc:
        yield Record(name, "structural-facts", "fail", {"error": str(exc)})

    supp_size = len({i for p in group.elements for i in p.support})
    if _is_prime(group.order):
        sym = all(
            h.coefficient(i) == h.coefficient(supp_size - i) for i in range(1, supp_size)
        )
        yield _ok(name, "prime-volume-symmetry", sym, {"center": supp_size})
    else:
        yield _skip(name, "prime-volume-symmetry", "volume not prime")

    if group.order <= FACE_IDENTIFICATION_GATE and full.n_vertices <= FACE_VERTEX_GATE:
        mismatch = None
        for sel, face_simplex in all_faces(full):
            face_group = enumerate_box_group(face_simplex, volume_cap=max_volume)
            got = {p.coords for p in face_group.elements}
            want = {
                tuple(p.coords[i] for i in sel.indices)
                for p in group.elements
                if set(p.support) <= set(sel.indices)
            }
            if got != want:
                mismatch = list(sel.indices)
                break
        yield _ok(name, "face-group-identification", mismatch is None, {"first_mismatch": mismatch})
    else:
        yield _skip(name, "face-group-identification", "order or vertex count above gate")

    window_ks = [k for k in range(3, max(4, h.degree + 2)) if check_zero_window(h, k)]
    if window_ks:
        failures = []
        for k in window_ks:
            try:
                cert = extract_face(full, k, volume_cap=max_volume)
            except HstarkitError:
                failures.append(k)
                continue
            if not (
                cert.hstar_match
                and cert.subgroup_ok
                and cert.support_bound_ok
                and cert.lemma31_ok
            ):  # pragma: no cover - extract_face raises first
                failures.append(k)
        yield _ok(name, "window-extraction", not failures, {"ks": window_ks, "failed": failures})
    else:
        yield _skip(name, "window-extraction", "no zero window in range")


def run_suite(
    corpus_dir: str | Path,
    max_volume: int = DEFAULT_VOLUME_CAP,
    scan_cap: int = oracle.DEFAULT_SCAN_CAP,
) -> tuple[list[Record], bool]:
    """All records for all documents in the directory, sorted by filename."""
    paths = sorted(Path(corpus_dir).glob("*.json"))
    if not paths:
        raise HstarkitError(f"no *.json documents in {corpus_dir}")
    records: list[Record] = []
    for path in paths:
        doc = load_simplex_document(path)
        records.extend(_instance_records(path.name, doc, max_volume, scan_cap))
    ok = all(r.status != "fail" for r in records)
    return records, ok
