"""Face extraction from a zero window, with its supporting certificates, and
the classical condition checkers on h*-vectors.

The central construction: when the coefficients h_{k+1}, ..., h_{2k} of a
lattice simplex all vanish, the elements of height at most k form a subgroup
of the fractional-weight group whose support selects a face realizing
exactly the truncated h*-polynomial. ``extract_face`` carries that out and
returns a certificate with every intermediate verdict; the checkers at the
bottom evaluate published realizability conditions on bare coefficient
vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .boxgroup import (
    BoxGroup,
    BoxPoint,
    enumerate_box_group,
    support_of_set,
)
from .errors import (
    HypothesisNotMetError,
    InternalCheckError,
    InvalidParametersError,
    PreconditionNotMetError,
    VolumeTooLargeError,
)
from .hstar import HStarVector, hstar_from_box_group
from .simplex import FaceSelector, LatticeSimplex, face, restrict_to_affine_lattice

DEFAULT_CLOSURE_PAIR_BUDGET = 4_000_000


@dataclass(frozen=True)
class ZeroWindowQuery:
    """Window parameter k; the face-extraction theorem assumes k >= 3, and
    smaller k is allowed only as an exploratory relaxation."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidParametersError("window parameter k must be >= 1")

    @property
    def below_theorem_range(self) -> bool:
        return self.k < 3


def check_zero_window(h: HStarVector, k: int) -> bool:
    """True iff coefficients k+1 through 2k (inclusive) are all zero."""
    ZeroWindowQuery(k)
    return all(h.coefficient(i) == 0 for i in range(k + 1, 2 * k + 1))


def low_subgroup(group: BoxGroup, k: int) -> tuple[BoxPoint, ...]:
    """All elements of height <= k, in the group's canonical order."""
    ZeroWindowQuery(k)
    return tuple(p for p in group.elements if p.height <= k)


@dataclass(frozen=True)
class ClosureResult:
    zero_ok: bool
    neg_ok: bool
    add_ok: bool
    exhaustive: bool
    witness: tuple[BoxPoint, BoxPoint] | None = None

    @property
    def ok(self) -> bool:
        return self.zero_ok and self.neg_ok and self.add_ok


def _closure_check(
    points: Sequence[BoxPoint], group: BoxGroup, pair_budget: int
) -> ClosureResult:
    """Is the given subset a subgroup?

    Addition closure is checked pairwise over scaled integer tuples. When
    the subset is the whole group, addition closure holds by construction of
    the enumeration and the pair sweep is skipped; a proper subset whose
    pair count exceeds the budget is refused rather than sampled.
    """
    q = group.exponent
    table = {p.scaled_nums(q) for p in points}
    zero_ok = (0,) * len(group.zero) in table
    neg_ok = all(tuple((-x) % q for x in t) in table for t in table)
    if len(points) == group.order:
        return ClosureResult(zero_ok, neg_ok, True, exhaustive=False)
    if len(points) ** 2 > pair_budget:
        raise VolumeTooLargeError(len(points) ** 2, pair_budget)
    scaled = sorted(table)
    for a in scaled:
        for b in scaled:
            s = tuple((x + y) % q for x, y in zip(a, b))
            if s not in table:
                return ClosureResult(
                    zero_ok,
                    neg_ok,
                    False,
                    exhaustive=True,
                    witness=(BoxPoint.from_scaled(a, q), BoxPoint.from_scaled(b, q)),
                )
    return ClosureResult(zero_ok, neg_ok, True, exhaustive=True)


@dataclass(frozen=True)
class SupportBoundVerdict:
    """Outcome of the per-element support bound |supp(a)| <= k + heit(a)."""

    ok: bool
    checked: int
    first_violation: BoxPoint | None = None


def _require_window(group: BoxGroup, k: int) -> HStarVector:
    h = hstar_from_box_group(group)
    if not check_zero_window(h, k):
        raise HypothesisNotMetError(
            f"coefficients {k + 1}..{2 * k} of {h.coeffs} are not all zero"
        )
    return h


def verify_lemma31(group: BoxGroup, k: int) -> SupportBoundVerdict:
    """Support bound for every element of height at most k.

    Requires the zero window to hold; under that hypothesis the bound is a
    proved fact, so a reported violation means the implementation is broken.
    """
    _require_window(group, k)
    checked = 0
    for p in group.elements:
        h = p.height
        if h > k:
            continue
        checked += 1
        if p.support_size > k + h:
            return SupportBoundVerdict(False, checked, p)
    return SupportBoundVerdict(True, checked)


@dataclass(frozen=True)
class LowSubgroupVerdict:
    subgroup_ok: bool
    closure_exhaustive: bool
    support: tuple[int, ...]
    support_size: int
    bound: int
    support_bound_ok: bool
    max_height: int
    sharp_bound: int
    sharp_bound_ok: bool


def verify_lemma32(
    group: BoxGroup, k: int, pair_budget: int = DEFAULT_CLOSURE_PAIR_BUDGET
) -> LowSubgroupVerdict:
    """Subgroup and support-size bounds for the height-<=k elements.

    Checks closure under addition and negation, the bound
    |supp| <= 4k - 1, and the sharper bound 4s - 1 where s is the largest
    height occurring among the low elements.
    """
    _require_window(group, k)
    low = low_subgroup(group, k)
    closure = _closure_check(low, group, pair_budget)
    supp = support_of_set(low)
    s = max((p.height for p in low), default=0)
    return LowSubgroupVerdict(
        subgroup_ok=closure.ok,
        closure_exhaustive=closure.exhaustive,
        support=supp,
        support_size=len(supp),
        bound=4 * k - 1,
        support_bound_ok=len(supp) <= 4 * k - 1,
        max_height=s,
        sharp_bound=4 * s - 1,
        sharp_bound_ok=len(supp) <= 4 * s - 1 or not supp,
    )


@dataclass(frozen=True)
class ExtractionCertificate:
    """Everything the face extraction computed, verdicts included.

    ``hstar_match`` states that the extracted face's h*-polynomial equals
    the truncation of the input's h* at degree k; when the hypothesis
    (window plus k >= 3) held, a certificate can only be returned with
    hstar_match true.
    """

    k: int
    strict: bool
    window_ok: bool
    hypothesis_met: bool
    hstar: HStarVector
    lambda_prime: tuple[BoxPoint, ...]
    support: tuple[int, ...]
    face_selector: FaceSelector
    face_hstar: HStarVector
    truncation: HStarVector
    lemma31_ok: bool
    subgroup_ok: bool
    support_bound_ok: bool
    hstar_match: bool


def extract_face(
    simplex: LatticeSimplex,
    k: int,
    strict: bool = False,
    volume_cap: int | None = None,
    pair_budget: int = DEFAULT_CLOSURE_PAIR_BUDGET,
) -> ExtractionCertificate:
    """Extract the face spanned by the support of the height-<=k elements.

    In strict mode the zero window and k >= 3 are enforced up front. In
    permissive mode the construction always runs and the certificate simply
    records which verdicts hold; with the hypothesis met, any failing
    verdict is raised as an internal error since the construction is then
    guaranteed to work.

    An empty support (only the zero element has height <= k) selects the
    single first vertex, whose h*-polynomial is 1; that agrees with the
    truncation exactly when h_1..h_k vanish, which is the only way the
    support can be empty under the hypothesis.
    """
    query = ZeroWindowQuery(k)
    full = simplex if simplex.is_full_dimensional else restrict_to_affine_lattice(simplex)
    if volume_cap is None:
        group = enumerate_box_group(full)
    else:
        group = enumerate_box_group(full, volume_cap=volume_cap)
    h = hstar_from_box_group(group)
    window_ok = check_zero_window(h, k)
    hypothesis_met = window_ok and not query.below_theorem_range
    if strict and not hypothesis_met:
        raise HypothesisNotMetError(
            f"k={k} with h*={h.coeffs}: zero window "
            f"{'holds but k < 3' if window_ok else 'fails'}"
        )
    low = low_subgroup(group, k)
    supp = support_of_set(low)
    selector = FaceSelector.of(supp if supp else (0,), full.n_vertices)
    face_simplex = face(full, selector)
    if volume_cap is None:
        face_group = enumerate_box_group(face_simplex)
    else:
        face_group = enumerate_box_group(face_simplex, volume_cap=volume_cap)
    face_h = hstar_from_box_group(face_group)
    truncation = h.truncated(k)
    lemma31_ok = all(p.support_size <= k + p.height for p in low)
    closure = _closure_check(low, group, pair_budget)
    support_bound_ok = len(supp) <= 4 * k - 1
    hstar_match = face_h.coeffs == truncation.coeffs
    certificate = ExtractionCertificate(
        k=k,
        strict=strict,
        window_ok=window_ok,
        hypothesis_met=hypothesis_met,
        hstar=h,
        lambda_prime=low,
        support=supp,
        face_selector=selector,
        face_hstar=face_h,
        truncation=truncation,
        lemma31_ok=lemma31_ok,
        subgroup_ok=closure.ok,
        support_bound_ok=support_bound_ok,
        hstar_match=hstar_match,
    )
    if hypothesis_met and not (
        hstar_match and closure.ok and support_bound_ok and lemma31_ok
    ):
        raise InternalCheckError(
            f"face extraction failed under a true hypothesis: {certificate}"
        )
    return certificate


# ---------------------------------------------------------------------------
# Condition checkers on bare coefficient vectors.


@dataclass(frozen=True)
class ScottVerdict:
    mode: str
    satisfied_via: int | None
    h1: int
    h2: int

    @property
    def ok(self) -> bool:
        return self.satisfied_via is not None


SCOTT_MODES = ("dimension2", "degree2", "universal")


def check_scott(h: HStarVector, mode: str) -> ScottVerdict:
    """The three-way quadratic bound on (h_1, h_2).

    dimension2: the polygon version, requiring at most three coefficients
    and including the lower bound h_2 <= h_1 in its middle condition.
    degree2: the degree-at-most-two version (no lower bound).
    universal: applies to any vector with h_3 = 0.
    Returns the first satisfied condition (1), (2) or (3), or None.
    """
    if mode not in SCOTT_MODES:
        raise InvalidParametersError(f"unknown mode {mode!r}")
    if mode in ("dimension2", "degree2") and h.degree > 2:
        raise PreconditionNotMetError(f"{mode} mode needs at most 3 coefficients")
    if mode == "universal" and h.coefficient(3) != 0:
        raise PreconditionNotMetError("universal mode requires h_3 = 0")
    h1, h2 = h.coefficient(1), h.coefficient(2)
    via = None
    if h2 == 0:
        via = 1
    elif (h2 <= h1 if mode == "dimension2" else True) and h1 <= 3 * h2 + 3:
        via = 2
    elif h1 == 7 and h2 == 1:
        via = 3
    return ScottVerdict(mode, via, h1, h2)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class HhhVerdict:
    status: str  # "NOT_REALIZABLE" | "INCONCLUSIVE"
    i: int | None = None
    j: int | None = None
    p: int | None = None

    @property
    def not_realizable(self) -> bool:
        return self.status == "NOT_REALIZABLE"


def check_lemma_hhh(h: HStarVector) -> HhhVerdict:
    """Non-realizability certificate for the exact shape 1 + t^i + (p-2) t^j.

    Fires only when the nonzero coefficients are exactly h_0 = 1, h_i = 1,
    h_j = p - 2 with 2 <= i < j and the normalized volume p prime, p >= 5.
    One-directional: anything else is INCONCLUSIVE.
    """
    nonzero = [idx for idx, c in enumerate(h.coeffs) if c]
    if len(nonzero) != 3 or nonzero[0] != 0:
        return HhhVerdict("INCONCLUSIVE")
    i, j = nonzero[1], nonzero[2]
    if i < 2 or h.coefficient(i) != 1:
        return HhhVerdict("INCONCLUSIVE")
    p = h.normalized_volume
    if h.coefficient(j) != p - 2 or p < 5 or not _is_prime(p):
        return HhhVerdict("INCONCLUSIVE")
    return HhhVerdict("NOT_REALIZABLE", i=i, j=j, p=p)


def check_shifted_symmetric(h: HStarVector, d: int) -> bool:
    """h_{i+1} == h_{d-i} for every 0 <= i <= d-1 (d = dimension)."""
    return all(h.coefficient(i + 1) == h.coefficient(d - i) for i in range(d))


def check_prime_symmetry(h: HStarVector, s: int) -> str:
    """Index identity h_{i+1} == h_{s-i} for i = 0..s-1; HOLDS/FAILS.

    This is the level symmetry of a simplex whose weight group has prime
    order, instantiated at center s + 1 (s is the dimension when the group's
    support is full).
    """
    ok = all(h.coefficient(i + 1) == h.coefficient(s - i) for i in range(s))
    return "HOLDS" if ok else "FAILS"


@dataclass(frozen=True)
class PrimeVolumeVerdict:
    status: str  # "NOT_REALIZABLE" | "INCONCLUSIVE" | "NOT_APPLICABLE"
    volume: int
    valid_center: int | None = None


def prime_volume_obstruction(h: HStarVector) -> PrimeVolumeVerdict:
    """Symmetry obstruction for vectors with h_1 = 0 and prime volume.

    A vanishing linear coefficient forces any realizing polytope to be a
    simplex with exactly its vertices as lattice points; a prime normalized
    volume then makes the weight group cyclic of prime order, whose nonzero
    elements all share one support, say of size c. Pairing each element
    with its negative gives the level symmetry h_i = h_{c-i} for
    0 < i < c. If no center c in [deg+1, 2*deg] satisfies that symmetry,
    the vector is not the h*-polynomial of any lattice polytope.
    """
    p = h.normalized_volume
    if h.coefficient(1) != 0 or h.degree < 1 or not _is_prime(p):
        return PrimeVolumeVerdict("NOT_APPLICABLE", p)
    deg = h.degree
    for center in range(deg + 1, 2 * deg + 1):
        if all(h.coefficient(i) == h.coefficient(center - i) for i in range(1, center)):
            return PrimeVolumeVerdict("INCONCLUSIVE", p, valid_center=center)
    return PrimeVolumeVerdict("NOT_REALIZABLE", p)


@dataclass(frozen=True)
class ConditionEntry:
    name: str
    status: str
    detail: dict


def condition_report(
    h: HStarVector,
    dim: int | None = None,
    support_size: int | None = None,
) -> tuple[ConditionEntry, ...]:
    """All condition verdicts for one vector, as data.

    ``dim`` gates the dimension-indexed checks; ``support_size`` (the joint
    support of the computed weight group) switches the prime-volume check
    from center search to the exact center.
    """
    entries: list[ConditionEntry] = []

    def scott_entry(name: str, mode: str, applicable: bool) -> None:
        if not applicable:
            entries.append(ConditionEntry(name, "not_applicable", {}))
            return
        v = check_scott(h, mode)
        entries.append(
            ConditionEntry(
                name,
                "satisfied" if v.ok else "violates_all",
                {"via": v.satisfied_via, "h1": v.h1, "h2": v.h2},
            )
        )

    scott_entry("scott", "dimension2", (dim == 2) if dim is not None else h.degree <= 2)
    scott_entry("degree2", "degree2", h.degree <= 2)
    scott_entry("universal", "universal", h.coefficient(3) == 0)

    if dim is None:
        entries.append(ConditionEntry("hibi", "not_applicable", {}))
        entries.append(ConditionEntry("eq1", "not_applicable", {}))
    else:
        hd = h.coefficient(dim)
        if hd > 0:
            bad = [i for i in range(1, dim) if h.coefficient(i) < h.coefficient(1)]
            entries.append(
                ConditionEntry(
                    "hibi",
                    "holds" if not bad else "fails",
                    {"h1": h.coefficient(1), "first_violation_index": bad[0] if bad else None},
                )
            )
        else:
            entries.append(ConditionEntry("hibi", "not_applicable", {"hd": 0}))
        entries.append(
            ConditionEntry(
                "eq1",
                "holds" if h.coefficient(1) >= hd else "fails",
                {"h1": h.coefficient(1), "hd": hd},
            )
        )

    v = check_lemma_hhh(h)
    entries.append(
        ConditionEntry(
            "lemma_hhh",
            v.status.lower(),
            {"i": v.i, "j": v.j, "p": v.p},
        )
    )

    if dim is None:
        entries.append(ConditionEntry("shifted_symmetric", "not_applicable", {}))
    else:
        entries.append(
            ConditionEntry(
                "shifted_symmetric",
                "holds" if check_shifted_symmetric(h, dim) else "fails",
                {"dim": dim},
            )
        )

    if support_size is not None and _is_prime(h.normalized_volume):
        status = (
            "holds"
            if all(
                h.coefficient(i) == h.coefficient(support_size - i)
                for i in range(1, support_size)
            )
            else "fails"
        )
        entries.append(
            ConditionEntry(
                "prime_symmetry", status, {"center": support_size, "p": h.normalized_volume}
            )
        )
    else:
        pv = prime_volume_obstruction(h)
        entries.append(
            ConditionEntry(
                "prime_symmetry",
                pv.status.lower(),
                {"p": pv.volume, "valid_center": pv.valid_center},
            )
        )
    return tuple(entries)
