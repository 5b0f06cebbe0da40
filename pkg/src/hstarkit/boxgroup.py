"""The finite abelian group of fractional vertex-weight tuples of a simplex.

For a full-dimensional lattice simplex with vertices v_1, ..., v_{n+1}, the
group consists of all tuples (r_1, ..., r_{n+1}) with 0 <= r_i < 1 such that
sum r_i * v_i is a lattice point and sum r_i is an integer. Addition is
coordinatewise fractional-part addition, negation is coordinatewise 1 - r on
the support, and the group order equals the normalized volume. The integer
coordinate sum of an element is its height; the number of elements of height
h is exactly the h-th coefficient of the simplex's h*-polynomial, which is
how everything downstream computes h*.

Elements are stored as integer numerators over a common denominator, which
keeps the group law in pure integer arithmetic; ``coords`` exposes the exact
rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import (
    DimensionMismatchError,
    NonIntegralHeightError,
    VolumeTooLargeError,
)
from .simplex import LatticeSimplex, homogenize

DEFAULT_VOLUME_CAP = 10**6


@dataclass(frozen=True)
class BoxPoint:
    """One fractional-weight tuple; coordinate i equals nums[i] / den.

    Stored reduced: den > 0 and gcd(den, *nums) == 1, each num in [0, den).
    Points order by (height, coordinates), exactly.
    """

    nums: tuple[int, ...]
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0 or any(x < 0 or x >= self.den for x in self.nums):
            raise ValueError("numerators must lie in [0, den)")

    def __lt__(self, other: "BoxPoint") -> bool:
        return (self.height, self.coords) < (other.height, other.coords)

    @classmethod
    def from_scaled(cls, nums: Sequence[int], den: int) -> "BoxPoint":
        nums = tuple(x % den for x in nums)
        g = gcd(den, *nums) if nums else den
        return cls(nums=tuple(x // g for x in nums), den=den // g)

    @classmethod
    def from_fractions(cls, coords: Sequence[Fraction]) -> "BoxPoint":
        den = lcm(*(c.denominator for c in coords)) if coords else 1
        return cls.from_scaled([c.numerator * (den // c.denominator) for c in coords], den)

    @classmethod
    def zero(cls, length: int) -> "BoxPoint":
        return cls(nums=(0,) * length, den=1)

    def __len__(self) -> int:
        return len(self.nums)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    @property
    def height(self) -> int:
        total = sum(self.nums)
        if total % self.den:
            raise NonIntegralHeightError(
                f"coordinate sum {total}/{self.den} is not an integer"
            )
        return total // self.den

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.nums) if x > 0)

    @property
    def support_size(self) -> int:
        return sum(1 for x in self.nums if x > 0)

    def scaled_nums(self, den: int) -> tuple[int, ...]:
        if den % self.den:
            raise ValueError(f"{self.den} does not divide {den}")
        f = den // self.den
        return tuple(x * f for x in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)


def add(a: BoxPoint, b: BoxPoint) -> BoxPoint:
    """Coordinatewise fractional-part sum."""
    if len(a) != len(b):
        raise DimensionMismatchError("cannot add tuples of different lengths")
    den = lcm(a.den, b.den)
    fa, fb = den // a.den, den // b.den
    return BoxPoint.from_scaled(
        [x * fa + y * fb for x, y in zip(a.nums, b.nums)], den
    )


def neg(a: BoxPoint) -> BoxPoint:
    """Group inverse: coordinatewise 1 - r on the support, 0 elsewhere."""
    return BoxPoint.from_scaled([(-x) % a.den for x in a.nums], a.den)


def height(a: BoxPoint) -> int:
    return a.height


def support(a: BoxPoint) -> tuple[int, ...]:
    return a.support


def support_of_set(points: Iterable[BoxPoint]) -> tuple[int, ...]:
    """Union of the supports, sorted."""
    out: set[int] = set()
    for p in points:
        out.update(p.support)
    return tuple(sorted(out))


@dataclass(frozen=True)
class BoxGroup:
    """Complete fractional-weight group of a full-dimensional simplex.

    Elements are sorted by (height, coordinates) so that every downstream
    report is deterministic.
    """

    simplex: LatticeSimplex
    elements: tuple[BoxPoint, ...]
    order: int
    invariant_factors: tuple[int, ...]
    element_set: frozenset[BoxPoint]

    def __iter__(self) -> Iterator[BoxPoint]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, point: BoxPoint) -> bool:
        return point in self.element_set

    @property
    def zero(self) -> BoxPoint:
        return self.elements[0]

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def level_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for p in self.elements:
            h = p.height
            counts[h] = counts.get(h, 0) + 1
        return dict(sorted(counts.items()))


def enumerate_box_group(
    simplex: LatticeSimplex, volume_cap: int = DEFAULT_VOLUME_CAP
) -> BoxGroup:
    """Enumerate the whole group of a full-dimensional simplex.

    The quotient of the standard lattice by the column lattice of the
    homogenized matrix M is walked through the Smith decomposition
    U M W = D: residue tuples y over the invariant factors map to the
    fractional parts of W (y_1/d_1, ..., y_k/d_k), giving each group element
    once. Cost is O(order * (n+1)) integer operations after the
    decomposition, independent of coordinate sizes.
    """
    matrix = homogenize(simplex)
    dec = linalg.smith_normal_form(matrix)
    factors = dec.invariant_factors
    order = prod(factors)
    if order > volume_cap:
        raise VolumeTooLargeError(order, volume_cap)
    k = len(factors)
    q = factors[-1]
    active = [j for j in range(k) if factors[j] > 1]
    step: dict[int, tuple[int, ...]] = {}
    reset: dict[int, tuple[int, ...]] = {}
    for j in active:
        col = [dec.W.rows[i][j] * (q // factors[j]) % q for i in range(k)]
        step[j] = tuple(col)
        reset[j] = tuple((-(factors[j] - 1) * c) % q for c in col)
    cur = [0] * k
    counters = [0] * len(active)
    raw: list[tuple[int, ...]] = []
    for _ in range(order):
        raw.append(tuple(cur))
        pos = len(active) - 1
        while pos >= 0 and counters[pos] == factors[active[pos]] - 1:
            counters[pos] = 0
            r = reset[active[pos]]
            for i in range(k):
                cur[i] = (cur[i] + r[i]) % q
            pos -= 1
        if pos >= 0:
            counters[pos] += 1
            s = step[active[pos]]
            for i in range(k):
                cur[i] = (cur[i] + s[i]) % q
    if len(set(raw)) != order:  # pragma: no cover - guaranteed by unimodularity
        raise NonIntegralHeightError("enumeration produced duplicate elements")
    for t in raw:
        if sum(t) % q:  # pragma: no cover - the all-ones matrix row forces this
            raise NonIntegralHeightError("element with non-integral coordinate sum")
    raw.sort(key=lambda t: (sum(t) // q, t))
    elements = tuple(BoxPoint.from_scaled(t, q) for t in raw)
    return BoxGroup(
        simplex=simplex,
        elements=elements,
        order=order,
        invariant_factors=factors,
        element_set=frozenset(elements),
    )


def enumerate_by_box_scan(simplex: LatticeSimplex, cap: int = 200) -> tuple[BoxPoint, ...]:
    """Debug oracle: scan the half-open vertex parallelepiped directly.

    Independent of the Smith-form path; exact integer membership test per
    candidate lattice point (adjugate times point, compared against the
    determinant). Only intended for normalized volume <= cap.
    """
    matrix = homogenize(simplex)
    adj, det_m = linalg.adjugate(matrix)
    volume = abs(det_m)
    if volume > cap:
        raise VolumeTooLargeError(volume, cap)
    k = matrix.nrows
    sign = 1 if det_m > 0 else -1
    rows = [[sign * adj.rows[i][j] for j in range(k)] for i in range(k)]
    los = []
    his = []
    for i in range(k):
        row = matrix.rows[i]
        los.append(sum(min(x, 0) for x in row))
        his.append(sum(max(x, 0) for x in row))
    found = []
    point = [0] * k

    def scan(axis: int) -> None:
        if axis == k:
            # weight_i = (rows[i] . point) / volume must lie in [0, 1)
            nums = []
            for i in range(k):
                w = sum(rows[i][j] * point[j] for j in range(k))
                if w < 0 or w >= volume:
                    return
                nums.append(w)
            found.append(BoxPoint.from_scaled(nums, volume))
            return
        for val in range(los[axis], his[axis] + 1):
            point[axis] = val
            scan(axis + 1)

    scan(0)
    return tuple(sorted(found))
