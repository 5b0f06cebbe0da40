from fractions import Fraction
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hstarkit import boxgroup
from hstarkit.boxgroup import (
    BoxPoint,
    add,
    enumerate_box_group,
    enumerate_by_box_scan,
    neg,
    support_of_set,
)
from hstarkit.errors import (
    DimensionMismatchError,
    NonIntegralHeightError,
    VolumeTooLargeError,
)
from hstarkit.families import delta_cm, join, prop43_instance, remark44_simplex, unit_simplex
from hstarkit.simplex import all_faces, from_vertices, normalized_volume

TRI_VOL2 = from_vertices(2, [(0, 0), (1, 0), (1, 2)])


def frac(a, b=1):
    return Fraction(a, b)


class TestBoxPoint:
    def test_reduction_and_coords(self):
        p = BoxPoint.from_scaled((0, 3, 3), 6)
        assert p.den == 2 and p.nums == (0, 1, 1)
        assert p.coords == (frac(0), frac(1, 2), frac(1, 2))

    def test_height_and_support(self):
        p = BoxPoint.from_scaled((0, 1, 1), 2)
        assert p.height == 1
        assert p.support == (1, 2)
        assert p.support_size == 2
        z = BoxPoint.zero(3)
        assert z.height == 0 and z.support == ()

    def test_non_integral_height_signals_corruption(self):
        with pytest.raises(NonIntegralHeightError):
            BoxPoint.from_scaled((1, 0), 2).height

    def test_add_and_neg(self):
        a = BoxPoint.from_scaled((0, 1, 1), 2)
        z = BoxPoint.zero(3)
        assert add(a, z) == a
        assert add(a, a) == z
        assert neg(z) == z
        assert neg(a) == a
        b = BoxPoint.from_fractions((frac(0), frac(1, 3), frac(2, 3)))
        assert neg(b) == BoxPoint.from_fractions((frac(0), frac(2, 3), frac(1, 3)))

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            add(BoxPoint.zero(2), BoxPoint.zero(3))

    def test_support_of_set(self):
        assert support_of_set([BoxPoint.zero(4)]) == ()
        pts = [
            BoxPoint.from_scaled((1, 0, 0, 1), 2),
            BoxPoint.from_scaled((0, 0, 1, 1), 2),
        ]
        assert support_of_set(pts) == (0, 2, 3)


class TestEnumeration:
    def test_unit_simplices_trivial(self):
        for d in range(0, 5):
            g = enumerate_box_group(unit_simplex(d))
            assert g.order == 1
            assert g.elements == (BoxPoint.zero(d + 1),)

    def test_triangle_vol2(self):
        g = enumerate_box_group(TRI_VOL2)
        assert g.order == 2
        nonzero = g.elements[1]
        assert nonzero.coords == (frac(0), frac(1, 2), frac(1, 2))
        assert nonzero.height == 1

    def test_explicit_5dim(self):
        g = enumerate_box_group(prop43_instance(3, 4))
        assert g.order == 9
        assert sorted(p.height for p in g.elements) == [0, 2, 2, 3, 3, 3, 3, 4, 4]
        assert g.level_counts() == {0: 1, 2: 2, 3: 4, 4: 2}

    def test_remark44_levels(self):
        g = enumerate_box_group(remark44_simplex(2))
        assert g.level_counts() == {0: 1, 2: 1, 4: 1}

    def test_delta_cm_heights_all_m(self):
        for c, m in [(1, 1), (2, 3), (3, 2), (5, 4)]:
            g = enumerate_box_group(delta_cm(c, m))
            assert g.order == c + 1
            assert all(p.height == m for p in g.elements if not p.is_zero())

    def test_elements_sorted_and_zero_first(self):
        g = enumerate_box_group(prop43_instance(3, 4))
        assert g.zero.is_zero()
        keys = [(p.height, p.coords) for p in g.elements]
        assert keys == sorted(keys)

    def test_order_equals_volume(self):
        for s in (TRI_VOL2, prop43_instance(3, 4), delta_cm(4, 2), remark44_simplex(2)):
            assert enumerate_box_group(s).order == normalized_volume(s)

    def test_volume_cap(self):
        with pytest.raises(VolumeTooLargeError):
            enumerate_box_group(delta_cm(100, 1), volume_cap=50)

    def test_lower_dimensional_rejected(self):
        with pytest.raises(DimensionMismatchError):
            enumerate_box_group(from_vertices(2, [(0, 0), (2, 0)]))

    def test_inverses_exhaustive(self):
        g = enumerate_box_group(prop43_instance(3, 4))
        for p in g.elements:
            assert add(p, neg(p)).is_zero()

    def test_scan_oracle_agreement(self):
        for s in (
            TRI_VOL2,
            prop43_instance(3, 4),
            delta_cm(3, 2),
            remark44_simplex(2),
            join(delta_cm(1, 1), delta_cm(2, 1)),
        ):
            assert enumerate_by_box_scan(s) == enumerate_box_group(s).elements


class TestGroupLaws:
    @pytest.mark.parametrize(
        "simplex",
        [TRI_VOL2, prop43_instance(3, 4), delta_cm(4, 2), remark44_simplex(2)],
        ids=["tri", "explicit5", "d42", "r44k2"],
    )
    def test_axioms_exhaustive(self, simplex):
        g = enumerate_box_group(simplex)
        els = g.elements
        assert g.zero.is_zero()
        for a in els:
            assert neg(a) in g
            for b in els:
                assert add(a, b) in g
        sample = els[: min(5, len(els))]
        for a in sample:
            for b in sample:
                assert add(a, b) == add(b, a)
                for c in sample:
                    assert add(add(a, b), c) == add(a, add(b, c))

    @pytest.mark.parametrize(
        "simplex",
        [prop43_instance(3, 4), delta_cm(6, 2), remark44_simplex(2)],
        ids=["explicit5", "d62", "r44k2"],
    )
    def test_support_height_identity(self, simplex):
        for p in enumerate_box_group(simplex).elements:
            assert p.support_size == p.height + neg(p).height

    @pytest.mark.parametrize(
        "simplex",
        [prop43_instance(3, 4), delta_cm(5, 3)],
        ids=["explicit5", "d53"],
    )
    def test_height_subadditive_and_step_bound(self, simplex):
        g = enumerate_box_group(simplex)
        for a in g.elements:
            for b in g.elements:
                assert add(a, b).height <= a.height + b.height
            prev = a
            while not a.is_zero():
                cur = add(prev, a)
                assert cur.height <= prev.height + a.height
                if cur.is_zero():
                    break
                prev = cur

    def test_face_groups_are_supported_subsets(self):
        for s in (prop43_instance(3, 4), remark44_simplex(2)):
            g = enumerate_box_group(s)
            for sel, face_simplex in all_faces(s):
                face_group = enumerate_box_group(face_simplex)
                got = {p.coords for p in face_group.elements}
                want = {
                    tuple(p.coords[i] for i in sel.indices)
                    for p in g.elements
                    if set(p.support) <= set(sel.indices)
                }
                assert got == want


@given(
    st.integers(1, 3).flatmap(
        lambda d: st.lists(
            st.lists(st.integers(-4, 4), min_size=d, max_size=d),
            min_size=d + 1,
            max_size=d + 1,
        )
    )
)
@settings(max_examples=60, deadline=None)
def test_random_simplices_group_matches_volume_and_scan(verts):
    dim = len(verts[0])
    try:
        s = from_vertices(dim, verts)
    except Exception:
        return
    vol = normalized_volume(s)
    if vol > 60:
        return
    g = enumerate_box_group(s)
    assert g.order == vol
    assert sum(1 for _ in g.elements) == vol
    assert enumerate_by_box_scan(s, cap=60) == g.elements
    for p in g.elements:
        assert p.support_size == p.height + neg(p).height
