import pytest

from hstarkit.errors import ScanTooLargeError
from hstarkit.families import delta_cm, join, prop43_instance, remark44_simplex, unit_simplex
from hstarkit.hstar import ehrhart_from_hstar, hstar_from_box_group
from hstarkit.boxgroup import enumerate_box_group
from hstarkit.oracle import (
    count_interior_points,
    count_lattice_points,
    count_table,
    cross_validate,
    heldout_count_matches,
    hstar_by_interpolation,
)
from hstarkit.simplex import from_vertices

TRI_VOL2 = from_vertices(2, [(0, 0), (1, 0), (1, 2)])


class TestCounts:
    def test_unit_triangle_small_dilates(self):
        tri = unit_simplex(2)
        assert count_lattice_points(tri, 1) == 3
        assert count_lattice_points(tri, 2) == 6
        assert count_lattice_points(tri, 3) == 10

    def test_dilation_zero(self):
        assert count_lattice_points(prop43_instance(3, 4), 0) == 1
        assert count_interior_points(prop43_instance(3, 4), 0) == 0

    def test_triangle_vol2_by_hand(self):
        # area 4 at n=2, boundary 8, so 1 interior and 9 total
        assert count_lattice_points(TRI_VOL2, 2) == 9
        assert count_interior_points(TRI_VOL2, 2) == 1

    def test_interior_unit_triangle(self):
        tri = unit_simplex(2)
        assert count_interior_points(tri, 1) == 0
        assert count_interior_points(tri, 2) == 0
        assert count_interior_points(tri, 3) == 1

    def test_interior_of_explicit_simplex_is_empty(self):
        assert count_interior_points(prop43_instance(3, 4), 1) == 0

    def test_point_simplex(self):
        pt = unit_simplex(0)
        assert count_lattice_points(pt, 5) == 1
        assert count_interior_points(pt, 5) == 1

    def test_interior_never_exceeds_total(self):
        for s in (TRI_VOL2, delta_cm(2, 2), prop43_instance(3, 4)):
            for n in range(0, 4):
                assert count_interior_points(s, n) <= count_lattice_points(s, n)

    def test_counts_strictly_increasing(self):
        for s in (TRI_VOL2, delta_cm(3, 2), prop43_instance(3, 4)):
            table = count_table(s)
            assert table.counts[0] == 1
            assert all(a < b for a, b in zip(table.counts, table.counts[1:]))

    def test_scan_cap(self):
        with pytest.raises(ScanTooLargeError):
            count_lattice_points(prop43_instance(3, 4), 5, scan_cap=1000)

    def test_python_and_vectorized_paths_agree(self):
        # below 512 candidates the pure-Python path runs; force both and compare
        s = TRI_VOL2
        small = count_lattice_points(s, 3)  # 28 candidates: python path
        from hstarkit import oracle

        forms_scan = oracle._scan.__wrapped__(s, 3, 10**8)
        assert small == forms_scan[0]
        big = delta_cm(2, 2)
        totals = [count_lattice_points(big, n) for n in range(4)]
        assert totals == [1, 4, 12, 28]


class TestInterpolation:
    def test_unit_triangle(self):
        assert hstar_by_interpolation(unit_simplex(2)).coeffs == (1,)

    def test_triangle_vol2(self):
        assert count_table(TRI_VOL2).counts == (1, 4, 9)
        assert hstar_by_interpolation(TRI_VOL2).coeffs == (1, 1)

    def test_delta_22(self):
        assert hstar_by_interpolation(delta_cm(2, 2)).coeffs == (1, 0, 2)

    def test_matches_evaluation_beyond_range(self):
        # one dilate beyond the held-out check: counts really are polynomial
        for s in (TRI_VOL2, delta_cm(2, 2), join(delta_cm(1, 1), delta_cm(2, 1))):
            h = hstar_by_interpolation(s)
            d = s.dimension
            for n in range(d + 3):
                assert count_lattice_points(s, n) == ehrhart_from_hstar(h, d, n)


class TestCrossValidation:
    def test_unit(self):
        cv = cross_validate(unit_simplex(2))
        assert cv.match and cv.box_hstar.coeffs == (1,)

    def test_explicit_5dim(self):
        cv = cross_validate(prop43_instance(3, 4))
        assert cv.match and cv.box_hstar.coeffs == (1, 0, 2, 4, 2)
        assert cv.heldout_ok

    def test_remark44_k2(self):
        cv = cross_validate(remark44_simplex(2))
        assert cv.match and cv.box_hstar.coeffs == (1, 0, 1, 0, 1)

    def test_lower_dimensional_input_restricted(self):
        seg = from_vertices(2, [(0, 0), (3, 0)])
        cv = cross_validate(seg)
        assert cv.match and cv.box_hstar.coeffs == (1, 2)

    def test_heldout_detects_wrong_vector(self):
        h = hstar_from_box_group(enumerate_box_group(TRI_VOL2))
        assert heldout_count_matches(TRI_VOL2, h)
        from hstarkit.hstar import HStarVector

        assert not heldout_count_matches(TRI_VOL2, HStarVector.of([1, 2]))
