from fractions import Fraction

import pytest

from rectdel import (
    AspectRatio,
    DegenerateInputError,
    EmptyBox,
    GeneralPositionError,
    Point,
    PointSet,
    Triangulation,
    build_triangulation,
    generate_points,
    has_edge,
    locate_point,
)
from rectdel.structure import count_report, planarity_violations

A1 = AspectRatio.parse("1")


def witness_is_valid(ps, aspect, u, v, hom):
    on_u, _ = locate_point(ps[u], hom)
    on_v, _ = locate_point(ps[v], hom)
    if on_u != "on" or on_v != "on":
        return False
    for k in range(len(ps)):
        if locate_point(ps[k], hom)[0] == "inside":
            return False
    return True


class TestHasEdge:
    def test_witnessed_pair(self):
        ps = PointSet.of([(0, 0), (3, 1), (10, 10)])
        ok, hom = has_edge(ps, A1, 0, 1)
        assert ok and witness_is_valid(ps, A1, 0, 1, hom)

    def test_blocked_pair(self):
        # every square with both on its boundary strictly contains the middle point
        ps = PointSet.of([(0, 0), (3, 1), ("1.5", "0.6")])
        ok, hom = has_edge(ps, A1, 0, 1)
        assert not ok and hom is None

    def test_pair_without_blockers(self):
        ps = PointSet.of([(0, 0), (5, 2)])
        for a in ("1", "2", "1/3"):
            ok, hom = has_edge(ps, AspectRatio.parse(a), 0, 1)
            assert ok and witness_is_valid(ps, AspectRatio.parse(a), 0, 1, hom)

    def test_invalid_ids(self):
        ps = PointSet.of([(0, 0), (5, 2)])
        with pytest.raises(ValueError):
            has_edge(ps, A1, 0, 7)
        with pytest.raises(ValueError):
            has_edge(ps, A1, 1, 1)


class TestBuild:
    def test_two_points(self):
        T = build_triangulation(PointSet.of([(0, 0), (5, 2)]), A1)
        assert T.edges == [(0, 1)] and T.triangles == []

    def test_k3_with_circumhomothet(self):
        T = build_triangulation(PointSet.of([(0, 0), (3, 1), (1, 2)]), A1)
        assert T.edges == [(0, 1), (0, 2), (1, 2)]
        assert T.triangles == [(0, 1, 2)]
        hom = T.circumhomothets[(0, 1, 2)]
        assert (hom.x_min, hom.y_min, hom.x_max, hom.y_max) == (0, -1, 3, 2)

    def test_path_instance(self):
        T = build_triangulation(PointSet.of([(0, 0), (3, 1), ("1.5", "0.6")]), A1)
        assert T.edges == [(0, 2), (1, 2)] and T.triangles == []

    def test_validation_failure_propagates(self):
        with pytest.raises(GeneralPositionError):
            build_triangulation(PointSet.of([(0, 0), (0, 5), (1, 1)]), A1)

    def test_four_cohomothet_points_rejected(self):
        # all four lie on the boundary of the empty square [0,4]^2
        ps = PointSet.of([(0, 1), (1, 4), (4, 3), (3, 0)])
        with pytest.raises(DegenerateInputError):
            build_triangulation(ps, A1)

    def test_every_witness_and_circumhomothet_is_empty(self):
        for seed in range(5):
            ps = generate_points(12, seed)
            for a in ("1", "2"):
                aspect = AspectRatio.parse(a)
                T = build_triangulation(ps, aspect)
                for (u, v), hom in T.edge_witnesses.items():
                    assert witness_is_valid(ps, aspect, u, v, hom)
                for tri, hom in T.circumhomothets.items():
                    assert all(locate_point(ps[t], hom)[0] == "on" for t in tri)
                    assert witness_is_valid(ps, aspect, tri[0], tri[1], hom)


class TestStructure:
    def test_planarity_and_counts(self):
        for seed in range(6):
            ps = generate_points(20, seed)
            for a in ("1", "3/2", "4"):
                T = build_triangulation(ps, AspectRatio.parse(a))
                assert planarity_violations(T) == []
                rep = count_report(T)
                assert rep.components == 1
                assert rep.euler_identity_ok
                if rep.hull_is_boundary:
                    assert rep.hull_identity_ok

    def test_triangle_edges_are_edges(self):
        ps = generate_points(15, 11)
        T = build_triangulation(ps, AspectRatio.parse("2"))
        for a, b, c in T.triangles:
            for e in ((a, b), (a, c), (b, c)):
                assert e in T.edge_set


class TestScalingReduction:
    def test_aspect_two_equals_squeezed_square(self):
        for seed in range(8):
            ps = generate_points(14, seed)
            T2 = build_triangulation(ps, AspectRatio.parse("2"))
            squeezed = PointSet(Point(p.x, p.y / 2) for p in ps)
            T1 = build_triangulation(squeezed, A1)
            assert T2.edges == T1.edges
            assert T2.triangles == T1.triangles

    def test_transposed_aspect_equals_transposed_points(self):
        for seed in range(4):
            ps = generate_points(12, seed)
            Tw = build_triangulation(ps, AspectRatio.parse("1/3"))
            Tt = build_triangulation(ps.transposed(), AspectRatio.parse("3"))
            assert Tw.edges == Tt.edges and Tw.triangles == Tt.triangles
            # homothets are reported in input orientation
            for (u, v), hom in Tw.edge_witnesses.items():
                assert locate_point(ps[u], hom)[0] == "on"
                assert locate_point(ps[v], hom)[0] == "on"


class TestEmptyBox:
    def test_contains_strictly(self):
        box = EmptyBox.of_pair(Point.of(0, 0), Point.of(4, 3))
        assert box.contains_strictly(Point.of(1, 1))
        assert not box.contains_strictly(Point.of(0, 1))
        with pytest.raises(ValueError):
            EmptyBox.of_pair(Point.of(1, 1), Point.of(1, 1))


class TestJson:
    def test_round_trip(self):
        ps = generate_points(12, 5)
        T = build_triangulation(ps, AspectRatio.parse("3/2"))
        text = T.to_json()
        back = Triangulation.from_json(text)
        assert back.point_set == T.point_set
        assert back.edges == T.edges
        assert back.triangles == T.triangles
        assert back.circumhomothets == T.circumhomothets
        assert back.to_json() == text

    def test_wide_aspect_round_trip(self):
        ps = generate_points(10, 6)
        T = build_triangulation(ps, AspectRatio.parse("1/2"))
        back = Triangulation.from_json(T.to_json())
        assert back.circumhomothets == T.circumhomothets
        assert str(back.aspect) == "1/2"
