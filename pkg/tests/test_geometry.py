from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rectdel import (
    AspectRatio,
    Homothet,
    Point,
    PointSet,
    Side,
    classify_edge,
    locate_point,
    perimeter_distance_clockwise,
    slope_class,
    smallest_homothet_scale,
    validate_general_position,
)
from rectdel.geometry import format_rational, parse_rational

UNIT = Homothet(Point.of(0, 0), Fraction(1), Fraction(1))


def P(x, y):
    return Point.of(x, y)


class TestRational:
    def test_parses_decimal_and_quotient(self):
        assert parse_rational("0.6") == Fraction(3, 5)
        assert parse_rational("3/5") == Fraction(3, 5)
        assert parse_rational("-2") == Fraction(-2)

    def test_refuses_floats(self):
        with pytest.raises(TypeError):
            parse_rational(0.6)

    def test_format_round_trip(self):
        for s in ("3/5", "-7/3", "4", "0"):
            assert format_rational(parse_rational(s)) == s


class TestAspect:
    def test_canonicalizes_wide_rectangles(self):
        a = AspectRatio.parse("1/2")
        assert a.A == Fraction(2) and a.transposed
        b = AspectRatio.parse("2")
        assert b.A == Fraction(2) and not b.transposed
        assert str(a) == "1/2"

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            AspectRatio.parse("0")


class TestValidation:
    def test_ok_set(self):
        assert validate_general_position(PointSet.of([(0, 0), (1, 2), (3, 1)])).ok

    def test_shared_x(self):
        rep = validate_general_position(PointSet.of([(0, 0), (0, 5)]))
        assert rep.shared_x == [(0, 1)] and not rep.ok

    def test_collinear_triple(self):
        rep = validate_general_position(PointSet.of([(0, 0), ("1.5", "0.5"), (3, 1)]))
        assert (0, 1, 2) in rep.collinear

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            validate_general_position(PointSet([]))


class TestSmallestScale:
    def test_examples(self):
        one = AspectRatio.parse("1")
        two = AspectRatio.parse("2")
        four = AspectRatio.parse("4")
        assert smallest_homothet_scale(P(0, 0), P(3, 1), one) == 3
        assert smallest_homothet_scale(P(0, 0), P(1, 4), two) == 2
        assert smallest_homothet_scale(P(0, 0), P("0.5", "0.5"), four) == Fraction(1, 2)

    def test_degenerate_pair(self):
        with pytest.raises(ValueError):
            smallest_homothet_scale(P(1, 1), P(1, 1), AspectRatio.parse("1"))

    @given(ax=st.fractions(-5, 5, max_denominator=40), ay=st.fractions(-5, 5, max_denominator=40),
           bx=st.fractions(-5, 5, max_denominator=40), by=st.fractions(-5, 5, max_denominator=40),
           lam=st.fractions(Fraction(1, 7), 9, max_denominator=12))
    @settings(max_examples=60, deadline=None)
    def test_symmetric_and_scales_linearly(self, ax, ay, bx, by, lam):
        if (ax, ay) == (bx, by):
            return
        a, b = Point(ax, ay), Point(bx, by)
        asp = AspectRatio.parse("3/2")
        s = smallest_homothet_scale(a, b, asp)
        assert s == smallest_homothet_scale(b, a, asp)
        a2 = Point(lam * ax, lam * ay)
        b2 = Point(lam * bx, lam * by)
        assert smallest_homothet_scale(a2, b2, asp) == lam * s


class TestLocate:
    def test_spec_examples(self):
        assert locate_point(P("0.5", "0.5"), UNIT) == ("inside", None)
        assert locate_point(P(0, "0.3"), UNIT) == ("on", Side.W)
        assert locate_point(P(2, 0), UNIT) == ("outside", None)

    def test_corner_reports_vertical_side_first(self):
        assert locate_point(P(0, 1), UNIT) == ("on", Side.W)
        assert locate_point(P(1, 1), UNIT) == ("on", Side.E)

    @given(x=st.fractions(-2, 3, max_denominator=24), y=st.fractions(-2, 3, max_denominator=24))
    @settings(max_examples=80, deadline=None)
    def test_trichotomy(self, x, y):
        kind, side = locate_point(Point(x, y), UNIT)
        assert kind in ("inside", "on", "outside")
        if kind == "on":
            if side == Side.W:
                assert x == 0
            elif side == Side.E:
                assert x == 1
            elif side == Side.N:
                assert y == 1
            else:
                assert y == 0


class TestClassifyEdge:
    def test_spec_examples(self):
        assert classify_edge(P(0, "0.5"), P("0.5", 1), UNIT) == (Side.W, Side.N)
        assert classify_edge(P("0.4", 1), P(1, "0.2"), UNIT) == (Side.N, Side.E)

    def test_not_incident(self):
        with pytest.raises(ValueError, match="not incident"):
            classify_edge(P("0.5", "0.5"), P(1, 1), UNIT)


class TestSlope:
    def test_examples(self):
        assert slope_class(P(0, 0), P(2, 1), Fraction(1)) == "gentle"
        assert slope_class(P(0, 0), P(1, 2), Fraction(1)) == "steep"
        assert slope_class(P(0, 0), P(1, 2), Fraction(2)) == "gentle"

    def test_vertical_rejected(self):
        with pytest.raises(ValueError):
            slope_class(P(0, 0), P(0, 1), Fraction(1))

    @given(px=st.fractions(-3, 3, max_denominator=20), py=st.fractions(-3, 3, max_denominator=20),
           qx=st.fractions(-3, 3, max_denominator=20), qy=st.fractions(-3, 3, max_denominator=20))
    @settings(max_examples=60, deadline=None)
    def test_symmetry(self, px, py, qx, qy):
        if px == qx:
            return
        p, q = Point(px, py), Point(qx, qy)
        assert slope_class(p, q, Fraction(3, 2)) == slope_class(q, p, Fraction(3, 2))


def _boundary_point(h: Homothet, side_idx, offset: Fraction) -> Point:
    if side_idx == 0:
        return Point(h.x_min, h.y_min + offset * h.height)
    if side_idx == 1:
        return Point(h.x_min + offset * h.width, h.y_max)
    if side_idx == 2:
        return Point(h.x_max, h.y_min + offset * h.height)
    return Point(h.x_min + offset * h.width, h.y_min)


class TestPerimeter:
    def test_spec_examples(self):
        assert perimeter_distance_clockwise(UNIT, P("0.5", 1), P("0.5", 0)) == 2
        assert perimeter_distance_clockwise(UNIT, P(1, "0.5"), P("0.2", 0)) == Fraction(13, 10)
        big = Homothet(Point.of(0, 0), Fraction(2), Fraction(1))
        assert perimeter_distance_clockwise(big, P(0, 1), P(1, 2)) == 2

    def test_same_point_is_zero(self):
        assert perimeter_distance_clockwise(UNIT, P(0, "0.3"), P(0, "0.3")) == 0

    def test_off_boundary_rejected(self):
        with pytest.raises(ValueError):
            perimeter_distance_clockwise(UNIT, P("0.5", "0.5"), P(0, 0))

    @given(s1=st.integers(0, 3), o1=st.fractions(0, 1, max_denominator=16),
           s2=st.integers(0, 3), o2=st.fractions(0, 1, max_denominator=16),
           scale=st.fractions(Fraction(1, 3), 4, max_denominator=8),
           aspect=st.fractions(1, 3, max_denominator=6))
    @settings(max_examples=100, deadline=None)
    def test_complement_sums_to_perimeter(self, s1, o1, s2, o2, scale, aspect):
        h = Homothet(Point.of(-1, 2), scale, aspect)
        a = _boundary_point(h, s1, o1)
        b = _boundary_point(h, s2, o2)
        if a == b:
            assert perimeter_distance_clockwise(h, a, b) == 0
        else:
            total = (perimeter_distance_clockwise(h, a, b)
                     + perimeter_distance_clockwise(h, b, a))
            assert total == h.perimeter == 2 * h.scale * (1 + h.aspect)
