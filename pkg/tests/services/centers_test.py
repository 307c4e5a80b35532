"""Tests for triangle centers and derived triangles."""

from __future__ import annotations

import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from poncelet.exceptions import (
    CollapseError,
    DegenerateTriangleError,
    PolarCircleUndefinedError,
)
from poncelet.models.family import TriangleKind
from poncelet.models.geometry import Point, Triangle
from poncelet.services.centers import (
    altitude_foot,
    altitude_orthocenter,
    anticomplementary_triangle,
    center_set,
    euler_identity_residual,
    homothety_image,
    medial_triangle,
    orthic_triangle,
    polar_circle,
    tangential_triangle,
    triangle_kind,
)

from ..support.geometry import assert_point, assert_triangle

SCALENE = Triangle(Point(2.0, 3.0), Point(1.0, 1.0), Point(4.0, -2.0))
"""Obtuse triangle with hand-computed centers."""

RIGHT = Triangle(Point(1.0, 0.0), Point(-1.0, 0.0), Point(0.0, 1.0))
"""Right triangle inscribed in the unit circle."""

coordinates = st.floats(min_value=-10.0, max_value=10.0)
points = st.builds(Point, coordinates, coordinates)


def test_center_set() -> None:
    centers = center_set(SCALENE)
    assert_point(centers.circumcenter, (23 / 6, 5 / 6))
    assert_point(centers.orthocenter, (-2 / 3, 1 / 3))
    assert_point(centers.centroid, (7 / 3, 2 / 3))
    assert_point(centers.nine_point_center, (19 / 12, 7 / 12))
    assert centers.circumradius == pytest.approx(math.sqrt(290 / 36))
    assert centers.oh == pytest.approx(math.sqrt(20.5))
    assert euler_identity_residual(SCALENE) == pytest.approx(0, abs=1e-12)


def test_altitude_orthocenter(acute_triangle: Triangle) -> None:
    for t in (SCALENE, acute_triangle):
        h = altitude_orthocenter(t)
        expected = center_set(t).orthocenter
        assert_point(h, (expected.x, expected.y), abs_tol=1e-12)


def test_center_set_collinear() -> None:
    t = Triangle(Point(0.0, 0.0), Point(1.0, 1.0), Point(2.0, 2.0))
    with pytest.raises(DegenerateTriangleError):
        center_set(t)


def test_triangle_kind(
    acute_triangle: Triangle, obtuse_triangle: Triangle
) -> None:
    assert triangle_kind(acute_triangle) == TriangleKind.acute
    assert triangle_kind(obtuse_triangle) == TriangleKind.obtuse
    assert triangle_kind(SCALENE) == TriangleKind.obtuse
    assert triangle_kind(RIGHT) == TriangleKind.right


def test_orthic_triangle(acute_triangle: Triangle) -> None:
    assert_point(
        altitude_foot(Point(0.0, 1.0), Point(-1.0, 0.0), Point(1.0, 0.0)),
        (0.0, 0.0),
    )
    orthic = orthic_triangle(acute_triangle)
    assert_point(orthic.c, (0.6, 0.0))
    with pytest.raises(DegenerateTriangleError):
        orthic_triangle(RIGHT)


def test_homothety() -> None:
    t = Triangle(Point(0.0, 0.0), Point(2.0, 0.0), Point(0.0, 2.0))
    medial = medial_triangle(t)
    assert_triangle(medial, ((1.0, 1.0), (0.0, 1.0), (1.0, 0.0)))
    back = anticomplementary_triangle(medial)
    assert_triangle(back, ((0.0, 0.0), (2.0, 0.0), (0.0, 2.0)))
    with pytest.raises(CollapseError):
        homothety_image(t, Point(0.0, 0.0), 0.0)


def test_tangential_triangle() -> None:
    t = Triangle(
        Point(0.0, 1.0),
        Point(-math.sqrt(3) / 2, -0.5),
        Point(math.sqrt(3) / 2, -0.5),
    )
    tangential = tangential_triangle(t)
    assert_triangle(
        tangential,
        ((0.0, -2.0), (math.sqrt(3), 1.0), (-math.sqrt(3), 1.0)),
    )
    with pytest.raises(DegenerateTriangleError):
        tangential_triangle(RIGHT)


def test_polar_circle(acute_triangle: Triangle) -> None:
    circle = polar_circle(SCALENE)
    assert_point(circle.center, (-2 / 3, 1 / 3))
    assert circle.radius == pytest.approx(math.sqrt((20.5 - 290 / 36) / 2))
    with pytest.raises(PolarCircleUndefinedError):
        polar_circle(acute_triangle)
    with pytest.raises(PolarCircleUndefinedError):
        polar_circle(RIGHT)


@given(a=points, b=points, c=points)
def test_euler_identity(a: Point, b: Point, c: Point) -> None:
    t = Triangle(a, b, c)
    assume(t.scale > 0.1)
    assume(t.area > 0.025 * t.scale**2)
    centers = center_set(t)
    scale = 9 * centers.circumradius**2 + sum(t.squared_sides)
    assert euler_identity_residual(t) == pytest.approx(0.0, abs=1e-9 * scale)
    h = altitude_orthocenter(t)
    assert h.distance(centers.orthocenter) < 1e-9 * centers.circumradius
