"""Tests for conics inscribed in a triangle."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from poncelet.exceptions import DegenerateTriangleError
from poncelet.models.family import PonceletConfig, Scenario
from poncelet.models.geometry import ConicKind, Line, Point, Triangle
from poncelet.models.inconics import PlacedConic
from poncelet.services.centers import center_set
from poncelet.services.family import family_sweep, triangle_at
from poncelet.services.inconics import (
    conic_with_foci_o_h,
    inellipse_centered_at_circumcenter,
    steiner_ellipses,
    to_standard_frame,
)

from ..support.geometry import assert_point

RIGHT = Triangle(Point(1.0, 0.0), Point(-1.0, 0.0), Point(0.0, 1.0))
"""Right triangle inscribed in the unit circle."""

coordinates = st.floats(min_value=-10.0, max_value=10.0)
points = st.builds(Point, coordinates, coordinates)


def assert_inscribed(t: Triangle, conic: PlacedConic) -> None:
    """Check that every side of a triangle is tangent to a conic."""
    for p, q in ((t.a, t.b), (t.b, t.c), (t.c, t.a)):
        assert conic.tangency(Line.through(p, q)) == pytest.approx(
            0.0, abs=1e-9
        )


def test_inellipse_of_family_triangle(c1: PonceletConfig) -> None:
    t = triangle_at(c1, math.pi / 2).triangle
    conic = inellipse_centered_at_circumcenter(t)
    assert_point(conic.center, (0.0, 0.0))
    assert conic.semi_axes == pytest.approx((1.25, 0.75))
    assert math.sin(conic.rotation) == pytest.approx(0.0, abs=1e-9)
    assert_inscribed(t, conic)


def test_inellipse_moved(acute_triangle: Triangle) -> None:
    conic = inellipse_centered_at_circumcenter(acute_triangle)
    centers = center_set(acute_triangle)
    assert conic.center == centers.circumcenter
    radius = centers.circumradius
    c2 = radius * centers.oh
    assert conic.semi_axes[0] == pytest.approx((radius**2 + c2) / (2 * radius))
    assert_inscribed(acute_triangle, conic)


def test_inellipse_right() -> None:
    with pytest.raises(DegenerateTriangleError):
        inellipse_centered_at_circumcenter(RIGHT)


def test_conic_with_foci_o_h(
    acute_triangle: Triangle, obtuse_triangle: Triangle
) -> None:
    conic = conic_with_foci_o_h(obtuse_triangle)
    assert conic.base.kind == ConicKind.hyperbola
    assert_point(conic.center, (15 / 28, 39 / 28))
    centers = center_set(obtuse_triangle)
    foci = set(conic.foci)
    assert any(f.distance(centers.circumcenter) < 1e-9 for f in foci)
    assert any(f.distance(centers.orthocenter) < 1e-9 for f in foci)
    assert_inscribed(obtuse_triangle, conic)

    conic = conic_with_foci_o_h(acute_triangle)
    assert conic.base.kind == ConicKind.ellipse
    assert conic.semi_axes[0] == pytest.approx(
        center_set(acute_triangle).circumradius / 2
    )
    assert_inscribed(acute_triangle, conic)

    with pytest.raises(DegenerateTriangleError):
        conic_with_foci_o_h(RIGHT)


def test_conic_with_foci_o_h_equilateral() -> None:
    t = Triangle(
        Point(0.0, 1.0),
        Point(-math.sqrt(3) / 2, -0.5),
        Point(math.sqrt(3) / 2, -0.5),
    )
    conic = conic_with_foci_o_h(t)
    assert conic.semi_axes == pytest.approx((0.5, 0.5))


def test_steiner_ellipses() -> None:
    t = Triangle(Point(1.5, 2.0), Point(1.0, 1.5), Point(2.0, 1.0))
    ellipses = steiner_ellipses(t)
    assert_point(ellipses.inellipse.center, (1.5, 1.5))
    assert_point(ellipses.circumellipse.center, (1.5, 1.5))
    inner = ellipses.inellipse.semi_axes
    outer = ellipses.circumellipse.semi_axes
    assert outer[0] * outer[1] == pytest.approx(4 * inner[0] * inner[1])
    for vertex in t.vertices:
        assert ellipses.circumellipse.residual(vertex) == pytest.approx(
            0.0, abs=1e-9
        )
    assert_inscribed(t, ellipses.inellipse)
    image = t.map(ellipses.map)
    assert_point(image.a, (0.0, 0.0))
    assert_point(image.b, (1.0, 0.0))
    assert_point(image.c, (0.5, math.sqrt(3) / 2))


def test_steiner_collinear() -> None:
    t = Triangle(Point(0.0, 0.0), Point(1.0, 1.0), Point(3.0, 3.0))
    with pytest.raises(DegenerateTriangleError):
        steiner_ellipses(t)


def test_to_standard_frame(c1: PonceletConfig) -> None:
    rotation = 0.7
    shift = Point(1.0, -2.0)
    t = triangle_at(c1, 1.1).triangle.map(lambda p: p.rotate(rotation) + shift)
    conic = inellipse_centered_at_circumcenter(t)
    config, local = to_standard_frame(t, conic)
    assert config.scenario == Scenario.center
    assert config.radius == pytest.approx(2.0)
    assert config.c == pytest.approx(1.0)
    for vertex in local.vertices:
        assert config.circle.residual(vertex) == pytest.approx(0, abs=1e-9)


def assert_steiner(t: Triangle) -> None:
    """Check the Steiner inellipse touches each side at its midpoint."""
    ellipses = steiner_ellipses(t)
    for p, q in ((t.a, t.b), (t.b, t.c), (t.c, t.a)):
        midpoint = (p + q) * 0.5
        touch = ellipses.inellipse.contact_point(Line.through(p, q))
        assert touch.distance(midpoint) < 1e-10 * t.scale
        assert ellipses.inellipse.residual(midpoint) == pytest.approx(
            0.0, abs=1e-10
        )
    for vertex in t.vertices:
        assert ellipses.circumellipse.residual(vertex) == pytest.approx(
            0.0, abs=1e-8
        )


def test_inellipse_round_trip(c2: PonceletConfig) -> None:
    for sample in family_sweep(c2, 60):
        conic = inellipse_centered_at_circumcenter(sample.triangle)
        assert_point(conic.center, (0.0, 0.0), abs_tol=1e-9)
        assert conic.base.alpha == pytest.approx(c2.conic.alpha, rel=1e-8)
        assert conic.base.beta == pytest.approx(c2.conic.beta, rel=1e-8)
        assert math.sin(conic.rotation) == pytest.approx(0.0, abs=1e-7)
        config, local = to_standard_frame(sample.triangle, conic)
        assert config.scenario == Scenario.center
        assert config.radius == pytest.approx(0.7)
        assert config.c == pytest.approx(1.0)
        for vertex in local.vertices:
            assert config.circle.residual(vertex) == pytest.approx(
                0.0, abs=1e-9
            )


@pytest.mark.parametrize("name", ["f1", "f2"])
def test_conic_with_foci_o_h_round_trip(
    name: str, request: pytest.FixtureRequest
) -> None:
    config: PonceletConfig = request.getfixturevalue(name)
    for sample in family_sweep(config, 60):
        conic = conic_with_foci_o_h(sample.triangle)
        assert conic.base.kind == config.conic.kind
        assert_point(conic.center, (0.0, 0.0), abs_tol=1e-9)
        assert conic.base.alpha == pytest.approx(
            config.conic.alpha, rel=1e-8
        )
        assert conic.base.beta == pytest.approx(
            config.conic.beta, rel=1e-8
        )
        assert math.sin(conic.rotation) == pytest.approx(0.0, abs=1e-9)


def test_steiner_random_triangles() -> None:
    rng = np.random.default_rng(20241017)
    checked = 0
    for coordinates in rng.uniform(-5.0, 5.0, size=(100, 3, 2)):
        t = Triangle(*(Point(float(x), float(y)) for x, y in coordinates))
        if t.area < 0.025 * t.scale**2:
            continue
        assert_steiner(t)
        checked += 1
    assert checked > 50


@given(a=points, b=points, c=points)
def test_steiner_midpoints(a: Point, b: Point, c: Point) -> None:
    t = Triangle(a, b, c)
    assume(t.scale > 0.1)
    assume(t.area > 0.025 * t.scale**2)
    assert_steiner(t)
