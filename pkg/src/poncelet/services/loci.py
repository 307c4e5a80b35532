"""Curves traced by points attached to Poncelet families."""

from __future__ import annotations

import math

import numpy as np

from ..constants import MIN_LOCUS_POINTS
from ..dependencies.config import resolve_tolerance
from ..exceptions import (
    DegenerateTriangleError,
    InputValidationError,
    UnsupportedScenarioError,
    VerificationError,
)
from ..models.family import PonceletConfig, Scenario
from ..models.geometry import Point
from ..models.scene import CassiniVariant, Polyline, SceneDescription
from .centers import orthic_triangle
from .family import admissible_arcs, triangle_at
from .invariants import tangential_family_objects

__all__ = [
    "cassini_locus",
    "orthic_vertex_locus",
    "tangential_vertex_locus",
]


def orthic_vertex_locus(
    config: PonceletConfig, n: int, *, tol: float | None = None
) -> Polyline:
    """Sample the curve traced by the foot of the altitude from the
    vertex at angle :math:`\\theta`.

    For a center family the foot is
    :math:`(f(\\theta), g(\\theta))` with

    .. math::

       f = -\\frac{R\\cos\\theta\\,(R^2 + c^2)
           ((R^2 - c^2)^2 - 4R^2c^2\\sin^2\\theta)}
           {2R^2((R^2 + c^2)^2 - 4R^2c^2\\cos^2\\theta)},\\qquad
       g = -\\frac{R\\sin\\theta\\,(R^2 - c^2)
           ((R^2 + c^2)^2 + 4R^2c^2\\cos^2\\theta)}
           {2R^2((R^2 + c^2)^2 - 4R^2c^2\\cos^2\\theta)}.

    Every point is checked against the foot computed from the constructed
    triangle.

    Parameters
    ----------
    config
        A center family.
    n
        Number of equispaced angles. For an obtuse family only the angles
        on admissible arcs are kept and the curve is left open.
    tol
        Relative tolerance, or `None` for the configured one.

    Raises
    ------
    UnsupportedScenarioError
        Raised for a focus or general family.
    VerificationError
        Raised if a locus point differs from the constructed foot.
    """
    tol = resolve_tolerance(tol)
    if config.scenario != Scenario.center:
        raise UnsupportedScenarioError(
            "orthic_vertex_locus", config.scenario
        )
    _check_count(n)
    radius = config.radius
    r2 = radius * radius
    c2 = config.c**2
    classification = admissible_arcs(config, tol=tol)
    acute = radius > config.c

    points: list[Point] = []
    for theta in np.linspace(0.0, math.tau, n, endpoint=False):
        if not classification.contains(theta):
            continue
        cos, sin = math.cos(theta), math.sin(theta)
        denominator = 2 * r2 * ((r2 + c2) ** 2 - 4 * r2 * c2 * cos * cos)
        point = Point(
            -radius * cos * (r2 + c2) * ((r2 - c2) ** 2 - 4 * r2 * c2 * sin**2)
            / denominator,
            -radius * sin * (r2 - c2) * ((r2 + c2) ** 2 + 4 * r2 * c2 * cos**2)
            / denominator,
        )
        try:
            sample = triangle_at(config, theta, tol=tol)
        except DegenerateTriangleError:
            continue
        foot = orthic_triangle(sample.triangle, tol=tol).a
        if point.distance(foot) > tol * radius:
            msg = f"Orthic locus misses the altitude foot at {theta:.12g}"
            raise VerificationError(msg)
        points.append(point)
    return Polyline(points, closed=acute)


def cassini_locus(
    radius: float,
    c: float,
    n: int,
    *,
    variant: CassiniVariant = CassiniVariant.cassini,
    tol: float | None = None,
) -> list[Polyline]:
    """Sample the locus of circumcenters for a fixed conic.

    Points are sampled in polar form at ``n`` equispaced angles. The
    Cassini oval :math:`(x^2 + y^2)^2 = R^4 - c^4 + 2c^2(x^2 - y^2)` has
    :math:`r^2 = c^2\\cos 2\\phi \\pm \\sqrt{c^4\\cos^2 2\\phi + R^4 - c^4}`,
    a lemniscate when :math:`R = c` and two ovals when :math:`R < c`. The
    major-axis variant
    :math:`(x^2 + y^2)^2 - 2R^2(x^2 + y^2) - 2c^2(x^2 - y^2) + 2R^2c^2 + c^4
    = 0` has :math:`r^2 = P \\pm \\sqrt{P^2 - 2R^2c^2 - c^4}` with
    :math:`P = R^2 + c^2\\cos 2\\phi`.

    Returns
    -------
    list of Polyline
        One closed curve per connected piece. Angles with no real point
        are skipped.

    Raises
    ------
    InputValidationError
        Raised for fewer than 16 angles or invalid sizes.
    VerificationError
        Raised if a point misses the implicit equation.
    """
    tol = resolve_tolerance(tol)
    _check_count(n)
    if not radius > 0 or not c >= 0:
        msg = f"Need R > 0 and c >= 0, not R = {radius}, c = {c}"
        raise InputValidationError(msg)

    phi = np.linspace(0.0, math.tau, n, endpoint=False)
    cos2 = np.cos(2 * phi)
    c2 = c * c
    r2 = radius * radius
    if variant == CassiniVariant.cassini:
        middle = c2 * cos2
        spread = middle**2 + r2 * r2 - c2 * c2
    else:
        middle = r2 + c2 * cos2
        spread = middle**2 - 2 * r2 * c2 - c2 * c2
    root = np.sqrt(np.maximum(spread, 0.0))
    real = spread >= 0
    outer = np.where(real, middle + root, -1.0)
    inner = np.where(real, middle - root, -1.0)

    curves: list[list[Point]] = []
    for run in _runs(outer > 0):
        points = [_polar(phi[i], outer[i]) for i in run]
        if len(run) < n:
            points.extend(
                _polar(phi[i], inner[i])
                for i in reversed(run)
                if inner[i] > 0
            )
        curves.append(points)
    if (outer > 0).all():
        curves.append(
            [_polar(phi[i], inner[i]) for i in range(n) if inner[i] > 0]
        )

    scale = max(radius, c)
    polylines = []
    for points in curves:
        for p in points:
            residual = _implicit(variant, p, r2, c2)
            if abs(residual) > tol * scale**4:
                msg = f"Point ({p.x:.12g}, {p.y:.12g}) is off the locus"
                raise VerificationError(msg)
        if len(points) >= 2:
            polylines.append(Polyline(points, closed=True))
    return polylines


def tangential_vertex_locus(
    config: PonceletConfig, *, tol: float | None = None
) -> SceneDescription:
    """Return the curve carrying the vertices of the tangential triangles.

    It is a circle for a focus family and an ellipse centered at the
    origin for a center family.

    Raises
    ------
    DegenerateConicError
        Raised if the tangential triangles are unbounded.
    UnsupportedScenarioError
        Raised for the general scenario.
    """
    objects = tangential_family_objects(config, tol=tol)
    if objects.circumcircle is not None:
        return SceneDescription(circles=[objects.circumcircle])
    if objects.circum_ellipse is None:
        raise UnsupportedScenarioError(
            "tangential_vertex_locus", config.scenario
        )
    return SceneDescription(conics=[objects.circum_ellipse])


def _check_count(n: int) -> None:
    if n < MIN_LOCUS_POINTS:
        msg = f"A locus needs at least {MIN_LOCUS_POINTS} points, not {n}"
        raise InputValidationError(msg)


def _implicit(
    variant: CassiniVariant, p: Point, r2: float, c2: float
) -> float:
    s = p.dot(p)
    d = p.x * p.x - p.y * p.y
    if variant == CassiniVariant.cassini:
        return s * s - r2 * r2 + c2 * c2 - 2 * c2 * d
    return s * s - 2 * r2 * s - 2 * c2 * d + 2 * r2 * c2 + c2 * c2


def _polar(phi: float, r_squared: float) -> Point:
    r = math.sqrt(r_squared)
    return Point(r * math.cos(phi), r * math.sin(phi))


def _runs(mask: np.ndarray) -> list[list[int]]:
    """Split the indices where ``mask`` holds into cyclic runs."""
    n = len(mask)
    if mask.all():
        return [list(range(n))]
    start = int(np.argmin(mask))
    runs: list[list[int]] = []
    current: list[int] = []
    for offset in range(1, n + 1):
        i = (start + offset) % n
        if mask[i]:
            current.append(i)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)
    return runs
