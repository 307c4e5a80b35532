"""Tangency primitives for central conics in standard position.

Everything here is expressed through the Joachimsthal form
:math:`S_{PQ} = x_P x_Q/\\alpha + y_P y_Q/\\beta - 1` of the conic.
"""

from __future__ import annotations

import math

from ..dependencies.config import resolve_tolerance
from ..exceptions import GeometricInconsistencyError, NoPolarError
from ..models.geometry import (
    CentralConicStd,
    CircleSpec,
    ConicKind,
    ConicParams,
    Line,
    Point,
)

__all__ = [
    "circle_line_second_intersection",
    "conic_from_params",
    "conic_params",
    "conic_residual",
    "joachimsthal",
    "line_conic_tangency",
    "polar_line",
    "tangent_points",
    "tangents_from_point",
]


def conic_params(conic: CentralConicStd) -> ConicParams:
    """Compute the metric parameters of a central conic.

    Parameters
    ----------
    conic
        The conic. An ellipse with ``alpha < beta`` has its major axis on y
        and is reported with foci on y.

    Returns
    -------
    ConicParams
        Semi-axes, linear eccentricity, eccentricity, and foci.
    """
    if conic.beta < 0:
        a = math.sqrt(conic.alpha)
        b = math.sqrt(-conic.beta)
        c = math.sqrt(conic.alpha - conic.beta)
        foci = (Point(c, 0.0), Point(-c, 0.0))
        return ConicParams(ConicKind.hyperbola, a, b, c, c / a, foci)

    on_x = conic.alpha >= conic.beta
    major, minor = (
        (conic.alpha, conic.beta) if on_x else (conic.beta, conic.alpha)
    )
    a = math.sqrt(major)
    b = math.sqrt(minor)
    c = math.sqrt(major - minor)
    if on_x:
        foci = (Point(c, 0.0), Point(-c, 0.0))
    else:
        foci = (Point(0.0, c), Point(0.0, -c))
    return ConicParams(
        ConicKind.ellipse, a, b, c, c / a, foci, focal_axis_on_x=on_x
    )


def conic_from_params(params: ConicParams) -> CentralConicStd:
    """Rebuild the standard conic from its metric parameters."""
    a2 = params.a**2
    b2 = params.b**2
    if params.kind == ConicKind.hyperbola:
        return CentralConicStd(a2, -b2)
    if params.focal_axis_on_x:
        return CentralConicStd(a2, b2)
    return CentralConicStd(b2, a2)


def joachimsthal(conic: CentralConicStd, p: Point, q: Point) -> float:
    """Evaluate the Joachimsthal form :math:`S_{PQ}`."""
    return p.x * q.x / conic.alpha + p.y * q.y / conic.beta - 1


def conic_residual(conic: CentralConicStd, p: Point) -> float:
    """Evaluate :math:`S_{PP}`, zero exactly on the conic."""
    return joachimsthal(conic, p, p)


def polar_line(
    conic: CentralConicStd, p: Point, *, tol: float | None = None
) -> Line:
    """Return the polar of a point, the tangent at it if on the conic.

    Raises
    ------
    NoPolarError
        Raised if the point is the center of the conic.
    """
    tol = resolve_tolerance(tol)
    if p.norm() <= tol * _scale(conic):
        msg = "The center of a central conic has no polar line"
        raise NoPolarError(msg)
    return Line.from_coefficients(p.x / conic.alpha, p.y / conic.beta, -1.0)


def tangent_points(
    conic: CentralConicStd, p: Point, *, tol: float | None = None
) -> list[Point]:
    """Return the contact points of the tangents through a point.

    The points are sorted by polar angle in :math:`[0, 2\\pi)`, matching
    the order of `tangents_from_point`.
    """
    tol = resolve_tolerance(tol)
    scale = _scale(conic)
    if p.norm() <= tol * scale:
        return []
    if abs(conic_residual(conic, p)) < tol:
        return [p]

    # Contact points lie on the polar u0 x + v0 y = 1 and on the conic.
    u0 = p.x / conic.alpha
    v0 = p.y / conic.beta
    n2 = u0 * u0 + v0 * v0
    base = Point(u0 / n2, v0 / n2)
    d = Point(-v0, u0)
    qd = d.x**2 / conic.alpha + d.y**2 / conic.beta
    bd = base.x * d.x / conic.alpha + base.y * d.y / conic.beta
    sb = conic_residual(conic, base)
    qscale = d.x**2 / conic.alpha + d.y**2 / abs(conic.beta)

    if abs(qd) < tol * qscale:
        # Polar parallel to an asymptote: one tangent is at infinity.
        if bd == 0:
            return []
        return [base + d * (-sb / (2 * bd))]

    disc = bd * bd - qd * sb
    if abs(disc) <= tol * max(bd * bd, abs(qd * sb)):
        return [base + d * (-bd / qd)]
    if disc < 0:
        return []
    root = math.sqrt(disc)
    points = [base + d * ((-bd - root) / qd), base + d * ((-bd + root) / qd)]
    return sorted(points, key=Point.angle)


def tangents_from_point(
    conic: CentralConicStd, p: Point, *, tol: float | None = None
) -> list[Line]:
    """Return the tangent lines to the conic through a point.

    Parameters
    ----------
    conic
        The conic.
    p
        The point.
    tol
        Relative tolerance, or `None` for the configured one.

    Returns
    -------
    list of Line
        Zero, one, or two normalized lines sorted by the polar angle of
        their contact points. Exterior points of an ellipse give two, points
        on the conic give one, interior points give none. For a hyperbola
        the count follows from the real contact points on either branch.
    """
    tol = resolve_tolerance(tol)
    return [
        Line.from_coefficients(t.x / conic.alpha, t.y / conic.beta, -1.0)
        for t in tangent_points(conic, p, tol=tol)
    ]


def line_conic_tangency(conic: CentralConicStd, line: Line) -> float:
    """Return the tangency residual :math:`\\alpha u^2 + \\beta v^2 - w^2`.

    The line must be normalized for residuals to be comparable.
    """
    return conic.alpha * line.u**2 + conic.beta * line.v**2 - line.w**2


def circle_line_second_intersection(
    circle: CircleSpec, line: Line, p: Point, *, tol: float | None = None
) -> Point:
    """Return the second intersection of a line through a circle point.

    Parameters
    ----------
    circle
        The circle.
    line
        A normalized line through ``p``.
    p
        A point on both the circle and the line.
    tol
        Relative tolerance, or `None` for the configured one.

    Returns
    -------
    Point
        The other intersection, ``p`` itself when the line is tangent.

    Raises
    ------
    GeometricInconsistencyError
        Raised if ``p`` is not on the circle or not on the line.
    """
    tol = resolve_tolerance(tol)
    r = circle.radius
    if abs(circle.residual(p)) > tol * r * r:
        msg = "Chord start point is not on the circle"
        raise GeometricInconsistencyError(msg)
    if abs(line.evaluate(p)) > tol * r:
        msg = "Chord start point is not on the line"
        raise GeometricInconsistencyError(msg)
    d = line.direction
    t = -2 * (p - circle.center).dot(d)
    return p + d * t


def _scale(conic: CentralConicStd) -> float:
    return math.sqrt(max(conic.alpha, abs(conic.beta)))
