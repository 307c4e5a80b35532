"""Triangle centers and derived triangles."""

from __future__ import annotations

import math

import numpy as np

from ..dependencies.config import resolve_tolerance
from ..exceptions import (
    CollapseError,
    DegenerateTriangleError,
    PolarCircleUndefinedError,
    VerificationError,
)
from ..models.centers import CenterSet, PolarCircle
from ..models.family import TriangleKind
from ..models.geometry import Point, Triangle

__all__ = [
    "altitude_foot",
    "altitude_orthocenter",
    "anticomplementary_triangle",
    "center_set",
    "euler_identity_residual",
    "homothety_image",
    "medial_triangle",
    "orthic_triangle",
    "polar_circle",
    "tangential_triangle",
    "triangle_kind",
]


def center_set(t: Triangle, *, tol: float | None = None) -> CenterSet:
    """Compute the centers of a triangle on its Euler line.

    The circumcenter comes from the intersection of two perpendicular
    bisectors, the orthocenter from :math:`H = 3G - 2O`.

    Raises
    ------
    DegenerateTriangleError
        Raised if the vertices are collinear.
    VerificationError
        Raised if the sides violate :math:`\\sum |AB|^2 = 9R^2 - |OH|^2`.
    """
    tol = resolve_tolerance(tol)
    centers = _centers(t, tol)
    residual = _euler_residual(t, centers)
    if abs(residual) > tol * centers.circumradius**2:
        msg = f"Sum of squared sides misses 9R² - |OH|² by {residual:.3g}"
        raise VerificationError(msg)
    return centers


def euler_identity_residual(
    t: Triangle, *, tol: float | None = None
) -> float:
    """Return :math:`|AB|^2 + |BC|^2 + |CA|^2 - (9R^2 - |OH|^2)`."""
    tol = resolve_tolerance(tol)
    return _euler_residual(t, _centers(t, tol))


def altitude_orthocenter(t: Triangle) -> Point:
    """Intersect two altitudes, independently of the Euler line."""
    a, b, c = t.vertices
    bc = c - b
    ca = a - c
    matrix = np.array([[bc.x, bc.y], [ca.x, ca.y]])
    rhs = np.array([a.dot(bc), b.dot(ca)])
    x, y = np.linalg.solve(matrix, rhs)
    return Point(float(x), float(y))


def triangle_kind(t: Triangle, *, tol: float | None = None) -> TriangleKind:
    """Classify a triangle by comparing its largest squared side with the
    sum of the other two.
    """
    tol = resolve_tolerance(tol)
    small, middle, large = sorted(t.squared_sides)
    excess = large - (small + middle)
    if abs(excess) <= tol * large:
        return TriangleKind.right
    return TriangleKind.obtuse if excess > 0 else TriangleKind.acute


def altitude_foot(p: Point, q: Point, r: Point) -> Point:
    """Return the foot of the perpendicular from ``p`` to the line ``qr``."""
    dx = q.x - r.x
    dy = q.y - r.y
    den = dx * dx + dy * dy
    return Point(
        (dx * (p.x * dx + p.y * dy) - dy * (q.x * r.y - r.x * q.y)) / den,
        (dy * (p.y * dy + p.x * dx) - dx * (q.y * r.x - r.y * q.x)) / den,
    )


def orthic_triangle(t: Triangle, *, tol: float | None = None) -> Triangle:
    """Return the feet of the altitudes from ``a``, ``b``, and ``c``.

    Raises
    ------
    DegenerateTriangleError
        Raised if the triangle is right, which collapses the orthic
        triangle.
    """
    if triangle_kind(t, tol=tol) == TriangleKind.right:
        msg = "The orthic triangle of a right triangle is degenerate"
        raise DegenerateTriangleError(msg)
    a, b, c = t.vertices
    return Triangle(
        altitude_foot(a, b, c), altitude_foot(b, c, a), altitude_foot(c, a, b)
    )


def homothety_image(t: Triangle, center: Point, k: float) -> Triangle:
    """Apply the homothety :math:`X \\mapsto P + k(X - P)`.

    Raises
    ------
    CollapseError
        Raised if ``k`` is zero.
    """
    if k == 0:
        msg = "A homothety with ratio 0 collapses the triangle"
        raise CollapseError(msg)
    return t.map(lambda x: center + (x - center) * k)


def medial_triangle(t: Triangle) -> Triangle:
    """Return the triangle of the side midpoints."""
    return homothety_image(t, t.centroid, -0.5)


def anticomplementary_triangle(t: Triangle) -> Triangle:
    """Return the triangle whose medial triangle is ``t``."""
    return homothety_image(t, t.centroid, -2.0)


def tangential_triangle(
    t: Triangle, *, tol: float | None = None
) -> Triangle:
    """Return the triangle bounded by the circumcircle tangents at the
    vertices.

    Vertex ``a`` of the result is opposite the tangent at ``t.a``.

    Raises
    ------
    DegenerateTriangleError
        Raised if two tangents are parallel, as for a right triangle.
    """
    tol = resolve_tolerance(tol)
    centers = _centers(t, tol)
    o = centers.circumcenter
    limit = tol * centers.circumradius**2

    def meet(p: Point, q: Point) -> Point:
        m, n = p - o, q - o
        det = m.cross(n)
        if abs(det) < limit:
            msg = "Tangents at two vertices are parallel"
            raise DegenerateTriangleError(msg)
        sm, sn = m.dot(p), n.dot(q)
        return Point((sm * n.y - sn * m.y) / det, (m.x * sn - n.x * sm) / det)

    a, b, c = t.vertices
    return Triangle(meet(b, c), meet(c, a), meet(a, b))


def polar_circle(t: Triangle, *, tol: float | None = None) -> PolarCircle:
    """Return the polar circle of an obtuse triangle.

    Raises
    ------
    PolarCircleUndefinedError
        Raised if the triangle is not obtuse.
    VerificationError
        Raised if the three altitude products disagree or differ from
        :math:`\\tfrac12 |R^2 - |OH|^2|`.
    """
    tol = resolve_tolerance(tol)
    if triangle_kind(t, tol=tol) != TriangleKind.obtuse:
        msg = "Only an obtuse triangle has a real polar circle"
        raise PolarCircleUndefinedError(msg)
    centers = center_set(t, tol=tol)
    h = centers.orthocenter
    feet = orthic_triangle(t, tol=tol).vertices
    products = [
        x.distance(h) * h.distance(foot)
        for x, foot in zip(t.vertices, feet, strict=True)
    ]
    r2 = centers.circumradius**2
    if max(products) - min(products) > tol * r2:
        msg = "Altitude segment products disagree"
        raise VerificationError(msg)
    square = sum(products) / 3
    closed = abs(r2 - centers.oh**2) / 2
    if abs(square - closed) > tol * r2:
        msg = f"Polar radius² {square:.12g} differs from {closed:.12g}"
        raise VerificationError(msg)
    return PolarCircle(center=h, radius=math.sqrt(square))


def _centers(t: Triangle, tol: float) -> CenterSet:
    a = t.a
    b = t.b - a
    c = t.c - a
    d = 2 * b.cross(c)
    if abs(d) < tol * t.scale**2:
        msg = "Triangle vertices are collinear"
        raise DegenerateTriangleError(msg)
    b2 = b.dot(b)
    c2 = c.dot(c)
    offset = Point((c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d)
    o = a + offset
    g = t.centroid
    h = g * 3 - o * 2
    return CenterSet(
        circumcenter=o,
        circumradius=offset.norm(),
        orthocenter=h,
        centroid=g,
        nine_point_center=(o + h) * 0.5,
        de_longchamps=o * 2 - h,
    )


def _euler_residual(t: Triangle, centers: CenterSet) -> float:
    return sum(t.squared_sides) - (
        9 * centers.circumradius**2 - centers.oh**2
    )
