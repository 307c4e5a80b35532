"""Special conics inscribed in an arbitrary triangle."""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..dependencies.config import resolve_tolerance
from ..exceptions import DegenerateTriangleError, VerificationError
from ..models.family import PonceletConfig, TriangleKind
from ..models.geometry import (
    CentralConicStd,
    CircleSpec,
    Line,
    Point,
    Triangle,
)
from ..models.inconics import AffineMap, PlacedConic, SteinerEllipses
from .centers import center_set, triangle_kind
from .family import config_from_circle

__all__ = [
    "conic_with_foci_o_h",
    "inellipse_centered_at_circumcenter",
    "steiner_ellipses",
    "to_standard_frame",
]

_SQRT3 = math.sqrt(3)


def inellipse_centered_at_circumcenter(
    t: Triangle, *, tol: float | None = None
) -> PlacedConic:
    """Return the ellipse inscribed in a triangle and centered at its
    circumcenter.

    With :math:`c = \\sqrt{R |OH|}` the semi-axes are :math:`(R^2 + c^2)/2R`
    and :math:`|R^2 - c^2|/2R`. The focal axis is the direction of the
    square root of the discriminant of the quadratic whose roots are the
    foci, as complex numbers about the circumcenter.

    Raises
    ------
    DegenerateTriangleError
        Raised for a right triangle, whose inellipse would be a segment.
    VerificationError
        Raised if a side is not tangent to the result.
    """
    tol = resolve_tolerance(tol)
    _require_oblique(t, tol)
    t = t.counterclockwise()
    centers = center_set(t, tol=tol)
    o = centers.circumcenter
    radius = centers.circumradius
    c = math.sqrt(radius * centers.oh)

    if c < tol * radius:
        rotation = 0.0
    else:
        rotation = _focal_direction(t.map(lambda p: p - o), tol)
    base = CentralConicStd(
        ((radius**2 + c * c) / (2 * radius)) ** 2,
        ((radius**2 - c * c) / (2 * radius)) ** 2,
    )
    conic = PlacedConic(base=base, center=o, rotation=rotation)
    _check_inscribed(t, conic, tol * radius**2)
    return conic


def conic_with_foci_o_h(
    t: Triangle, *, tol: float | None = None
) -> PlacedConic:
    """Return the conic inscribed in a triangle with foci at the
    circumcenter and the orthocenter.

    It has center :math:`(O + H)/2`, transverse semi-axis :math:`R/2`, and
    is an ellipse for an acute triangle and a hyperbola for an obtuse one.
    An equilateral triangle gives its incircle.

    Raises
    ------
    DegenerateTriangleError
        Raised for a right triangle.
    VerificationError
        Raised if a side is not tangent to the result.
    """
    tol = resolve_tolerance(tol)
    _require_oblique(t, tol)
    centers = center_set(t, tol=tol)
    o = centers.circumcenter
    h = centers.orthocenter
    radius = centers.circumradius
    c = centers.oh / 2
    if centers.oh < tol * radius:
        rotation = 0.0
    else:
        rotation = _reduce_axis((h - o).angle())
    base = CentralConicStd(radius**2 / 4, radius**2 / 4 - c * c)
    conic = PlacedConic(base=base, center=(o + h) * 0.5, rotation=rotation)
    _check_inscribed(t, conic, tol * radius**2)
    return conic


def steiner_ellipses(
    t: Triangle, *, tol: float | None = None
) -> SteinerEllipses:
    """Return the Steiner inellipse and circumellipse of a triangle.

    Both are preimages, under the affine map sending the triangle to the
    equilateral triangle :math:`(0, 0), (1, 0), (1/2, \\sqrt3/2)`, of its
    incircle and circumcircle. Both are centered at the centroid.

    Raises
    ------
    DegenerateTriangleError
        Raised if the vertices are collinear.
    VerificationError
        Raised if the inellipse misses a side midpoint or the circumellipse
        misses a vertex.
    """
    tol = resolve_tolerance(tol)
    a, b, c = t.vertices
    g = t.centroid
    d = t.determinant
    scale = t.scale
    if abs(d) < tol * scale**2:
        msg = "Triangle vertices are collinear"
        raise DegenerateTriangleError(msg)

    m11 = -1.5 * (g.y - c.y) / d
    m12 = 1.5 * (g.x - c.x) / d
    m21 = _SQRT3 / 2 * (a.y - b.y) / d
    m22 = -_SQRT3 / 2 * (a.x - b.x) / d
    forward = AffineMap(
        m11,
        m12,
        m21,
        m22,
        Point(-(m11 * a.x + m12 * a.y), -(m21 * a.x + m22 * a.y)),
    )
    inverse_linear = np.array(
        [
            [b.x - a.x, -_SQRT3 * (g.x - c.x)],
            [b.y - a.y, -_SQRT3 * (g.y - c.y)],
        ]
    )
    inellipse = _image_of_circle(inverse_linear, g, _SQRT3 / 6, tol)
    circumellipse = _image_of_circle(inverse_linear, g, _SQRT3 / 3, tol)

    for side in ((b, c), (c, a), (a, b)):
        line = Line.through(*side)
        midpoint = (side[0] + side[1]) * 0.5
        touch = inellipse.contact_point(line)
        if touch.distance(midpoint) > tol * scale:
            msg = "Steiner inellipse does not touch a side at its midpoint"
            raise VerificationError(msg)
    for vertex in t.vertices:
        if abs(circumellipse.residual(vertex)) > tol:
            msg = "Steiner circumellipse misses a vertex"
            raise VerificationError(msg)
    return SteinerEllipses(
        inellipse=inellipse, circumellipse=circumellipse, map=forward
    )


def to_standard_frame(
    t: Triangle, conic: PlacedConic, *, tol: float | None = None
) -> tuple[PonceletConfig, Triangle]:
    """Move a triangle and an inscribed conic into the conic frame.

    Returns
    -------
    tuple of PonceletConfig and Triangle
        The family of the circumcircle and the conic in standard position,
        and the triangle expressed in the same frame.

    Raises
    ------
    InfeasibleConfigError
        Raised if the pair fails the 3-Poncelet criterion.
    """
    tol = resolve_tolerance(tol)
    centers = center_set(t, tol=tol)
    circle = CircleSpec(
        conic.to_local(centers.circumcenter), centers.circumradius
    )
    config = config_from_circle(circle, conic.base, tol=tol)
    return config, t.map(conic.to_local)


def _focal_direction(t: Triangle, tol: float) -> float:
    """Angle of the focal axis of the inellipse centered at the origin."""
    a, b, c = t.vertices
    d = (b - a).cross(c - a)
    ell = 2 * b.cross(c) - d
    m = -2 * a.cross(c) - d
    n = 2 * a.cross(b) - d
    za, zb, zc = (complex(p.x, p.y) for p in t.vertices)
    alpha = -d
    beta = ell * (zb + zc) + m * (zc + za) + n * (za + zb)
    gamma = ell * zb * zc + m * zc * za + n * za * zb
    w = cmath.sqrt(beta * beta - 4 * alpha * gamma) / alpha
    if abs(w.real) <= tol * abs(w):
        return math.pi / 2
    return math.atan(w.imag / w.real)


def _image_of_circle(
    linear: np.ndarray, center: Point, radius: float, tol: float
) -> PlacedConic:
    u, sigma, _ = np.linalg.svd(linear)
    major, minor = radius * float(sigma[0]), radius * float(sigma[1])
    if major - minor <= tol * major:
        rotation = 0.0
    else:
        rotation = _reduce_axis(math.atan2(u[1, 0], u[0, 0]))
    return PlacedConic(
        base=CentralConicStd(major**2, minor**2),
        center=center,
        rotation=rotation,
    )


def _check_inscribed(t: Triangle, conic: PlacedConic, limit: float) -> None:
    for p, q in ((t.a, t.b), (t.b, t.c), (t.c, t.a)):
        residual = conic.tangency(Line.through(p, q))
        if abs(residual) > limit:
            msg = f"Side is not tangent to the conic ({residual:.3g})"
            raise VerificationError(msg)


def _require_oblique(t: Triangle, tol: float) -> None:
    if triangle_kind(t, tol=tol) == TriangleKind.right:
        msg = "No central conic of this kind is inscribed in a right triangle"
        raise DegenerateTriangleError(msg)


def _reduce_axis(angle: float) -> float:
    """Reduce an axis direction to :math:`(-\\pi/2, \\pi/2]`."""
    angle %= math.pi
    return angle - math.pi if angle > math.pi / 2 else angle
