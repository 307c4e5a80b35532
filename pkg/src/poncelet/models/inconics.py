"""Models for conics placed anywhere in the plane."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import CentralConicStd, Line, Point

__all__ = ["AffineMap", "PlacedConic", "SteinerEllipses"]


@dataclass(frozen=True, slots=True)
class PlacedConic:
    """A standard central conic rotated, then translated.

    Parameters
    ----------
    base
        The conic in its own frame.
    center
        Image of the origin of the conic frame.
    rotation
        Counterclockwise angle of the conic x-axis, in
        :math:`(-\\pi/2, \\pi/2]`.
    """

    base: CentralConicStd
    center: Point
    rotation: float

    def to_local(self, p: Point) -> Point:
        """Express a point in the conic frame."""
        return (p - self.center).rotate(-self.rotation)

    def to_global(self, p: Point) -> Point:
        """Express a point of the conic frame in the plane."""
        return self.center + p.rotate(self.rotation)

    def line_to_local(self, line: Line) -> Line:
        """Express a line in the conic frame."""
        cos, sin = math.cos(self.rotation), math.sin(self.rotation)
        return Line(
            line.u * cos + line.v * sin,
            -line.u * sin + line.v * cos,
            line.u * self.center.x + line.v * self.center.y + line.w,
        )

    def residual(self, p: Point) -> float:
        """Return the conic equation residual at a point."""
        q = self.to_local(p)
        return q.x**2 / self.base.alpha + q.y**2 / self.base.beta - 1

    def tangency(self, line: Line) -> float:
        """Return the tangency residual of a normalized line."""
        local = self.line_to_local(line)
        return (
            self.base.alpha * local.u**2
            + self.base.beta * local.v**2
            - local.w**2
        )

    def contact_point(self, line: Line) -> Point:
        """Return the point where a tangent line touches the conic."""
        local = self.line_to_local(line)
        return self.to_global(
            Point(
                -self.base.alpha * local.u / local.w,
                -self.base.beta * local.v / local.w,
            )
        )

    @property
    def foci(self) -> tuple[Point, Point]:
        """The two foci, the one on the positive local axis first."""
        c = self.base.linear_eccentricity
        if self.base.focal_on_x:
            local = Point(c, 0.0)
        else:
            local = Point(0.0, c)
        return (self.to_global(local), self.to_global(-local))

    @property
    def semi_axes(self) -> tuple[float, float]:
        """Semi-axes along the local x and y directions."""
        return (math.sqrt(self.base.alpha), math.sqrt(abs(self.base.beta)))


@dataclass(frozen=True, slots=True)
class AffineMap:
    """The affine map :math:`X \\mapsto MX + t`."""

    m11: float
    m12: float
    m21: float
    m22: float
    t: Point

    @property
    def determinant(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __call__(self, p: Point) -> Point:
        return Point(
            self.m11 * p.x + self.m12 * p.y + self.t.x,
            self.m21 * p.x + self.m22 * p.y + self.t.y,
        )

    def inverse(self) -> AffineMap:
        """Return the inverse map.

        Raises
        ------
        ZeroDivisionError
            The linear part is singular.
        """
        det = self.determinant
        i11, i12 = self.m22 / det, -self.m12 / det
        i21, i22 = -self.m21 / det, self.m11 / det
        return AffineMap(
            i11,
            i12,
            i21,
            i22,
            Point(
                -(i11 * self.t.x + i12 * self.t.y),
                -(i21 * self.t.x + i22 * self.t.y),
            ),
        )


@dataclass(frozen=True, slots=True)
class SteinerEllipses:
    """Steiner inellipse and circumellipse of a triangle."""

    inellipse: PlacedConic
    """Ellipse touching the sides at their midpoints."""

    circumellipse: PlacedConic
    """Ellipse through the vertices, centered at the centroid."""

    map: AffineMap
    """Affine map sending the triangle to the reference equilateral one."""
