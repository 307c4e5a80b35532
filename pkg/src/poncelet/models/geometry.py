"""Geometric primitives: points, lines, circles, central conics, triangles."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from typing import Self

from ..exceptions import InputValidationError, InvalidConicError

__all__ = [
    "CentralConicStd",
    "CircleSpec",
    "ConicKind",
    "ConicParams",
    "ORIGIN",
    "Line",
    "Point",
    "Triangle",
]


class ConicKind(StrEnum):
    """Kind of a nondegenerate central conic."""

    ellipse = "ellipse"
    hyperbola = "hyperbola"


@dataclass(frozen=True, slots=True)
class Point:
    """A point of the Euclidean plane."""

    x: float
    """Abscissa."""

    y: float
    """Ordinate."""

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            msg = f"Point coordinates must be finite, not ({self.x}, {self.y})"
            raise InputValidationError(msg)

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(k * self.x, k * self.y)

    __rmul__ = __mul__

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def dot(self, other: Point) -> float:
        """Return the dot product with another point viewed as a vector."""
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        """Return the z component of the cross product."""
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        """Return the distance from the origin."""
        return math.hypot(self.x, self.y)

    def distance(self, other: Point) -> float:
        """Return the distance to another point."""
        return math.hypot(self.x - other.x, self.y - other.y)

    def angle(self) -> float:
        """Return the polar angle in :math:`[0, 2\\pi)`."""
        return math.atan2(self.y, self.x) % math.tau

    def rotate(self, theta: float) -> Point:
        """Rotate counterclockwise about the origin."""
        cos, sin = math.cos(theta), math.sin(theta)
        return Point(cos * self.x - sin * self.y, sin * self.x + cos * self.y)


ORIGIN = Point(0.0, 0.0)
"""The origin, center of every standard-position conic."""


@dataclass(frozen=True, slots=True)
class Line:
    """The line :math:`ux + vy + w = 0`.

    Instances built with `from_coefficients` are normalized so that
    :math:`u^2 + v^2 = 1`.
    """

    u: float
    v: float
    w: float

    @classmethod
    def from_coefficients(cls, u: float, v: float, w: float) -> Self:
        """Build a normalized line.

        Raises
        ------
        ValueError
            Both ``u`` and ``v`` are zero.
        """
        scale = math.hypot(u, v)
        if scale == 0:
            msg = "Line coefficients u and v are both zero"
            raise ValueError(msg)
        return cls(u / scale, v / scale, w / scale)

    @classmethod
    def through(cls, p: Point, q: Point) -> Self:
        """Build the normalized line through two distinct points."""
        u = q.y - p.y
        v = p.x - q.x
        return cls.from_coefficients(u, v, -(u * p.x + v * p.y))

    @property
    def normal(self) -> Point:
        return Point(self.u, self.v)

    @property
    def direction(self) -> Point:
        return Point(-self.v, self.u)

    def evaluate(self, p: Point) -> float:
        """Return :math:`u x + v y + w`, the signed distance if normalized."""
        return self.u * p.x + self.v * p.y + self.w

    def same_as(self, other: Line, tol: float) -> bool:
        """Whether both lines coincide up to sign."""
        plus = max(
            abs(self.u - other.u), abs(self.v - other.v), abs(self.w - other.w)
        )
        minus = max(
            abs(self.u + other.u), abs(self.v + other.v), abs(self.w + other.w)
        )
        return min(plus, minus) < tol


@dataclass(frozen=True, slots=True)
class CircleSpec:
    """A circle.

    A radius of zero describes a point circle, which only appears as the
    degenerate orthocenter circle of the focus scenario.
    """

    center: Point
    """Center of the circle."""

    radius: float
    """Radius, never negative."""

    def __post_init__(self) -> None:
        if not self.radius >= 0 or not math.isfinite(self.radius):
            msg = f"Circle radius must be non-negative, not {self.radius}"
            raise ValueError(msg)

    def residual(self, p: Point) -> float:
        """Return :math:`|P - C|^2 - r^2`."""
        d = p - self.center
        return d.dot(d) - self.radius**2

    def point_at(self, theta: float) -> Point:
        """Return the point at angle ``theta`` measured from the center."""
        return Point(
            self.center.x + self.radius * math.cos(theta),
            self.center.y + self.radius * math.sin(theta),
        )


@dataclass(frozen=True, slots=True)
class CentralConicStd:
    """Central conic :math:`x^2/\\alpha + y^2/\\beta = 1` in standard position.

    Raises
    ------
    InvalidConicError
        Raised if ``alpha`` is not positive or ``beta`` is zero.
    """

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            msg = f"alpha must be positive, not {self.alpha}"
            raise InvalidConicError(msg)
        if self.beta == 0 or not math.isfinite(self.beta):
            msg = f"beta must be finite and nonzero, not {self.beta}"
            raise InvalidConicError(msg)

    @property
    def kind(self) -> ConicKind:
        """Ellipse for positive ``beta`` and hyperbola for negative."""
        return ConicKind.ellipse if self.beta > 0 else ConicKind.hyperbola

    @property
    def is_ellipse(self) -> bool:
        return self.beta > 0

    @property
    def epsilon(self) -> int:
        """Sign of ``beta``: 1 for an ellipse and -1 for a hyperbola."""
        return 1 if self.beta > 0 else -1

    @property
    def focal_on_x(self) -> bool:
        """Whether the foci lie on the x-axis."""
        return self.alpha >= self.beta

    @property
    def linear_eccentricity(self) -> float:
        """Distance from the center to a focus."""
        return math.sqrt(abs(self.alpha - self.beta))

    @property
    def b_squared(self) -> float:
        """Square of the semi-minor (or conjugate) axis, for focal axis x."""
        return abs(self.beta)


@dataclass(frozen=True, slots=True)
class ConicParams:
    """Metric parameters of a central conic."""

    kind: ConicKind
    """Ellipse or hyperbola."""

    a: float
    """Semi-major or transverse semi-axis."""

    b: float
    """Semi-minor or conjugate semi-axis."""

    c: float
    """Linear eccentricity."""

    e: float
    """Eccentricity."""

    foci: tuple[Point, Point]
    """The two foci, positive coordinate first."""

    focal_axis_on_x: bool = True
    """Whether the foci lie on the x-axis rather than the y-axis."""


@dataclass(frozen=True, slots=True)
class Triangle:
    """A triangle given by its three vertices."""

    a: Point
    b: Point
    c: Point

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    @property
    def centroid(self) -> Point:
        return Point(
            (self.a.x + self.b.x + self.c.x) / 3,
            (self.a.y + self.b.y + self.c.y) / 3,
        )

    @property
    def determinant(self) -> float:
        """Determinant of the homogeneous vertex matrix, twice the area."""
        return (self.b - self.a).cross(self.c - self.a)

    @property
    def signed_area(self) -> float:
        """Area, positive when the vertices run counterclockwise."""
        return self.determinant / 2

    @property
    def area(self) -> float:
        return abs(self.determinant) / 2

    @property
    def scale(self) -> float:
        """Length of the longest side, used to scale tolerances."""
        return max(
            self.a.distance(self.b),
            self.b.distance(self.c),
            self.c.distance(self.a),
        )

    @property
    def squared_sides(self) -> tuple[float, float, float]:
        """Squared lengths of the sides opposite ``a``, ``b``, ``c``."""
        bc = self.c - self.b
        ca = self.a - self.c
        ab = self.b - self.a
        return (bc.dot(bc), ca.dot(ca), ab.dot(ab))

    def counterclockwise(self) -> Triangle:
        """Return the triangle with ``a`` kept and orientation made CCW."""
        if self.determinant < 0:
            return Triangle(self.a, self.c, self.b)
        return self

    def map(self, transform: Callable[[Point], Point]) -> Triangle:
        """Apply a point transformation to each vertex."""
        return Triangle(
            transform(self.a), transform(self.b), transform(self.c)
        )
