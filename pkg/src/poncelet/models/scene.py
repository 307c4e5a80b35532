"""Models for figures written to SVG."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

from .geometry import CircleSpec, Point, Triangle
from .inconics import PlacedConic

__all__ = ["CassiniVariant", "Label", "Polyline", "SceneDescription"]


class CassiniVariant(StrEnum):
    """Locus of circumcenters admitting a family with a fixed conic."""

    cassini = "cassini"
    """Circles of radius :math:`R` whose orthocenter circle is congruent,
    :math:`R^2 = d_+ d_-`, a Cassini oval.
    """

    major_axis = "major_axis"
    """Circles whose radius equals the major axis of the conic."""


@dataclass(frozen=True, slots=True)
class Polyline:
    """A sampled curve."""

    points: list[Point]
    """At least two points."""

    closed: bool = False
    """Whether the last point connects back to the first."""

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            msg = "A polyline needs at least two points"
            raise ValueError(msg)


@dataclass(frozen=True, slots=True)
class Label:
    """Text anchored at a point."""

    at: Point
    text: str


@dataclass(slots=True)
class SceneDescription:
    """Everything drawn in one figure, in drawing order per element kind."""

    circles: list[CircleSpec] = field(default_factory=list)
    conics: list[PlacedConic] = field(default_factory=list)
    triangles: list[Triangle] = field(default_factory=list)
    polylines: list[Polyline] = field(default_factory=list)
    labels: list[Label] = field(default_factory=list)

    def points(self) -> list[Point]:
        """Return the points that determine the extent of the scene."""
        result: list[Point] = []
        for circle in self.circles:
            r = circle.radius
            result.append(circle.center + Point(r, r))
            result.append(circle.center - Point(r, r))
        for conic in self.conics:
            if conic.base.is_ellipse:
                a, b = conic.semi_axes
                extent = max(a, b)
                result.append(conic.center + Point(extent, extent))
                result.append(conic.center - Point(extent, extent))
            else:
                result.append(conic.center)
        for triangle in self.triangles:
            result.extend(triangle.vertices)
        for polyline in self.polylines:
            result.extend(polyline.points)
        result.extend(label.at for label in self.labels)
        return result
