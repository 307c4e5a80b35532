"""Models for triangle centers."""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Point

__all__ = ["CenterSet", "PolarCircle"]


@dataclass(frozen=True, slots=True)
class CenterSet:
    """Classical centers of a triangle, all on its Euler line."""

    circumcenter: Point
    """Center of the circumcircle."""

    circumradius: float
    """Radius of the circumcircle."""

    orthocenter: Point
    """Common point of the altitudes."""

    centroid: Point
    """Mean of the vertices."""

    nine_point_center: Point
    """Midpoint of the circumcenter and the orthocenter."""

    de_longchamps: Point
    """Reflection of the orthocenter in the circumcenter."""

    @property
    def oh(self) -> float:
        """Distance from the circumcenter to the orthocenter."""
        return self.circumcenter.distance(self.orthocenter)


@dataclass(frozen=True, slots=True)
class PolarCircle:
    """Polar circle of an obtuse triangle."""

    center: Point
    """The orthocenter."""

    radius: float
    """Square root of the common product of the altitude segments."""
