"""Models for sequences of triangles and of Poncelet pairs."""

from __future__ import annotations

from dataclasses import dataclass

from pydantic import BaseModel, Field

from .geometry import Point, Triangle

__all__ = ["FociPair", "SequenceState", "TowerLevel"]


class SequenceState(BaseModel):
    """One focus-scenario Poncelet pair of the iterated sequence.

    The circumcircle has center :math:`(c, 0)` and the conic is
    :math:`x^2/\\alpha + y^2/\\beta = 1`. The stored ``c`` may be
    negative, in which case the circumcenter sits on the focus
    :math:`(-|c|, 0)`.
    """

    step: int = Field(..., ge=1, description="One-based index")

    c: float = Field(..., description="Signed abscissa of the circumcenter")

    radius: float = Field(..., gt=0, description="Circumradius")

    alpha: float = Field(..., description="R²/4")

    beta: float = Field(..., description="R²/4 - c²")

    @property
    def x(self) -> float:
        """Normalized parameter :math:`c / R`."""
        return self.c / self.radius

    @property
    def beta_sign(self) -> int:
        """1 for an ellipse and -1 for a hyperbola."""
        return 1 if self.beta > 0 else -1


@dataclass(frozen=True, slots=True)
class FociPair:
    """The two foci of a conic."""

    f1: Point
    f2: Point


@dataclass(frozen=True, slots=True)
class TowerLevel:
    """One level of a homothetic tower."""

    level: int
    """Exponent of the ratio, starting at 1."""

    ratio: float
    """Total ratio of the homothety about the centroid."""

    triangle: Triangle
    """Image of the base triangle."""

    foci: FociPair
    """Foci of the conic inscribed in the image triangle."""
