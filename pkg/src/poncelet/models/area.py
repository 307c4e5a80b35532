"""Models for the area of the triangles of a family."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum

from pydantic import BaseModel, Field

from .family import Scenario
from .geometry import Point

__all__ = [
    "AreaProfile",
    "Extremum",
    "OracleResult",
    "PedalIntersections",
    "Side",
]


class Side(StrEnum):
    """A side of a triangle, named by its endpoints in order."""

    ab = "ab"
    bc = "bc"
    ca = "ca"


@dataclass(frozen=True, slots=True)
class Extremum:
    """An extremal triangle, identified by the abscissa of one vertex."""

    x: float
    area: float


@dataclass(frozen=True, slots=True)
class AreaProfile:
    """Area of the family triangles as a function of a vertex abscissa."""

    scenario: Scenario
    """Center or focus scenario."""

    domain: tuple[float, float]
    """Closed interval of abscissas reached by the vertex."""

    f: Callable[[float], float]
    """Area as a function of the abscissa."""

    critical_points: list[float]
    """Interior abscissas at which the derivative of ``f`` vanishes."""

    max: Extremum
    """Largest area."""

    min: Extremum | None
    """Smallest area, `None` when the infimum is a degenerate triangle."""

    oracle: OracleResult | None = field(default=None, compare=False)
    """Brute-force optimization the closed forms were checked against."""


class OracleResult(BaseModel):
    """Outcome of the grid and golden-section search on the area."""

    max_x: float
    max_area: float
    min_x: float | None = None
    min_area: float | None = None
    agrees: bool = Field(
        ..., description="Whether the closed forms match within tolerance"
    )


@dataclass(frozen=True, slots=True)
class PedalIntersections:
    """Points common to the circumcircle and the pedal curve of the conic."""

    points: list[Point] = field(default_factory=list)
