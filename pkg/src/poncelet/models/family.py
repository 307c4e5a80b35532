"""Models for Poncelet triangle families."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum

from pydantic import BaseModel, Field

from .geometry import CentralConicStd, CircleSpec, ConicKind, Point, Triangle

__all__ = [
    "AxisRelations",
    "FamilyClassification",
    "FamilyKind",
    "FamilySample",
    "PonceletConfig",
    "Scenario",
    "TriangleKind",
]


class Scenario(StrEnum):
    """Position of the circumcenter relative to the conic."""

    center = "center"
    """Circumcenter at the center of the conic."""

    focus = "focus"
    """Circumcenter at one of the foci."""

    general = "general"
    """Any other admissible position."""


class TriangleKind(StrEnum):
    """Classification of a single triangle by its largest angle."""

    acute = "acute"
    right = "right"
    obtuse = "obtuse"


class FamilyKind(StrEnum):
    """Whether every triangle of a family is acute or every one obtuse."""

    all_acute = "all_acute"
    all_obtuse = "all_obtuse"


@dataclass(frozen=True, slots=True)
class PonceletConfig:
    """A circle and a central conic forming a 3-Poncelet pair.

    Build these with the factories in `poncelet.services.family`, which
    validate the admissibility criterion. The distances ``d_plus`` and
    ``d_minus`` are derived from the circle center and the foci.
    """

    circle: CircleSpec
    """Common circumcircle of the family."""

    conic: CentralConicStd
    """Common inconic of the family, focal axis on x."""

    scenario: Scenario
    """Position of the circumcenter."""

    @property
    def radius(self) -> float:
        return self.circle.radius

    @property
    def c(self) -> float:
        """Linear eccentricity of the conic."""
        return self.conic.linear_eccentricity

    @property
    def d_plus(self) -> float:
        """Distance from the circumcenter to the focus :math:`(c, 0)`."""
        return self.circle.center.distance(Point(self.c, 0.0))

    @property
    def d_minus(self) -> float:
        """Distance from the circumcenter to the focus :math:`(-c, 0)`."""
        return self.circle.center.distance(Point(-self.c, 0.0))

    @property
    def focus_sign(self) -> float:
        """Sign of the x coordinate of the circumcenter.

        In the focus scenario the circumcenter sits on the focus
        :math:`(s c, 0)`; every closed form mirrors through this sign.
        """
        return -1.0 if self.circle.center.x < 0 else 1.0


@dataclass(frozen=True, slots=True)
class FamilySample:
    """One triangle of a Poncelet family."""

    theta: float
    """Angle of vertex ``a`` on the circumcircle, in :math:`[0, 2\\pi)`."""

    triangle: Triangle
    """The triangle, vertices counterclockwise."""

    closure_residual: float
    """Tangency residual of the closing side ``bc``."""


@dataclass(frozen=True, slots=True)
class FamilyClassification:
    """Classification of a family and its admissible vertex arcs."""

    conic_kind: ConicKind
    """Kind of the common inconic."""

    triangle_kind: FamilyKind | None
    """Acute or obtuse family, `None` for general position."""

    admissible_arcs: list[tuple[float, float]] = field(default_factory=list)
    """Arcs ``(lo, hi)`` of admissible vertex angles.

    ``lo`` lies in :math:`[0, 2\\pi)` and ``hi`` may exceed :math:`2\\pi`
    for an arc that wraps through angle zero. Endpoints are excluded.
    """

    boundary_points: list[Point] = field(default_factory=list)
    """Points common to the circle and the conic."""

    right_triangle_count_bound: int = 0
    """Upper bound on the number of right triangles in the family."""

    def contains(self, theta: float) -> bool:
        """Whether a vertex angle lies on an admissible arc."""
        return any(
            0 < (theta - lo) % math.tau < hi - lo or hi - lo >= math.tau
            for lo, hi in self.admissible_arcs
        )

    @property
    def total_length(self) -> float:
        return sum(hi - lo for lo, hi in self.admissible_arcs)


class AxisRelations(BaseModel):
    """Circumradius and orthocenter distance recovered from the axes."""

    radius_from_axes: float = Field(
        ...,
        title="Circumradius from axes",
        description="a ± b in the center scenario and 2a in the focus one",
    )

    oh: float = Field(
        ...,
        title="Circumcenter to orthocenter distance",
        description="c²/R in the center scenario and 2c in the focus one",
        ge=0,
    )
