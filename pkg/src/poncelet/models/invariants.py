"""Models for scalar triangle invariants and sweep reports."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from pydantic import BaseModel, Field

from .geometry import CircleSpec
from .inconics import PlacedConic

__all__ = [
    "InvariantRecord",
    "InvariantReport",
    "TangentialObjects",
    "Verdict",
]


class Verdict(StrEnum):
    """Outcome of an invariance test."""

    invariant = "invariant"
    not_invariant = "not_invariant"


class InvariantRecord(BaseModel):
    """Scalar invariants of one triangle.

    Fields that are only defined for acute or for obtuse triangles are
    `None` otherwise, as are all orthic fields of a right triangle.
    """

    sin2_sum: float = Field(
        ..., description="Sum of the squared sines of the angles"
    )

    cos_product: float = Field(
        ..., description="Product of the cosines of the angles"
    )

    ah_bh_ch: float = Field(
        ...,
        description="Product of the distances from the vertices to H",
        ge=0,
    )

    side_sq_sum: float = Field(
        ..., description="Sum of the squared side lengths", ge=0
    )

    oh_distance: float = Field(
        ..., description="Distance from circumcenter to orthocenter", ge=0
    )

    area_ratio_orthic: float | None = Field(
        None, description="Area of the triangle over that of its orthic"
    )

    orthic_angle_expr: float | None = Field(
        None,
        description=(
            "Signed sum of the cosines of the orthic angles, the one at the"
            " foot from the obtuse vertex counted negatively"
        ),
    )

    orthic_inradius: float | None = Field(
        None, description="Inradius of the orthic triangle (acute only)"
    )

    orthic_incenter_x: float | None = Field(
        None, description="Incenter abscissa of the orthic (acute only)"
    )

    orthic_incenter_y: float | None = Field(
        None, description="Incenter ordinate of the orthic (acute only)"
    )

    polar_radius: float | None = Field(
        None, description="Radius of the polar circle (obtuse only)"
    )

    polar_center_x: float | None = Field(
        None, description="Polar circle center abscissa (obtuse only)"
    )

    polar_center_y: float | None = Field(
        None, description="Polar circle center ordinate (obtuse only)"
    )


class InvariantReport(BaseModel):
    """Spread of one invariant across a family sweep."""

    name: str = Field(..., description="Field of `InvariantRecord`")

    sample_count: int = Field(..., ge=1)

    mean: float

    max_abs_deviation: float = Field(..., ge=0)

    expected: float | None = Field(
        None, description="Closed-form value, when one is known"
    )

    verdict: Verdict


@dataclass(frozen=True, slots=True)
class TangentialObjects:
    """Fixed objects carrying the vertices of the tangential triangles."""

    tangential_circumradius: float
    """Common circumradius of the tangential triangles."""

    circumcircle: CircleSpec | None = None
    """Locus circle of the vertices in the focus scenario."""

    circum_ellipse: PlacedConic | None = None
    """Locus ellipse of the vertices in the center scenario."""
