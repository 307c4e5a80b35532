"""Scalar invariants of the triangles of a Poncelet family.

Per-triangle values are computed from raw vertex geometry, with angles from
the law of cosines. Closed forms for the center and focus scenarios are
computed separately, so that sweeps can compare the two.
"""

from __future__ import annotations

import math
import statistics

import structlog
from structlog.stdlib import BoundLogger

from ..constants import LOGGER_NAME
from ..dependencies.config import config_dependency, resolve_tolerance
from ..exceptions import (
    DegenerateConicError,
    InputValidationError,
    InsufficientSamplesError,
    UnsupportedScenarioError,
    VerificationError,
)
from ..models.family import PonceletConfig, Scenario, TriangleKind
from ..models.geometry import CentralConicStd, CircleSpec, Point, Triangle
from ..models.inconics import PlacedConic
from ..models.invariants import (
    InvariantRecord,
    InvariantReport,
    TangentialObjects,
    Verdict,
)
from .centers import center_set, orthic_triangle, polar_circle, triangle_kind
from .conics import conic_params
from .family import family_sweep

__all__ = [
    "expected_invariants",
    "failed_reports",
    "invariants_of",
    "sweep",
    "tangential_family_objects",
]

_FOCUS_ONLY = frozenset(
    {
        "orthic_incenter_x",
        "orthic_incenter_y",
        "polar_center_x",
        "polar_center_y",
    }
)
"""Fields that are constant across a family only in the focus scenario."""


def invariants_of(t: Triangle, *, tol: float | None = None) -> InvariantRecord:
    """Evaluate the scalar invariants of one triangle.

    Orthic fields are left unset for a right triangle. The orthic inradius
    and incenter are only set for an acute triangle, the polar circle only
    for an obtuse one.
    """
    tol = resolve_tolerance(tol)
    squares = t.squared_sides
    sides = [math.sqrt(s) for s in squares]
    cosines = _cosines(squares, sides)
    centers = center_set(t, tol=tol)
    h = centers.orthocenter
    kind = triangle_kind(t, tol=tol)

    fields: dict[str, float | None] = {
        "sin2_sum": sum(1 - cos * cos for cos in cosines),
        "cos_product": math.prod(cosines),
        "ah_bh_ch": math.prod(x.distance(h) for x in t.vertices),
        "side_sq_sum": sum(squares),
        "oh_distance": centers.oh,
    }
    if kind == TriangleKind.right:
        return InvariantRecord.model_validate(fields)

    orthic = orthic_triangle(t, tol=tol)
    fields["area_ratio_orthic"] = t.area / orthic.area
    orthic_squares = orthic.squared_sides
    orthic_sides = [math.sqrt(s) for s in orthic_squares]
    orthic_cosines = _cosines(orthic_squares, orthic_sides)
    if kind == TriangleKind.obtuse:
        obtuse = max(range(3), key=lambda i: squares[i])
        fields["orthic_angle_expr"] = sum(
            -cos if i == obtuse else cos
            for i, cos in enumerate(orthic_cosines)
        )
        polar = polar_circle(t, tol=tol)
        fields["polar_radius"] = polar.radius
        fields["polar_center_x"] = polar.center.x
        fields["polar_center_y"] = polar.center.y
    else:
        fields["orthic_angle_expr"] = sum(orthic_cosines)
        perimeter = sum(orthic_sides)
        fields["orthic_inradius"] = 2 * orthic.area / perimeter
        incenter = Point(0.0, 0.0)
        for side, vertex in zip(orthic_sides, orthic.vertices, strict=True):
            incenter = incenter + vertex * (side / perimeter)
        fields["orthic_incenter_x"] = incenter.x
        fields["orthic_incenter_y"] = incenter.y
    return InvariantRecord.model_validate(fields)


def expected_invariants(config: PonceletConfig) -> InvariantRecord:
    """Return the closed-form invariants of a center or focus family.

    Raises
    ------
    UnsupportedScenarioError
        Raised for the general scenario.
    """
    radius = config.radius
    r2 = radius * radius
    c = config.c
    params = conic_params(config.conic)
    a, b = params.a, params.b
    match config.scenario:
        case Scenario.center:
            acute = radius > c
            oh = c * c / radius
            fields: dict[str, float | None] = {
                "sin2_sum": 9 / 4 - c**4 / (4 * r2 * r2),
                "ah_bh_ch": 4 * a * b * (a + b if acute else a - b),
                "area_ratio_orthic": r2 / (a * b),
            }
            if acute:
                fields["orthic_inradius"] = a * b / (a + b)
            else:
                fields["polar_radius"] = math.sqrt(2 * a * b)
            expr = 3 / 2 - (c / radius) ** 4 / 2
        case Scenario.focus:
            acute = config.conic.is_ellipse
            oh = 2 * c
            other_focus = -config.circle.center
            fields = {
                "sin2_sum": 9 / 4 - c * c / r2,
                "ah_bh_ch": 8 * a * b * b,
                "area_ratio_orthic": 4 * a * a / (b * b),
            }
            if acute:
                fields["orthic_inradius"] = b * b / (2 * a)
                fields["orthic_incenter_x"] = other_focus.x
                fields["orthic_incenter_y"] = other_focus.y
            else:
                fields["polar_radius"] = math.sqrt(2) * b
                fields["polar_center_x"] = other_focus.x
                fields["polar_center_y"] = other_focus.y
            expr = 3 / 2 - 2 * (c / radius) ** 2
        case _:
            raise UnsupportedScenarioError(
                "expected_invariants", config.scenario
            )
    fields["orthic_angle_expr"] = expr if acute else -expr
    fields["oh_distance"] = oh
    fields["side_sq_sum"] = 9 * r2 - oh * oh
    fields["cos_product"] = 1 / 8 - oh * oh / (8 * r2)
    return InvariantRecord.model_validate(fields)


def sweep(
    config: PonceletConfig,
    n: int,
    *,
    tol: float | None = None,
    invariance_tol: float | None = None,
    logger: BoundLogger | None = None,
) -> list[InvariantReport]:
    """Measure how much each invariant varies across a family.

    Parameters
    ----------
    config
        The family.
    n
        Number of equispaced samples, at least 3.
    tol
        Relative geometric tolerance, or `None` for the configured one.
    invariance_tol
        Relative spread below which a quantity is reported invariant, or
        `None` for the configured one.
    logger
        Logger to use.

    Returns
    -------
    list of InvariantReport
        One report per invariant defined on every sample, sorted by name.
        Orthic incenter and polar center coordinates are only reported in
        the focus and general scenarios.

    Raises
    ------
    InsufficientSamplesError
        Raised if fewer than three admissible samples were found.
    """
    tol = resolve_tolerance(tol)
    if invariance_tol is None:
        invariance_tol = config_dependency.config().invariance_tolerance
    if n < 3:
        msg = f"An invariant sweep needs at least 3 samples, not {n}"
        raise InputValidationError(msg)
    logger = (logger or structlog.get_logger(LOGGER_NAME)).bind(
        scenario=str(config.scenario), radius=config.radius, c=config.c, n=n
    )

    samples = family_sweep(config, n, tol=tol, logger=logger)
    if len(samples) < 3:
        msg = f"Only {len(samples)} admissible samples found"
        raise InsufficientSamplesError(msg)
    records = [invariants_of(s.triangle, tol=tol) for s in samples]
    expected = None
    if config.scenario != Scenario.general:
        expected = expected_invariants(config)

    reports = []
    for name in sorted(InvariantRecord.model_fields):
        if name in _FOCUS_ONLY and config.scenario == Scenario.center:
            continue
        values = [getattr(r, name) for r in records]
        if any(v is None for v in values):
            continue
        mean = statistics.fmean(values)
        deviation = max(abs(v - mean) for v in values)
        if abs(mean) < invariance_tol:
            invariant = deviation < invariance_tol
        else:
            invariant = deviation < invariance_tol * abs(mean)
        reports.append(
            InvariantReport(
                name=name,
                sample_count=len(values),
                mean=mean,
                max_abs_deviation=deviation,
                expected=getattr(expected, name) if expected else None,
                verdict=(
                    Verdict.invariant if invariant else Verdict.not_invariant
                ),
            )
        )
    logger.debug("Finished invariant sweep", reports=len(reports))
    return reports


def failed_reports(
    reports: list[InvariantReport], *, invariance_tol: float | None = None
) -> list[InvariantReport]:
    """Return the reports that are not invariant or miss their closed form.

    Only meaningful for center and focus families, where every invariant
    is expected to hold.
    """
    if invariance_tol is None:
        invariance_tol = config_dependency.config().invariance_tolerance
    failed = []
    for report in reports:
        if report.verdict != Verdict.invariant:
            failed.append(report)
        elif report.expected is not None:
            scale = max(abs(report.expected), 1.0)
            if abs(report.mean - report.expected) > invariance_tol * scale:
                failed.append(report)
    return failed


def tangential_family_objects(
    config: PonceletConfig, *, tol: float | None = None
) -> TangentialObjects:
    """Return the fixed curve carrying the tangential triangle vertices.

    In the focus scenario it is a circle, which is also the circumcircle of
    every tangential triangle. In the center scenario it is an ellipse
    centered at the origin and the tangential triangles share a
    circumradius.

    Raises
    ------
    DegenerateConicError
        Raised if :math:`R = 2c` (focus) or :math:`R = c` (center).
    UnsupportedScenarioError
        Raised for the general scenario.
    VerificationError
        Raised if the semi-axis forms disagree with the radius forms.
    """
    tol = resolve_tolerance(tol)
    radius = config.radius
    r2 = radius * radius
    c = config.c
    params = conic_params(config.conic)
    a, b = params.a, params.b
    match config.scenario:
        case Scenario.focus:
            h = config.circle.center.x
            denominator = r2 - 4 * h * h
            if abs(denominator) < tol * r2:
                msg = "Tangential triangles are unbounded for R = 2c"
                raise DegenerateConicError(msg)
            center = Point(h * (5 * r2 - 4 * h * h) / denominator, 0.0)
            circle_radius = 2 * radius**3 / abs(denominator)
            eps = config.conic.epsilon
            from_axes = (4 * a * a + eps * b * b) / (eps * b * b) * h
            _agree(circle_radius, 4 * a**3 / (b * b), tol, "radius")
            _agree(center.x, from_axes, tol, "center")
            return TangentialObjects(
                tangential_circumradius=circle_radius,
                circumcircle=CircleSpec(center, circle_radius),
            )
        case Scenario.center:
            if abs(radius - c) < tol * radius:
                msg = "Tangential triangles are unbounded for R = c"
                raise DegenerateConicError(msg)
            along_x = 2 * radius**3 / (r2 + c * c)
            along_y = 2 * radius**3 / abs(r2 - c * c)
            _agree(along_x, radius**2 / a, tol, "x semi-axis")
            _agree(along_y, radius**2 / b, tol, "y semi-axis")
            circumradius = 2 * radius**5 / abs(r2 * r2 - c**4)
            _agree(circumradius, radius**3 / (2 * a * b), tol, "circumradius")
            ellipse = PlacedConic(
                base=CentralConicStd(along_x**2, along_y**2),
                center=Point(0.0, 0.0),
                rotation=0.0,
            )
            return TangentialObjects(
                tangential_circumradius=circumradius, circum_ellipse=ellipse
            )
        case _:
            raise UnsupportedScenarioError(
                "tangential_family_objects", config.scenario
            )


def _agree(value: float, other: float, tol: float, what: str) -> None:
    if abs(value - other) > tol * max(abs(value), abs(other), 1.0):
        msg = f"Tangential {what} forms disagree: {value:.12g}, {other:.12g}"
        raise VerificationError(msg)


def _cosines(
    squares: tuple[float, float, float], sides: list[float]
) -> list[float]:
    result = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        result.append(
            (squares[j] + squares[k] - squares[i]) / (2 * sides[j] * sides[k])
        )
    return result
