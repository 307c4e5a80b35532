"""Construction and classification of Poncelet triangle families.

A family is fixed by a circle and a central conic in standard position
satisfying the admissibility criterion. Its triangles are parametrized by
the angle of one vertex on the circle; the other two vertices are reached
along the tangents from that vertex and the closing side is then tangent
to the conic as well.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
import structlog
from numpy.polynomial import Polynomial
from structlog.stdlib import BoundLogger

from ..constants import LOGGER_NAME
from ..dependencies.config import resolve_tolerance
from ..exceptions import (
    DegenerateConicError,
    DegenerateTriangleError,
    FocalAxisError,
    InadmissibleVertexError,
    InfeasibleConfigError,
    InputValidationError,
    UnsupportedScenarioError,
    VerificationError,
)
from ..models.family import (
    AxisRelations,
    FamilyClassification,
    FamilyKind,
    FamilySample,
    PonceletConfig,
    Scenario,
)
from ..models.geometry import (
    CentralConicStd,
    CircleSpec,
    ConicKind,
    Line,
    Point,
    Triangle,
)
from .conics import (
    circle_line_second_intersection,
    conic_params,
    conic_residual,
    line_conic_tangency,
    tangent_points,
)

__all__ = [
    "admissible_arcs",
    "admissible_conic",
    "axis_relations",
    "check_criterion",
    "classify",
    "config_from_circle",
    "family_sweep",
    "make_config",
    "make_general_config",
    "orthocenter_circle",
    "orthocenter_circle_congruent",
    "pencil_discriminant",
    "triangle_at",
]


def check_criterion(circle: CircleSpec, conic: CentralConicStd) -> float:
    """Return the signed residual of the 3-Poncelet criterion.

    The residual is :math:`(R^2 - d_+^2)(R^2 - d_-^2) - 4 \\varepsilon b^2
    R^2`, where :math:`d_\\pm` are the distances from the circle center to
    the foci :math:`(\\pm c, 0)`. A circle and conic form a 3-Poncelet pair
    when it vanishes relative to :math:`R^4`.

    Raises
    ------
    FocalAxisError
        Raised if the conic is an ellipse with its foci on the y-axis.
    """
    if not conic.focal_on_x:
        msg = "The conic must have its focal axis on the x-axis"
        raise FocalAxisError(msg)
    r2 = circle.radius**2
    c = conic.linear_eccentricity
    dp2 = _squared_distance(circle.center, Point(c, 0.0))
    dm2 = _squared_distance(circle.center, Point(-c, 0.0))
    return (r2 - dp2) * (r2 - dm2) - 4 * conic.beta * r2


def admissible_conic(
    circle: CircleSpec, c: float, *, tol: float | None = None
) -> CentralConicStd:
    """Build the conic with foci :math:`(\\pm c, 0)` inscribed in a family.

    Parameters
    ----------
    circle
        The circumcircle, centered anywhere.
    c
        Linear eccentricity of the conic.
    tol
        Relative tolerance, or `None` for the configured one.

    Raises
    ------
    DegenerateConicError
        Raised if the criterion forces :math:`\\beta = 0`.
    """
    tol = resolve_tolerance(tol)
    _check_sizes(circle.radius, c)
    r2 = circle.radius**2
    dp2 = _squared_distance(circle.center, Point(c, 0.0))
    dm2 = _squared_distance(circle.center, Point(-c, 0.0))
    beta = (r2 - dp2) * (r2 - dm2) / (4 * r2)
    if abs(beta) < tol * r2:
        msg = "The circle passes through a focus, so the conic is degenerate"
        raise DegenerateConicError(msg)
    return CentralConicStd(beta + c * c, beta)


def make_config(
    radius: float,
    c: float,
    scenario: Scenario,
    *,
    tol: float | None = None,
) -> PonceletConfig:
    """Build the standard family for a circumcenter at a center or focus.

    Parameters
    ----------
    radius
        Circumradius :math:`R`.
    c
        Linear eccentricity of the conic.
    scenario
        Center or focus scenario.
    tol
        Relative tolerance, or `None` for the configured one.

    Returns
    -------
    PonceletConfig
        In the center scenario the circle is centered at the origin and the
        conic has semi-axes :math:`(R^2 \\pm c^2)/2R`. In the focus scenario
        the circle is centered at :math:`(c, 0)` and the conic has
        :math:`\\alpha = R^2/4` and :math:`\\beta = R^2/4 - c^2`.

    Raises
    ------
    DegenerateConicError
        Raised if :math:`R = c` (center) or :math:`R = 2c` (focus).
    UnsupportedScenarioError
        Raised for the general scenario.
    """
    tol = resolve_tolerance(tol)
    _check_sizes(radius, c)
    r2 = radius * radius
    match scenario:
        case Scenario.center:
            if abs(radius - c) < tol * radius:
                msg = "No central conic exists for R = c"
                raise DegenerateConicError(msg)
            conic = CentralConicStd(
                ((r2 + c * c) / (2 * radius)) ** 2,
                ((r2 - c * c) / (2 * radius)) ** 2,
            )
            circle = CircleSpec(Point(0.0, 0.0), radius)
        case Scenario.focus:
            if abs(radius - 2 * c) < tol * radius:
                msg = "No central conic exists for R = 2c"
                raise DegenerateConicError(msg)
            conic = CentralConicStd(r2 / 4, r2 / 4 - c * c)
            circle = CircleSpec(Point(c, 0.0), radius)
        case _:
            raise UnsupportedScenarioError("make_config", scenario)
    return PonceletConfig(circle=circle, conic=conic, scenario=scenario)


def make_general_config(
    circle: CircleSpec, c: float, *, tol: float | None = None
) -> PonceletConfig:
    """Build the family of a circle and the admissible conic with focal
    distance ``c``, classifying the scenario from the geometry.
    """
    conic = admissible_conic(circle, c, tol=tol)
    return config_from_circle(circle, conic, tol=tol)


def config_from_circle(
    circle: CircleSpec, conic: CentralConicStd, *, tol: float | None = None
) -> PonceletConfig:
    """Validate a circle and conic pair and build its configuration.

    Raises
    ------
    FocalAxisError
        Raised if the conic has its foci on the y-axis.
    InfeasibleConfigError
        Raised if the pair fails the criterion.
    """
    tol = resolve_tolerance(tol)
    residual = check_criterion(circle, conic)
    if abs(residual) > tol * circle.radius**4:
        msg = f"Circle and conic are not a 3-Poncelet pair ({residual:.6g})"
        raise InfeasibleConfigError(msg)
    scenario = _detect_scenario(circle, conic, tol)
    return PonceletConfig(circle=circle, conic=conic, scenario=scenario)


def triangle_at(
    config: PonceletConfig, theta: float, *, tol: float | None = None
) -> FamilySample:
    """Construct the family triangle with a vertex at a given angle.

    Parameters
    ----------
    config
        The family.
    theta
        Angle of the vertex on the circumcircle, measured at its center.
    tol
        Relative tolerance, or `None` for the configured one.

    Returns
    -------
    FamilySample
        The triangle with ``a`` at ``theta`` and the vertices
        counterclockwise. The tangency residual of the closing side is
        reported, never enforced.

    Raises
    ------
    InadmissibleVertexError
        Raised if ``theta`` is not on an admissible arc.
    DegenerateTriangleError
        Raised if two vertices coincide, as at the pedal points of an
        obtuse family.
    """
    tol = resolve_tolerance(tol)
    theta %= math.tau
    classification = admissible_arcs(config, tol=tol)
    if not classification.contains(theta):
        raise InadmissibleVertexError(theta, classification.admissible_arcs)
    return _construct(config, theta, tol)


def admissible_arcs(
    config: PonceletConfig, *, tol: float | None = None
) -> FamilyClassification:
    """Find the arcs of the circumcircle whose points are family vertices.

    Boundary points, where circle and conic meet, come from closed forms in
    the center and focus scenarios and from the real roots of a quartic in
    general position. An arc between consecutive boundary points is kept
    when a family triangle can be built at its midpoint.

    Raises
    ------
    InfeasibleConfigError
        Raised if no point of the circle is a vertex of a triangle.
    """
    tol = resolve_tolerance(tol)
    return _admissible_arcs(config, tol)


@lru_cache(maxsize=64)
def _admissible_arcs(
    config: PonceletConfig, tol: float
) -> FamilyClassification:
    match config.scenario:
        case Scenario.center:
            boundary = _center_boundary(config)
        case Scenario.focus:
            boundary = _focus_boundary(config)
        case _:
            boundary = _general_boundary(config, tol)

    center = config.circle.center
    angles = sorted({round((p - center).angle(), 15) for p in boundary})
    if angles:
        ends = [*angles, angles[0] + math.tau]
        candidates = list(zip(ends[:-1], ends[1:], strict=True))
    else:
        candidates = [(0.0, math.tau)]
    arcs = [
        (lo, hi)
        for lo, hi in candidates
        if hi - lo > tol and _admissible_at(config, (lo + hi) / 2, tol)
    ]
    if not arcs:
        msg = "No point of the circle is a vertex of a family triangle"
        raise InfeasibleConfigError(msg)
    kind = None
    if config.scenario != Scenario.general:
        kind = _family_kind(config)
    return FamilyClassification(
        conic_kind=config.conic.kind,
        triangle_kind=kind,
        admissible_arcs=arcs,
        boundary_points=sorted(boundary, key=lambda p: (p - center).angle()),
        right_triangle_count_bound=_right_triangle_bound(config),
    )


def orthocenter_circle(config: PonceletConfig) -> CircleSpec:
    """Return the circle carrying the orthocenters of the family.

    Its center is the reflection of the circumcenter in the conic center and
    its radius is :math:`d_+ d_- / R`, zero in the focus scenario.
    """
    return CircleSpec(
        -config.circle.center, config.d_plus * config.d_minus / config.radius
    )


def orthocenter_circle_congruent(
    config: PonceletConfig, *, tol: float | None = None
) -> bool:
    """Whether the orthocenter circle is congruent to the circumcircle.

    Raises
    ------
    InfeasibleConfigError
        Raised if the circles are congruent but the conic is an ellipse.
    """
    tol = resolve_tolerance(tol)
    radius = config.radius
    congruent = abs(config.d_plus * config.d_minus - radius**2) < (
        tol * radius**2
    )
    if congruent and config.conic.is_ellipse:
        msg = "Congruent orthocenter circle requires a hyperbola"
        raise InfeasibleConfigError(msg)
    return congruent


def pencil_discriminant(config: PonceletConfig) -> float:
    """Return the discriminant deciding whether the family has a right
    triangle.

    A right triangle has its orthocenter on the circumcircle, so it exists
    only if the circumcircle meets the orthocenter circle. The value is
    negative when they do not meet.
    """
    r2 = config.radius**2
    o2 = config.circle.center.dot(config.circle.center)
    dd = config.d_plus * config.d_minus
    return -((r2 + dd) ** 2 - 4 * r2 * o2) * ((r2 - dd) ** 2 - 4 * r2 * o2)


def classify(
    config: PonceletConfig, *, tol: float | None = None
) -> FamilyClassification:
    """Classify the conic and the triangles of a center or focus family.

    Raises
    ------
    InfeasibleConfigError
        Raised if the conic is too large for any triangle to exist.
    UnsupportedScenarioError
        Raised for the general scenario.
    VerificationError
        Raised if the conic kind contradicts the positions of the foci.
    """
    tol = resolve_tolerance(tol)
    radius = config.radius
    c = config.c
    match config.scenario:
        case Scenario.center:
            if 3 * radius**2 <= c * c:
                msg = "Center family needs 3R² > c²"
                raise InfeasibleConfigError(msg)
        case Scenario.focus:
            if 3 * radius <= 2 * c:
                msg = "Focus family needs 3R > 2c, eccentricity below 3"
                raise InfeasibleConfigError(msg)
        case _:
            raise UnsupportedScenarioError("classify", config.scenario)

    plus_inside = config.d_plus < radius
    minus_inside = config.d_minus < radius
    expected = ConicKind.ellipse if plus_inside == minus_inside else None
    if (expected == ConicKind.ellipse) != config.conic.is_ellipse:
        msg = "Conic kind contradicts the positions of the foci"
        raise VerificationError(msg)
    orthocenter_circle_congruent(config, tol=tol)
    return admissible_arcs(config, tol=tol)


def axis_relations(
    config: PonceletConfig, *, tol: float | None = None
) -> AxisRelations:
    """Recover the circumradius and :math:`|OH|` from the conic axes.

    Raises
    ------
    UnsupportedScenarioError
        Raised for the general scenario.
    VerificationError
        Raised if the recovered circumradius differs from the actual one.
    """
    tol = resolve_tolerance(tol)
    params = conic_params(config.conic)
    radius = config.radius
    match config.scenario:
        case Scenario.center:
            if radius > config.c:
                from_axes = params.a + params.b
            else:
                from_axes = params.a - params.b
            relations = AxisRelations(
                radius_from_axes=from_axes, oh=config.c**2 / radius
            )
        case Scenario.focus:
            relations = AxisRelations(
                radius_from_axes=2 * params.a, oh=2 * config.c
            )
        case _:
            raise UnsupportedScenarioError("axis_relations", config.scenario)
    if abs(relations.radius_from_axes - radius) > tol * radius:
        msg = (
            f"Axes give circumradius {relations.radius_from_axes:.12g}"
            f" instead of {radius:.12g}"
        )
        raise VerificationError(msg)
    return relations


def family_sweep(
    config: PonceletConfig,
    n: int,
    *,
    tol: float | None = None,
    logger: BoundLogger | None = None,
) -> list[FamilySample]:
    """Sample a family at equispaced vertex positions.

    The samples are spread over the total length of the admissible arcs,
    half a step away from arc ends, and returned sorted by angle. Samples
    that land on a degenerate triangle are skipped.

    Raises
    ------
    InputValidationError
        Raised if ``n`` is not positive.
    """
    tol = resolve_tolerance(tol)
    if n < 1:
        msg = f"Number of samples must be positive, not {n}"
        raise InputValidationError(msg)
    logger = (logger or structlog.get_logger(LOGGER_NAME)).bind(
        scenario=str(config.scenario), radius=config.radius, c=config.c, n=n
    )
    classification = admissible_arcs(config, tol=tol)
    step = classification.total_length / n
    samples = []
    for theta in _arc_positions(classification.admissible_arcs, step, n):
        try:
            samples.append(_construct(config, theta, tol))
        except DegenerateTriangleError:
            logger.warning("Skipping degenerate sample", theta=theta)
    logger.debug("Finished family sweep", count=len(samples))
    return sorted(samples, key=lambda s: s.theta)


def _arc_positions(
    arcs: list[tuple[float, float]], step: float, n: int
) -> list[float]:
    positions = []
    for k in range(n):
        offset = (k + 0.5) * step
        for lo, hi in arcs:
            if offset < hi - lo:
                positions.append((lo + offset) % math.tau)
                break
            offset -= hi - lo
    return positions


def _construct(
    config: PonceletConfig, theta: float, tol: float
) -> FamilySample:
    circle = config.circle
    radius = circle.radius
    a = circle.point_at(theta)
    contacts = tangent_points(config.conic, a, tol=tol)
    if len(contacts) != 2:
        raise InadmissibleVertexError(theta, [])
    b, c = (
        circle_line_second_intersection(
            circle, _tangent_at(config, t), a, tol=tol
        )
        for t in contacts
    )
    if min(a.distance(b), a.distance(c), b.distance(c)) < tol * radius:
        msg = f"Triangle at angle {theta:.12g} is degenerate"
        raise DegenerateTriangleError(msg)
    closing = Line.through(b, c)
    residual = abs(line_conic_tangency(config.conic, closing))
    triangle = Triangle(a, b, c).counterclockwise()
    return FamilySample(
        theta=theta, triangle=triangle, closure_residual=residual
    )


def _tangent_at(config: PonceletConfig, contact: Point) -> Line:
    conic = config.conic
    return Line.from_coefficients(
        contact.x / conic.alpha, contact.y / conic.beta, -1.0
    )


def _admissible_at(config: PonceletConfig, theta: float, tol: float) -> bool:
    try:
        sample = _construct(config, theta, tol)
    except (InadmissibleVertexError, DegenerateTriangleError):
        return False
    return sample.closure_residual < tol * config.radius**2


def _center_boundary(config: PonceletConfig) -> list[Point]:
    radius = config.radius
    c = config.c
    if radius > c:
        return []
    r2 = radius * radius
    c2 = c * c
    if 3 * r2 <= c2:
        msg = "Center family needs 3R² > c²"
        raise InfeasibleConfigError(msg)
    x0 = (r2 + c2) * math.sqrt((r2 + c2) * (3 * r2 - c2)) / (4 * r2 * c)
    y0 = (c2 - r2) * math.sqrt((c2 - r2) * (3 * r2 + c2)) / (4 * r2 * c)
    return [
        Point(sx * x0, sy * y0) for sx in (1.0, -1.0) for sy in (1.0, -1.0)
    ]


def _focus_boundary(config: PonceletConfig) -> list[Point]:
    radius = config.radius
    c = config.c
    if radius > 2 * c:
        return []
    if 3 * radius <= 2 * c:
        msg = "Focus family needs 3R > 2c, eccentricity below 3"
        raise InfeasibleConfigError(msg)
    s = config.focus_sign
    x = s * 3 * radius**2 / (4 * c)
    y = math.sqrt(max(radius**2 - (x - s * c) ** 2, 0.0))
    return [Point(x, y), Point(x, -y)]


def _general_boundary(config: PonceletConfig, tol: float) -> list[Point]:
    alpha = config.conic.alpha
    beta = config.conic.beta
    h, k = config.circle.center.x, config.circle.center.y
    radius = config.radius

    # Circle points through the half-angle tangent s = tan(t/2).
    x = Polynomial([h + radius, 0.0, h - radius])
    y = Polynomial([k, 2 * radius, k])
    w = Polynomial([1.0, 0.0, 1.0])
    quartic = beta * x**2 + alpha * y**2 - alpha * beta * w**2
    quartic = quartic.trim(tol * float(np.max(np.abs(quartic.coef))))

    points = []
    if quartic.degree() > 0:
        for root in quartic.roots():
            if abs(root.imag) <= 1e-7 * (1 + abs(root.real)):
                theta = 2 * math.atan(root.real)
                points.append(config.circle.point_at(theta))
    antipode = config.circle.point_at(math.pi)
    if abs(conic_residual(config.conic, antipode)) < tol:
        points.append(antipode)

    unique: list[Point] = []
    for p in points:
        if all(p.distance(q) > math.sqrt(tol) * radius for q in unique):
            unique.append(p)
    return unique


def _detect_scenario(
    circle: CircleSpec, conic: CentralConicStd, tol: float
) -> Scenario:
    center = circle.center
    limit = tol * circle.radius
    if center.norm() < limit:
        return Scenario.center
    c = conic.linear_eccentricity
    focus_distance = min(
        center.distance(Point(c, 0.0)), center.distance(Point(-c, 0.0))
    )
    if focus_distance < limit:
        return Scenario.focus
    return Scenario.general


def _family_kind(config: PonceletConfig) -> FamilyKind:
    if config.scenario == Scenario.center:
        acute = config.radius > config.c
    else:
        acute = config.conic.is_ellipse
    return FamilyKind.all_acute if acute else FamilyKind.all_obtuse


def _right_triangle_bound(config: PonceletConfig) -> int:
    if config.scenario != Scenario.general:
        return 0
    return 0 if pencil_discriminant(config) < 0 else 2


def _check_sizes(radius: float, c: float) -> None:
    if not radius > 0:
        msg = f"Circumradius must be positive, not {radius}"
        raise InputValidationError(msg)
    if not c >= 0:
        msg = f"Linear eccentricity must be non-negative, not {c}"
        raise InputValidationError(msg)


def _squared_distance(p: Point, q: Point) -> float:
    d = p - q
    return d.dot(d)
