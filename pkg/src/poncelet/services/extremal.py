"""Extremal areas of the triangles of a Poncelet family.

With the circumcenter at the center or at a focus of the conic, the area of
a family triangle is a function of the abscissa of any one of its vertices.
Its extrema have closed forms, which are checked here against a grid and
golden-section search on the area function itself.
"""

from __future__ import annotations

import math
from functools import partial

import numpy as np
import structlog
from scipy.optimize import brentq, minimize_scalar
from structlog.stdlib import BoundLogger

from ..constants import LOGGER_NAME
from ..dependencies.config import config_dependency, resolve_tolerance
from ..exceptions import (
    DomainError,
    InputValidationError,
    SectionRatioError,
    UnsupportedScenarioError,
    VerificationError,
)
from ..models.area import (
    AreaProfile,
    Extremum,
    OracleResult,
    PedalIntersections,
    Side,
)
from ..models.family import FamilySample, PonceletConfig, Scenario
from ..models.geometry import Point
from .conics import conic_params, joachimsthal
from .family import triangle_at

__all__ = [
    "area_domain",
    "area_function",
    "closed_form_extrema",
    "extremal_triangles",
    "pedal_intersections",
    "tangency_ratio",
    "triangle_for_x",
]


def area_domain(config: PonceletConfig) -> tuple[float, float]:
    """Return the interval of abscissas reached by the family vertices.

    This is :math:`[-R, R]` for an acute center family, the interval
    between the circle and conic intersections for an obtuse one, and
    :math:`[c - R, c + R]` or :math:`[c - R, 3R^2/4c]` for a focus family,
    mirrored when the circumcenter sits on the left focus.

    Raises
    ------
    UnsupportedScenarioError
        Raised for the general scenario.
    """
    _require_supported(config, "area_domain")
    radius = config.radius
    c = config.c
    if config.scenario == Scenario.center:
        if radius > c:
            return (-radius, radius)
        r2 = radius * radius
        c2 = c * c
        x = (r2 + c2) * math.sqrt((r2 + c2) * (3 * r2 - c2)) / (4 * r2 * c)
        return (-x, x)
    lo = c - radius
    hi = c + radius if config.conic.is_ellipse else 3 * radius**2 / (4 * c)
    if config.focus_sign > 0:
        return (lo, hi)
    return (-hi, -lo)


def area_function(
    config: PonceletConfig, x: float, *, tol: float | None = None
) -> float:
    """Return the area of the family triangle with a vertex at abscissa x.

    Parameters
    ----------
    config
        A center or focus family.
    x
        Abscissa of one vertex in the frame of the conic.
    tol
        Relative tolerance, or `None` for the configured one. Abscissas
        this close to the domain are clamped onto it.

    Raises
    ------
    DomainError
        Raised if ``x`` is outside `area_domain`.
    UnsupportedScenarioError
        Raised for the general scenario.
    """
    tol = resolve_tolerance(tol)
    x = _clamp(config, x, tol)
    return float(_area(config, np.asarray(x)))


def closed_form_extrema(
    config: PonceletConfig, *, tol: float | None = None
) -> tuple[Extremum, Extremum | None]:
    """Return the largest and smallest triangle areas from closed forms.

    For a focus family, with :math:`a = R/2` and :math:`e = 2c/R`, the
    maximum is :math:`a^2\\sqrt{1 + e}(3 - e)^{3/2}` and, for an ellipse,
    the minimum is :math:`a^2\\sqrt{1 - e}(3 + e)^{3/2}`. For a center
    family with semi-axes :math:`a > b` the maximum is
    :math:`(a \\pm 2b)\\sqrt{a(a \\pm 2b)}` and, for an acute family, the
    minimum is :math:`(2a + b)\\sqrt{b(2a + b)}`. The center forms are
    checked against their expressions in :math:`R` and :math:`c`.

    Returns
    -------
    tuple of Extremum and Extremum or None
        Maximum and minimum, located by the abscissa of the vertex on the
        circle that `triangle_for_x` takes. For a focus family this is
        :math:`x = sR/2` for the maximum and :math:`x = -sR/2` for the
        minimum, with :math:`s` the focus sign. The maximal triangle then
        also has a vertex at :math:`(c - R, 0)` for :math:`s = 1`, the
        point of the circle nearest the other focus. The minimum is
        `None` when the infimum is only approached by degenerate triangles.

    Raises
    ------
    UnsupportedScenarioError
        Raised for the general scenario.
    VerificationError
        Raised if the two center forms disagree.
    """
    tol = resolve_tolerance(tol)
    _require_supported(config, "closed_form_extrema")
    radius = config.radius
    c = config.c
    if config.scenario == Scenario.focus:
        a = radius / 2
        e = 2 * c / radius
        s = config.focus_sign
        largest = Extremum(s * a, a * a * math.sqrt(1 + e) * (3 - e) ** 1.5)
        if not config.conic.is_ellipse:
            return largest, None
        smallest = Extremum(-s * a, a * a * math.sqrt(1 - e) * (3 + e) ** 1.5)
        return largest, smallest

    params = conic_params(config.conic)
    a, b = params.a, params.b
    r2 = radius * radius
    c2 = c * c
    acute = radius > c
    width = a + 2 * b if acute else a - 2 * b
    largest = Extremum(0.0, width * math.sqrt(a * width))
    _agree(
        largest.area,
        (3 * r2 - c2) ** 1.5 * math.sqrt(r2 + c2) / (4 * r2),
        tol,
        "maximal",
    )
    if not acute:
        return largest, None
    smallest = Extremum(
        (r2 + c2) / (2 * radius), (2 * a + b) * math.sqrt(b * (2 * a + b))
    )
    _agree(
        smallest.area,
        (3 * r2 + c2) ** 1.5 * math.sqrt(r2 - c2) / (4 * r2),
        tol,
        "minimal",
    )
    return largest, smallest


def extremal_triangles(
    config: PonceletConfig,
    *,
    tol: float | None = None,
    invariance_tol: float | None = None,
    grid_size: int | None = None,
    logger: BoundLogger | None = None,
) -> AreaProfile:
    """Locate the triangles of largest and smallest area.

    The closed forms of `closed_form_extrema` are compared with the extrema
    of the area function over a uniform grid, refined by golden-section
    search around the best grid point. Disagreement is logged and recorded
    in the oracle result rather than raised.

    Parameters
    ----------
    config
        A center or focus family.
    tol
        Relative geometric tolerance, or `None` for the configured one.
    invariance_tol
        Relative difference below which the closed forms and the search
        agree, or `None` for the configured one.
    grid_size
        Number of grid points, or `None` for the configured number.
    logger
        Logger to use.

    Raises
    ------
    UnsupportedScenarioError
        Raised for the general scenario.
    """
    tol = resolve_tolerance(tol)
    settings = config_dependency.config()
    if invariance_tol is None:
        invariance_tol = settings.invariance_tolerance
    if grid_size is None:
        grid_size = settings.area_grid_size
    if grid_size < 3:
        msg = f"Area grid needs at least 3 points, not {grid_size}"
        raise InputValidationError(msg)
    logger = (logger or structlog.get_logger(LOGGER_NAME)).bind(
        scenario=str(config.scenario), radius=config.radius, c=config.c
    )

    largest, smallest = closed_form_extrema(config, tol=tol)
    domain = area_domain(config)
    grid = np.linspace(domain[0], domain[1], grid_size)
    values = _area(config, grid)
    searched_max = _refine(config, grid, values, int(np.argmax(values)), -1)
    agrees = _close(searched_max.area, largest.area, invariance_tol)
    searched_min = None
    if smallest is not None:
        searched_min = _refine(
            config, grid, values, int(np.argmin(values)), 1
        )
        agrees = agrees and _close(
            searched_min.area, smallest.area, invariance_tol
        )
    if not agrees:
        logger.warning(
            "Closed-form extrema disagree with search",
            max_area=largest.area,
            searched_max_area=searched_max.area,
            min_area=smallest.area if smallest else None,
            searched_min_area=searched_min.area if searched_min else None,
        )
    oracle = OracleResult(
        max_x=searched_max.x,
        max_area=searched_max.area,
        min_x=searched_min.x if searched_min else None,
        min_area=searched_min.area if searched_min else None,
        agrees=agrees,
    )
    critical = _critical_points(config, grid, values, tol)
    logger.debug(
        "Located extremal triangles",
        max_area=largest.area,
        critical_points=len(critical),
    )
    return AreaProfile(
        scenario=config.scenario,
        domain=domain,
        f=partial(area_function, config, tol=tol),
        critical_points=critical,
        max=largest,
        min=smallest,
        oracle=oracle,
    )


def pedal_intersections(
    config: PonceletConfig, *, tol: float | None = None
) -> PedalIntersections:
    """Intersect the circumcircle with the pedal curve of the conic.

    The pedal point is the circumcenter. For a center family the pedal
    curve is :math:`(x^2 + y^2)^2 = \\alpha x^2 + \\beta y^2`, for a focus
    family the auxiliary circle :math:`x^2 + y^2 = \\alpha`. The curves
    meet exactly when the family is obtuse, and a vertex placed at one of
    the common points gives a degenerate triangle.

    Raises
    ------
    UnsupportedScenarioError
        Raised for the general scenario.
    VerificationError
        Raised if a point misses either curve.
    """
    tol = resolve_tolerance(tol)
    _require_supported(config, "pedal_intersections")
    radius = config.radius
    c = config.c
    conic = config.conic
    if config.scenario == Scenario.center:
        if radius >= c:
            return PedalIntersections()
        r2 = radius * radius
        c2 = c * c
        x = math.sqrt((r2 + c2) * (3 * r2 - c2)) / (2 * c)
        y = math.sqrt((c2 - r2) * (3 * r2 + c2)) / (2 * c)
        points = [
            Point(sx * x, sy * y) for sx in (1.0, -1.0) for sy in (1.0, -1.0)
        ]
    else:
        if conic.is_ellipse:
            return PedalIntersections()
        s = config.focus_sign
        x = -s * (3 * radius**2 - 4 * c * c) / (8 * c)
        product = -(
            (radius - 2 * c)
            * (radius + 2 * c)
            * (3 * radius - 2 * c)
            * (3 * radius + 2 * c)
        )
        y = math.sqrt(max(product, 0.0)) / (8 * c)
        points = [Point(x, y), Point(x, -y)]

    scale = max(radius**2, conic.alpha, abs(conic.beta))
    for p in points:
        on_circle = config.circle.residual(p)
        r2 = p.dot(p)
        if config.scenario == Scenario.center:
            on_pedal = r2 * r2 - conic.alpha * p.x**2 - conic.beta * p.y**2
            limit = tol * scale**2
        else:
            on_pedal = r2 - conic.alpha
            limit = tol * scale
        if abs(on_circle) > tol * radius**2 or abs(on_pedal) > limit:
            msg = f"Pedal point ({p.x:.12g}, {p.y:.12g}) misses a curve"
            raise VerificationError(msg)
    return PedalIntersections(points)


def tangency_ratio(
    config: PonceletConfig,
    sample: FamilySample,
    side: Side,
    *,
    tol: float | None = None,
) -> float:
    """Return the ratio in which the contact point divides a side.

    For side :math:`PQ` tangent to the conic at :math:`T` this is
    :math:`|PT| / |TQ| = |S_{PQ} / S_{QQ}|`, with :math:`S` the
    Joachimsthal form of the conic.

    Raises
    ------
    SectionRatioError
        Raised if :math:`Q` is on the conic or the side is not tangent.
    """
    tol = resolve_tolerance(tol)
    t = sample.triangle
    p, q = {
        Side.ab: (t.a, t.b),
        Side.bc: (t.b, t.c),
        Side.ca: (t.c, t.a),
    }[side]
    conic = config.conic
    s_pq = joachimsthal(conic, p, q)
    s_pp = joachimsthal(conic, p, p)
    s_qq = joachimsthal(conic, q, q)
    if abs(s_qq) < tol:
        msg = f"Endpoint of side {side} lies on the conic"
        raise SectionRatioError(msg)
    discriminant = s_pq * s_pq - s_pp * s_qq
    if abs(discriminant) > tol * max(s_pq * s_pq, abs(s_pp * s_qq), 1.0):
        msg = f"Side {side} is not tangent to the conic ({discriminant:.3g})"
        raise SectionRatioError(msg)
    return abs(s_pq / s_qq)


def triangle_for_x(
    config: PonceletConfig, x: float, *, tol: float | None = None
) -> FamilySample:
    """Construct the family triangle with vertex ``a`` at abscissa x.

    Of the two circle points with this abscissa the one with
    :math:`y \\ge 0` is used.

    Raises
    ------
    DomainError
        Raised if ``x`` is outside `area_domain`.
    InadmissibleVertexError
        Raised at a boundary point of the admissible arcs.
    DegenerateTriangleError
        Raised at a pedal intersection point.
    """
    tol = resolve_tolerance(tol)
    x = _clamp(config, x, tol)
    cosine = (x - config.circle.center.x) / config.radius
    theta = math.acos(min(max(cosine, -1.0), 1.0))
    return triangle_at(config, theta, tol=tol)


def _agree(value: float, other: float, tol: float, what: str) -> None:
    if abs(value - other) > tol * max(abs(value), abs(other), 1.0):
        msg = f"Closed forms of the {what} area disagree: {value}, {other}"
        raise VerificationError(msg)


def _area(config: PonceletConfig, x: np.ndarray) -> np.ndarray:
    radius = config.radius
    c = config.c
    if config.scenario == Scenario.center:
        r2 = radius * radius
        c2 = c * c
        x2 = x * x
        factor = np.abs((r2 - c2) ** 2 - 4 * (r2 * r2 - c2 * x2))
        inner = (r2 + c2) ** 3 * (3 * r2 - c2) - 16 * r2 * r2 * c2 * x2
        denominator = 4 * r2 * ((r2 + c2) ** 2 - 4 * c2 * x2)
        return factor * np.sqrt(np.maximum(inner, 0.0)) / denominator
    a = radius / 2
    e = 2 * c / radius
    u = config.focus_sign * x
    factor = a * np.abs((3 - e * e) * a + 2 * e * u)
    inner = 3 - 4 * e * u / (a + e * u)
    return factor * np.sqrt(np.maximum(inner, 0.0))


def _clamp(config: PonceletConfig, x: float, tol: float) -> float:
    lo, hi = area_domain(config)
    slack = tol * config.radius
    if not lo - slack <= x <= hi + slack:
        msg = f"Abscissa {x:.12g} is outside [{lo:.12g}, {hi:.12g}]"
        raise DomainError(msg)
    return min(max(x, lo), hi)


def _close(value: float, other: float, tol: float) -> bool:
    return abs(value - other) <= tol * max(abs(value), abs(other))


def _critical_points(
    config: PonceletConfig, grid: np.ndarray, values: np.ndarray, tol: float
) -> list[float]:
    """Interior zeros of the derivative where the area is not zero.

    Sign changes of the sampled slope are refined by root finding on a
    central difference.
    """
    step = math.sqrt(tol) * config.radius
    spacing = float(grid[1] - grid[0])
    floor = math.sqrt(tol) * float(values.max())

    def derivative(x: float) -> float:
        ahead = _area(config, np.asarray(x + step))
        behind = _area(config, np.asarray(x - step))
        return float(ahead - behind) / (2 * step)

    slope = np.gradient(values, grid)
    points: list[float] = []
    for i in np.flatnonzero(np.diff(np.sign(slope))):
        lo, hi = float(grid[i]), float(grid[i + 1])
        try:
            x = float(brentq(derivative, lo, hi))
        except ValueError:
            x = lo if abs(slope[i]) <= abs(slope[i + 1]) else hi
        if float(_area(config, np.asarray(x))) <= floor:
            continue
        if all(abs(x - p) > spacing for p in points):
            points.append(x)
    return sorted(points)


def _refine(
    config: PonceletConfig,
    grid: np.ndarray,
    values: np.ndarray,
    index: int,
    sign: int,
) -> Extremum:
    """Polish a grid extremum by golden-section search.

    ``sign`` is 1 to minimize and -1 to maximize the area.
    """
    best = Extremum(float(grid[index]), float(values[index]))
    if not 0 < index < len(grid) - 1:
        return best

    def objective(x: float) -> float:
        return sign * float(_area(config, np.asarray(x)))

    bracket = (grid[index - 1], grid[index], grid[index + 1])
    try:
        result = minimize_scalar(objective, bracket=bracket, method="golden")
    except ValueError:
        return best
    area = sign * float(result.fun)
    if sign * area < sign * best.area:
        return Extremum(float(result.x), area)
    return best


def _require_supported(config: PonceletConfig, operation: str) -> None:
    if config.scenario == Scenario.general:
        raise UnsupportedScenarioError(operation, config.scenario)
