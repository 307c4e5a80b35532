"""Sequences of triangles and of Poncelet pairs.

Two constructions live here. Homothetic towers repeatedly take the
anticomplementary or medial triangle and track the foci of the conic with
foci at circumcenter and orthocenter. The iterated focus family replaces a
family by the circumcircle of its tangential triangles, which is again a
focus-scenario Poncelet pair.
"""

from __future__ import annotations

import math

import structlog
from structlog.stdlib import BoundLogger

from ..constants import LOGGER_NAME
from ..dependencies.config import resolve_tolerance
from ..exceptions import (
    DegenerateTriangleError,
    InputValidationError,
    SingularIterationError,
    VerificationError,
)
from ..models.family import PonceletConfig, Scenario, TriangleKind
from ..models.geometry import CentralConicStd, CircleSpec, Point, Triangle
from ..models.sequence import FociPair, SequenceState, TowerLevel
from .centers import center_set, homothety_image, triangle_kind
from .family import check_criterion
from .inconics import conic_with_foci_o_h

__all__ = [
    "config_from_state",
    "dynamics_fixed_points",
    "dynamics_orbit",
    "homothetic_tower",
    "poncelet_iterate",
]

_RATIO_BASES = (-2.0, -0.5)
"""Homothety ratios giving the anticomplementary and medial triangles."""


def homothetic_tower(
    t: Triangle,
    ratio_base: float,
    n: int,
    *,
    literal: bool = False,
    tol: float | None = None,
) -> list[TowerLevel]:
    """Build repeated anticomplementary or medial triangles.

    Parameters
    ----------
    t
        Base triangle, acute or obtuse.
    ratio_base
        -2 for anticomplementary and -1/2 for medial triangles.
    n
        Number of levels.
    literal
        Use the affine combinations :math:`(2 + r^n)O + H` and
        :math:`2O + (\\pm 1 + r^n)H` for the foci instead of the homothety
        images. These are not affine combinations for :math:`n \\ge 2` and
        the triangles are then not checked against them.
    tol
        Relative tolerance, or `None` for the configured one.

    Returns
    -------
    list of TowerLevel
        Level :math:`k` holds the image of ``t`` under the homothety about
        the centroid with ratio :math:`r^k` and the foci of the inscribed
        conic: the images of the circumcenter and orthocenter.

    Raises
    ------
    InputValidationError
        Raised for another ratio or fewer than one level.
    DegenerateTriangleError
        Raised for a right triangle.
    VerificationError
        Raised if an image triangle is not circumscribed about the conic
        with the computed foci.
    """
    tol = resolve_tolerance(tol)
    if ratio_base not in _RATIO_BASES:
        msg = f"Ratio must be -2 or -1/2, not {ratio_base}"
        raise InputValidationError(msg)
    if n < 1:
        msg = f"Number of levels must be positive, not {n}"
        raise InputValidationError(msg)
    if triangle_kind(t, tol=tol) == TriangleKind.right:
        msg = "A homothetic tower needs an oblique triangle"
        raise DegenerateTriangleError(msg)

    centers = center_set(t, tol=tol)
    g = centers.centroid
    o = centers.circumcenter
    h = centers.orthocenter
    levels = []
    for k in range(1, n + 1):
        ratio = ratio_base**k
        image = homothety_image(t, g, ratio)
        if literal:
            shift = 1.0 if ratio_base == -2.0 else -1.0
            foci = FociPair(
                f1=o * (2 + ratio) + h, f2=o * 2 + h * (shift + ratio)
            )
        else:
            foci = FociPair(f1=g + (o - g) * ratio, f2=g + (h - g) * ratio)
            _check_foci(
                image, foci, tol, tol * abs(ratio) * centers.circumradius
            )
        levels.append(
            TowerLevel(level=k, ratio=ratio, triangle=image, foci=foci)
        )
    return levels


def poncelet_iterate(
    c: float,
    radius: float,
    n: int,
    *,
    tol: float | None = None,
    logger: BoundLogger | None = None,
) -> list[SequenceState]:
    """Iterate focus-scenario Poncelet pairs.

    Each successor is the circle carrying the tangential triangles of the
    previous family, with :math:`c' = c(5R^2 - 4c^2)/(R^2 - 4c^2)` and
    :math:`R' = 2R^3/|R^2 - 4c^2|`.

    Parameters
    ----------
    c
        Initial focal distance, also the abscissa of the circumcenter.
    radius
        Initial circumradius.
    n
        Number of states, including the initial one.
    tol
        Relative tolerance, or `None` for the configured one.
    logger
        Logger to use.

    Raises
    ------
    SingularIterationError
        Raised if a state has :math:`R = 2c`, carrying the states before it.
    VerificationError
        Raised if a state fails the 3-Poncelet criterion.
    """
    tol = resolve_tolerance(tol)
    if not radius > 0 or not c >= 0:
        msg = f"Need R > 0 and c >= 0, not R = {radius}, c = {c}"
        raise InputValidationError(msg)
    if n < 1:
        msg = f"Number of states must be positive, not {n}"
        raise InputValidationError(msg)
    logger = (logger or structlog.get_logger(LOGGER_NAME)).bind(
        c=c, radius=radius, n=n
    )

    states: list[SequenceState] = []
    for step in range(1, n + 1):
        r2 = radius * radius
        denominator = r2 - 4 * c * c
        if abs(denominator) < tol * r2:
            logger.warning("Iteration reached R = 2c", step=step)
            raise SingularIterationError(step, states)
        state = SequenceState(
            step=step, c=c, radius=radius, alpha=r2 / 4, beta=r2 / 4 - c * c
        )
        config_from_state(state, tol=tol)
        states.append(state)
        c, radius = (
            c * (5 * r2 - 4 * c * c) / denominator,
            2 * radius**3 / abs(denominator),
        )
    logger.debug("Finished iteration", states=len(states))
    return states


def config_from_state(
    state: SequenceState, *, tol: float | None = None
) -> PonceletConfig:
    """Build the focus-scenario family of a sequence state.

    Raises
    ------
    VerificationError
        Raised if the state fails the 3-Poncelet criterion.
    """
    tol = resolve_tolerance(tol)
    circle = CircleSpec(Point(state.c, 0.0), state.radius)
    conic = CentralConicStd(state.alpha, state.beta)
    residual = check_criterion(circle, conic)
    if abs(residual) > tol * state.radius**4:
        msg = f"State {state.step} is not a 3-Poncelet pair"
        raise VerificationError(msg)
    return PonceletConfig(circle=circle, conic=conic, scenario=Scenario.focus)


def dynamics_orbit(
    x0: float, n: int, *, literal: bool = False, tol: float | None = None
) -> list[float]:
    """Iterate the normalized parameter :math:`x = c/R`.

    Parameters
    ----------
    x0
        Initial value.
    n
        Number of values, including ``x0``.
    literal
        Use :math:`x(5 - 4x^2)/(2(1 - 4x^2))` instead of the map
        :math:`\\operatorname{sgn}(1 - 4x^2)\\,x(5 - 4x^2)/2`, which is the
        one that matches `poncelet_iterate`.
    tol
        Relative tolerance, or `None` for the configured one.

    Raises
    ------
    SingularIterationError
        Raised if a value is within tolerance of 1/2, carrying the values
        before it.
    """
    tol = resolve_tolerance(tol)
    if not x0 >= 0:
        msg = f"Initial value must be non-negative, not {x0}"
        raise InputValidationError(msg)
    if n < 1:
        msg = f"Number of values must be positive, not {n}"
        raise InputValidationError(msg)
    orbit: list[float] = []
    x = x0
    for step in range(1, n + 1):
        gap = 1 - 4 * x * x
        if abs(gap) < tol:
            raise SingularIterationError(step, orbit)
        orbit.append(x)
        if literal:
            x = x * (5 - 4 * x * x) / (2 * gap)
        else:
            x = math.copysign(1.0, gap) * x * (5 - 4 * x * x) / 2
    return orbit


def dynamics_fixed_points(*, literal: bool = False) -> list[float]:
    """Return the real fixed points of the normalized map."""
    if literal:
        return [0.0]
    root = math.sqrt(7) / 2
    return [-root, 0.0, root]


def _check_foci(
    image: Triangle, foci: FociPair, tol: float, limit: float
) -> None:
    conic = conic_with_foci_o_h(image, tol=tol)
    first, second = conic.foci
    direct = max(first.distance(foci.f1), second.distance(foci.f2))
    swapped = max(first.distance(foci.f2), second.distance(foci.f1))
    if min(direct, swapped) > limit:
        msg = "Image triangle is not circumscribed about the tower conic"
        raise VerificationError(msg)
