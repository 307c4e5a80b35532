"""Exceptions for poncelet."""

from __future__ import annotations

from typing import ClassVar

__all__ = [
    "CollapseError",
    "DegenerateConicError",
    "DegenerateTriangleError",
    "DomainError",
    "FocalAxisError",
    "GeometricInconsistencyError",
    "GeometryError",
    "InadmissibleVertexError",
    "InfeasibleConfigError",
    "InputValidationError",
    "InsufficientSamplesError",
    "InvalidConicError",
    "NoPolarError",
    "PolarCircleUndefinedError",
    "PonceletError",
    "SectionRatioError",
    "SingularIterationError",
    "UnsupportedScenarioError",
    "VerificationError",
]


class PonceletError(Exception):
    """Base class for all poncelet errors.

    Parameters
    ----------
    message
        Human-readable description of the problem.
    """

    error: ClassVar[str] = "poncelet_error"
    """Short machine-readable code, used in JSON error output."""

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class InputValidationError(PonceletError):
    """The caller supplied parameters that cannot describe a valid input.

    The command-line interface maps these to exit status 2.
    """

    error = "invalid_input"


class InvalidConicError(InputValidationError):
    """The coefficients do not describe a central conic."""

    error = "invalid_conic"


class NoPolarError(InputValidationError):
    """The polar of the center of a central conic does not exist."""

    error = "no_polar"


class DegenerateConicError(InputValidationError):
    """The requested circle and focal distance produce a degenerate conic."""

    error = "degenerate_conic"


class FocalAxisError(InputValidationError):
    """The conic does not have its focal axis on the x-axis."""

    error = "focal_axis"


class InadmissibleVertexError(InputValidationError):
    """No Poncelet triangle has a vertex at the requested angle.

    Parameters
    ----------
    theta
        The rejected angle in radians.
    arcs
        Admissible arcs as ``(theta_lo, theta_hi)`` pairs.
    """

    error = "inadmissible_vertex"

    def __init__(
        self, theta: float, arcs: list[tuple[float, float]]
    ) -> None:
        shown = ", ".join(f"[{lo:.6g}, {hi:.6g})" for lo, hi in arcs)
        msg = f"Angle {theta:.12g} is outside the admissible arcs {shown}"
        super().__init__(msg)
        self.theta = theta
        self.arcs = arcs


class InfeasibleConfigError(InputValidationError):
    """The circle and conic do not form a valid 3-Poncelet pair."""

    error = "infeasible_config"


class UnsupportedScenarioError(InputValidationError):
    """The operation is only defined for other scenarios.

    Parameters
    ----------
    operation
        Name of the operation that was requested.
    scenario
        The scenario of the configuration.
    """

    error = "unsupported_scenario"

    def __init__(self, operation: str, scenario: str) -> None:
        msg = f"{operation} is not defined for the {scenario} scenario"
        super().__init__(msg)
        self.scenario = scenario


class DomainError(InputValidationError):
    """An argument lies outside the domain of a function."""

    error = "outside_domain"


class CollapseError(InputValidationError):
    """A homothety with ratio zero collapses every figure to a point."""

    error = "collapse"


class InsufficientSamplesError(InputValidationError):
    """Too few admissible samples to judge invariance."""

    error = "insufficient_samples"


class GeometryError(PonceletError):
    """A construction failed for geometric or numerical reasons."""

    error = "geometry"


class GeometricInconsistencyError(GeometryError):
    """Intermediate results contradict each other beyond tolerance."""

    error = "geometric_inconsistency"


class DegenerateTriangleError(GeometryError):
    """The triangle is collinear, or right where an oblique one is needed."""

    error = "degenerate_triangle"


class PolarCircleUndefinedError(GeometryError):
    """Only obtuse triangles have a real polar circle."""

    error = "polar_circle_undefined"


class SectionRatioError(GeometryError):
    """The tangency point of a side cannot be located by section ratio."""

    error = "section_ratio"


class SingularIterationError(GeometryError):
    """The Poncelet iteration hit the singular configuration R = 2c.

    Parameters
    ----------
    step
        One-based index of the state at which the iteration stopped.
    partial
        The states (or normalized values) computed before the singularity.
    """

    error = "singular_iteration"

    def __init__(self, step: int, partial: list) -> None:
        msg = f"Iteration is singular at step {step}"
        super().__init__(msg)
        self.step = step
        self.partial = partial


class VerificationError(PonceletError):
    """A numerical self-check failed.

    The command-line interface maps these to exit status 3.
    """

    error = "verification_failed"
