"""Command-line interface for poncelet.

Every subcommand is a thin adapter over the library: it builds the inputs,
calls one operation, and writes a table as CSV, JSON, or SVG. Library
errors become exit status 2 for bad input and 3 when a numerical
self-check fails.
"""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import click
import structlog
from safir.click import display_help

from .constants import LOGGER_NAME
from .dependencies.config import config_dependency
from .exceptions import (
    GeometryError,
    InputValidationError,
    PonceletError,
    SingularIterationError,
    VerificationError,
)
from .export import (
    OutputFormat,
    Table,
    classification_table,
    conic_table,
    family_table,
    locus_table,
    orbit_table,
    profile_table,
    record_table,
    render,
    report_table,
    scene_table,
    state_table,
    steiner_table,
    tower_table,
)
from .models.area import Side
from .models.family import PonceletConfig, Scenario
from .models.geometry import CircleSpec, Point, Triangle
from .models.scene import CassiniVariant
from .services.extremal import (
    extremal_triangles,
    pedal_intersections,
    tangency_ratio,
    triangle_for_x,
)
from .services.family import (
    admissible_arcs,
    check_criterion,
    classify,
    family_sweep,
    make_config,
    make_general_config,
    triangle_at,
)
from .services.inconics import (
    conic_with_foci_o_h,
    inellipse_centered_at_circumcenter,
    steiner_ellipses,
)
from .services.invariants import expected_invariants, failed_reports, sweep
from .services.loci import (
    cassini_locus,
    orthic_vertex_locus,
    tangential_vertex_locus,
)
from .services.sequence import (
    dynamics_fixed_points,
    dynamics_orbit,
    homothetic_tower,
    poncelet_iterate,
)

__all__ = [
    "PonceletGroup",
    "construct",
    "extremal",
    "family",
    "help",
    "invariants",
    "locus",
    "main",
    "sequence",
]

F = TypeVar("F", bound=Callable[..., Any])


class CommandError(click.ClickException):
    """A library error reported with its exit status.

    Parameters
    ----------
    error
        The library error.
    exit_code
        Process exit status.
    """

    def __init__(self, error: PonceletError, exit_code: int) -> None:
        super().__init__(f"{error.error}: {error.message}")
        self.exit_code = exit_code


class PonceletGroup(click.Group):
    """Command group that maps library errors to exit statuses."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (InputValidationError, GeometryError) as e:
            raise CommandError(e, 2) from e
        except VerificationError as e:
            raise CommandError(e, 3) from e


def _family_options(func: F) -> F:
    options = [
        click.option(
            "--scenario",
            type=click.Choice([s.value for s in Scenario]),
            default=Scenario.center.value,
            show_default=True,
            help="Position of the circumcenter relative to the conic.",
        ),
        click.option(
            "--R", "radius", type=float, required=True, help="Circumradius."
        ),
        click.option(
            "--c",
            "c",
            type=float,
            required=True,
            help="Linear eccentricity of the conic.",
        ),
        click.option(
            "--center",
            "center",
            type=(float, float),
            default=None,
            help="Circle center, required for the general scenario.",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _output_options(func: F) -> F:
    func = click.option(
        "--format",
        "output_format",
        type=click.Choice([f.value for f in OutputFormat]),
        default=None,
        help="Output format, CSV unless noted.",
    )(func)
    return click.option(
        "--out",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Output file, standard output if omitted.",
    )(func)


def _triangle_options(func: F) -> F:
    return click.option(
        "--vertex",
        "vertices",
        type=(float, float),
        multiple=True,
        required=True,
        help="Vertex coordinates, given three times.",
    )(func)


@click.group(
    cls=PonceletGroup,
    context_settings={"help_option_names": ["-h", "--help"]},
)
@click.version_option(message="%(version)s")
@click.option(
    "--tol",
    type=click.FloatRange(0, 1e-3, min_open=True, max_open=True),
    default=None,
    help="Relative tolerance for geometric checks.",
)
@click.option(
    "--config-path",
    envvar="PONCELET_CONFIG_PATH",
    type=click.Path(path_type=Path),
    default=None,
    help="Configuration file.",
)
def main(*, tol: float | None, config_path: Path | None) -> None:
    """Poncelet triangle families inscribed in a circle about a conic."""
    if config_path:
        config_dependency.set_config_path(config_path)
    if tol is not None:
        config = config_dependency.config()
        update = {
            "tolerance": tol,
            "invariance_tolerance": max(config.invariance_tolerance, tol),
        }
        config_dependency.set_config(config.model_copy(update=update))


@main.command()
@click.argument("topic", default=None, required=False, nargs=1)
@click.pass_context
def help(ctx: click.Context, topic: str | None) -> None:
    """Show help for any command."""
    display_help(main, ctx, topic)


@main.group()
def family() -> None:
    """Build, classify, and sample Poncelet families."""


@family.command("check")
@_family_options
@_output_options
def family_check(
    *,
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Check the 3-Poncelet criterion and classify the family."""
    config = _config(scenario, radius, c, center)
    residual = check_criterion(config.circle, config.conic)
    if config.scenario == Scenario.general:
        classification = admissible_arcs(config)
    else:
        classification = classify(config)
    table = classification_table(config, classification, residual)
    _emit(table, output_format, out)


@family.command("sample")
@_family_options
@click.option(
    "--theta", type=float, required=True, help="Angle of vertex A."
)
@_output_options
def family_sample(
    *,
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
    theta: float,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Construct the triangle with a vertex at a given angle."""
    config = _config(scenario, radius, c, center)
    sample = triangle_at(config, theta)
    _emit(family_table("family sample", config, [sample]), output_format, out)


@family.command("sweep")
@_family_options
@click.option(
    "--n", type=int, default=360, show_default=True, help="Sample count."
)
@_output_options
def family_sweep_command(
    *,
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
    n: int,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Sample a family at equispaced vertex angles."""
    config = _config(scenario, radius, c, center)
    samples = family_sweep(config, n)
    _emit(family_table("family sweep", config, samples), output_format, out)


@main.group()
def invariants() -> None:
    """Measure and predict the invariants of a family."""


@invariants.command("sweep")
@_family_options
@click.option(
    "--n", type=int, default=360, show_default=True, help="Sample count."
)
@_output_options
def invariants_sweep(
    *,
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
    n: int,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Report the spread of every invariant across a family.

    For center and focus families a quantity that varies or misses its
    closed form is a verification failure.
    """
    config = _config(scenario, radius, c, center)
    reports = sweep(config, n)
    _emit(report_table(reports), output_format, out)
    if config.scenario != Scenario.general:
        failed = failed_reports(reports)
        if failed:
            names = ", ".join(r.name for r in failed)
            msg = f"Invariants failed: {names}"
            raise VerificationError(msg)


@invariants.command("expected")
@_family_options
@_output_options
def invariants_expected(
    *,
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Print the closed-form invariants of a center or focus family."""
    config = _config(scenario, radius, c, center)
    record = expected_invariants(config)
    _emit(record_table("invariants expected", record), output_format, out)


@main.group()
def construct() -> None:
    """Construct special conics inscribed in a triangle."""


@construct.command("inellipse")
@_triangle_options
@_output_options
def construct_inellipse(
    *,
    vertices: tuple[tuple[float, float], ...],
    out: Path | None,
    output_format: str | None,
) -> None:
    """Inellipse centered at the circumcenter."""
    t = _triangle(vertices)
    conic = inellipse_centered_at_circumcenter(t)
    _emit(conic_table("construct inellipse", t, conic), output_format, out)


@construct.command("oh-conic")
@_triangle_options
@_output_options
def construct_oh_conic(
    *,
    vertices: tuple[tuple[float, float], ...],
    out: Path | None,
    output_format: str | None,
) -> None:
    """Inconic with foci at the circumcenter and orthocenter."""
    t = _triangle(vertices)
    conic = conic_with_foci_o_h(t)
    _emit(conic_table("construct oh-conic", t, conic), output_format, out)


@construct.command("steiner")
@_triangle_options
@_output_options
def construct_steiner(
    *,
    vertices: tuple[tuple[float, float], ...],
    out: Path | None,
    output_format: str | None,
) -> None:
    """Steiner inellipse and circumellipse."""
    t = _triangle(vertices)
    _emit(steiner_table(t, steiner_ellipses(t)), output_format, out)


@main.group()
def sequence() -> None:
    """Iterate triangle and Poncelet-pair constructions."""


@sequence.command("homothety")
@_triangle_options
@click.option(
    "--ratio",
    type=click.Choice(["-2", "-0.5"]),
    default="-2",
    show_default=True,
    help="-2 for anticomplementary and -0.5 for medial triangles.",
)
@click.option(
    "--n", type=int, default=3, show_default=True, help="Number of levels."
)
@click.option(
    "--literal",
    is_flag=True,
    default=False,
    help="Use the affine-combination focus formulas.",
)
@_output_options
def sequence_homothety(
    *,
    vertices: tuple[tuple[float, float], ...],
    ratio: str,
    n: int,
    literal: bool,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Build a tower of anticomplementary or medial triangles."""
    t = _triangle(vertices)
    levels = homothetic_tower(t, float(ratio), n, literal=literal)
    _emit(tower_table(t, levels), output_format, out)


@sequence.command("iterate")
@click.option(
    "--c", "c", type=float, required=True, help="Initial focal distance."
)
@click.option(
    "--R", "radius", type=float, required=True, help="Initial circumradius."
)
@click.option(
    "--n", type=int, default=5, show_default=True, help="Number of states."
)
@_output_options
def sequence_iterate(
    *,
    c: float,
    radius: float,
    n: int,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Iterate focus families through their tangential circles.

    If the iteration reaches R = 2c the states before it are written and
    the command fails.
    """
    try:
        states = poncelet_iterate(c, radius, n)
    except SingularIterationError as e:
        _emit(state_table(e.partial), output_format, out)
        raise
    _emit(state_table(states), output_format, out)


@sequence.command("orbit")
@click.option(
    "--x0", type=float, required=True, help="Initial value of c/R."
)
@click.option(
    "--n", type=int, default=10, show_default=True, help="Number of values."
)
@click.option(
    "--literal",
    is_flag=True,
    default=False,
    help="Use the unsigned rational map.",
)
@_output_options
def sequence_orbit(
    *,
    x0: float,
    n: int,
    literal: bool,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Iterate the normalized parameter c/R."""
    fixed = dynamics_fixed_points(literal=literal)
    try:
        values = dynamics_orbit(x0, n, literal=literal)
    except SingularIterationError as e:
        _emit(orbit_table(e.partial, fixed), output_format, out)
        raise
    _emit(orbit_table(values, fixed), output_format, out)


@main.command()
@_family_options
@click.option(
    "--n",
    type=int,
    default=201,
    show_default=True,
    help="Number of tabulated abscissas.",
)
@_output_options
def extremal(
    *,
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
    n: int,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Locate the triangles of largest and smallest area.

    Output defaults to JSON. A disagreement between the closed forms and
    the numerical search is a verification failure.
    """
    config = _config(scenario, radius, c, center)
    profile = extremal_triangles(config)
    largest = triangle_for_x(config, profile.max.x)
    extra = {
        "pedal_points": pedal_intersections(config).points,
        "max_triangle": largest.triangle,
        "max_tangency_ratios": {
            str(side): tangency_ratio(config, largest, side) for side in Side
        },
    }
    table = profile_table(profile, n, extra)
    _emit(table, output_format, out, default=OutputFormat.json)
    if profile.oracle is not None and not profile.oracle.agrees:
        msg = "Closed-form extrema disagree with the numerical search"
        raise VerificationError(msg)


@main.group()
def locus() -> None:
    """Sample curves traced by points of a family."""


@locus.command("orthic")
@_family_options
@click.option(
    "--n", type=int, default=360, show_default=True, help="Sample count."
)
@_output_options
def locus_orthic(
    *,
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
    n: int,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Feet of the altitudes from a moving vertex of a center family."""
    config = _config(scenario, radius, c, center)
    polyline = orthic_vertex_locus(config, n)
    _emit(locus_table("locus orthic", [polyline]), output_format, out)


@locus.command("cassini")
@click.option("--R", "radius", type=float, required=True, help="Radius.")
@click.option(
    "--c", "c", type=float, required=True, help="Linear eccentricity."
)
@click.option(
    "--n", type=int, default=360, show_default=True, help="Sample count."
)
@click.option(
    "--variant",
    type=click.Choice([v.value for v in CassiniVariant]),
    default=CassiniVariant.cassini.value,
    show_default=True,
    help="Curve to sample.",
)
@_output_options
def locus_cassini(
    *,
    radius: float,
    c: float,
    n: int,
    variant: str,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Circumcenter loci for a fixed conic."""
    polylines = cassini_locus(radius, c, n, variant=CassiniVariant(variant))
    _emit(locus_table("locus cassini", polylines), output_format, out)


@locus.command("tangential")
@_family_options
@_output_options
def locus_tangential(
    *,
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Curve carrying the vertices of the tangential triangles."""
    config = _config(scenario, radius, c, center)
    scene = tangential_vertex_locus(config)
    _emit(scene_table("locus tangential", scene), output_format, out)


def _config(
    scenario: str,
    radius: float,
    c: float,
    center: tuple[float, float] | None,
) -> PonceletConfig:
    kind = Scenario(scenario)
    if kind != Scenario.general:
        return make_config(radius, c, kind)
    if center is None:
        msg = "The general scenario needs --center"
        raise click.UsageError(msg)
    return make_general_config(CircleSpec(Point(*center), radius), c)


def _emit(
    table: Table,
    output_format: str | None,
    out: Path | None,
    *,
    default: OutputFormat = OutputFormat.csv,
) -> None:
    fmt = OutputFormat(output_format) if output_format else default
    text = render(table, fmt)
    if out:
        out.write_text(text)
        logger = structlog.get_logger(LOGGER_NAME)
        logger.debug("Wrote output", command=table.command, path=str(out))
    else:
        click.echo(text, nl=False)


def _triangle(vertices: tuple[tuple[float, float], ...]) -> Triangle:
    if len(vertices) != 3:
        msg = f"Give --vertex exactly three times, not {len(vertices)}"
        raise click.BadParameter(msg, param_hint="--vertex")
    a, b, c = (Point(x, y) for x, y in vertices)
    return Triangle(a, b, c)
