"""CSV, JSON, and SVG output.

Every command produces a `Table`: named columns, rows of numbers, extra
fields for JSON, and optionally a figure. Numbers are written with the
configured number of significant digits and a lowercase exponent,
independent of the locale.
"""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

import numpy as np
from pydantic_core import to_json, to_jsonable_python

from .constants import SCHEMA_VERSION, SVG_CANVAS_SIZE
from .dependencies.config import config_dependency
from .exceptions import InputValidationError
from .models.area import AreaProfile
from .models.family import FamilyClassification, FamilySample, PonceletConfig
from .models.geometry import ORIGIN, Point, Triangle
from .models.inconics import PlacedConic, SteinerEllipses
from .models.invariants import InvariantRecord, InvariantReport
from .models.scene import Label, Polyline, SceneDescription
from .models.sequence import SequenceState, TowerLevel
from .templates import templates

__all__ = [
    "Cell",
    "OutputFormat",
    "Table",
    "classification_table",
    "conic_table",
    "family_scene",
    "family_table",
    "format_number",
    "locus_table",
    "orbit_table",
    "profile_table",
    "record_table",
    "render",
    "render_csv",
    "render_json",
    "render_svg",
    "report_table",
    "scene_table",
    "state_table",
    "steiner_table",
    "tower_table",
]

type Cell = float | int | str | None
"""Value of one table cell."""

_TRIANGLE_COLUMNS = ("ax", "ay", "bx", "by", "cx", "cy")

_HYPERBOLA_POINTS = 101
"""Points sampled on each branch of a drawn hyperbola."""


class OutputFormat(StrEnum):
    """Output document format."""

    csv = "csv"
    json = "json"
    svg = "svg"


@dataclass(slots=True)
class Table:
    """Output of one command."""

    command: str
    """Command name, recorded in JSON output."""

    columns: tuple[str, ...]
    """Column names, the CSV header."""

    rows: list[tuple[Cell, ...]] = field(default_factory=list)
    """Rows, each with one value per column."""

    extra: dict[str, Any] = field(default_factory=dict)
    """Additional top-level fields of the JSON document."""

    scene: SceneDescription | None = None
    """Figure for SVG output, if the command has one."""


def format_number(value: float, precision: int | None = None) -> str:
    """Format a number with a fixed count of significant digits.

    Parameters
    ----------
    value
        The number.
    precision
        Significant digits, or `None` for the configured precision.
    """
    if precision is None:
        precision = config_dependency.config().output_precision
    if value == 0:
        return "0"
    return f"{value:.{precision}g}"


def render(
    table: Table, output_format: OutputFormat, *, precision: int | None = None
) -> str:
    """Render a table in the requested format.

    Raises
    ------
    InputValidationError
        Raised if SVG is requested for a table without a figure.
    """
    if precision is None:
        precision = config_dependency.config().output_precision
    match output_format:
        case OutputFormat.csv:
            return render_csv(table, precision)
        case OutputFormat.json:
            return render_json(table, precision)
        case OutputFormat.svg:
            if table.scene is None:
                msg = f"{table.command} has no SVG output"
                raise InputValidationError(msg)
            return render_svg(table.scene, precision)


def render_csv(table: Table, precision: int) -> str:
    """Render the rows as CSV with a header line."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(value, precision) for value in row])
    return buffer.getvalue()


def render_json(table: Table, precision: int) -> str:
    """Render the table as one JSON object with ``schema_version``."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": table.command,
        "rows": [
            dict(zip(table.columns, row, strict=True)) for row in table.rows
        ],
        **table.extra,
    }
    data = _rounded(to_jsonable_python(payload), precision)
    return to_json(data, indent=2).decode() + "\n"


def render_svg(scene: SceneDescription, precision: int) -> str:
    """Render a figure as a standalone SVG 1.1 document.

    The drawing group flips the y-axis so that scene coordinates are drawn
    with y pointing up. The view box is the square around the bounding
    box of the scene with a 5% margin.

    Raises
    ------
    InputValidationError
        Raised if the scene is empty.
    """
    points = scene.points()
    if not points:
        msg = "Nothing to draw"
        raise InputValidationError(msg)
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    extent = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    side = 1.1 * extent
    middle = Point((max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2)

    def number(value: float) -> str:
        return format_number(value, precision)

    def coordinates(path: Iterable[Point]) -> str:
        return " ".join(f"{number(p.x)},{number(p.y)}" for p in path)

    ellipses = []
    paths = []
    for conic in scene.conics:
        if conic.base.is_ellipse:
            rx, ry = conic.semi_axes
            ellipses.append(
                {
                    "cx": number(conic.center.x),
                    "cy": number(conic.center.y),
                    "rx": number(rx),
                    "ry": number(ry),
                    "angle": number(math.degrees(conic.rotation)),
                }
            )
        else:
            paths.extend(
                {"points": coordinates(branch), "stroke": "#d62728"}
                for branch in _hyperbola_branches(conic, side)
            )
    polygons = [
        {"points": coordinates(t.vertices), "stroke": "#2ca02c"}
        for t in scene.triangles
    ]
    for polyline in scene.polylines:
        entry = {"points": coordinates(polyline.points), "stroke": "#9467bd"}
        (polygons if polyline.closed else paths).append(entry)

    template = templates.get_template("scene.svg.jinja")
    return template.render(
        size=SVG_CANVAS_SIZE,
        view_box=" ".join(
            number(v)
            for v in (
                middle.x - side / 2,
                -(middle.y + side / 2),
                side,
                side,
            )
        ),
        stroke_width=number(side / 500),
        font_size=number(side / 40),
        circles=[
            {
                "cx": number(c.center.x),
                "cy": number(c.center.y),
                "r": number(c.radius),
            }
            for c in scene.circles
        ],
        ellipses=ellipses,
        paths=paths,
        polygons=polygons,
        labels=[
            {
                "x": number(label.at.x),
                "y": number(-label.at.y),
                "text": label.text,
            }
            for label in scene.labels
        ],
    )


def family_scene(
    config: PonceletConfig, triangles: Iterable[Triangle]
) -> SceneDescription:
    """Draw the circle and conic of a family with some of its triangles."""
    return SceneDescription(
        circles=[config.circle],
        conics=[PlacedConic(base=config.conic, center=ORIGIN, rotation=0.0)],
        triangles=list(triangles),
    )


def family_table(
    command: str, config: PonceletConfig, samples: list[FamilySample]
) -> Table:
    """Tabulate family samples with their closure residuals."""
    return Table(
        command=command,
        columns=("theta", *_TRIANGLE_COLUMNS, "closure_residual"),
        rows=[
            (s.theta, *_triangle_cells(s.triangle), s.closure_residual)
            for s in samples
        ],
        extra={"scenario": config.scenario},
        scene=family_scene(config, (s.triangle for s in samples)),
    )


def classification_table(
    config: PonceletConfig,
    classification: FamilyClassification,
    residual: float,
) -> Table:
    """Summarize the criterion and classification of a family."""
    rows: list[tuple[Cell, ...]] = [
        ("scenario", str(config.scenario)),
        ("criterion_residual", residual),
        ("conic_kind", str(classification.conic_kind)),
        ("alpha", config.conic.alpha),
        ("beta", config.conic.beta),
    ]
    if classification.triangle_kind is not None:
        rows.append(("family_kind", str(classification.triangle_kind)))
    rows.append(("arc_length", classification.total_length))
    rows.append(
        (
            "right_triangle_count_bound",
            classification.right_triangle_count_bound,
        )
    )
    return Table(
        command="family check",
        columns=("name", "value"),
        rows=rows,
        extra={
            "admissible_arcs": classification.admissible_arcs,
            "boundary_points": classification.boundary_points,
        },
        scene=family_scene(config, []),
    )


def report_table(reports: list[InvariantReport]) -> Table:
    """Tabulate invariant sweep reports."""
    return Table(
        command="invariants sweep",
        columns=("name", "n", "mean", "max_abs_dev", "expected", "verdict"),
        rows=[
            (
                r.name,
                r.sample_count,
                r.mean,
                r.max_abs_deviation,
                r.expected,
                str(r.verdict),
            )
            for r in reports
        ],
    )


def record_table(command: str, record: InvariantRecord) -> Table:
    """Tabulate the defined fields of an invariant record."""
    return Table(
        command=command,
        columns=("name", "value"),
        rows=[
            (name, value)
            for name, value in record.model_dump(exclude_none=True).items()
        ],
    )


def conic_table(command: str, triangle: Triangle, conic: PlacedConic) -> Table:
    """Describe a conic constructed for a triangle."""
    return Table(
        command=command,
        columns=("name", "value"),
        rows=_conic_rows("", conic),
        scene=SceneDescription(conics=[conic], triangles=[triangle]),
    )


def steiner_table(triangle: Triangle, ellipses: SteinerEllipses) -> Table:
    """Describe the Steiner ellipses of a triangle."""
    return Table(
        command="construct steiner",
        columns=("name", "value"),
        rows=[
            *_conic_rows("inellipse_", ellipses.inellipse),
            *_conic_rows("circumellipse_", ellipses.circumellipse),
        ],
        scene=SceneDescription(
            conics=[ellipses.inellipse, ellipses.circumellipse],
            triangles=[triangle],
        ),
    )


def tower_table(base: Triangle, levels: list[TowerLevel]) -> Table:
    """Tabulate the levels of a homothetic tower."""
    return Table(
        command="sequence homothety",
        columns=(
            "level",
            "ratio",
            *_TRIANGLE_COLUMNS,
            "f1x",
            "f1y",
            "f2x",
            "f2y",
        ),
        rows=[
            (
                level.level,
                level.ratio,
                *_triangle_cells(level.triangle),
                level.foci.f1.x,
                level.foci.f1.y,
                level.foci.f2.x,
                level.foci.f2.y,
            )
            for level in levels
        ],
        scene=SceneDescription(
            triangles=[base, *(level.triangle for level in levels)],
            labels=[
                Label(at=level.foci.f1, text=f"F{level.level}")
                for level in levels
            ],
        ),
    )


def state_table(states: list[SequenceState]) -> Table:
    """Tabulate the states of an iterated focus family."""
    return Table(
        command="sequence iterate",
        columns=("step", "c", "R", "x", "beta_sign"),
        rows=[
            (s.step, s.c, s.radius, s.x, s.beta_sign) for s in states
        ],
    )


def orbit_table(values: list[float], fixed_points: list[float]) -> Table:
    """Tabulate an orbit of the normalized map."""
    return Table(
        command="sequence orbit",
        columns=("step", "x"),
        rows=[(step, x) for step, x in enumerate(values, start=1)],
        extra={"fixed_points": fixed_points},
    )


def profile_table(
    profile: AreaProfile, n: int, extra: dict[str, Any] | None = None
) -> Table:
    """Sample the area function, marking its critical points.

    The critical points are merged into ``n`` equispaced abscissas over the
    domain.
    """
    lo, hi = profile.domain
    marked = {x: 1 for x in profile.critical_points}
    for x in np.linspace(lo, hi, n):
        marked.setdefault(float(x), 0)
    rows: list[tuple[Cell, ...]] = [
        (x, profile.f(x), flag) for x, flag in sorted(marked.items())
    ]
    curve = [Point(float(x), float(area)) for x, area, _ in rows]
    labels = [Label(at=Point(profile.max.x, profile.max.area), text="max")]
    if profile.min is not None:
        labels.append(
            Label(at=Point(profile.min.x, profile.min.area), text="min")
        )
    payload: dict[str, Any] = {
        "scenario": profile.scenario,
        "domain": profile.domain,
        "critical_points": profile.critical_points,
        "max": profile.max,
        "min": profile.min,
        "oracle": profile.oracle,
    }
    payload.update(extra or {})
    return Table(
        command="extremal",
        columns=("x", "f(x)", "is_critical"),
        rows=rows,
        extra=payload,
        scene=SceneDescription(
            polylines=[Polyline(curve)] if len(curve) >= 2 else [],
            labels=labels,
        ),
    )


def locus_table(command: str, polylines: list[Polyline]) -> Table:
    """Tabulate the points of one or more sampled curves."""
    return Table(
        command=command,
        columns=("curve", "x", "y"),
        rows=[
            (index, p.x, p.y)
            for index, polyline in enumerate(polylines)
            for p in polyline.points
        ],
        extra={"closed": [polyline.closed for polyline in polylines]},
        scene=SceneDescription(polylines=polylines),
    )


def scene_table(command: str, scene: SceneDescription) -> Table:
    """Describe the circles and conics of a figure."""
    rows: list[tuple[Cell, ...]] = []
    for index, circle in enumerate(scene.circles):
        rows.extend(
            [
                (f"circle{index}_center_x", circle.center.x),
                (f"circle{index}_center_y", circle.center.y),
                (f"circle{index}_radius", circle.radius),
            ]
        )
    for index, conic in enumerate(scene.conics):
        rows.extend(_conic_rows(f"conic{index}_", conic))
    return Table(
        command=command, columns=("name", "value"), rows=rows, scene=scene
    )


def _cell(value: Cell, precision: int) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format_number(value, precision)
    return str(value)


def _conic_rows(prefix: str, conic: PlacedConic) -> list[tuple[Cell, ...]]:
    major, minor = conic.semi_axes
    first, second = conic.foci
    return [
        (f"{prefix}kind", str(conic.base.kind)),
        (f"{prefix}center_x", conic.center.x),
        (f"{prefix}center_y", conic.center.y),
        (f"{prefix}rotation", conic.rotation),
        (f"{prefix}semi_axis_x", major),
        (f"{prefix}semi_axis_y", minor),
        (f"{prefix}focus1_x", first.x),
        (f"{prefix}focus1_y", first.y),
        (f"{prefix}focus2_x", second.x),
        (f"{prefix}focus2_y", second.y),
    ]


def _hyperbola_branches(conic: PlacedConic, reach: float) -> list[list[Point]]:
    a, b = conic.semi_axes
    limit = math.asinh(reach / b)
    branches = []
    for sign in (1.0, -1.0):
        branch = [
            conic.to_global(Point(sign * a * math.cosh(t), b * math.sinh(t)))
            for t in np.linspace(-limit, limit, _HYPERBOLA_POINTS)
        ]
        branches.append(branch)
    return branches


def _rounded(value: Any, precision: int) -> Any:
    if isinstance(value, float):
        if not math.isfinite(value):
            return value
        return float(format_number(value, precision))
    if isinstance(value, dict):
        return {k: _rounded(v, precision) for k, v in value.items()}
    if isinstance(value, list):
        return [_rounded(v, precision) for v in value]
    return value


def _triangle_cells(t: Triangle) -> tuple[float, ...]:
    return (t.a.x, t.a.y, t.b.x, t.b.y, t.c.x, t.c.y)
