"""Tests for family construction and classification."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from safir.logging import LogLevel

from poncelet.config import Config
from poncelet.dependencies.config import config_dependency
from poncelet.exceptions import (
    DegenerateConicError,
    FocalAxisError,
    InadmissibleVertexError,
    InfeasibleConfigError,
    InputValidationError,
    UnsupportedScenarioError,
)
from poncelet.models.family import FamilyKind, PonceletConfig, Scenario
from poncelet.models.geometry import (
    CentralConicStd,
    CircleSpec,
    ConicKind,
    Line,
    Point,
)
from poncelet.services.centers import altitude_orthocenter
from poncelet.services.conics import line_conic_tangency
from poncelet.services.family import (
    admissible_arcs,
    admissible_conic,
    axis_relations,
    check_criterion,
    classify,
    config_from_circle,
    family_sweep,
    make_config,
    make_general_config,
    orthocenter_circle,
    orthocenter_circle_congruent,
    pencil_discriminant,
    triangle_at,
)

from ..support.geometry import assert_point, assert_triangle
from ..support.logging import parse_log


def test_make_config_center(c1: PonceletConfig) -> None:
    assert c1.scenario == Scenario.center
    assert c1.conic.alpha == pytest.approx(1.5625)
    assert c1.conic.beta == pytest.approx(0.5625)
    assert c1.c == pytest.approx(1.0)
    assert check_criterion(c1.circle, c1.conic) == pytest.approx(0.0)


def test_make_config_focus(f1: PonceletConfig, f2: PonceletConfig) -> None:
    assert f1.circle.center == Point(1.0, 0.0)
    assert f1.conic.alpha == pytest.approx(1.5625)
    assert f1.conic.beta == pytest.approx(0.5625)
    assert f1.focus_sign == 1.0
    assert f2.conic.kind == ConicKind.hyperbola
    assert check_criterion(f2.circle, f2.conic) == pytest.approx(0.0)


def test_make_config_degenerate() -> None:
    with pytest.raises(DegenerateConicError):
        make_config(1.0, 1.0, Scenario.center)
    with pytest.raises(DegenerateConicError):
        make_config(2.0, 1.0, Scenario.focus)
    with pytest.raises(UnsupportedScenarioError):
        make_config(2.0, 1.0, Scenario.general)
    with pytest.raises(InputValidationError):
        make_config(-1.0, 1.0, Scenario.center)
    with pytest.raises(InputValidationError):
        make_config(1.0, -0.5, Scenario.focus)


def test_make_general_config(general: PonceletConfig) -> None:
    assert general.scenario == Scenario.general
    assert general.conic.beta == pytest.approx(3.51 * 2.31 / 16)
    assert general.c == pytest.approx(1.0)
    residual = check_criterion(general.circle, general.conic)
    assert residual == pytest.approx(0.0, abs=1e-12)

    centered = make_general_config(CircleSpec(Point(0.0, 0.0), 2.0), 1.0)
    assert centered.scenario == Scenario.center
    assert centered.conic.beta == pytest.approx(0.5625)

    at_focus = make_general_config(CircleSpec(Point(1.0, 0.0), 2.5), 1.0)
    assert at_focus.scenario == Scenario.focus


def test_admissible_conic_degenerate() -> None:
    with pytest.raises(DegenerateConicError):
        admissible_conic(CircleSpec(Point(0.0, 0.0), 1.0), 1.0)


def test_config_from_circle_rejects() -> None:
    circle = CircleSpec(Point(0.0, 0.0), 2.0)
    with pytest.raises(InfeasibleConfigError):
        config_from_circle(circle, CentralConicStd(1.0, 0.5))
    with pytest.raises(FocalAxisError):
        config_from_circle(circle, CentralConicStd(0.5, 1.0))


def test_classify_acute(c1: PonceletConfig, f1: PonceletConfig) -> None:
    for config in (c1, f1):
        classification = classify(config)
        assert classification.conic_kind == ConicKind.ellipse
        assert classification.triangle_kind == FamilyKind.all_acute
        assert classification.admissible_arcs == [(0.0, math.tau)]
        assert classification.boundary_points == []
        assert classification.total_length == pytest.approx(math.tau)


def test_classify_obtuse_center(c2: PonceletConfig) -> None:
    classification = classify(c2)
    assert classification.conic_kind == ConicKind.ellipse
    assert classification.triangle_kind == FamilyKind.all_obtuse
    assert len(classification.boundary_points) == 4
    for point in classification.boundary_points:
        assert abs(point.x) == pytest.approx(0.636169, abs=1e-5)
        assert abs(point.y) == pytest.approx(0.292044, abs=1e-5)
    assert len(classification.admissible_arcs) == 2
    assert classification.contains(math.pi / 2)
    assert classification.contains(3 * math.pi / 2)
    assert not classification.contains(0.0)
    assert not classification.contains(math.pi)


def test_classify_obtuse_focus(f2: PonceletConfig) -> None:
    classification = classify(f2)
    assert classification.conic_kind == ConicKind.hyperbola
    assert classification.triangle_kind == FamilyKind.all_obtuse
    assert len(classification.boundary_points) == 2
    for point in classification.boundary_points:
        assert point.x == pytest.approx(1.6875)
    assert classification.total_length < math.tau


def test_classify_rejects(general: PonceletConfig) -> None:
    with pytest.raises(UnsupportedScenarioError):
        classify(general)
    with pytest.raises(InfeasibleConfigError):
        classify(make_config(0.5, 1.0, Scenario.center))
    with pytest.raises(InfeasibleConfigError):
        classify(make_config(0.6, 1.0, Scenario.focus))


def test_admissible_arcs_general(general: PonceletConfig) -> None:
    classification = admissible_arcs(general)
    assert classification.triangle_kind is None
    assert classification.total_length > 0
    discriminant = pencil_discriminant(general)
    expected = 0 if discriminant < 0 else 2
    assert classification.right_triangle_count_bound == expected


def test_triangle_at_center(c1: PonceletConfig) -> None:
    sample = triangle_at(c1, math.pi / 2)
    assert sample.theta == pytest.approx(math.pi / 2)
    assert_triangle(
        sample.triangle,
        ((0.0, 2.0), (-1.854049, -0.75), (1.854049, -0.75)),
    )
    assert sample.closure_residual < 1e-9
    assert sample.triangle.signed_area > 0


def test_triangle_at_focus(f1: PonceletConfig) -> None:
    sample = triangle_at(f1, math.pi)
    assert_triangle(
        sample.triangle,
        ((-1.5, 0.0), (1.25, -2.487469), (1.25, 2.487469)),
    )


def test_triangle_at_inadmissible(c2: PonceletConfig) -> None:
    with pytest.raises(InadmissibleVertexError) as excinfo:
        triangle_at(c2, 0.0)
    assert excinfo.value.error == "inadmissible_vertex"
    sample = triangle_at(c2, math.pi / 2)
    assert_point(sample.triangle.a, (0.0, 0.7))


def test_triangle_at_general(general: PonceletConfig) -> None:
    lo, hi = admissible_arcs(general).admissible_arcs[0]
    sample = triangle_at(general, (lo + hi) / 2)
    for vertex in sample.triangle.vertices:
        assert general.circle.residual(vertex) == pytest.approx(0, abs=1e-9)
    assert sample.closure_residual < 1e-8


def test_family_sweep(c1: PonceletConfig, c2: PonceletConfig) -> None:
    samples = family_sweep(c1, 12)
    assert len(samples) == 12
    thetas = [s.theta for s in samples]
    assert thetas == sorted(thetas)
    assert all(s.closure_residual < 1e-9 for s in samples)

    classification = classify(c2)
    samples = family_sweep(c2, 20)
    assert len(samples) == 20
    assert all(classification.contains(s.theta) for s in samples)

    with pytest.raises(InputValidationError):
        family_sweep(c1, 0)


@pytest.mark.parametrize("name", ["c1", "c2", "c3", "f1", "f2"])
def test_family_closes(name: str, request: pytest.FixtureRequest) -> None:
    config: PonceletConfig = request.getfixturevalue(name)
    scale = config.radius**2
    samples = family_sweep(config, 360)
    assert len(samples) == 360
    for sample in samples:
        t = sample.triangle
        assert sample.closure_residual < 1e-9 * scale
        for vertex in t.vertices:
            residual = config.circle.residual(vertex)
            assert residual == pytest.approx(0.0, abs=1e-9 * scale)
        for p, q in ((t.a, t.b), (t.b, t.c), (t.c, t.a)):
            tangency = line_conic_tangency(config.conic, Line.through(p, q))
            assert tangency == pytest.approx(0.0, abs=1e-9 * scale)


def test_orthocenter_sweep(c1: PonceletConfig, f1: PonceletConfig) -> None:
    for sample in family_sweep(c1, 90):
        h = altitude_orthocenter(sample.triangle)
        assert h.norm() == pytest.approx(0.5, abs=1e-9)
    for sample in family_sweep(f1, 90):
        h = altitude_orthocenter(sample.triangle)
        assert_point(h, (-1.0, 0.0), abs_tol=1e-8)


def test_orthocenter_circle(c1: PonceletConfig, f1: PonceletConfig) -> None:
    circle = orthocenter_circle(c1)
    assert circle.center == Point(-0.0, -0.0)
    assert circle.radius == pytest.approx(0.5)
    assert not orthocenter_circle_congruent(c1)

    circle = orthocenter_circle(f1)
    assert circle.center == Point(-1.0, -0.0)
    assert circle.radius == pytest.approx(0.0)


def test_axis_relations(
    c1: PonceletConfig, c2: PonceletConfig, f1: PonceletConfig
) -> None:
    relations = axis_relations(c1)
    assert relations.radius_from_axes == pytest.approx(2.0)
    assert relations.oh == pytest.approx(0.5)
    relations = axis_relations(c2)
    assert relations.radius_from_axes == pytest.approx(0.7)
    assert relations.oh == pytest.approx(1 / 0.7)
    relations = axis_relations(f1)
    assert relations.radius_from_axes == pytest.approx(2.5)
    assert relations.oh == pytest.approx(2.0)


@given(
    radius=st.floats(min_value=1.2, max_value=3.0),
    c=st.floats(min_value=0.1, max_value=1.0),
    theta=st.floats(min_value=0.0, max_value=math.tau),
)
def test_center_family_closes(radius: float, c: float, theta: float) -> None:
    config = make_config(radius, c, Scenario.center)
    sample = triangle_at(config, theta)
    assert sample.closure_residual < 1e-7 * radius**2
    for vertex in sample.triangle.vertices:
        residual = config.circle.residual(vertex)
        assert residual == pytest.approx(0.0, abs=1e-9 * radius**2)


def test_family_sweep_logging(
    c1: PonceletConfig, caplog: pytest.LogCaptureFixture
) -> None:
    config_dependency.set_config(Config(log_level=LogLevel.DEBUG))
    caplog.clear()
    family_sweep(c1, 4)
    assert parse_log(caplog) == [
        {
            "event": "Finished family sweep",
            "severity": "debug",
            "scenario": "center",
            "radius": 2.0,
            "c": 1.0,
            "n": 4,
            "count": 4,
        }
    ]
