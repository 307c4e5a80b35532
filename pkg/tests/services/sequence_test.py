"""Tests for homothetic towers and iterated Poncelet pairs."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from poncelet.exceptions import (
    DegenerateTriangleError,
    InputValidationError,
    SingularIterationError,
    VerificationError,
)
from poncelet.models.family import Scenario
from poncelet.models.geometry import Point, Triangle
from poncelet.models.sequence import SequenceState
from poncelet.services.centers import center_set
from poncelet.services.family import admissible_arcs, triangle_at
from poncelet.services.sequence import (
    config_from_state,
    dynamics_fixed_points,
    dynamics_orbit,
    homothetic_tower,
    poncelet_iterate,
)

from ..support.geometry import assert_point

BASE = Triangle(
    Point(-2.0, 0.0),
    Point(1.5, math.sqrt(35) / 2),
    Point(1.5, -math.sqrt(35) / 2),
)
"""Acute triangle with circumcenter (1, 0) and orthocenter (-1, 0)."""


def test_base_triangle() -> None:
    centers = center_set(BASE)
    assert_point(centers.circumcenter, (1.0, 0.0))
    assert_point(centers.orthocenter, (-1.0, 0.0))


def test_homothetic_tower() -> None:
    levels = homothetic_tower(BASE, -2.0, 2)
    assert [level.level for level in levels] == [1, 2]
    assert [level.ratio for level in levels] == [-2.0, 4.0]
    assert_point(levels[0].foci.f1, (-1.0, 0.0))
    assert_point(levels[0].foci.f2, (3.0, 0.0))
    assert_point(levels[1].foci.f1, (3.0, 0.0))
    assert_point(levels[1].foci.f2, (-5.0, 0.0))
    assert levels[1].triangle.area == pytest.approx(16 * BASE.area)


def test_medial_tower() -> None:
    levels = homothetic_tower(BASE, -0.5, 3)
    assert levels[2].ratio == pytest.approx(-0.125)
    assert levels[2].triangle.area == pytest.approx(BASE.area / 64)


def test_literal_tower() -> None:
    levels = homothetic_tower(BASE, -2.0, 2, literal=True)
    assert_point(levels[0].foci.f1, (-1.0, 0.0))
    assert_point(levels[0].foci.f2, (3.0, 0.0))
    assert_point(levels[1].foci.f1, (5.0, 0.0))
    assert_point(levels[1].foci.f2, (-3.0, 0.0))


def test_tower_rejects() -> None:
    with pytest.raises(InputValidationError):
        homothetic_tower(BASE, 3.0, 2)
    with pytest.raises(InputValidationError):
        homothetic_tower(BASE, -2.0, 0)
    right = Triangle(Point(1.0, 0.0), Point(-1.0, 0.0), Point(0.0, 1.0))
    with pytest.raises(DegenerateTriangleError):
        homothetic_tower(right, -2.0, 1)


def test_poncelet_iterate() -> None:
    states = poncelet_iterate(1.0, 2.5, 3)
    assert [s.step for s in states] == [1, 2, 3]
    assert states[0].alpha == pytest.approx(1.5625)
    assert states[0].beta_sign == 1
    assert states[1].c == pytest.approx(109 / 9)
    assert states[1].radius == pytest.approx(125 / 9)
    assert states[1].x == pytest.approx(0.872)
    assert states[1].beta_sign == -1
    for state in states:
        assert config_from_state(state).scenario == Scenario.focus


def test_iterated_states_close() -> None:
    states = poncelet_iterate(1.0, 2.5, 4)
    assert len(states) == 4
    for state in states:
        config = config_from_state(state)
        arcs = admissible_arcs(config)
        thetas = [
            theta
            for theta in np.linspace(0.0, math.tau, 64, endpoint=False)
            if arcs.contains(theta)
        ]
        assert len(thetas) >= 8
        for theta in thetas[:: len(thetas) // 8][:8]:
            sample = triangle_at(config, float(theta))
            limit = 1e-9 * state.radius**2
            assert sample.closure_residual < limit
            for vertex in sample.triangle.vertices:
                residual = config.circle.residual(vertex)
                assert residual == pytest.approx(0.0, abs=limit)


def test_poncelet_iterate_singular() -> None:
    with pytest.raises(SingularIterationError) as excinfo:
        poncelet_iterate(1.0, 2.0, 3)
    assert excinfo.value.partial == []
    with pytest.raises(InputValidationError):
        poncelet_iterate(1.0, -2.0, 3)


def test_config_from_state() -> None:
    state = SequenceState(step=1, c=1.0, radius=2.5, alpha=1.5625, beta=0.6)
    with pytest.raises(VerificationError):
        config_from_state(state)


def test_dynamics_orbit() -> None:
    assert dynamics_orbit(0.1, 2) == pytest.approx([0.1, 0.248])
    assert dynamics_orbit(0.4, 2) == pytest.approx([0.4, 0.872])
    literal = dynamics_orbit(0.1, 2, literal=True)
    assert literal == pytest.approx([0.1, 0.258333], abs=1e-6)
    literal = dynamics_orbit(0.4, 2, literal=True)
    assert literal == pytest.approx([0.4, 2.422222], abs=1e-6)

    with pytest.raises(SingularIterationError) as excinfo:
        dynamics_orbit(0.5, 3)
    assert excinfo.value.partial == []
    with pytest.raises(InputValidationError):
        dynamics_orbit(-0.1, 3)


def test_dynamics_fixed_points() -> None:
    points = dynamics_fixed_points()
    assert points == pytest.approx([-math.sqrt(7) / 2, 0.0, math.sqrt(7) / 2])
    for x in points[1:]:
        assert dynamics_orbit(x, 3) == pytest.approx([x, x, x])
    assert dynamics_fixed_points(literal=True) == [0.0]


@given(x0=st.floats(min_value=0.01, max_value=0.45))
def test_iteration_matches_orbit(x0: float) -> None:
    try:
        states = poncelet_iterate(x0, 1.0, 3)
        orbit = dynamics_orbit(x0, 3)
    except SingularIterationError:
        assume(False)
        return
    assert [s.x for s in states] == pytest.approx(orbit, rel=1e-6)
