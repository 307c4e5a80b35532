"""Test fixtures."""

from __future__ import annotations

from collections.abc import Iterator

import pytest

from poncelet.config import Config
from poncelet.dependencies.config import config_dependency
from poncelet.models.family import PonceletConfig, Scenario
from poncelet.models.geometry import CircleSpec, Point, Triangle
from poncelet.services.family import make_config, make_general_config


@pytest.fixture(autouse=True)
def config(monkeypatch: pytest.MonkeyPatch) -> Iterator[Config]:
    """Install the default configuration for each test.

    Environment variables that would change it are removed and the
    configuration is reset afterwards, so tests that override the
    tolerance do not leak into each other.
    """
    for name in (
        "PONCELET_CONFIG_PATH",
        "PONCELET_TOLERANCE",
        "PONCELET_INVARIANCE_TOLERANCE",
        "PONCELET_AREA_GRID_SIZE",
        "PONCELET_OUTPUT_PRECISION",
        "PONCELET_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    config = Config()
    config_dependency.set_config(config)
    yield config
    config_dependency.reset()


@pytest.fixture
def c1() -> PonceletConfig:
    """Acute center family, R = 2 and c = 1."""
    return make_config(2.0, 1.0, Scenario.center)


@pytest.fixture
def c2() -> PonceletConfig:
    """Obtuse center family, R = 0.7 and c = 1."""
    return make_config(0.7, 1.0, Scenario.center)


@pytest.fixture
def c3() -> PonceletConfig:
    """Acute center family, R = 1.5 and c = 1."""
    return make_config(1.5, 1.0, Scenario.center)


@pytest.fixture
def f1() -> PonceletConfig:
    """Acute focus family with an ellipse, R = 2.5 and c = 1."""
    return make_config(2.5, 1.0, Scenario.focus)


@pytest.fixture
def f2() -> PonceletConfig:
    """Obtuse focus family with a hyperbola, R = 1.5 and c = 1."""
    return make_config(1.5, 1.0, Scenario.focus)


@pytest.fixture
def general() -> PonceletConfig:
    """Family in general position, circle centered at (0.3, 0)."""
    return make_general_config(CircleSpec(Point(0.3, 0.0), 2.0), 1.0)


@pytest.fixture
def acute_triangle() -> Triangle:
    """Scalene acute triangle."""
    return Triangle(Point(0.0, 0.0), Point(2.0, 0.0), Point(0.6, 1.7))


@pytest.fixture
def obtuse_triangle() -> Triangle:
    """Scalene obtuse triangle."""
    return Triangle(Point(1.0, 2.0), Point(-2.0, 1.0), Point(2.0, 0.0))
