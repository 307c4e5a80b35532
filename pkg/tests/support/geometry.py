"""Assertions on points and triangles."""

from __future__ import annotations

import pytest

from poncelet.models.geometry import Point, Triangle

__all__ = ["assert_point", "assert_triangle"]


def assert_point(
    actual: Point, expected: tuple[float, float], *, abs_tol: float = 1e-6
) -> None:
    """Check that a point matches expected coordinates."""
    assert actual.x == pytest.approx(expected[0], abs=abs_tol)
    assert actual.y == pytest.approx(expected[1], abs=abs_tol)


def assert_triangle(
    actual: Triangle,
    expected: tuple[
        tuple[float, float], tuple[float, float], tuple[float, float]
    ],
    *,
    abs_tol: float = 1e-6,
) -> None:
    """Check that a triangle has the expected vertices in order."""
    for vertex, coordinates in zip(actual.vertices, expected, strict=True):
        assert_point(vertex, coordinates, abs_tol=abs_tol)
