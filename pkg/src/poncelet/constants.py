"""Constants for poncelet."""

__all__ = [
    "AREA_GRID_SIZE",
    "CONFIG_PATH",
    "DEFAULT_INVARIANCE_TOLERANCE",
    "DEFAULT_TOLERANCE",
    "LOGGER_NAME",
    "MIN_LOCUS_POINTS",
    "OUTPUT_PRECISION",
    "SCHEMA_VERSION",
    "SVG_CANVAS_SIZE",
]

AREA_GRID_SIZE = 10_000
"""Number of grid points used by the extremal-area oracle."""

CONFIG_PATH = "poncelet.yaml"
"""Default configuration path, relative to the working directory."""

DEFAULT_INVARIANCE_TOLERANCE = 1e-8
"""Relative spread below which a swept quantity is reported invariant."""

DEFAULT_TOLERANCE = 1e-9
"""Relative tolerance for geometric comparisons.

Lengths are compared against this value times the circumradius of the
configuration and quadratic-form residuals against its square.
"""

LOGGER_NAME = "poncelet"
"""Name of the structlog logger used throughout the package."""

MIN_LOCUS_POINTS = 16
"""Fewest samples accepted by the locus generators."""

OUTPUT_PRECISION = 12
"""Significant digits of every number written to CSV, JSON, or SVG."""

SCHEMA_VERSION = 1
"""Value of the ``schema_version`` field in JSON output."""

SVG_CANVAS_SIZE = 800
"""Width and height in pixels of generated SVG documents."""
