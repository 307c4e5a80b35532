"""Configuration for poncelet.

Settings may come from a YAML file (camel-case keys) or from environment
variables with the ``PONCELET_`` prefix. Environment variables take
precedence over the file, so a single run can be adjusted without editing
the shared configuration.
"""

from __future__ import annotations

from pathlib import Path
from typing import Self

import yaml
from pydantic import AliasChoices, Field, model_validator
from pydantic.alias_generators import to_camel
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)
from safir.logging import LogLevel, configure_logging

from .constants import (
    AREA_GRID_SIZE,
    DEFAULT_INVARIANCE_TOLERANCE,
    DEFAULT_TOLERANCE,
    LOGGER_NAME,
    OUTPUT_PRECISION,
)

__all__ = ["Config"]


class Config(BaseSettings):
    """Configuration for poncelet."""

    model_config = SettingsConfigDict(
        alias_generator=to_camel, extra="forbid", populate_by_name=True
    )

    tolerance: float = Field(
        DEFAULT_TOLERANCE,
        title="Relative tolerance",
        description=(
            "Relative tolerance for geometric comparisons. Lengths are"
            " compared against this times the circumradius and quadratic"
            " residuals against this times its square."
        ),
        gt=0,
        lt=1e-3,
        validation_alias=AliasChoices("PONCELET_TOLERANCE", "tolerance"),
    )

    invariance_tolerance: float = Field(
        DEFAULT_INVARIANCE_TOLERANCE,
        title="Invariance tolerance",
        description=(
            "Largest relative deviation from the mean for which a swept"
            " quantity is reported as invariant"
        ),
        gt=0,
        lt=1e-2,
        validation_alias=AliasChoices(
            "PONCELET_INVARIANCE_TOLERANCE", "invarianceTolerance"
        ),
    )

    area_grid_size: int = Field(
        AREA_GRID_SIZE,
        title="Area grid size",
        description="Grid points used by the extremal-area oracle",
        ge=100,
        validation_alias=AliasChoices(
            "PONCELET_AREA_GRID_SIZE", "areaGridSize"
        ),
    )

    output_precision: int = Field(
        OUTPUT_PRECISION,
        title="Output precision",
        description="Significant digits of numbers in CSV, JSON, and SVG",
        ge=6,
        le=17,
        validation_alias=AliasChoices(
            "PONCELET_OUTPUT_PRECISION", "outputPrecision"
        ),
    )

    log_level: LogLevel = Field(
        LogLevel.INFO,
        title="Logging level",
        description="Python logging level",
        validation_alias=AliasChoices("PONCELET_LOG_LEVEL", "logLevel"),
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Override the sources of settings.

        Deactivate :file:`.env` and secret file support and let environment
        variables override init parameters, since init parameters come from
        the YAML configuration file.
        """
        return (env_settings, init_settings)

    @model_validator(mode="after")
    def _validate_tolerances(self) -> Self:
        if self.invariance_tolerance < self.tolerance:
            msg = "invarianceTolerance must not be smaller than tolerance"
            raise ValueError(msg)
        return self

    @classmethod
    def from_file(cls, path: Path) -> Self:
        """Construct a Config object from a configuration file.

        Parameters
        ----------
        path
            Path to the configuration file in YAML.

        Returns
        -------
        Config
            The corresponding `Config` object.
        """
        with path.open("r") as f:
            return cls.model_validate(yaml.safe_load(f) or {})

    def configure_logging(self) -> None:
        """Configure logging based on the poncelet configuration."""
        configure_logging(name=LOGGER_NAME, log_level=self.log_level)
