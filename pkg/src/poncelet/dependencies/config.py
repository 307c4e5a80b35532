"""Process-wide configuration holder."""

from __future__ import annotations

import os
from pathlib import Path

from ..config import Config
from ..constants import CONFIG_PATH

__all__ = ["ConfigDependency", "config_dependency", "resolve_tolerance"]


class ConfigDependency:
    """Provides the configuration to library code and the CLI.

    The configuration is loaded lazily the first time it is requested, from
    the file named by ``PONCELET_CONFIG_PATH`` (or the default path) if it
    exists and from defaults and environment variables otherwise. The
    command line and the test suite may replace it, which is how the global
    tolerance is overridden. Replace it before starting any parallel work.
    """

    def __init__(self) -> None:
        config_path = os.getenv("PONCELET_CONFIG_PATH", CONFIG_PATH)
        self._config_path = Path(config_path)
        self._config: Config | None = None

    def __call__(self) -> Config:
        """Load the configuration if necessary and return it."""
        return self.config()

    @property
    def config_path(self) -> Path:
        """Path to the configuration file."""
        return self._config_path

    def config(self) -> Config:
        """Load the configuration if necessary and return it."""
        if not self._config:
            if self._config_path.exists():
                self._config = Config.from_file(self._config_path)
            else:
                self._config = Config()
            self._config.configure_logging()
        return self._config

    def set_config(self, config: Config) -> None:
        """Install an explicit configuration.

        Parameters
        ----------
        config
            The configuration to use from now on.
        """
        self._config = config
        self._config.configure_logging()

    def set_config_path(self, path: Path) -> None:
        """Change the configuration path and reload the config.

        Parameters
        ----------
        path
            The new configuration path.
        """
        self._config_path = path
        self._config = Config.from_file(path)
        self._config.configure_logging()

    def reset(self) -> None:
        """Forget any loaded configuration so the next use reloads it."""
        self._config = None


config_dependency = ConfigDependency()
"""The holder that returns the current configuration."""


def resolve_tolerance(tol: float | None) -> float:
    """Return an explicit tolerance or the configured default.

    Parameters
    ----------
    tol
        Tolerance passed by the caller, or `None` to use the configuration.

    Returns
    -------
    float
        The relative tolerance to apply.
    """
    if tol is not None:
        return tol
    return config_dependency.config().tolerance
