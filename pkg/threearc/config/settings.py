"""
Settings file handling for threearc

An optional YAML file overrides the built-in defaults; command-line flags
override both. The file is looked up at --config, then $THREEARC_CONFIG,
then ~/.config/threearc/settings.yaml.
"""

import copy
import logging
import os
from typing import Any, Dict, Optional

import yaml

from threearc.core.errors import SettingsError

CONFIG_ENV = "THREEARC_CONFIG"
DEFAULT_CONFIG_PATH = os.path.join("~", ".config", "threearc", "settings.yaml")

DEFAULT_SETTINGS: Dict[str, Any] = {
    "max_vertices": 1_000_000,
    "oracle_max_vertices": 48,
    "log_file": None,
    "sweep": {
        "max_order": 6,
        "workers": 1,
        "repair_trials": 500,
        "seed": None,
    },
}

# Expected type of every leaf; None means "or null"
_TYPES = {
    "max_vertices": int,
    "oracle_max_vertices": int,
    "log_file": (str, type(None)),
    "sweep.max_order": int,
    "sweep.workers": int,
    "sweep.repair_trials": int,
    "sweep.seed": (int, type(None)),
}


def settings_path(explicit: Optional[str] = None) -> Optional[str]:
    """
    Resolve the settings file to read.

    An explicit path must exist; the environment and default locations
    are used only when present.

    Raises:
        SettingsError: If an explicit path does not exist
    """
    if explicit:
        if not os.path.isfile(explicit):
            raise SettingsError(f"settings file not found: {explicit}")
        return explicit
    from_env = os.environ.get(CONFIG_ENV)
    if from_env:
        if not os.path.isfile(from_env):
            raise SettingsError(f"${CONFIG_ENV} points to a missing file: {from_env}")
        return from_env
    default = os.path.expanduser(DEFAULT_CONFIG_PATH)
    return default if os.path.isfile(default) else None


def _merge(target: Dict[str, Any], overrides: Dict[str, Any], prefix: str = "") -> None:
    for key, value in overrides.items():
        name = f"{prefix}{key}"
        if key not in target:
            raise SettingsError(f"unknown setting '{name}'")
        if isinstance(target[key], dict):
            if not isinstance(value, dict):
                raise SettingsError(f"setting '{name}' must be a mapping")
            _merge(target[key], value, f"{name}.")
            continue
        expected = _TYPES[name]
        if not isinstance(value, expected) or isinstance(value, bool):
            raise SettingsError(f"setting '{name}' has the wrong type: {value!r}")
        target[key] = value


def load_settings(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load settings, falling back to the defaults.

    Args:
        path: Explicit settings file (--config)

    Returns:
        The merged settings dictionary

    Raises:
        SettingsError: Unreadable file, invalid YAML, unknown key or wrong type
    """
    settings = copy.deepcopy(DEFAULT_SETTINGS)
    resolved = settings_path(path)
    if resolved is None:
        return settings

    try:
        with open(resolved, "r") as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise SettingsError(f"cannot read settings file {resolved}: {e}") from e
    except yaml.YAMLError as e:
        raise SettingsError(f"invalid YAML in {resolved}: {e}") from e

    if data is None:
        return settings
    if not isinstance(data, dict):
        raise SettingsError(f"settings file {resolved} must contain a mapping")
    _merge(settings, data)
    logging.debug(f"Loaded settings from {resolved}")
    return settings
