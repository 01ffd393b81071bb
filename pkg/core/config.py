"""Configuration management for the surface walks toolkit."""

import json
from typing import Any, Dict

from .constants import (
    CONFIG_FILE,
    DATA_ROOT,
    DEFAULT_JOBS,
    DEFAULT_MAX_K,
    DEFAULT_TIMEOUT_MS,
    LOG_FILE,
)

DEFAULT_SETTINGS: Dict[str, Any] = {
    "max_k": DEFAULT_MAX_K,
    "timeout_ms": DEFAULT_TIMEOUT_MS,
    "jobs": DEFAULT_JOBS,
    "log_file": str(LOG_FILE),
    "debug": False,
}


def load_settings() -> Dict[str, Any]:
    """Get the settings, with values from config.json over the defaults.

    Returns:
        Dictionary with every key of DEFAULT_SETTINGS
    """
    settings = dict(DEFAULT_SETTINGS)
    if not CONFIG_FILE.exists():
        return settings

    try:
        stored = json.loads(CONFIG_FILE.read_text())
    except (json.JSONDecodeError, OSError):
        return settings
    if isinstance(stored, dict):
        settings.update({k: v for k, v in stored.items() if k in DEFAULT_SETTINGS})
    return settings


def save_setting(key: str, value: Any) -> None:
    """Persist one setting.

    Args:
        key: Setting name, one of DEFAULT_SETTINGS
        value: New value; coerced to the type of the default

    Raises:
        KeyError: If the key is not a known setting
    """
    if key not in DEFAULT_SETTINGS:
        raise KeyError(f"unknown setting '{key}'")

    default = DEFAULT_SETTINGS[key]
    if isinstance(default, bool):
        value = str(value).lower() in ("1", "true", "yes", "on")
    elif isinstance(default, int):
        value = int(value)

    DATA_ROOT.mkdir(parents=True, exist_ok=True)

    config: Dict[str, Any] = {}
    if CONFIG_FILE.exists():
        try:
            config = json.loads(CONFIG_FILE.read_text())
        except json.JSONDecodeError:
            config = {}

    config[key] = value
    CONFIG_FILE.write_text(json.dumps(config, indent=2))
