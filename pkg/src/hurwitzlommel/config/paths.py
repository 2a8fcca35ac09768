"""Path resolution for hurwitzlommel configuration files."""

import os
from pathlib import Path
from typing import Optional, Union

from importlib.resources import files as importlib_files

TOLERANCE_FILE = "tolerances.toml"


def _get_config_directory() -> Path:
    """Get the configuration directory from HL_CONFIG_DIR or the ~/.hurwitzlommel dotfile directory"""
    env_config_dir = os.getenv("HL_CONFIG_DIR")
    if env_config_dir:
        return Path(env_config_dir)
    return Path.home() / ".hurwitzlommel"


def _get_example_files_dir() -> Path:
    """Get the directory containing example configuration files from the installed package"""
    package_data = importlib_files("hurwitzlommel") / "_data"
    return Path(str(package_data))


def get_config_directory() -> Path:
    """Get the configuration directory for hurwitzlommel.

    Evaluated at call time so that HL_CONFIG_DIR changes are picked up after import.
    """
    return _get_config_directory()


def get_default_config_path() -> Path:
    """Path to tolerances.toml in the configuration directory; the file may not exist"""
    return get_config_directory() / TOLERANCE_FILE


def resolve_config_path(path: Optional[Union[str, Path]] = None) -> Path:
    """Resolve the tolerance file from an explicit path or the default location

    A missing default file is allowed (the built-in tiers apply). A missing
    explicit file is an error.
    """
    if path is None:
        return get_default_config_path()

    config_path = Path(path)
    if not config_path.exists():
        example_file = _get_example_files_dir() / f"{TOLERANCE_FILE}.example"
        error_msg = (
            f"Tolerance file not found at: {config_path}\n\n"
            f"To create it:\n"
            f"1. Copy example: {example_file}\n"
            f"2. To: {config_path}\n"
            f"3. Edit the profiles you need\n\n"
            f"Configuration directory priority:\n"
            f"  1. HL_CONFIG_DIR environment variable (if set)\n"
            f"  2. ~/.hurwitzlommel/ (dotfile directory)\n"
        )
        raise FileNotFoundError(error_msg)
    return config_path
