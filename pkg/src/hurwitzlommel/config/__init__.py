"""Configuration: tolerance files and their location"""

from hurwitzlommel.config.paths import get_config_directory, resolve_config_path
from hurwitzlommel.config.tolerances import (
    DEFAULT_PROFILE,
    DEFAULT_TIERS,
    ToleranceProfile,
    ToleranceTier,
    default_tolerance_scale,
    list_profiles,
    load_tolerance_profile,
)

__all__ = [
    "get_config_directory",
    "resolve_config_path",
    "DEFAULT_PROFILE",
    "DEFAULT_TIERS",
    "ToleranceProfile",
    "ToleranceTier",
    "default_tolerance_scale",
    "list_profiles",
    "load_tolerance_profile",
]
