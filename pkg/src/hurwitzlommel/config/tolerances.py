"""Tolerance tiers and TOML tolerance profiles"""

import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

# Use tomllib for Python 3.11+, fallback to tomli for older versions
if sys.version_info >= (3, 11):
    import tomllib
else:
    try:
        import tomli as tomllib
    except ImportError:
        raise ImportError(
            "Python < 3.11 requires 'tomli' package. " +
            "Install it with: pip install tomli"
        )

from hurwitzlommel.config.paths import get_default_config_path, resolve_config_path
from hurwitzlommel.errors import ConfigurationError

logger = logging.getLogger(__name__)

TOLERANCE_ENV_VAR = "HL_DEFAULT_TOL"


class ToleranceTier(BaseModel):
    """Absolute and relative tolerance of one identity"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    tol_abs: float = Field(gt=0)
    tol_rel: float = Field(gt=0)

    def scaled(self, factor: float) -> "ToleranceTier":
        return ToleranceTier(tol_abs=self.tol_abs * factor, tol_rel=self.tol_rel * factor)


def _tier(tol_abs: float, tol_rel: float) -> ToleranceTier:
    return ToleranceTier(tol_abs=tol_abs, tol_rel=tol_rel)


# Quadrature against closed forms is tightest, truncated series looser, the Xi integral loosest
DEFAULT_TIERS: Dict[str, ToleranceTier] = {
    "lemma21": _tier(1e-12, 1e-8),
    "hermite_vs_em": _tier(1e-12, 1e-9),
    "hurwitz_formula": _tier(1e-12, 1e-9),
    "functional_equation": _tier(1e-12, 1e-9),
    "befmas_expansion": _tier(1e-12, 1e-7),
    "masi_closed_form": _tier(1e-12, 1e-6),
    "a1_closed_form": _tier(1e-12, 1e-6),
    "masirevic_t21": _tier(1e-12, 1e-6),
    "masirevic_t22": _tier(1e-12, 1e-6),
    # |F(alpha) - F(beta)| <= 1e-6 max(|F|, 1)
    "modular_corollary": _tier(1e-6, 1e-6),
    "theorem31_phi_equality": _tier(1e-12, 1e-6),
    "theorem31_xi_integral": _tier(1e-10, 1e-5),
    "mellin_triple": _tier(1e-12, 1e-7),
}


def default_tolerance_scale() -> float:
    """Multiplier for the built-in tiers from HL_DEFAULT_TOL, read at call time"""
    raw = os.getenv(TOLERANCE_ENV_VAR)
    if raw is None or raw.strip() == "":
        return 1.0
    try:
        value = float(raw)
    except ValueError:
        raise ConfigurationError(f"{TOLERANCE_ENV_VAR} must be a positive number, got {raw!r}")
    if not value > 0 or value == float("inf"):
        raise ConfigurationError(f"{TOLERANCE_ENV_VAR} must be a positive number, got {raw!r}")
    return value


class ToleranceProfile(BaseModel):
    """A named set of tier overrides; identities without an override use the scaled default"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = "default"
    scale: float = Field(default=1.0, gt=0)
    tiers: Dict[str, ToleranceTier] = Field(default_factory=dict)

    @field_validator("tiers")
    @classmethod
    def _known_identities(cls, tiers: Dict[str, ToleranceTier]) -> Dict[str, ToleranceTier]:
        unknown = sorted(set(tiers) - set(DEFAULT_TIERS))
        if unknown:
            raise ValueError(f"unknown identity ids: {', '.join(unknown)}")
        return tiers

    def tier(self, identity_id: str) -> ToleranceTier:
        """Tolerances for one identity id"""
        key = str(getattr(identity_id, "value", identity_id))
        if key in self.tiers:
            return self.tiers[key].scaled(self.scale)
        if key not in DEFAULT_TIERS:
            raise ConfigurationError(f"unknown identity id {key!r}")
        return DEFAULT_TIERS[key].scaled(self.scale * default_tolerance_scale())


DEFAULT_PROFILE = ToleranceProfile()


def _read_profiles(config_file: Path) -> Dict[str, Any]:
    with open(config_file, "rb") as f:
        return tomllib.load(f)


def load_tolerance_profile(
    profile: str,
    path: Optional[Union[str, Path]] = None,
) -> ToleranceProfile:
    """Load a tolerance profile from tolerances.toml

    The built-in profile is returned for ``profile == "default"`` when the file
    does not define one.
    """
    config_file = resolve_config_path(path)
    all_profiles = _read_profiles(config_file) if config_file.exists() else {}

    if profile not in all_profiles:
        if profile == "default":
            return DEFAULT_PROFILE
        available = ", ".join(all_profiles.keys())
        raise KeyError(
            f"Profile '{profile}' not found in {config_file}. " +
            f"Available profiles: {available}"
        )

    table = dict(all_profiles[profile])
    scale = table.pop("scale", 1.0)
    try:
        loaded = ToleranceProfile(name=profile, scale=scale, tiers=table)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid tolerance profile '{profile}' in {config_file}: {e}") from e
    logger.debug(f"Loaded tolerance profile '{profile}' from {config_file} ({len(loaded.tiers)} overrides)")
    return loaded


def list_profiles(path: Optional[Union[str, Path]] = None) -> list[str]:
    """List all profile names in tolerances.toml, none when the file is missing"""
    config_file = get_default_config_path() if path is None else Path(path)

    if not config_file.exists():
        return []

    return list(_read_profiles(config_file).keys())
