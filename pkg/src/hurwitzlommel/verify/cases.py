"""Identity cases: one parameterized instance of an identity with its tolerances"""

from __future__ import annotations

import cmath
import json
import math
import re
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_serializer, field_validator

from hurwitzlommel.config.tolerances import DEFAULT_PROFILE, ToleranceProfile
from hurwitzlommel.errors import ConfigurationError

ParamValue = Union[int, float, complex]

_COMPLEX_CHARS = re.compile(r"^[0-9eE.+\-ij]+$")
# keys a report record carries on top of the case definition
_REPORT_KEYS = frozenset({"lhs", "rhs", "abs_err", "rel_err", "status", "diagnostics", "message", "wall_time"})


class IdentityId(str, Enum):
    LEMMA21 = "lemma21"
    HERMITE_VS_EM = "hermite_vs_em"
    HURWITZ_FORMULA = "hurwitz_formula"
    FUNCTIONAL_EQUATION = "functional_equation"
    BEFMAS_EXPANSION = "befmas_expansion"
    MASI_CLOSED_FORM = "masi_closed_form"
    A1_CLOSED_FORM = "a1_closed_form"
    MASIREVIC_T21 = "masirevic_t21"
    MASIREVIC_T22 = "masirevic_t22"
    MODULAR_COROLLARY = "modular_corollary"
    THEOREM31_PHI_EQUALITY = "theorem31_phi_equality"
    THEOREM31_XI_INTEGRAL = "theorem31_xi_integral"
    MELLIN_TRIPLE = "mellin_triple"


def parse_complex(text: str) -> complex:
    """Parse "re", "re+imi" or "imi" ("-2.5", "1.3+0.7i", "0.5i"); the unicode minus is accepted"""
    cleaned = text.strip().replace("−", "-").replace(" ", "")
    if not cleaned or not _COMPLEX_CHARS.match(cleaned):
        raise ValueError(f"not a real or complex number: {text!r}")
    try:
        value = complex(cleaned.replace("i", "j"))
    except ValueError:
        raise ValueError(f"not a real or complex number: {text!r}") from None
    if not cmath.isfinite(value):
        raise ValueError(f"not a finite number: {text!r}")
    return value


def normalize_param(name: str, value: Any) -> ParamValue:
    """Strings and {re, im} tables become complex; complex values with zero imaginary part become float"""
    if isinstance(value, bool):
        raise ValueError(f"parameter {name!r} must be numeric, got a boolean")
    if isinstance(value, str):
        value = parse_complex(value)
    elif isinstance(value, Mapping):
        if set(value) != {"re", "im"}:
            raise ValueError(f"parameter {name!r} must be a number or a {{re, im}} table, got keys {sorted(value)}")
        value = complex(float(value["re"]), float(value["im"]))
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"parameter {name!r} must be finite, got {value!r}")
        return value
    if isinstance(value, complex):
        if not cmath.isfinite(value):
            raise ValueError(f"parameter {name!r} must be finite, got {value!r}")
        return value.real if value.imag == 0.0 else value
    raise ValueError(f"parameter {name!r} must be numeric, got {type(value).__name__}")


class IdentityCase(BaseModel):
    """One instance of an identity

    ``params`` holds the named inputs (s, a, k, alpha, m, mu, nu, x, K, N, ...).
    Whether they satisfy the identity's precondition is checked when the case
    is evaluated, so an invalid case still loads and reports config-error.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    identity_id: IdentityId
    params: Dict[str, Any] = Field(default_factory=dict)
    tol_abs: float = Field(gt=0)
    tol_rel: float = Field(gt=0)
    label: Optional[str] = None

    @field_validator("params", mode="before")
    @classmethod
    def _normalize_params(cls, params: Any) -> Dict[str, ParamValue]:
        if not isinstance(params, Mapping):
            raise ValueError("params must be a mapping of names to numbers")
        return {str(name): normalize_param(str(name), value) for name, value in params.items()}

    @field_serializer("params")
    def _serialize_params(self, params: Dict[str, ParamValue]) -> Dict[str, Any]:
        return {
            name: {"re": value.real, "im": value.imag} if isinstance(value, complex) else value
            for name, value in params.items()
        }

    @classmethod
    def create(
        cls,
        identity_id: Union[IdentityId, str],
        params: Mapping[str, Any],
        *,
        tol_abs: Optional[float] = None,
        tol_rel: Optional[float] = None,
        profile: ToleranceProfile = DEFAULT_PROFILE,
        label: Optional[str] = None,
    ) -> IdentityCase:
        """Build a case, taking missing tolerances from the profile's tier"""
        try:
            identity = IdentityId(identity_id)
        except ValueError:
            raise ConfigurationError(f"unknown identity id {identity_id!r}") from None
        tier = profile.tier(identity.value)
        try:
            return cls(
                identity_id=identity,
                params=dict(params),
                tol_abs=tier.tol_abs if tol_abs is None else tol_abs,
                tol_rel=tier.tol_rel if tol_rel is None else tol_rel,
                label=label,
            )
        except ValidationError as e:
            raise ConfigurationError(f"invalid {identity.value} case: {e}") from e

    def to_record(self) -> Dict[str, Any]:
        """JSON-ready mapping; ``label`` is omitted when unset"""
        return self.model_dump(mode="python", exclude_none=True)


def case_from_record(record: Mapping[str, Any], profile: ToleranceProfile = DEFAULT_PROFILE) -> IdentityCase:
    """Case from a suite-file record or a report record

    Report fields (lhs, rhs, status, ...) are ignored so a written report reloads
    as the suite that produced it.
    """
    if not isinstance(record, Mapping):
        raise ConfigurationError(f"suite entries must be objects, got {type(record).__name__}")
    fields = {key: value for key, value in record.items() if key not in _REPORT_KEYS}
    if "identity_id" not in fields:
        raise ConfigurationError(f"suite entry without identity_id: {dict(record)}")
    extra = sorted(set(fields) - {"identity_id", "params", "tol_abs", "tol_rel", "label"})
    if extra:
        raise ConfigurationError(f"unknown suite entry fields: {', '.join(extra)}")
    return IdentityCase.create(
        fields["identity_id"],
        fields.get("params", {}),
        tol_abs=fields.get("tol_abs"),
        tol_rel=fields.get("tol_rel"),
        profile=profile,
        label=fields.get("label"),
    )


def cases_from_records(records: Iterable[Mapping[str, Any]], profile: ToleranceProfile = DEFAULT_PROFILE) -> list[IdentityCase]:
    return [case_from_record(record, profile) for record in records]


def load_cases(path: Union[str, Path], profile: ToleranceProfile = DEFAULT_PROFILE) -> list[IdentityCase]:
    """Read a suite file: a JSON array of case objects"""
    suite_file = Path(path)
    if not suite_file.exists():
        raise FileNotFoundError(f"Suite file not found at {suite_file}")
    try:
        records = json.loads(suite_file.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Suite file {suite_file} is not valid JSON: {e}") from e
    if not isinstance(records, list):
        raise ConfigurationError(f"Suite file {suite_file} must hold a JSON array of cases")
    return cases_from_records(records, profile)
