"""Verification reports and their JSON, CSV and DataFrame views"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from hurwitzlommel.verify.cases import IdentityCase

#: floor of the relative-error denominator, so identities whose sides vanish are decided by tol_abs
REL_ERR_FLOOR = 1e-300


class Status(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    ERRORED = "errored"
    CONFIG_ERROR = "config-error"
    SKIPPED = "skipped"


def relative_error(abs_err: float, *magnitudes: float) -> float:
    return abs_err / max(*magnitudes, REL_ERR_FLOOR)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity case

    ``lhs``, ``rhs`` and the errors are None unless both sides were evaluated.
    ``wall_time`` is excluded from equality so reports from different runs
    compare equal when their numbers do.
    """

    case: IdentityCase
    status: Status
    lhs: Optional[complex] = None
    rhs: Optional[complex] = None
    abs_err: Optional[float] = None
    rel_err: Optional[float] = None
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    message: str = ""
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASSED

    @classmethod
    def evaluated(
        cls,
        case: IdentityCase,
        lhs: complex,
        rhs: complex,
        diagnostics: Optional[Mapping[str, Any]] = None,
        witnesses: Sequence[complex] = (),
    ) -> VerificationReport:
        """Compare lhs against rhs and any further witnesses of the same value

        With witnesses, abs_err is the largest distance from lhs and the
        relative denominator the largest magnitude involved.
        """
        values = [complex(rhs), *(complex(w) for w in witnesses)]
        lhs = complex(lhs)
        if not all(cmath.isfinite(v) for v in [lhs, *values]):
            return cls(case, Status.ERRORED, lhs, values[0], diagnostics=dict(diagnostics or {}),
                       message="non-finite value")
        abs_err = max(abs(lhs - v) for v in values)
        rel_err = relative_error(abs_err, abs(lhs), *(abs(v) for v in values))
        passed = abs_err <= case.tol_abs or rel_err <= case.tol_rel
        return cls(
            case,
            Status.PASSED if passed else Status.FAILED,
            lhs,
            values[0],
            abs_err,
            rel_err,
            dict(diagnostics or {}),
        )

    @classmethod
    def outcome(cls, case: IdentityCase, status: Status, message: str) -> VerificationReport:
        """A report for a case that was not compared (config-error, errored, skipped)"""
        return cls(case, status, message=message)

    def with_wall_time(self, seconds: float) -> VerificationReport:
        return VerificationReport(
            self.case, self.status, self.lhs, self.rhs, self.abs_err, self.rel_err,
            self.diagnostics, self.message, seconds,
        )

    def to_record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "identity_id": self.case.identity_id.value,
            "params": self.case.to_record()["params"],
            "tol_abs": self.case.tol_abs,
            "tol_rel": self.case.tol_rel,
        }
        if self.case.label is not None:
            record["label"] = self.case.label
        record.update(
            lhs=_complex_record(self.lhs),
            rhs=_complex_record(self.rhs),
            abs_err=self.abs_err,
            rel_err=self.rel_err,
            status=self.status.value,
            diagnostics=dict(self.diagnostics, wall_time=self.wall_time),
        )
        if self.message:
            record["message"] = self.message
        return record


def _complex_record(value: Optional[complex]) -> Optional[Dict[str, float]]:
    if value is None:
        return None
    return {"re": value.real, "im": value.imag}


def _finite_or_none(value: Any) -> Any:
    """Non-finite floats become null; complex values become {re, im} records"""
    if isinstance(value, complex):
        return {"re": _finite_or_none(value.real), "im": _finite_or_none(value.imag)}
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, Mapping):
        return {str(k): _finite_or_none(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite_or_none(v) for v in value]
    return value


def _json_default(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"cannot encode {type(value).__name__} as JSON")


def dumps_record(record: Mapping[str, Any]) -> str:
    """One record as a single JSON line; floats keep their shortest round-trip repr"""
    return json.dumps(_finite_or_none(record), default=_json_default, allow_nan=False)


def dumps_records(records: Iterable[Mapping[str, Any]]) -> str:
    """JSON array with one record per line"""
    lines = [dumps_record(record) for record in records]
    if not lines:
        return "[]\n"
    return "[\n  " + ",\n  ".join(lines) + "\n]\n"


@dataclass
class SuiteResult:
    """Reports of a suite run, in case order"""

    reports: list[VerificationReport] = field(default_factory=list)

    def __iter__(self) -> Iterator[VerificationReport]:
        return iter(self.reports)

    def __len__(self) -> int:
        return len(self.reports)

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in Status}
        for report in self.reports:
            counts[report.status.value] += 1
        return counts

    @property
    def exit_code(self) -> int:
        """2 on a configuration error, 1 on a failed or errored case, 0 otherwise"""
        statuses = {report.status for report in self.reports}
        if Status.CONFIG_ERROR in statuses:
            return 2
        if statuses & {Status.FAILED, Status.ERRORED}:
            return 1
        return 0

    def to_json(self) -> str:
        return dumps_records(report.to_record() for report in self.reports)

    def to_df(self) -> pd.DataFrame:
        """One row per report with the complex sides split into re/im columns"""
        rows = []
        for report in self.reports:
            rows.append({
                "identity_id": report.case.identity_id.value,
                "label": report.case.label,
                "params": dumps_record(report.case.to_record()["params"]),
                "lhs_re": None if report.lhs is None else report.lhs.real,
                "lhs_im": None if report.lhs is None else report.lhs.imag,
                "rhs_re": None if report.rhs is None else report.rhs.real,
                "rhs_im": None if report.rhs is None else report.rhs.imag,
                "abs_err": report.abs_err,
                "rel_err": report.rel_err,
                "tol_abs": report.case.tol_abs,
                "tol_rel": report.case.tol_rel,
                "status": report.status.value,
                "message": report.message,
                "wall_time": report.wall_time,
            })
        columns = [
            "identity_id", "label", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
            "abs_err", "rel_err", "tol_abs", "tol_rel", "status", "message", "wall_time",
        ]
        return pd.DataFrame(rows, columns=columns)
