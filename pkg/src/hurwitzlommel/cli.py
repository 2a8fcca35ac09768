"""Command-line interface: eval, verify, suite and table

Exit codes: 0 success, 1 a failed or errored identity (or a numerical failure
in eval/table), 2 usage, domain or configuration errors.
"""

from __future__ import annotations

import argparse
import io
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from hurwitzlommel import __version__
from hurwitzlommel.config.tolerances import ToleranceProfile, load_tolerance_profile
from hurwitzlommel.errors import BranchError, ConfigurationError, DegenerateOrder, DomainError, HurwitzLommelError, PoleError
from hurwitzlommel.kernels.divisor import sigma_divisor
from hurwitzlommel.lommel.functions import LommelOrder, lommel_C, lommel_s, lommel_S, lommel_S_special
from hurwitzlommel.mellin.barnes import i_s_line_result
from hurwitzlommel.verify.cases import IdentityCase, IdentityId, load_cases, parse_complex
from hurwitzlommel.verify.checks import STRETCH_IDENTITIES
from hurwitzlommel.verify.report import SuiteResult, VerificationReport, dumps_records
from hurwitzlommel.verify.runner import SuiteRunner
from hurwitzlommel.verify.suite import default_cases
from hurwitzlommel.zeta.hurwitz import em_shift, hurwitz_rhs_fourier, hurwitz_zeta_em, hurwitz_zeta_hermite
from hurwitzlommel.zeta.phi import phi
from hurwitzlommel.zeta.riemann import riemann_zeta, xi_completed

logger = logging.getLogger(__name__)

PARAM_FLAGS = ("s", "a", "k", "alpha", "m", "mu", "nu", "x", "z", "n", "K", "N", "c", "c_alt")
INTEGER_PARAMS = frozenset({"k", "m", "n", "K", "N"})
# errors caused by the arguments rather than the numerics
USAGE_ERRORS = (ConfigurationError, DomainError, PoleError, BranchError, DegenerateOrder, ValueError, TypeError, KeyError)

Values = Dict[str, Any]


class UsageError(Exception):
    """Invalid command line, reported with exit code 2"""


def _number(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _real(values: Values, name: str) -> float:
    value = _require(values, name)
    if value.imag != 0.0:
        raise UsageError(f"--{name} must be real, got {value}")
    return float(value.real)


def _integer(values: Values, name: str) -> int:
    value = _real(values, name)
    if value != int(value):
        raise UsageError(f"--{name} must be an integer, got {value:g}")
    return int(value)


def _require(values: Values, name: str) -> complex:
    if values.get(name) is None:
        raise UsageError(f"missing --{name.replace('_', '-')}")
    return complex(values[name])


# ---------------------------------------------------------------- functions


@dataclass(frozen=True)
class Evaluable:
    params: Tuple[str, ...]
    compute: Callable[[Values], Tuple[complex, Dict[str, Any]]]
    help: str


def _eval_i_s(v: Values) -> Tuple[complex, Dict[str, Any]]:
    result = i_s_line_result(_require(v, "s"), _require(v, "z"))
    return result.value, {"c": result.c, "t_max": result.t_max, "nodes_used": result.nodes_used, "tail_bound": result.tail_bound}


FUNCTIONS: Dict[str, Evaluable] = {
    "zeta": Evaluable(("s",), lambda v: (riemann_zeta(_require(v, "s")), {}), "Riemann zeta(s)"),
    "hurwitz_em": Evaluable(
        ("s", "a"),
        lambda v: (hurwitz_zeta_em(_require(v, "s"), _require(v, "a")), {"em_shift": em_shift(_require(v, "s"), _require(v, "a"))}),
        "Hurwitz zeta(s, a) by Euler-Maclaurin",
    ),
    "hurwitz_hermite": Evaluable(
        ("s", "a"), lambda v: (hurwitz_zeta_hermite(_require(v, "s"), _require(v, "a")), {}), "Hurwitz zeta(s, a) by Hermite's integral"
    ),
    "hurwitz_fourier": Evaluable(
        ("s", "a"), lambda v: (hurwitz_rhs_fourier(_require(v, "s"), _real(v, "a")), {}), "Hurwitz zeta(s, a) by the trigonometric expansion"
    ),
    "phi": Evaluable(("s", "x"), lambda v: (phi(_require(v, "s"), _real(v, "x")), {}), "phi(s, x) = zeta(s, x) - x^-s/2 + x^(1-s)/(1-s)"),
    "xi": Evaluable(("s",), lambda v: (xi_completed(_require(v, "s")), {}), "completed zeta xi(s)"),
    "lommel_s": Evaluable(
        ("mu", "nu", "z"),
        lambda v: (lommel_s(LommelOrder(_require(v, "mu"), _require(v, "nu")), _require(v, "z")), {}),
        "small Lommel function s_{mu,nu}(z)",
    ),
    "lommel_S": Evaluable(
        ("mu", "nu", "z"),
        lambda v: (lommel_S(LommelOrder(_require(v, "mu"), _require(v, "nu")), _require(v, "z")), {}),
        "Lommel function S_{mu,nu}(z), non-integer nu",
    ),
    "lommel_S_special": Evaluable(
        ("s", "z"), lambda v: (lommel_S_special(_require(v, "s"), _real(v, "z")), {}), "S_{-s-1/2,1/2}(z), z > 0"
    ),
    "lommel_C": Evaluable(("s", "z"), lambda v: (lommel_C(_require(v, "s"), _real(v, "z")), {}), "C_s(z) = sqrt(z) Gamma(2s+1) S_{-2s-1/2,1/2}(z)"),
    "i_s": Evaluable(("s", "z"), _eval_i_s, "Mellin-Barnes integral I_s(z) on a vertical line"),
    "sigma": Evaluable(("s", "n"), lambda v: (sigma_divisor(_require(v, "s"), _integer(v, "n")), {}), "divisor function sigma_s(n)"),
}


# ------------------------------------------------------------------- output


def format_complex(value: complex) -> str:
    if value.imag == 0.0:
        return repr(value.real)
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"


def _params_text(params: Dict[str, Any]) -> str:
    parts = []
    for name, value in params.items():
        parts.append(f"{name}={format_complex(complex(value)) if isinstance(value, complex) else value!r}")
    return ", ".join(parts)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _frame_to_csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format="%.17g")
    return buffer.getvalue()


def _report_text(report: VerificationReport) -> str:
    head = f"{report.case.identity_id.value}({_params_text(report.case.params)}): {report.status.value}"
    if report.abs_err is not None and report.rel_err is not None:
        head += f" (abs_err {report.abs_err:.3g}, rel_err {report.rel_err:.3g})"
    if report.message:
        head += f": {report.message}"
    return head


def _emit_reports(result: SuiteResult, fmt: str, out: Optional[str]) -> None:
    if fmt == "json":
        _emit(result.to_json(), out)
    elif fmt == "csv":
        _emit(_frame_to_csv(result.to_df()), out)
    else:
        lines = [_report_text(report) for report in result]
        counts = ", ".join(f"{status} {count}" for status, count in result.counts().items() if count)
        lines.append(f"{len(result)} cases: {counts or 'none'}")
        _emit("\n".join(lines) + "\n", out)


# ----------------------------------------------------------------- commands


def _values(args: argparse.Namespace) -> Values:
    return {name: getattr(args, name) for name in PARAM_FLAGS if getattr(args, name, None) is not None}


def _case_params(values: Values) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    for name, value in values.items():
        if name in INTEGER_PARAMS and value.imag == 0.0 and value.real == int(value.real):
            params[name] = int(value.real)
        else:
            params[name] = value
    return params


def _profile(args: argparse.Namespace) -> ToleranceProfile:
    return load_tolerance_profile(args.profile, args.config)


def _list(names: Dict[str, str]) -> int:
    width = max(len(name) for name in names)
    sys.stdout.write("".join(f"{name.ljust(width)}  {text}\n" for name, text in names.items()))
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    """Evaluate one function and print its value"""
    if args.list:
        return _list({name: f.help for name, f in FUNCTIONS.items()})
    evaluable = _function(args.function)
    values = _values(args)
    value, diagnostics = evaluable.compute(values)
    params = {name: values[name] for name in evaluable.params}
    if args.format == "json":
        record = {
            "function": args.function,
            "params": {k: {"re": v.real, "im": v.imag} for k, v in params.items()},
            "value": {"re": value.real, "im": value.imag},
            "diagnostics": diagnostics,
        }
        _emit(dumps_records([record]), args.out)
    elif args.format == "csv":
        row = {**{k: format_complex(v) for k, v in params.items()}, "re": value.real, "im": value.imag}
        _emit(_frame_to_csv(pd.DataFrame([row])), args.out)
    else:
        _emit(format_complex(value) + "\n", args.out)
    return 0


def _function(name: Optional[str]) -> Evaluable:
    if name is None:
        raise UsageError("a function name is required (see --list)")
    if name not in FUNCTIONS:
        raise UsageError(f"unknown function {name!r}; choose from {', '.join(FUNCTIONS)}")
    return FUNCTIONS[name]


def cmd_verify(args: argparse.Namespace) -> int:
    """Verify one identity case"""
    if args.list:
        names = {identity.value: "stretch" if identity in STRETCH_IDENTITIES else "" for identity in IdentityId}
        return _list(names)
    if args.identity is None:
        raise UsageError("an identity id is required (see --list)")
    case = IdentityCase.create(
        args.identity,
        _case_params(_values(args)),
        tol_abs=args.tol_abs,
        tol_rel=args.tol_rel,
        profile=_profile(args),
    )
    result = SuiteRunner().run([case])
    _emit_reports(result, args.format, args.out)
    return result.exit_code


def cmd_suite(args: argparse.Namespace) -> int:
    """Run the default suite or a suite file"""
    profile = _profile(args)
    if args.source == "default":
        cases = default_cases(include_stretch=args.include_stretch, profile=profile)
    else:
        cases = load_cases(args.source, profile)
    result = SuiteRunner(parallelism=args.jobs).run(cases)
    _emit_reports(result, args.format, args.out)
    return result.exit_code


def parse_range(text: str) -> np.ndarray:
    """"start:stop:count" to ``count`` evenly spaced points, start < stop"""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must look like start:stop:count, got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"range must look like start:stop:count, got {text!r}") from None
    if not start < stop:
        raise UsageError(f"range start must be below its stop, got {text!r}")
    if count < 1:
        raise UsageError(f"range count must be positive, got {count}")
    return np.linspace(start, stop, count)


def cmd_table(args: argparse.Namespace) -> int:
    """Tabulate a function over a range of one parameter"""
    if args.list:
        return _list({name: f.help for name, f in FUNCTIONS.items()})
    evaluable = _function(args.function)
    ranges = {name: getattr(args, f"{name}_range") for name in ("s", "x", "z") if getattr(args, f"{name}_range")}
    if len(ranges) != 1:
        raise UsageError("table needs exactly one of --s-range, --x-range, --z-range")
    (variable, spec), = ranges.items()
    if variable not in evaluable.params:
        raise UsageError(f"{args.function} does not take {variable}")
    points = parse_range(spec)
    base = _values(args)
    rows = []
    failures = 0
    for point in points:
        values = dict(base, **{variable: complex(point)})
        row: Dict[str, Any] = {name: format_complex(values[name]) if name in values else "" for name in evaluable.params}
        try:
            value, diagnostics = evaluable.compute(values)
            row.update(re=value.real, im=value.imag, diagnostics=_params_text(diagnostics))
        except HurwitzLommelError as exc:
            failures += 1
            row.update(re=float("nan"), im=float("nan"), diagnostics=f"{type(exc).__name__}: {exc}")
        rows.append(row)
    frame = pd.DataFrame(rows, columns=[*evaluable.params, "re", "im", "diagnostics"])
    if args.format == "json":
        _emit(dumps_records(frame.to_dict(orient="records")), args.out)
    else:
        _emit(_frame_to_csv(frame), args.out)
    logger.info(f"Tabulated {args.function} at {len(points)} points ({failures} failed)")
    return 1 if failures else 0


# ------------------------------------------------------------------- parser


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("parameters", 'real or complex values such as "-2.5" or "1.3+0.7i"')
    for name in PARAM_FLAGS:
        group.add_argument(f"--{name.replace('_', '-')}", dest=name, type=_number, metavar="VALUE")


def _add_output_flags(parser: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    parser.add_argument("--format", choices=formats, default=default)
    parser.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")


def _add_tolerance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--profile", default="default", help="tolerance profile name")
    parser.add_argument("--config", metavar="PATH", help="tolerance file (default: <config dir>/tolerances.toml)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzlommel",
        description="Hurwitz zeta, Lommel and Mellin-Barnes evaluation and identity verification",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress (-vv for debug detail)")
    commands = parser.add_subparsers(dest="command", required=True)

    eval_parser = commands.add_parser("eval", help="evaluate one function")
    eval_parser.add_argument("function", nargs="?")
    eval_parser.add_argument("--list", action="store_true", help="list the evaluable functions")
    _add_param_flags(eval_parser)
    _add_output_flags(eval_parser, ("text", "json", "csv"), "text")
    eval_parser.set_defaults(handler=cmd_eval)

    verify_parser = commands.add_parser("verify", help="verify one identity case")
    verify_parser.add_argument("identity", nargs="?")
    verify_parser.add_argument("--list", action="store_true", help="list the identity ids")
    _add_param_flags(verify_parser)
    verify_parser.add_argument("--tol-abs", dest="tol_abs", type=float)
    verify_parser.add_argument("--tol-rel", dest="tol_rel", type=float)
    _add_tolerance_flags(verify_parser)
    _add_output_flags(verify_parser, ("text", "json", "csv"), "text")
    verify_parser.set_defaults(handler=cmd_verify)

    suite_parser = commands.add_parser("suite", help="run the default suite or a suite file")
    suite_parser.add_argument("source", nargs="?", default="default", help='"default" or a JSON suite file')
    suite_parser.add_argument("--jobs", type=int, default=1, help="number of worker threads")
    suite_parser.add_argument("--include-stretch", action="store_true", help="add the Xi-integral cases")
    _add_tolerance_flags(suite_parser)
    _add_output_flags(suite_parser, ("text", "json", "csv"), "text")
    suite_parser.set_defaults(handler=cmd_suite)

    table_parser = commands.add_parser("table", help="tabulate a function over a parameter range")
    table_parser.add_argument("function", nargs="?")
    table_parser.add_argument("--list", action="store_true", help="list the evaluable functions")
    _add_param_flags(table_parser)
    for name in ("s", "x", "z"):
        table_parser.add_argument(f"--{name}-range", dest=f"{name}_range", metavar="START:STOP:COUNT")
    _add_output_flags(table_parser, ("csv", "json"), "csv")
    table_parser.set_defaults(handler=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG if args.verbose > 1 else logging.INFO,
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
        )
    try:
        return int(args.handler(args))
    except UsageError as e:
        sys.stderr.write(f"hurwitzlommel: {e}\n")
        return 2
    except FileNotFoundError as e:
        sys.stderr.write(f"hurwitzlommel: {str(e).splitlines()[0]}\n")
        return 2
    except USAGE_ERRORS as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        sys.stderr.write(f"hurwitzlommel: {message}\n")
        return 2
    except (HurwitzLommelError, ArithmeticError) as e:
        sys.stderr.write(f"hurwitzlommel: {type(e).__name__}: {e}\n")
        return 1
