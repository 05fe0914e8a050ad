"""Command-line interface: config parsing, certification, serialization.

Subcommands:

* ``check <file>`` — certify the system described by an INI config file
  (sections ``[field]``, ``[system]``, ``[check]``);
* ``fold-hopf`` / ``double-hopf`` — certify a builtin unfolding directly
  from parameter flags;
* ``sweep <file>`` — run a parameter grid (section ``[sweep]``) against a
  builtin family and print a summary.

Exit codes: 0 = nonintegrability proven, 1 = inconclusive, 3 = the
method does not apply (irregular at infinity), 4 = input/usage error.
The ``NONINT_MAX_ORDER`` environment variable overrides the default
maximum variational order (9); an explicit config value or ``--max-order``
flag wins over the environment.

JSON reports have exactly the top-level keys ``version``, ``status``,
``h1``, ``orders`` and ``input_echo``; the full schema is documented in
docs/certificate-schema.md.
"""

from __future__ import annotations

import argparse
import configparser
import itertools
import json
import os
import sys
import time
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import __version__
from .criteria import (
    Certificate,
    CriterionOutcome,
    DEFAULT_MAX_ORDER,
    MAX_ORDER_CAP,
    certify,
)
from .exactalg import BiPoly, FieldSpec, QuadExt, RatFunc, UPoly
from .expr import (
    ExprSyntaxError,
    format_bipoly,
    format_poly,
    format_ratfunc,
    format_scalar,
    parse_bipoly,
    parse_expression,
)
from .unfoldings import (
    DoubleHopfParams,
    FoldHopfParams,
    double_hopf_system,
    fold_hopf_system,
)
from .varcalc import CurveData, PlanarSystem

EXIT_NONINTEGRABLE = 0
EXIT_INCONCLUSIVE = 1
EXIT_INAPPLICABLE = 3
EXIT_USAGE = 4

_STATUS_EXIT_CODES = {
    "nonintegrable": EXIT_NONINTEGRABLE,
    "inconclusive": EXIT_INCONCLUSIVE,
    "inapplicable": EXIT_INAPPLICABLE,
}

ENV_MAX_ORDER = "NONINT_MAX_ORDER"

FAMILY_FOLD_HOPF = "fold-hopf"
FAMILY_DOUBLE_HOPF = "double-hopf"


class UsageError(Exception):
    """Bad input (config, expression, or parameter); maps to exit code 4."""


# ---------------------------------------------------------------------------
# Input parsing helpers
# ---------------------------------------------------------------------------


def _parse_scalar(text: str, field: FieldSpec, what: str) -> QuadExt:
    try:
        value = parse_expression(text, field)
    except ExprSyntaxError as exc:
        raise UsageError(f"{what}: {exc}") from exc
    if isinstance(value, RatFunc):
        if not value.is_constant():
            raise UsageError(f"{what}: expected a constant, got {value}")
        return value.num.coeff(0) / value.den.coeff(0)
    if value.degree_eta > 0 or value.degree_xi > 0:
        raise UsageError(f"{what}: expected a constant, got {value}")
    return value.row(0).coeff(0)


def _parse_bipoly(text: str, field: FieldSpec, what: str) -> BiPoly:
    try:
        return parse_bipoly(text, field)
    except ExprSyntaxError as exc:
        raise UsageError(f"{what}: {exc}") from exc


def _parse_curve(text: str, field: FieldSpec, what: str) -> RatFunc:
    try:
        value = parse_expression(text, field)
    except ExprSyntaxError as exc:
        raise UsageError(f"{what}: {exc}") from exc
    if isinstance(value, RatFunc):
        return value
    if value.degree_eta > 0:
        raise UsageError(f"{what}: the curve must not mention eta")
    return RatFunc.from_poly(value.row(0))


def _parse_sign(text: str, what: str) -> int:
    try:
        s = int(text.strip())
    except ValueError:
        raise UsageError(f"{what}: expected +1 or -1, got {text!r}")
    if s not in (1, -1):
        raise UsageError(f"{what}: expected +1 or -1, got {s}")
    return s


def _validate_max_order(k: int) -> int:
    if not 2 <= k <= MAX_ORDER_CAP:
        raise UsageError(f"max order must lie in 2..{MAX_ORDER_CAP}, got {k}")
    return k


def _default_max_order() -> int:
    env = os.environ.get(ENV_MAX_ORDER)
    if env is None:
        return DEFAULT_MAX_ORDER
    try:
        k = int(env)
    except ValueError:
        raise UsageError(f"{ENV_MAX_ORDER} must be an integer, got {env!r}")
    return _validate_max_order(k)


# ---------------------------------------------------------------------------
# SystemSpec
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SystemSpec:
    """A fully parsed certification request: either an inline planar
    system (P, Q, phi) or a builtin unfolding family with parameters."""

    field: FieldSpec
    max_order: int = DEFAULT_MAX_ORDER
    P: Optional[BiPoly] = None
    Q: Optional[BiPoly] = None
    phi: Optional[RatFunc] = None
    family: Optional[str] = None
    chart: int = 1
    params: Union[FoldHopfParams, DoubleHopfParams, None] = None
    json_path: Optional[str] = None

    def __post_init__(self):
        inline = self.P is not None or self.Q is not None
        builtin = self.family is not None
        if inline == builtin:
            raise UsageError(
                "specify either an inline system (P and Q) or a builtin"
                " family, not both"
            )
        if inline and (self.P is None or self.Q is None):
            raise UsageError("an inline system needs both P and Q")
        _validate_max_order(self.max_order)

    def build(self) -> Tuple[PlanarSystem, CurveData]:
        if self.family == FAMILY_FOLD_HOPF:
            return fold_hopf_system(self.params)
        if self.family == FAMILY_DOUBLE_HOPF:
            return double_hopf_system(self.params, chart=self.chart)
        if self.family is not None:
            raise UsageError(f"unknown family: {self.family!r}")
        try:
            system = PlanarSystem(
                P=self.P, Q=self.Q, field=self.field, label="inline system"
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        phi = self.phi if self.phi is not None else RatFunc.zero(self.field.d)
        return system, CurveData(phi=phi)

    def input_echo(self) -> Dict[str, object]:
        echo: Dict[str, object] = {"field_d": self.field.d}
        if self.family is not None:
            echo["mode"] = "builtin"
            echo["family"] = self.family
            if self.family == FAMILY_DOUBLE_HOPF:
                echo["chart"] = self.chart
            echo["params"] = _params_echo(self.params)
        else:
            echo["mode"] = "inline"
        system, curve = self.build()
        echo["system"] = {
            "P": format_bipoly(system.P),
            "Q": format_bipoly(system.Q),
            "phi": format_ratfunc(curve.phi),
        }
        echo["max_order"] = self.max_order
        return echo


def _params_echo(
    params: Union[FoldHopfParams, DoubleHopfParams]
) -> Dict[str, object]:
    if isinstance(params, FoldHopfParams):
        return {
            "mu": format_scalar(params.mu),
            "nu": format_scalar(params.nu),
            "alpha": format_scalar(params.alpha),
            "s": params.s,
            "beta": format_scalar(params.beta),
            "omega": format_scalar(params.omega),
        }
    return {
        "mu": format_scalar(params.mu),
        "nu": format_scalar(params.nu),
        "alpha": format_scalar(params.alpha),
        "beta": format_scalar(params.beta),
        "s": params.s,
        "omega1": format_scalar(params.omega1),
        "omega2": format_scalar(params.omega2),
    }


# ---------------------------------------------------------------------------
# Report documents and JSON serialization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReportDocument:
    """A certificate together with tool version, input echo and timing.

    The JSON form has exactly the top-level keys version, status, h1,
    orders and input_echo; timing is reported on the text channel only
    so the document stays bit-stable under round-tripping.
    """

    certificate: Certificate
    version: str
    input_echo: Dict[str, object]
    timing_seconds: float

    @property
    def exit_code(self) -> int:
        return _STATUS_EXIT_CODES[self.certificate.status]

    def to_json_dict(self) -> Dict[str, object]:
        cert = self.certificate
        return {
            "version": self.version,
            "status": cert.status,
            "h1": _h1_dict(cert),
            "orders": [_order_dict(o) for o in cert.orders],
            "input_echo": dict(self.input_echo),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def _fmt_or_none(value, formatter) -> Optional[str]:
    return None if value is None else formatter(value)


def _poly_degree(p: Optional[UPoly]) -> Optional[int]:
    if p is None or p.is_zero():
        return None
    return int(p.degree)


def _h1_dict(cert: Certificate) -> Dict[str, object]:
    om = cert.omega
    residues = []
    if om is not None:
        for entry in om.residues:
            residues.append(
                {
                    "class": format_poly(entry.cls.factor),
                    "multiplicity": entry.cls.multiplicity,
                    "residue": format_poly(entry.residue),
                    "is_rational": entry.is_rational_number(),
                }
            )
    witness: Optional[Dict[str, object]] = None
    if cert.h1 is not None and cert.h1.holds:
        if cert.h1.reason == "nonzero-exp-part":
            witness = {
                "kind": "exp-part",
                "value": format_ratfunc(cert.h1.witness),
            }
        else:
            entry = cert.h1.witness
            witness = {
                "kind": "residue",
                "class": format_poly(entry.cls.factor),
                "residue": format_poly(entry.residue),
            }
    return {
        "regular_at_infinity": cert.regular_at_infinity,
        "holds": None if cert.h1 is None else cert.h1.holds,
        "reason": None if cert.h1 is None else cert.h1.reason,
        "exp_part": None
        if om is None or om.exp_part.is_zero()
        else format_ratfunc(om.exp_part),
        "residues": residues,
        "witness": witness,
    }


def _order_dict(o: CriterionOutcome) -> Dict[str, object]:
    degrees: Optional[Dict[str, object]] = None
    aux: Optional[Dict[str, object]] = None
    rho0: Optional[str] = None
    if o.diagnostics is not None:
        dgn = o.diagnostics
        degrees = {
            "kappa1_den": dgn.deg_kappa1d,
            "kappak_num": dgn.deg_kappakn,
            "rho": _poly_degree(dgn.rho),
            "rho_bar": _poly_degree(dgn.rho_bar),
            "rho_tilde": _poly_degree(dgn.rho_tilde),
            "n1": dgn.n1,
            "nk": dgn.nk,
            "n_bar": dgn.n_bar,
        }
        aux = {
            "rho": _fmt_or_none(dgn.rho, format_poly),
            "rho_bar": _fmt_or_none(dgn.rho_bar, format_poly),
            "rho_tilde": _fmt_or_none(dgn.rho_tilde, format_poly),
            "degenerate_rho": dgn.degenerate_rho,
        }
        rho0 = _fmt_or_none(dgn.rho0, format_scalar)
    partition: Optional[Dict[str, object]] = None
    if o.partition is not None:
        partition = {
            "shared": [
                {
                    "class": format_poly(c.factor),
                    "b1": c.b1,
                    "a1": c.a1,
                }
                for c in o.partition.shared
            ],
            "new": [
                {"class": format_poly(c.factor), "ak": c.ak}
                for c in o.partition.new
            ],
            "n1": o.partition.n1,
            "nk": o.partition.nk,
            "rad1": format_poly(o.partition.rad1),
            "radk": format_poly(o.partition.radk),
        }
    simplicity: Optional[List[Dict[str, object]]] = None
    if o.simplicity is not None:
        simplicity = [
            {
                "class": format_poly(c.factor),
                "a1": c.a1,
                "bad_b": _fmt_or_none(c.bad_b, format_scalar),
            }
            for c in o.simplicity.classes
        ]
    witness: Optional[Dict[str, object]] = None
    if o.h2_failure is not None:
        witness = {
            "kind": "h2-refuted",
            "solution": format_poly(o.h2_failure.solution),
            "theta_log_derivative": format_ratfunc(
                o.h2_failure.theta_log_derivative
            ),
        }
    return {
        "k": o.k,
        "criterion": o.fired,
        "skipped": o.skipped,
        "precondition_failures": list(o.precondition_failures),
        "extra_hypothesis_ok": o.extra_hypothesis_ok,
        "degrees": degrees,
        "rho0": rho0,
        "partition": partition,
        "simplicity": simplicity,
        "aux": aux,
        "witness": witness,
    }


# ---------------------------------------------------------------------------
# Pipeline entry points
# ---------------------------------------------------------------------------


def run_check(spec: SystemSpec) -> ReportDocument:
    """Certify one system and assemble the report document."""
    started = time.perf_counter()
    system, curve = spec.build()
    try:
        cert = certify(system, curve, K=spec.max_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return ReportDocument(
        certificate=cert,
        version=__version__,
        input_echo=spec.input_echo(),
        timing_seconds=time.perf_counter() - started,
    )


@dataclass(frozen=True)
class SweepRow:
    index: int
    params: Dict[str, str]
    report: Optional[ReportDocument]
    error: Optional[str]


def sweep(
    template: SystemSpec,
    axes: Sequence[Tuple[str, Sequence[object]]],
) -> Tuple[List[SweepRow], Dict[str, object]]:
    """Certify every tuple of the parameter grid.

    axes is an ordered sequence of (parameter name, values); the grid is
    their cartesian product enumerated with the last axis fastest.  Rows
    keep grid order; a failing tuple yields an error row and does not
    abort the sweep.
    """
    if template.family is None:
        raise UsageError("sweep requires a builtin family system")
    rows: List[SweepRow] = []
    if not axes:
        return rows, _summarize(rows)
    names = [name for name, _ in axes]
    for index, combo in enumerate(
        itertools.product(*[values for _, values in axes])
    ):
        overrides = dict(zip(names, combo))
        shown = {
            name: (
                format_scalar(value)
                if isinstance(value, QuadExt)
                else str(value)
            )
            for name, value in overrides.items()
        }
        try:
            params = replace(template.params, **overrides)
            spec = replace(template, params=params)
            report = run_check(spec)
            rows.append(
                SweepRow(index=index, params=shown, report=report, error=None)
            )
        except (UsageError, ValueError, TypeError) as exc:
            rows.append(
                SweepRow(index=index, params=shown, report=None, error=str(exc))
            )
    return rows, _summarize(rows)


def _summarize(rows: Sequence[SweepRow]) -> Dict[str, object]:
    by_status: Dict[str, int] = {}
    by_criterion: Dict[str, int] = {}
    by_k: Dict[str, int] = {}
    errors = 0
    for row in rows:
        if row.report is None:
            errors += 1
            continue
        cert = row.report.certificate
        by_status[cert.status] = by_status.get(cert.status, 0) + 1
        if cert.fired_criterion is not None:
            key = cert.fired_criterion
            by_criterion[key] = by_criterion.get(key, 0) + 1
        if cert.fired_k is not None:
            key = str(cert.fired_k)
            by_k[key] = by_k.get(key, 0) + 1
    return {
        "total": len(rows),
        "errors": errors,
        "by_status": dict(sorted(by_status.items())),
        "by_criterion": dict(sorted(by_criterion.items())),
        "by_k": dict(sorted(by_k.items())),
    }


def sweep_json(
    rows: Sequence[SweepRow], summary: Dict[str, object]
) -> str:
    doc = {
        "version": __version__,
        "summary": summary,
        "reports": [
            {
                "index": row.index,
                "params": row.params,
                "error": row.error,
                "certificate": None
                if row.report is None
                else row.report.to_json_dict(),
            }
            for row in rows
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Config files
# ---------------------------------------------------------------------------

_KNOWN_SECTIONS = {"field", "system", "check", "sweep"}
_INLINE_KEYS = {"p", "q", "phi"}
_FOLD_HOPF_KEYS = {"family", "mu", "nu", "alpha", "s", "beta", "omega"}
_DOUBLE_HOPF_KEYS = {
    "family",
    "chart",
    "mu",
    "nu",
    "alpha",
    "beta",
    "s",
    "omega1",
    "omega2",
}


def _read_config(path: str) -> configparser.ConfigParser:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        loaded = parser.read(path)
    except configparser.Error as exc:
        raise UsageError(f"cannot parse config file {path}: {exc}") from exc
    if not loaded:
        raise UsageError(f"cannot read config file: {path}")
    unknown = set(parser.sections()) - _KNOWN_SECTIONS
    if unknown:
        raise UsageError(
            f"unknown config sections: {', '.join(sorted(unknown))}"
        )
    return parser


def _field_from_config(parser: configparser.ConfigParser) -> FieldSpec:
    d = 1
    if parser.has_section("field"):
        extra = set(parser.options("field")) - {"d"}
        if extra:
            raise UsageError(
                f"unknown keys in [field]: {', '.join(sorted(extra))}"
            )
        if parser.has_option("field", "d"):
            try:
                d = int(parser.get("field", "d"))
            except ValueError:
                raise UsageError("[field] d must be an integer")
    try:
        return FieldSpec(d)
    except ValueError as exc:
        raise UsageError(f"[field] {exc}") from exc


def _max_order_from_config(
    parser: configparser.ConfigParser, flag: Optional[int]
) -> int:
    if parser.has_section("check"):
        extra = set(parser.options("check")) - {"max_order"}
        if extra:
            raise UsageError(
                f"unknown keys in [check]: {', '.join(sorted(extra))}"
            )
    if flag is not None:
        return _validate_max_order(flag)
    if parser.has_option("check", "max_order"):
        try:
            k = int(parser.get("check", "max_order"))
        except ValueError:
            raise UsageError("[check] max_order must be an integer")
        return _validate_max_order(k)
    return _default_max_order()


def _builtin_params(
    family: str,
    options: Dict[str, str],
    field: FieldSpec,
) -> Tuple[Union[FoldHopfParams, DoubleHopfParams], int]:
    def scalar(name: str, default: Optional[str] = None) -> Optional[QuadExt]:
        if name not in options:
            if default is None:
                raise UsageError(f"[system] missing parameter: {name}")
            if default == "":
                return None
            return _parse_scalar(default, field, f"[system] {name}")
        return _parse_scalar(options[name], field, f"[system] {name}")

    s = _parse_sign(options.get("s", "1"), "[system] s")
    chart = 1
    if family == FAMILY_FOLD_HOPF:
        allowed = _FOLD_HOPF_KEYS
        params: Union[FoldHopfParams, DoubleHopfParams] = FoldHopfParams(
            field=field,
            mu=scalar("mu"),
            nu=scalar("nu"),
            alpha=scalar("alpha"),
            s=s,
            beta=scalar("beta", ""),
            omega=scalar("omega", ""),
        )
    elif family == FAMILY_DOUBLE_HOPF:
        allowed = _DOUBLE_HOPF_KEYS
        if "chart" in options:
            try:
                chart = int(options["chart"])
            except ValueError:
                raise UsageError("[system] chart must be 1 or 2")
            if chart not in (1, 2):
                raise UsageError("[system] chart must be 1 or 2")
        params = DoubleHopfParams(
            field=field,
            mu=scalar("mu"),
            nu=scalar("nu"),
            alpha=scalar("alpha"),
            beta=scalar("beta"),
            s=s,
            omega1=scalar("omega1", ""),
            omega2=scalar("omega2", ""),
        )
    else:
        raise UsageError(f"unknown family: {family!r}")
    extra = set(options) - allowed
    if extra:
        raise UsageError(
            f"unknown keys in [system]: {', '.join(sorted(extra))}"
        )
    return params, chart


def load_config(path: str, max_order_flag: Optional[int] = None) -> SystemSpec:
    """Parse a check config file into a SystemSpec."""
    parser = _read_config(path)
    field = _field_from_config(parser)
    max_order = _max_order_from_config(parser, max_order_flag)
    if not parser.has_section("system"):
        raise UsageError("config needs a [system] section")
    options = dict(parser.items("system"))
    if "family" in options:
        family = options["family"].strip()
        params, chart = _builtin_params(family, options, field)
        return SystemSpec(
            field=field,
            max_order=max_order,
            family=family,
            chart=chart,
            params=params,
        )
    extra = set(options) - _INLINE_KEYS
    if extra:
        raise UsageError(
            f"unknown keys in [system]: {', '.join(sorted(extra))}"
        )
    if "p" not in options or "q" not in options:
        raise UsageError("an inline [system] needs both P and Q")
    phi = None
    if "phi" in options:
        phi = _parse_curve(options["phi"], field, "[system] phi")
    return SystemSpec(
        field=field,
        max_order=max_order,
        P=_parse_bipoly(options["p"], field, "[system] P"),
        Q=_parse_bipoly(options["q"], field, "[system] Q"),
        phi=phi,
    )


def load_sweep_config(
    path: str, max_order_flag: Optional[int] = None
) -> Tuple[SystemSpec, List[Tuple[str, List[object]]]]:
    """Parse a sweep config: a builtin [system] template plus a [sweep]
    section whose keys are parameter names and values comma-separated
    scalar expressions."""
    parser = _read_config(path)
    field = _field_from_config(parser)
    max_order = _max_order_from_config(parser, max_order_flag)
    if not parser.has_section("system"):
        raise UsageError("config needs a [system] section")
    options = dict(parser.items("system"))
    if "family" not in options:
        raise UsageError("sweep requires a builtin family in [system]")
    family = options["family"].strip()
    swept_names: List[str] = (
        list(parser.options("sweep")) if parser.has_section("sweep") else []
    )
    allowed = (
        _FOLD_HOPF_KEYS if family == FAMILY_FOLD_HOPF else _DOUBLE_HOPF_KEYS
    )
    for name in swept_names:
        if name not in allowed - {"family", "chart"}:
            raise UsageError(f"[sweep] cannot sweep over {name!r}")
        # Template values for swept axes are placeholders; fill if absent.
        options.setdefault(name, "0")
    params, chart = _builtin_params(family, options, field)
    template = SystemSpec(
        field=field,
        max_order=max_order,
        family=family,
        chart=chart,
        params=params,
    )
    axes: List[Tuple[str, List[object]]] = []
    for name in swept_names:
        raw = parser.get("sweep", name)
        values: List[object] = []
        for piece in raw.split(","):
            piece = piece.strip()
            if not piece:
                raise UsageError(f"[sweep] {name}: empty value in list")
            if name == "s":
                values.append(_parse_sign(piece, f"[sweep] {name}"))
            else:
                values.append(_parse_scalar(piece, field, f"[sweep] {name}"))
        axes.append((name, values))
    return template, axes


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------


def render_text(report: ReportDocument) -> str:
    cert = report.certificate
    lines = [f"status: {cert.status}"]
    if cert.fired_k is not None:
        lines[0] += f" (criterion {cert.fired_criterion} at k = {cert.fired_k})"
    elif cert.status == "inconclusive":
        lines[0] += f" ({cert.inconclusive_reason})"
    lines.append(f"system: {cert.system.label or 'inline system'}")
    lines.append(f"  P = {format_bipoly(cert.system.P)}")
    lines.append(f"  Q = {format_bipoly(cert.system.Q)}")
    lines.append(f"  curve: eta = {format_ratfunc(cert.curve.phi)}")
    lines.append(f"  max order: {cert.max_order}")
    for entry in cert.trace:
        lines.append(f"  {entry}")
    if cert.h2_failures:
        ks = ", ".join(str(w.k) for w in cert.h2_failures)
        lines.append(f"  note: H2 refuted at k = {ks} by polynomial solutions")
    lines.append(f"elapsed: {report.timing_seconds:.3f} s")
    return "\n".join(lines) + "\n"


def render_sweep_text(
    rows: Sequence[SweepRow], summary: Dict[str, object]
) -> str:
    lines = [
        f"sweep: {summary['total']} tuples, {summary['errors']} errors"
    ]
    for key in ("by_status", "by_criterion", "by_k"):
        bucket = summary[key]
        if bucket:
            shown = ", ".join(f"{k}: {v}" for k, v in bucket.items())
            lines.append(f"  {key.replace('_', ' ')}: {shown}")
    for row in rows:
        shown = " ".join(f"{k}={v}" for k, v in row.params.items())
        if row.report is None:
            lines.append(f"[{row.index}] {shown} -> error: {row.error}")
            continue
        cert = row.report.certificate
        tail = cert.status
        if cert.fired_k is not None:
            tail += f" (criterion {cert.fired_criterion} at k = {cert.fired_k})"
        lines.append(f"[{row.index}] {shown} -> {tail}")
    return "\n".join(lines) + "\n"


def _emit(report: ReportDocument, json_path: Optional[str]) -> None:
    if json_path == "-":
        sys.stdout.write(report.to_json())
        return
    if json_path is not None:
        with open(json_path, "w") as handle:
            handle.write(report.to_json())
    sys.stdout.write(render_text(report))


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-order",
        type=int,
        default=None,
        metavar="N",
        help=f"maximum variational order (2..{MAX_ORDER_CAP}; default"
        f" {DEFAULT_MAX_ORDER}, or {ENV_MAX_ORDER})",
    )
    parser.add_argument(
        "--json",
        dest="json_path",
        default=None,
        metavar="PATH",
        help="write the JSON report to PATH ('-' for stdout)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="nonint",
        description=(
            "Certify meromorphic nonintegrability of planar polynomial"
            " vector fields along rational integral curves."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(
        dest="command", required=True, parser_class=_ArgumentParser
    )

    check = sub.add_parser("check", help="certify a system from a config file")
    check.add_argument("file", help="INI config with [field], [system], [check]")
    _add_common_flags(check)
    check.set_defaults(handler=_cmd_check)

    fh = sub.add_parser("fold-hopf", help="certify a fold-Hopf unfolding")
    fh.add_argument("--mu", required=True)
    fh.add_argument("--nu", required=True)
    fh.add_argument("--alpha", required=True)
    fh.add_argument("--s", type=int, choices=(1, -1), default=1)
    fh.add_argument("--beta", default=None)
    fh.add_argument("--omega", default=None)
    fh.add_argument("--d", type=int, default=1, help="field discriminant")
    _add_common_flags(fh)
    fh.set_defaults(handler=_cmd_fold_hopf)

    dh = sub.add_parser("double-hopf", help="certify a double-Hopf unfolding")
    dh.add_argument("--mu", required=True)
    dh.add_argument("--nu", required=True)
    dh.add_argument("--alpha", required=True)
    dh.add_argument("--beta", required=True)
    dh.add_argument("--s", type=int, choices=(1, -1), default=1)
    dh.add_argument("--chart", type=int, choices=(1, 2), default=1)
    dh.add_argument("--omega1", default=None)
    dh.add_argument("--omega2", default=None)
    dh.add_argument("--d", type=int, default=1, help="field discriminant")
    _add_common_flags(dh)
    dh.set_defaults(handler=_cmd_double_hopf)

    sw = sub.add_parser("sweep", help="run a parameter grid from a config file")
    sw.add_argument("file", help="INI config with a [sweep] section")
    _add_common_flags(sw)
    sw.set_defaults(handler=_cmd_sweep)
    return parser


def _cmd_check(args: argparse.Namespace) -> int:
    spec = load_config(args.file, max_order_flag=args.max_order)
    report = run_check(spec)
    _emit(report, args.json_path)
    return report.exit_code


def _field_from_flag(d: int) -> FieldSpec:
    try:
        return FieldSpec(d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _flag_max_order(flag: Optional[int]) -> int:
    if flag is not None:
        return _validate_max_order(flag)
    return _default_max_order()


def _cmd_fold_hopf(args: argparse.Namespace) -> int:
    field = _field_from_flag(args.d)

    def scalar(text: Optional[str], what: str) -> Optional[QuadExt]:
        return None if text is None else _parse_scalar(text, field, what)

    params = FoldHopfParams(
        field=field,
        mu=scalar(args.mu, "--mu"),
        nu=scalar(args.nu, "--nu"),
        alpha=scalar(args.alpha, "--alpha"),
        s=args.s,
        beta=scalar(args.beta, "--beta"),
        omega=scalar(args.omega, "--omega"),
    )
    spec = SystemSpec(
        field=field,
        max_order=_flag_max_order(args.max_order),
        family=FAMILY_FOLD_HOPF,
        params=params,
    )
    report = run_check(spec)
    _emit(report, args.json_path)
    return report.exit_code


def _cmd_double_hopf(args: argparse.Namespace) -> int:
    field = _field_from_flag(args.d)

    def scalar(text: Optional[str], what: str) -> Optional[QuadExt]:
        return None if text is None else _parse_scalar(text, field, what)

    params = DoubleHopfParams(
        field=field,
        mu=scalar(args.mu, "--mu"),
        nu=scalar(args.nu, "--nu"),
        alpha=scalar(args.alpha, "--alpha"),
        beta=scalar(args.beta, "--beta"),
        s=args.s,
        omega1=scalar(args.omega1, "--omega1"),
        omega2=scalar(args.omega2, "--omega2"),
    )
    spec = SystemSpec(
        field=field,
        max_order=_flag_max_order(args.max_order),
        family=FAMILY_DOUBLE_HOPF,
        chart=args.chart,
        params=params,
    )
    report = run_check(spec)
    _emit(report, args.json_path)
    return report.exit_code


def _cmd_sweep(args: argparse.Namespace) -> int:
    template, axes = load_sweep_config(args.file, max_order_flag=args.max_order)
    rows, summary = sweep(template, axes)
    if args.json_path == "-":
        sys.stdout.write(sweep_json(rows, summary))
        return EXIT_NONINTEGRABLE
    if args.json_path is not None:
        with open(args.json_path, "w") as handle:
            handle.write(sweep_json(rows, summary))
    sys.stdout.write(render_sweep_text(rows, summary))
    return EXIT_NONINTEGRABLE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
