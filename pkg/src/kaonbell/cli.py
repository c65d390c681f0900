"""Command-line front end.

Commands:

- ``reproduce``   recompute every headline number from the experimental
                  inputs and emit a pass/fail claim table
- ``bi``          evaluate the Bell inequality for a given CP parameter
- ``zeta-bound``  lower bound on the interference-damping parameter
- ``mc-delta``    tagging Monte Carlo estimate of the leptonic asymmetry

Exit status: 0 on success with all claims passing, 1 when a reproduction
claim fails, 2 on usage or configuration errors.

Angles on the command line are degrees; the library works in radians.
Machine-readable output (json, csv) carries values normalized to 12
significant digits with a fixed field order, so identical inputs give
byte-identical files; the table format rounds bounds to 4 decimal places
and uncertainties to 2 significant digits.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, fields

from .bell import (
    leptonic_asymmetry,
    lrt_bound_check,
    mixing_from_delta,
    optimal_alpha,
    uchiyama_assessment,
)
from .decoherence import (
    Basis,
    ZetaBoundResult,
    compare_with_experiment,
    propagate_delta_uncertainty,
)
from .quasispin import mixing_from_epsilon
from .tagging_mc import McConfig, sample_kl_tags

__all__ = [
    "EXIT_CLAIM_FAILURE",
    "EXIT_OK",
    "EXIT_USAGE",
    "Claim",
    "ConfigError",
    "ExperimentalInputs",
    "ReproductionReport",
    "build_report",
    "load_inputs",
    "main",
    "parse_report_csv",
    "parse_report_json",
    "render_report",
]

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2

_BASIS_BY_NAME = {"ks-kl": Basis.KS_KL, "k0-k0bar": Basis.K0_K0BAR}


class ConfigError(ValueError):
    """Malformed or inconsistent configuration file."""


@dataclass(frozen=True)
class ExperimentalInputs:
    """Measured quantities driving the reproduction.

    Defaults are the experimental values: the leptonic asymmetry
    (3.27 +/- 0.12)e-3 and the measured damping parameters
    0.13 (+0.16 / -0.15) in the K_S K_L basis and 0.4 +/- 0.7 in the
    K0 K0bar basis.
    """

    delta_l: float = 3.27e-3
    delta_l_sigma: float = 0.12e-3
    zeta_ksl_measured: float = 0.13
    zeta_ksl_err_plus: float = 0.16
    zeta_ksl_err_minus: float = 0.15
    zeta_k0_measured: float = 0.4
    zeta_k0_err: float = 0.7

    def __post_init__(self):
        for name in (
            "delta_l_sigma",
            "zeta_ksl_err_plus",
            "zeta_ksl_err_minus",
            "zeta_k0_err",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if not abs(self.delta_l) < 1.0:
            raise ValueError("delta_l must satisfy |delta_l| < 1")
        for f in fields(self):
            value = float(getattr(self, f.name))
            if not math.isfinite(value):
                raise ValueError(f"{f.name} must be finite")
            object.__setattr__(self, f.name, value)


@dataclass(frozen=True)
class Claim:
    """One reproduced number: displayed value vs. recomputed value."""

    id: str
    description: str
    paper_value: float | bool
    computed: float | bool
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class ReproductionReport:
    inputs: ExperimentalInputs
    claims: tuple[Claim, ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        ids = [c.id for c in self.claims]
        if len(ids) != len(set(ids)):
            raise ValueError("claim ids must be unique")

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.claims)


def _sig12(value: float) -> float:
    """Normalize to 12 significant digits (stable under re-serialization)."""
    return float(f"{float(value):.12g}")


def _float_claim(cid: str, desc: str, paper: float, computed: float, tol: float) -> Claim:
    paper, computed, tol = _sig12(paper), _sig12(computed), _sig12(tol)
    return Claim(cid, desc, paper, computed, tol, abs(computed - paper) <= tol)


def _bool_claim(cid: str, desc: str, computed: bool) -> Claim:
    return Claim(cid, desc, True, bool(computed), 0.0, bool(computed))


def load_inputs(config_path: str | None) -> ExperimentalInputs:
    """Inputs from a JSON config file; compiled-in defaults when absent.

    The file must hold a JSON object whose keys are a subset of the
    :class:`ExperimentalInputs` field names, each mapped to a number.
    """
    if config_path is None:
        return ExperimentalInputs()
    try:
        with open(config_path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {config_path!r}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"config {config_path!r} is not valid JSON "
            f"(line {exc.lineno}, column {exc.colno}: {exc.msg})"
        ) from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config {config_path!r} must be a JSON object")
    known = {f.name for f in fields(ExperimentalInputs)}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ConfigError(f"unknown config field(s): {', '.join(unknown)}")
    values = {}
    for key, value in raw.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"config field {key!r} must be a number, got {value!r}")
        values[key] = float(value)
    try:
        return ExperimentalInputs(**values)
    except ValueError as exc:
        raise ConfigError(f"invalid config value: {exc}") from exc


def build_report(inputs: ExperimentalInputs) -> ReproductionReport:
    """Recompute every headline claim from the experimental inputs.

    With the default inputs all claims pass.  A CP-conserving input
    (delta_l = 0) is flagged: the damping bounds take their degenerate
    limits (1 in the K_S K_L basis, 0 in the K0 K0bar basis) and the
    inequality is marginally satisfied, so the asymmetry-driven claims
    fail.  A negative delta_l makes the swapped (K0) form the violated
    one; the damping bounds are then evaluated at |delta_l|.
    """
    notes: list[str] = []
    delta = inputs.delta_l
    sigma = inputs.delta_l_sigma
    degenerate = delta == 0.0
    if degenerate:
        notes.append(
            "CP-conserving input: delta_l = 0, the inequality is marginally "
            "satisfied and the zeta bounds take their degenerate limits"
        )
    elif delta < 0.0:
        notes.append(
            "negative delta_l: the K0 form of the inequality is the violated "
            "one; zeta bounds are evaluated at |delta_l|"
        )

    mix = mixing_from_delta(delta)
    alpha_star = optimal_alpha(mix)
    kbar_form = uchiyama_assessment(mix, alpha_star, swap_to_K0=False)
    k0_form = uchiyama_assessment(mix, alpha_star, swap_to_K0=True)
    lrt = lrt_bound_check(mix)

    if degenerate:
        ksl = ZetaBoundResult(0.0, 1.0, 1.0, 1.0, 0.0, Basis.KS_KL)
        k0b = ZetaBoundResult(0.0, 0.0, 0.0, 0.0, 0.0, Basis.K0_K0BAR)
        if sigma > 0.0:
            notes.append("delta_l_sigma ignored for the degenerate input")
    else:
        ksl = propagate_delta_uncertainty(abs(delta), sigma, Basis.KS_KL)
        k0b = propagate_delta_uncertainty(abs(delta), sigma, Basis.K0_K0BAR)
    cmp_ksl = compare_with_experiment(
        ksl, inputs.zeta_ksl_measured, inputs.zeta_ksl_err_plus, inputs.zeta_ksl_err_minus
    )
    cmp_k0 = compare_with_experiment(
        k0b, inputs.zeta_k0_measured, inputs.zeta_k0_err, inputs.zeta_k0_err
    )
    dd = abs(delta)

    claims = (
        _bool_claim(
            "bi-kbar-form-violated",
            "optimized inequality, K0bar form, is violated by the measured asymmetry",
            kbar_form.violated,
        ),
        _bool_claim(
            "bi-k0-form-satisfied",
            "swapped (K0) form of the inequality is satisfied for the same input",
            not k0_form.violated,
        ),
        _bool_claim(
            "lrt-equality-contradicted",
            "local realism requires |p| = |q|; the nonzero asymmetry contradicts it",
            not lrt.equality_required,
        ),
        _float_claim(
            "zeta-ksl-bound",
            "exact lower bound on zeta, K_S K_L basis",
            0.9951,
            ksl.exact_bound,
            5e-4,
        ),
        _float_claim(
            "zeta-ksl-uncertainty",
            "propagated error of the K_S K_L bound",
            2e-4,
            ksl.uncertainty,
            1e-4,
        ),
        _bool_claim(
            "zeta-ksl-expansion-consistent",
            "expansion 1 - 3 delta/2 matches the exact K_S K_L bound to O(delta^2)",
            abs(ksl.exact_bound - ksl.expansion_bound) <= 2.0 * dd * dd,
        ),
        _bool_claim(
            "zeta-ksl-bisection-consistent",
            "bisection cross-check matches the exact K_S K_L bound to 1e-9",
            abs(ksl.exact_bound - ksl.numeric_bound) <= 1e-9,
        ),
        _bool_claim(
            "zeta-ksl-excluded-by-experiment",
            "measured zeta (K_S K_L) lies at least 5 sigma below the bound",
            cmp_ksl.sigmas >= 5.0 and not cmp_ksl.compatible,
        ),
        _float_claim(
            "zeta-k0-bound",
            "exact lower bound on zeta, K0 K0bar basis",
            0.0033,
            k0b.exact_bound,
            2e-4,
        ),
        _float_claim(
            "zeta-k0-uncertainty",
            "propagated error of the K0 K0bar bound",
            1e-4,
            k0b.uncertainty,
            1e-4,
        ),
        _bool_claim(
            "zeta-k0-expansion-consistent",
            "expansion delta matches the exact K0 K0bar bound to O(delta^2)",
            abs(k0b.exact_bound - k0b.expansion_bound) <= 2.0 * dd * dd,
        ),
        _bool_claim(
            "zeta-k0-bisection-consistent",
            "bisection cross-check matches the exact K0 K0bar bound to 1e-9",
            abs(k0b.exact_bound - k0b.numeric_bound) <= 1e-9,
        ),
        _bool_claim(
            "zeta-k0-compatible-with-experiment",
            "measured zeta (K0 K0bar) is compatible with the bound",
            cmp_k0.compatible,
        ),
    )
    return ReproductionReport(inputs, claims, tuple(notes))


# --- rendering -------------------------------------------------------------


def _table_value(claim_id: str, value: float | bool) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if claim_id.endswith("-bound"):
        return f"{value:.4f}"
    if "uncertainty" in claim_id:
        return f"{value:.2g}"
    return f"{value:.6g}"


def _render_report_table(report: ReproductionReport) -> str:
    lines = ["reproduction report", ""]
    lines.append("inputs:")
    for f in fields(report.inputs):
        lines.append(f"  {f.name:<20} = {getattr(report.inputs, f.name):.12g}")
    lines.append("")
    header = f"{'status':<6}  {'claim':<36}  {'paper':>10}  {'computed':>10}  {'tolerance':>9}  description"
    lines.append(header)
    lines.append("-" * len(header))
    for c in report.claims:
        status = "PASS" if c.passed else "FAIL"
        tol = "-" if isinstance(c.paper_value, bool) else f"{c.tolerance:.2g}"
        lines.append(
            f"{status:<6}  {c.id:<36}  {_table_value(c.id, c.paper_value):>10}  "
            f"{_table_value(c.id, c.computed):>10}  {tol:>9}  {c.description}"
        )
    if report.notes:
        lines.append("")
        lines.append("notes:")
        for note in report.notes:
            lines.append(f"  - {note}")
    n_pass = sum(1 for c in report.claims if c.passed)
    lines.append("")
    verdict = "ALL CLAIMS PASS" if report.all_pass else "CLAIM FAILURE"
    lines.append(f"result: {verdict} ({n_pass}/{len(report.claims)})")
    return "\n".join(lines) + "\n"


def _claim_payload(claim: Claim) -> dict:
    return {
        "id": claim.id,
        "description": claim.description,
        "paper_value": claim.paper_value,
        "computed": claim.computed,
        "tolerance": claim.tolerance,
        "pass": claim.passed,
    }


def _render_report_json(report: ReproductionReport) -> str:
    payload = {
        "inputs": {
            f.name: _sig12(getattr(report.inputs, f.name)) for f in fields(report.inputs)
        },
        "claims": [_claim_payload(c) for c in report.claims],
        "notes": list(report.notes),
    }
    return json.dumps(payload, indent=2) + "\n"


def _csv_cell(value: float | bool) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return f"{value:.12g}"


def _render_report_csv(report: ReproductionReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["id", "description", "paper_value", "computed", "tolerance", "pass"])
    for c in report.claims:
        writer.writerow(
            [
                c.id,
                c.description,
                _csv_cell(c.paper_value),
                _csv_cell(c.computed),
                _csv_cell(c.tolerance),
                _csv_cell(c.passed),
            ]
        )
    return buffer.getvalue()


def render_report(report: ReproductionReport, fmt: str) -> str:
    if fmt == "table":
        return _render_report_table(report)
    if fmt == "json":
        return _render_report_json(report)
    if fmt == "csv":
        return _render_report_csv(report)
    raise ValueError(f"unknown format {fmt!r}")


def parse_report_json(text: str) -> ReproductionReport:
    """Rebuild a report from its JSON rendering (inverse of the json format)."""
    payload = json.loads(text)
    inputs = ExperimentalInputs(**payload["inputs"])
    claims = tuple(
        Claim(
            id=c["id"],
            description=c["description"],
            paper_value=c["paper_value"],
            computed=c["computed"],
            tolerance=c["tolerance"],
            passed=c["pass"],
        )
        for c in payload["claims"]
    )
    return ReproductionReport(inputs, claims, tuple(payload.get("notes", ())))


def _parse_cell(cell: str) -> float | bool:
    if cell == "true":
        return True
    if cell == "false":
        return False
    return float(cell)


def parse_report_csv(text: str) -> tuple[Claim, ...]:
    """Rebuild the claim rows from the CSV rendering."""
    rows = list(csv.reader(io.StringIO(text)))
    claims = []
    for row in rows[1:]:
        cid, desc, paper, computed, tol, passed = row
        claims.append(
            Claim(cid, desc, _parse_cell(paper), _parse_cell(computed), float(tol), _parse_cell(passed))
        )
    return tuple(claims)


def _render_record(items: list[tuple[str, object]], fmt: str, table_fmt: dict | None = None) -> str:
    if fmt == "json":
        payload = {k: (_sig12(v) if isinstance(v, float) else v) for k, v in items}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["field", "value"])
        for k, v in items:
            writer.writerow([k, _csv_cell(v) if isinstance(v, (bool, float)) else str(v)])
        return buffer.getvalue()
    table_fmt = table_fmt or {}
    width = max(len(k) for k, _ in items)
    lines = []
    for k, v in items:
        if isinstance(v, float):
            lines.append(f"{k:<{width}} = {v:{table_fmt.get(k, '.12g')}}")
        else:
            lines.append(f"{k:<{width}} = {v}")
    return "\n".join(lines) + "\n"


def _emit(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
    else:
        with open(output_path, "w", encoding="utf-8") as handle:
            handle.write(text)


# --- commands ---------------------------------------------------------------


def cmd_reproduce(config_path: str | None, fmt: str, output_path: str | None) -> int:
    inputs = load_inputs(config_path)
    report = build_report(inputs)
    _emit(render_report(report, fmt), output_path)
    return EXIT_OK if report.all_pass else EXIT_CLAIM_FAILURE


def cmd_bi(
    epsilon_mag: float,
    epsilon_phase_deg: float,
    alpha_deg: float | None,
    fmt: str = "table",
    output_path: str | None = None,
) -> int:
    if not (math.isfinite(epsilon_mag) and epsilon_mag >= 0.0):
        raise ValueError(f"epsilon magnitude must be nonnegative, got {epsilon_mag!r}")
    epsilon = epsilon_mag * cmath.exp(1j * math.radians(epsilon_phase_deg))
    mix = mixing_from_epsilon(epsilon)
    alpha = optimal_alpha(mix) if alpha_deg is None else math.radians(alpha_deg)
    assessment = uchiyama_assessment(mix, alpha)
    items = [
        ("epsilon_mag", float(epsilon_mag)),
        ("epsilon_phase_deg", float(epsilon_phase_deg)),
        ("alpha_deg", math.degrees(assessment.alpha_used)),
        ("lhs", assessment.lhs),
        ("rhs", assessment.rhs),
        ("margin", assessment.margin),
        ("violated", assessment.violated),
    ]
    _emit(_render_record(items, fmt), output_path)
    return EXIT_OK


def cmd_zeta_bound(
    delta: float,
    sigma: float,
    basis_name: str,
    fmt: str = "table",
    output_path: str | None = None,
) -> int:
    basis = _BASIS_BY_NAME[basis_name]
    result = propagate_delta_uncertainty(delta, sigma, basis)
    items = [
        ("delta", result.delta_in),
        ("sigma", float(sigma)),
        ("basis", basis.value),
        ("exact_bound", result.exact_bound),
        ("expansion_bound", result.expansion_bound),
        ("numeric_bound", result.numeric_bound),
        ("uncertainty", result.uncertainty),
    ]
    table_fmt = {
        "exact_bound": ".4f",
        "expansion_bound": ".4f",
        "numeric_bound": ".4f",
        "uncertainty": ".2g",
    }
    _emit(_render_record(items, fmt, table_fmt), output_path)
    return EXIT_OK


def cmd_mc_delta(
    delta: float,
    n: int,
    seed: int,
    fmt: str = "table",
    output_path: str | None = None,
) -> int:
    mix = mixing_from_delta(delta)
    result = sample_kl_tags(McConfig(n, seed, mix))
    items = [
        ("delta_analytic", leptonic_asymmetry(mix)),
        ("n_events", n),
        ("seed", seed),
        ("generator", result.generator),
        ("n_plus", result.n_plus),
        ("n_minus", result.n_minus),
        ("delta_hat", result.delta_hat),
        ("std_error", result.std_error),
    ]
    _emit(_render_record(items, fmt), output_path)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        metavar="PATH",
        default=None,
        help="JSON file with experimental inputs (all fields optional)",
    )
    common.add_argument(
        "--format", choices=("table", "json", "csv"), default="table", help="output format"
    )
    common.add_argument(
        "--output", metavar="PATH", default=None, help="write output to a file"
    )

    parser = argparse.ArgumentParser(
        prog="kaonbell",
        description="Bell tests and interference-damping bounds for entangled "
        "neutral kaons at creation time",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "reproduce",
        parents=[common],
        help="recompute every headline number and report per-claim pass/fail",
    )

    bi = sub.add_parser(
        "bi", parents=[common], help="evaluate the Bell inequality for a CP parameter"
    )
    bi.add_argument("epsilon_mag", type=float, help="|epsilon| (dimensionless)")
    bi.add_argument("epsilon_phase_deg", type=float, help="arg(epsilon) in degrees")
    bi.add_argument(
        "alpha_deg",
        type=float,
        nargs="?",
        default=None,
        help="CP phase in degrees (default: the optimal phase)",
    )

    zb = sub.add_parser(
        "zeta-bound", parents=[common], help="lower bound on the damping parameter"
    )
    zb.add_argument("delta", type=float, help="leptonic asymmetry, in (0, 1)")
    zb.add_argument("sigma", type=float, help="asymmetry uncertainty (>= 0)")
    zb.add_argument("basis", choices=sorted(_BASIS_BY_NAME), help="damping basis")

    mc = sub.add_parser(
        "mc-delta", parents=[common], help="tagging Monte Carlo asymmetry estimate"
    )
    mc.add_argument("delta", type=float, help="true asymmetry, |delta| < 1")
    mc.add_argument("n", type=int, help="number of events (>= 1)")
    mc.add_argument("seed", type=int, help="RNG seed (>= 0)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "reproduce":
            return cmd_reproduce(args.config, args.format, args.output)
        if args.command == "bi":
            return cmd_bi(
                args.epsilon_mag, args.epsilon_phase_deg, args.alpha_deg,
                args.format, args.output,
            )
        if args.command == "zeta-bound":
            return cmd_zeta_bound(args.delta, args.sigma, args.basis, args.format, args.output)
        if args.command == "mc-delta":
            return cmd_mc_delta(args.delta, args.n, args.seed, args.format, args.output)
    except (ValueError, OSError) as exc:
        print(f"kaonbell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError(f"unhandled command {args.command!r}")


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
