"""Command-line front end: ``noisytele {fidelity,entanglement,thresholds,region,verify}``.

Angles on the command line are in units of pi (``--delta 0.5`` is pi/2).
Output is CSV (header row, 12 significant digits, LF endings) or JSON with
top-level ``config`` and ``rows`` keys. Exit codes: 0 success, 1 failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import security as sec
from .channels import Arms, ChannelKind, DistributionScenario, PostSelectionError, distribute
from .checks import EXPECTED, FAIL, run_checks
from .entanglement import (
    concurrence,
    concurrence_closed_form,
    fef_closed_form,
    fef_sampled,
    fully_entangled_fraction,
    max_teleport_fidelity,
)
from .states import BellKind, BlochState
from .teleport import (
    Selective,
    bloch_average_fidelity,
    direct_transmission_average,
    direct_transmission_fidelity,
    fidelity_report,
    optimal_strategy,
    paper_strategy,
    standard_strategy,
    teleport,
)

SWEEP_VARS = ("p", "p_a", "p_b", "delta")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    steps: int

    def values(self) -> list[float]:
        return [float(v) for v in np.linspace(self.start, self.stop, self.steps)]


def parse_sweep(text: str) -> SweepSpec:
    """Parse ``var=start:stop:steps`` into a :class:`SweepSpec`."""
    try:
        var, rng = text.split("=", 1)
        start, stop, steps = rng.split(":")
        spec = SweepSpec(var.strip(), float(start), float(stop), int(steps))
    except ValueError:
        raise UsageError(f"bad sweep {text!r}; expected var=start:stop:steps") from None
    if spec.variable not in SWEEP_VARS:
        raise UsageError(f"sweep variable must be one of {', '.join(SWEEP_VARS)}")
    if spec.steps < 2 or spec.start > spec.stop:
        raise UsageError("sweep needs start <= stop and at least 2 steps")
    return spec


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--channel", choices=[k.value for k in ChannelKind], default="adc")
    p.add_argument("--scenario", choices=["one", "two"], default="two")
    p.add_argument("--bell", choices=[b.value for b in BellKind], default="psi+")
    p.add_argument("--watched", action="store_true")
    p.add_argument("--pa", type=float, default=None, help="damping rate of Alice's arm")
    p.add_argument("--pb", type=float, default=None, help="damping rate of Bob's arm")
    p.add_argument("--sweep", default=None, help="var=start:stop:steps, var in p, p_a, p_b, delta")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", default=None, help="output file (default: standard output)")
    p.add_argument("--seed", type=int, default=0)


def _teleport_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strategy", choices=["standard", "paper", "optimal"], default="standard")
    p.add_argument("--avg", choices=["weighted", "unweighted", "selective"], default="weighted")
    p.add_argument("--keep", default="1,3", help="outcomes kept by selective averaging, e.g. 1,3")
    p.add_argument("--hemisphere", choices=["upper", "lower", "full"], default="full")
    p.add_argument("--outcome", type=int, choices=range(4), default=None)
    p.add_argument("--direct", action="store_true", help="send the input through the channel directly")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="noisytele", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fidelity", help="per-outcome teleportation fidelities")
    _common(f)
    _teleport_opts(f)
    f.add_argument("--delta", type=float, default=0.5, help="polar angle in units of pi")
    f.add_argument("--gamma", type=float, default=0.0, help="azimuth in units of pi")
    f.add_argument("--average", action="store_true", help="average over the Bloch sphere instead")

    e = sub.add_parser("entanglement", help="concurrence and fully entangled fraction versus damping rate")
    _common(e)
    e.add_argument("--samples", type=int, default=0, help="also run the sampled f_ent search")

    t = sub.add_parser("thresholds", help="critical damping rates for every case")
    _common(t)

    r = sub.add_parser("region", help="polar-angle intervals beating a reference (contour data)")
    _common(r)
    _teleport_opts(r)
    r.add_argument("--reference", choices=[x.value for x in sec.Reference], default="nocloning")

    v = sub.add_parser("verify", help="run the self-verification suite")
    _common(v)
    return parser


def _rates(args, override: dict | None = None) -> tuple[float, float]:
    override = override or {}
    if args.scenario == "one":
        if args.pa not in (None, 0.0) or "p_a" in override:
            raise UsageError("one-arm scenario has no noise on Alice's arm; use --pb")
        pb = override.get("p", override.get("p_b", args.pb))
        return 0.0, 0.0 if pb is None else pb
    pa, pb = args.pa, args.pb
    if "p" in override:
        pa = pb = override["p"]
    pa = override.get("p_a", pa)
    pb = override.get("p_b", pb)
    if pa is None and pb is None:
        return 0.0, 0.0
    if pa is None:
        pa = pb
    if pb is None:
        pb = pa
    return pa, pb


def _scenario(args, override: dict | None = None) -> DistributionScenario:
    pa, pb = _rates(args, override)
    try:
        return DistributionScenario(args.bell, args.channel, p_b=pb, p_a=pa, arms=Arms(args.scenario), watched=args.watched)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _grid(args) -> list[dict]:
    if args.sweep is None:
        return [{}]
    spec = parse_sweep(args.sweep)
    if spec.variable == "delta" and args.command not in ("fidelity",):
        raise UsageError("delta sweeps only apply to the fidelity command")
    if spec.variable != "delta" and not (0.0 <= spec.start and spec.stop <= 1.0):
        raise UsageError("damping-rate sweeps must stay within [0, 1]")
    if spec.variable == "delta" and not (0.0 <= spec.start and spec.stop <= 1.0):
        raise UsageError("delta sweeps are in units of pi and must stay within [0, 1]")
    return [{spec.variable: v} for v in spec.values()]


def _strategy(args, shared):
    bell = BellKind(args.bell)
    if args.strategy == "paper":
        return paper_strategy(bell)
    if args.strategy == "optimal":
        return optimal_strategy(shared)
    return standard_strategy(bell)


def _averaging(args):
    if args.avg != "selective":
        return args.avg
    try:
        kept = {int(k) for k in args.keep.split(",") if k.strip()}
        return Selective(kept, args.hemisphere)
    except ValueError as exc:
        raise UsageError(f"bad --keep: {exc}") from None


def _shared(scenario):
    try:
        return distribute(scenario)
    except PostSelectionError as exc:
        raise UsageError(str(exc)) from None


def cmd_fidelity(args) -> tuple[list[str], list[list]]:
    columns = ["p_a", "p_b", "delta", "gamma", "k", "probability", "fidelity"]
    rows = []
    for point in _grid(args):
        s = _scenario(args, point)
        delta = math.pi * point.get("delta", args.delta)
        gamma = math.pi * args.gamma
        if not 0.0 <= delta <= math.pi:
            raise UsageError("--delta must lie in [0, 1] (units of pi)")
        head = [s.p_a, s.p_b, delta, gamma]
        if args.direct:
            p = s.p_b
            if args.average:
                rows.append(head + ["direct-average", None, direct_transmission_average(s.kind, p)])
            else:
                rows.append(head + ["direct", None, direct_transmission_fidelity(BlochState(delta, gamma), s.kind, p)])
            continue
        shared = _shared(s)
        strategy = _strategy(args, shared)
        if args.average:
            averaging = _averaging(args)
            label = args.avg if args.avg != "selective" else f"selective-{args.hemisphere}"
            rows.append(head + [label, None, bloch_average_fidelity(shared, strategy, averaging)])
            continue
        outcomes = teleport(BlochState(delta, gamma), shared, strategy)
        report = fidelity_report(outcomes)
        for o in outcomes:
            if args.outcome is None or o.k == args.outcome:
                rows.append(head + [o.k, o.probability, o.fidelity])
        if args.outcome is None:
            rows.append(head + ["weighted", None, report.probability_weighted_mean])
            rows.append(head + ["unweighted", None, report.unweighted_outcome_mean])
            if args.avg == "selective":
                rows.append(head + ["selective", None, report.selective_mean(_averaging(args).kept)])
    return columns, rows


def cmd_entanglement(args) -> tuple[list[str], list[list]]:
    columns = ["p_a", "p_b", "concurrence", "f_ent", "f_closed", "c_closed", "f_max_teleport", "success_probability"]
    if args.samples:
        columns.append("f_sampled")
    if args.sweep or args.pa is not None or args.pb is not None:
        grid = _grid(args)
    else:
        grid = [{"p": float(v)} for v in np.linspace(0.0, 1.0, 11)]
    rows = []
    for point in grid:
        s = _scenario(args, point)
        shared = _shared(s)
        f = fully_entangled_fraction(shared.rho)
        row = [
            s.p_a,
            s.p_b,
            concurrence(shared.rho),
            f,
            fef_closed_form(s),
            concurrence_closed_form(s),
            max_teleport_fidelity(f),
            shared.success_probability,
        ]
        if args.samples:
            row.append(fef_sampled(shared.rho, args.samples, seed=args.seed))
        rows.append(row)
    return columns, rows


def cmd_thresholds(args) -> tuple[list[str], list[list]]:
    columns = ["case", "target", "crossings", "expected", "tolerance", "match"]
    rows = []
    for r in sec.threshold_table():
        rows.append([r.label, r.target, list(r.crossings), r.analytic_expected, r.tolerance, r.matches])
    bound = sec.pole_neighbourhood_bound()
    rows.append(["adc two-arm psi even outcomes above PCCM near |1>", None, [bound], 0.162, 2e-3, abs(bound - 0.162) <= 2e-3])
    return columns, rows


def cmd_region(args) -> tuple[list[str], list[list]]:
    columns = ["p_a", "p_b", "interval", "delta_low", "delta_high"]
    reference = sec.Reference(args.reference)
    rows = []
    for point in _grid(args):
        s = _scenario(args, point)
        if args.direct:
            curve = sec.direct_curve(s.kind, s.p_b)
        else:
            shared = _shared(s)
            if args.avg == "selective":
                raise UsageError("region curves use weighted or unweighted averaging, or --outcome")
            curve = sec.teleport_curve(shared, args.outcome, args.avg)
        intervals = sec.secure_delta_range(curve, reference)
        if not intervals:
            rows.append([s.p_a, s.p_b, None, None, None])
        for i, (lo, hi) in enumerate(intervals):
            rows.append([s.p_a, s.p_b, i, lo, hi])
    return columns, rows


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".12g")
    if isinstance(v, list):
        return ";".join(_cell(x) for x in v)
    return str(v)


def render(columns: Sequence[str], rows: Sequence[Sequence], fmt: str, config: dict) -> str:
    if fmt == "json":
        payload = {"config": config, "rows": [dict(zip(columns, row)) for row in rows]}
        return json.dumps(payload, indent=2, allow_nan=False, default=str) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _config(args) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("output", "format")}
    config["angle_unit_on_input"] = "pi"
    config["angle_unit_on_output"] = "radian"
    if args.command == "region":
        config["grid"] = "(delta, p) reconstruction of the contour figures"
    return config


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    results = run_checks()
    failed = [r for r in results if r.status == FAIL]
    if args.format == "json":
        rows = [[r.name, r.status, r.detail] for r in results]
        _emit(render(["check", "status", "detail"], rows, "json", _config(args)), args.output)
    else:
        lines = [f"{r.status.upper()}: {r.name} ({r.detail})" for r in results]
        expected = sum(r.status == EXPECTED for r in results)
        lines.append(f"{len(results) - len(failed) - expected} passed, {expected} expected discrepancies, {len(failed)} failed")
        _emit("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


COMMANDS = {
    "fidelity": cmd_fidelity,
    "entanglement": cmd_entanglement,
    "thresholds": cmd_thresholds,
    "region": cmd_region,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        for name in ("pa", "pb"):
            value = getattr(args, name)
            if value is not None and not 0.0 <= value <= 1.0:
                raise UsageError(f"--{name} must lie in [0, 1]")
        if args.command == "verify":
            return cmd_verify(args)
        columns, rows = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    _emit(render(columns, rows, args.format, _config(args)), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
