"""Self-verification suite run by ``noisytele verify``.

Each check compares direct simulation against an independent expression.
Three published expressions are known to disagree with simulation; those
checks confirm the disagreement together with the corrected form and report
it as an expected discrepancy instead of a failure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import security as sec
from .channels import (
    Arms,
    ChannelKind,
    DistributionScenario,
    PostSelectionError,
    closed_form_shared,
    distribute,
)
from .entanglement import (
    concurrence,
    concurrence_closed_form,
    fef_closed_form,
    fef_sampled,
    fully_entangled_fraction,
)
from .states import BellKind, BlochState, density, random_density_matrix, random_pure_state
from .teleport import (
    OUTCOME_INDEX,
    Selective,
    bloch_average_fidelity,
    calibrate_outcome_index,
    closed_form_fidelity,
    direct_transmission_average,
    direct_transmission_closed_form,
    direct_transmission_fidelity,
    optimal_strategy,
    outcome_fidelities,
    outcome_maps,
    standard_strategy,
    teleport,
)

PASS = "pass"
FAIL = "fail"
EXPECTED = "expected discrepancy"

P_GRID = [round(0.1 * i, 1) for i in range(11)]
DELTA_GRID = [math.pi * i / 16 for i in range(17)]
GAMMA_GRID = [0.0, math.pi / 3, 4 * math.pi / 3]


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str

    @property
    def ok(self) -> bool:
        return self.status != FAIL


def all_scenarios(p_grid=P_GRID) -> Iterator[DistributionScenario]:
    """Every channel, Bell state, arm layout and monitoring choice on ``p_grid``.

    Two-arm cases run over all (p_a, p_b) pairs of the grid.
    """
    for kind, bell, watched in itertools.product(ChannelKind, BellKind, (False, True)):
        for p in p_grid:
            yield DistributionScenario.one_arm(bell, kind, p, watched=watched)
        for pa, pb in itertools.product(p_grid, p_grid):
            yield DistributionScenario.two_arm(bell, kind, pa, pb, watched=watched)


def covered_fidelity_scenarios(p_grid) -> Iterator[DistributionScenario]:
    for kind, bell, p in itertools.product(ChannelKind, BellKind, p_grid):
        yield DistributionScenario.one_arm(bell, kind, p)
        yield DistributionScenario.two_arm(bell, kind, p)


def _channel_and_entanglement() -> list[CheckResult]:
    err_rho = err_f = err_c = 0.0
    bad = []
    for s in all_scenarios():
        try:
            sim = distribute(s)
        except PostSelectionError:
            try:
                closed_form_shared(s)
                bad.append(f"{s}: only simulation rejected post-selection")
            except PostSelectionError:
                pass
            continue
        ref = closed_form_shared(s)
        err_rho = max(err_rho, float(np.max(np.abs(sim.rho - ref.rho))))
        if abs(sim.success_probability - ref.success_probability) > 1e-12:
            bad.append(f"{s}: success probability")
        err_f = max(err_f, abs(fully_entangled_fraction(sim.rho) - fef_closed_form(s)))
        err_c = max(err_c, abs(concurrence(sim.rho) - concurrence_closed_form(s)))
    return [
        CheckResult(
            "channel simulation equals closed-form shared states",
            PASS if err_rho <= 1e-12 and not bad else FAIL,
            f"max |delta rho| = {err_rho:.2e}" + (f"; {bad[:3]}" if bad else ""),
        ),
        CheckResult(
            "f_ent matches closed forms",
            PASS if err_f <= 1e-10 else FAIL,
            f"max error {err_f:.2e}",
        ),
        CheckResult(
            "concurrence matches closed forms",
            PASS if err_c <= 1e-10 else FAIL,
            f"max error {err_c:.2e}",
        ),
    ]


def _fef_oracle() -> list[CheckResult]:
    rng = np.random.default_rng(2024)
    worst_gap, below = 0.0, 0
    for i in range(20):
        rho = random_density_matrix(rng, 4, rank=int(rng.integers(1, 5)))
        exact = fully_entangled_fraction(rho)
        sampled = fef_sampled(rho, 2000, seed=i)
        if exact < sampled - 1e-12:
            below += 1
        worst_gap = max(worst_gap, exact - sampled)
    pure_err = 0.0
    for _ in range(50):
        rho = density(random_pure_state(rng))
        pure_err = max(pure_err, abs(fully_entangled_fraction(rho) - 0.5 * (1 + concurrence(rho))))
    return [
        CheckResult(
            "exact f_ent bounds sampled search",
            PASS if below == 0 and worst_gap < 1e-5 else FAIL,
            f"largest gap {worst_gap:.2e}, violations {below}",
        ),
        CheckResult(
            "pure states satisfy f_ent = (1 + C)/2",
            PASS if pure_err <= 1e-9 else FAIL,
            f"max error {pure_err:.2e}",
        ),
    ]


def _fidelity_formulas() -> list[CheckResult]:
    err, gamma_spread = 0.0, 0.0
    for s in covered_fidelity_scenarios(P_GRID[:-1]):
        shared = distribute(s)
        for delta in DELTA_GRID:
            per_gamma = []
            for gamma in GAMMA_GRID:
                inp = BlochState(delta, gamma)
                fids = []
                for o in teleport(inp, shared):
                    if o.fidelity is None:
                        fids.append(math.nan)
                        continue
                    err = max(err, abs(o.fidelity - closed_form_fidelity(s, o.k, inp)))
                    fids.append(o.fidelity)
                per_gamma.append(fids)
            arr = np.array(per_gamma)
            if not np.all(np.isnan(arr)):
                gamma_spread = max(gamma_spread, float(np.nanmax(np.nanmax(arr, 0) - np.nanmin(arr, 0))))
    direct_err = 0.0
    for kind, p, delta in itertools.product(ChannelKind, P_GRID, DELTA_GRID):
        inp = BlochState(delta)
        direct_err = max(
            direct_err, abs(direct_transmission_fidelity(inp, kind, p) - direct_transmission_closed_form(inp, kind, p))
        )
    one_arm_err = 0.0
    for p, delta in itertools.product(P_GRID, DELTA_GRID):
        s = DistributionScenario.one_arm(BellKind.PSI_PLUS, ChannelKind.ADC, p)
        inp = BlochState(delta)
        one_arm_err = max(
            one_arm_err,
            abs(direct_transmission_fidelity(inp, ChannelKind.ADC, p) - closed_form_fidelity(s, 1, inp)),
        )
    return [
        CheckResult(
            "teleported fidelities match closed forms",
            PASS if err <= 1e-11 else FAIL,
            f"max error {err:.2e}",
        ),
        CheckResult(
            "fidelities independent of azimuth",
            PASS if gamma_spread < 1e-12 else FAIL,
            f"max spread {gamma_spread:.2e}",
        ),
        CheckResult(
            "direct transmission matches closed forms",
            PASS if direct_err <= 1e-11 else FAIL,
            f"max error {direct_err:.2e}",
        ),
        CheckResult(
            "direct ADC transmission equals one-arm outcome m_1",
            PASS if one_arm_err <= 1e-11 else FAIL,
            f"max error {one_arm_err:.2e}",
        ),
    ]


def _outcome_structure() -> list[CheckResult]:
    calib_ok = all(calibrate_outcome_index(b) == OUTCOME_INDEX[b] for b in BellKind)
    prob_err = 0.0
    for bell, p in itertools.product((BellKind.PSI_PLUS, BellKind.PSI_MINUS), P_GRID):
        shared = distribute(DistributionScenario.two_arm(bell, ChannelKind.ADC, p))
        for delta in DELTA_GRID:
            for o in teleport(BlochState(delta), shared):
                expected = (1 + (-1) ** o.k * p * math.cos(delta)) / 4
                prob_err = max(prob_err, abs(o.probability - expected))
    optimal_ok = True
    for kind, bell, p in itertools.product(ChannelKind, BellKind, (0.2, 0.6)):
        shared = distribute(DistributionScenario.two_arm(bell, kind, p))
        optimal_ok &= optimal_strategy(shared).table == standard_strategy(bell).table
    pdc_spread = 0.0
    for p, delta in itertools.product((0.3, 0.7), DELTA_GRID):
        shared = distribute(DistributionScenario.two_arm(BellKind.PHI_PLUS, ChannelKind.PDC, p))
        fids = [o.fidelity for o in teleport(BlochState(delta, 0.4), shared)]
        pdc_spread = max(pdc_spread, max(fids) - min(fids))
    return [
        CheckResult("outcome labelling reproduces calibration", PASS if calib_ok else FAIL, "all four Bell states"),
        CheckResult(
            "ADC |psi> outcome probabilities (1 + (-1)^k p cos d)/4",
            PASS if prob_err <= 1e-12 else FAIL,
            f"max error {prob_err:.2e}",
        ),
        CheckResult(
            "brute-force corrections coincide with the standard table",
            PASS if optimal_ok else FAIL,
            "3 channels x 4 Bell states x p in {0.2, 0.6}",
        ),
        CheckResult(
            "PDC outcomes are equally faithful",
            PASS if pdc_spread <= 1e-12 else FAIL,
            f"max spread {pdc_spread:.2e}",
        ),
    ]


def hytr1ad(p: float) -> float:
    q = 1.0 - p
    return (2 * p + q * q * math.log(q / (1 + p))) / (4 * p * p)


def _averages() -> list[CheckResult]:
    rows: list[tuple[str, float, float]] = []
    psi, adc, pdc, dc = BellKind.PSI_PLUS, ChannelKind.ADC, ChannelKind.PDC, ChannelKind.DC
    for p in P_GRID[1:-1]:
        q = 1.0 - p
        two = lambda k: distribute(DistributionScenario.two_arm(psi, k, p))  # noqa: E731
        one = lambda k: distribute(DistributionScenario.one_arm(psi, k, p))  # noqa: E731
        rows += [
            (f"adc two-arm outcome mean p={p}", bloch_average_fidelity(two(adc), averaging="unweighted"), hytr1ad(p)),
            (f"adc two-arm weighted p={p}", bloch_average_fidelity(two(adc)), 1 - 2 * p / 3),
            (f"pdc two-arm p={p}", bloch_average_fidelity(two(pdc)), 1 - p * (2 - p) / 3),
            (f"pdc one-arm p={p}", bloch_average_fidelity(one(pdc)), 1 - p / 3),
            (f"dc two-arm p={p}", bloch_average_fidelity(two(dc)), (1 + q * q) / 2),
            (f"dc one-arm p={p}", bloch_average_fidelity(one(dc)), (1 + q) / 2),
            (f"adc one-arm p={p}", bloch_average_fidelity(one(adc)), 2 / 3 + (2 * math.sqrt(q) - p) / 6),
            (
                f"adc one-arm selective p={p}",
                bloch_average_fidelity(one(adc), averaging=Selective({1, 3}, "upper")),
                2 / 3 + (4 * math.sqrt(q) + p) / 12,
            ),
            (f"adc direct p={p}", direct_transmission_average(adc, p), 2 / 3 + (2 * math.sqrt(q) - p) / 6),
            (f"pdc direct p={p}", direct_transmission_average(pdc, p), 1 - p / 3),
            (f"dc direct p={p}", direct_transmission_average(dc, p), (1 + q) / 2),
        ]
    worst = max(rows, key=lambda r: abs(r[1] - r[2]))
    err = abs(worst[1] - worst[2])

    shared = distribute(DistributionScenario.two_arm(psi, adc, 0.5))
    mid = bloch_average_fidelity(shared, averaging="unweighted")

    doubling = 0.0
    for p in (0.3, 0.9):
        shared = distribute(DistributionScenario.two_arm(psi, adc, p))
        for avg in ("weighted", "unweighted", Selective({0, 2}, "lower")):
            a = bloch_average_fidelity(shared, averaging=avg)
            b = bloch_average_fidelity(shared, averaging=avg, n_polar=128, n_azimuth=32)
            doubling = max(doubling, abs(a - b))

    small_err = 0.0
    for p in (1e-4, 5e-4, 9e-4):
        shared = distribute(DistributionScenario.two_arm(psi, adc, p))
        small_err = max(
            small_err, abs(bloch_average_fidelity(shared, averaging="unweighted") - (1 - 2 * p / 3 + p * p / 3))
        )
    return [
        CheckResult(
            "Bloch-sphere averages match closed forms",
            PASS if err <= 1e-8 else FAIL,
            f"{len(rows)} averages, worst {worst[0]} off by {err:.2e}",
        ),
        CheckResult(
            "ADC two-arm outcome mean at p=0.5 is 1 + ln(1/3)/4",
            PASS if abs(mid - (1 + 0.25 * math.log(1 / 3))) <= 1e-8 else FAIL,
            f"{mid:.9f}",
        ),
        CheckResult(
            "quadrature stable under node doubling",
            PASS if doubling < 1e-10 else FAIL,
            f"max change {doubling:.2e}",
        ),
        CheckResult(
            "small-p expansion of the ADC outcome mean",
            PASS if small_err < 1e-6 else FAIL,
            f"max error {small_err:.2e}",
        ),
    ]


def _threshold_checks() -> list[CheckResult]:
    out = []
    for r in sec.threshold_table():
        found = ", ".join(f"{c:.9f}" for c in r.crossings) or "none"
        out.append(
            CheckResult(
                f"threshold {r.label}",
                PASS if r.matches else FAIL,
                f"found {found}, expected {r.analytic_expected:.9f}",
            )
        )
    return out


def _unequal_boundaries() -> list[CheckResult]:
    g0 = sec.g_boundary(0.0)
    r1 = sec.unequal_rate_boundary(ChannelKind.ADC, BellKind.PHI_PLUS, 0.5, 0.5)
    r2 = sec.unequal_rate_boundary(ChannelKind.ADC, BellKind.PHI_PLUS, 0.5, 0.25)
    expected2 = (6 * math.sqrt(6) - 13) / 2
    err = 0.0
    bad = []
    for kind, bell in ((ChannelKind.ADC, BellKind.PSI_PLUS), (ChannelKind.ADC, BellKind.PHI_PLUS),
                       (ChannelKind.PDC, BellKind.PSI_PLUS), (ChannelKind.DC, BellKind.PSI_PLUS)):
        for x in (0.0, 0.1, 0.2, 0.3, 0.4):
            expected = sec.analytic_unequal_boundary(kind, bell, 0.75, x)
            found = sec.unequal_rate_boundary(kind, bell, 0.75, x)
            if expected is None:
                if found:
                    bad.append((kind.value, bell.value, x))
                continue
            if len(found) != 1:
                bad.append((kind.value, bell.value, x))
                continue
            err = max(err, abs(found[0] - expected))
    return [
        CheckResult(
            "g(0) equals the one-arm ADC bound 2 sqrt(3) - 3",
            PASS if abs(g0 - (2 * math.sqrt(3) - 3)) <= 1e-12 else FAIL,
            f"g(0) = {g0:.12f}",
        ),
        CheckResult(
            "unequal-rate f_ent=3/4 boundaries match analytic forms",
            PASS if err <= 1e-6 and not bad else FAIL,
            f"max error {err:.2e}" + (f"; mismatched {bad}" if bad else ""),
        ),
        CheckResult(
            "ADC |phi> f_ent=1/2 boundary at p=1/2 is 7/8",
            PASS if len(r1) == 1 and abs(r1[0] - 7 / 8) <= 1e-6 else FAIL,
            f"found {r1}",
        ),
        CheckResult(
            "ADC |phi> f_ent=1/2 boundary at p=1/4 is (6 sqrt 6 - 13)/2",
            PASS if len(r2) == 1 and abs(r2[0] - expected2) <= 1e-6 else FAIL,
            f"found {r2}, expected {expected2:.9f}",
        ),
    ]


def _cloning_references() -> list[CheckResult]:
    eq = sec.pccm_fidelity(math.pi / 2)
    h = math.pi / 2
    below = sec.pccm_fidelity(math.nextafter(h, 0.0))
    series_err = 0.0
    for d in np.linspace(0.0, 0.1, 21):
        series_err = max(series_err, abs(sec.pccm_fidelity(d) - sec.pccm_pole_series(d)))
        series_err = max(series_err, abs(sec.pccm_fidelity(math.pi - d) - sec.pccm_pole_series(d)))
    grid_min = min(sec.pccm_fidelity(d) for d in np.arange(0.0, math.pi, 1e-3))
    direct = sec.direct_curve(ChannelKind.ADC, 0.5)
    eq_err = max(abs(direct(d) - sec.pccm_fidelity(d)) for d in np.linspace(0.0, math.pi / 2, 1001))
    return [
        CheckResult(
            "universal cloning references",
            PASS
            if sec.universal_clone_fidelity(2) == 5 / 6 and abs(sec.universal_clone_fidelity(10**9) - 2 / 3) < 1e-9
            else FAIL,
            "m=2 gives 5/6, large m tends to 2/3",
        ),
        CheckResult(
            "PCCM equatorial value (2 + sqrt 2)/4",
            PASS if abs(eq - (2 + math.sqrt(2)) / 4) <= 1e-12 else FAIL,
            f"{eq:.15f}",
        ),
        CheckResult(
            "PCCM continuous at the equator",
            PASS if abs(eq - below) <= 1e-12 else FAIL,
            f"jump {abs(eq - below):.2e}",
        ),
        CheckResult(
            "PCCM pole series within 1e-4 for offsets up to 0.1",
            PASS if series_err <= 1e-4 else FAIL,
            f"max error {series_err:.2e}",
        ),
        CheckResult(
            "PCCM exceeds 5/6 everywhere",
            PASS if grid_min > 5 / 6 else FAIL,
            f"minimum {grid_min:.9f}",
        ),
        CheckResult(
            "ADC direct transmission at p=1/2 equals PCCM on the upper hemisphere",
            PASS if eq_err <= 1e-9 else FAIL,
            f"max difference {eq_err:.2e}",
        ),
    ]


def _regions() -> list[CheckResult]:
    curve = sec.direct_curve(ChannelKind.ADC, 0.8)
    classical = sec.secure_delta_range(curve, sec.Reference.CLASSICAL)
    cloning = sec.secure_delta_range(curve, sec.Reference.UNIVERSAL_CLONE)
    ok_c = len(classical) == 1 and classical[0][0] == 0.0 and abs(classical[0][1] / math.pi - 0.5436) <= 5e-4
    ok_n = len(cloning) == 1 and cloning[0][0] == 0.0 and abs(cloning[0][1] / math.pi - 0.4021) <= 5e-4

    pdc_err = 0.0
    pdc_bad = []
    for p in (0.3, 0.5, 0.8, 1.0):
        shared = distribute(DistributionScenario.two_arm(BellKind.PSI_PLUS, ChannelKind.PDC, p))
        intervals = sec.secure_delta_range(sec.teleport_curve(shared), sec.Reference.UNIVERSAL_CLONE)
        edge = math.asin(math.sqrt(1 / (3 * p * (2 - p))))
        if len(intervals) != 2:
            pdc_bad.append(p)
            continue
        pdc_err = max(pdc_err, abs(intervals[0][1] - edge), abs(intervals[1][0] - (math.pi - edge)))

    bound = sec.pole_neighbourhood_bound()
    return [
        CheckResult(
            "ADC direct p=0.8 beats 2/3 for delta < 0.5436 pi",
            PASS if ok_c else FAIL,
            f"intervals / pi = {[(a / math.pi, b / math.pi) for a, b in classical]}",
        ),
        CheckResult(
            "ADC direct p=0.8 beats 5/6 for delta < 0.4021 pi",
            PASS if ok_n else FAIL,
            f"intervals / pi = {[(a / math.pi, b / math.pi) for a, b in cloning]}",
        ),
        CheckResult(
            "PDC two-arm secure region sin^2 d < 1/(3p(2-p))",
            PASS if pdc_err <= 1e-6 and not pdc_bad else FAIL,
            f"max edge error {pdc_err:.2e}" + (f"; bad p {pdc_bad}" if pdc_bad else ""),
        ),
        CheckResult(
            "even-outcome fidelity beats PCCM near |1> up to p = 0.162",
            PASS if abs(bound - 0.162) <= 2e-3 else FAIL,
            f"bound {bound:.6f}",
        ),
    ]


def _known_discrepancies() -> list[CheckResult]:
    out = []

    # Keep-all fidelity of the one-arm ADC protocol.
    sim_err, printed_gap = 0.0, 0.0
    for p in (0.2, 0.5, 0.8):
        q = 1 - p
        s = DistributionScenario.one_arm(BellKind.PSI_PLUS, ChannelKind.ADC, p)
        maps = outcome_maps(distribute(s))
        for delta in DELTA_GRID:
            prob, fid = outcome_fidelities(maps, delta)
            x = (math.sqrt(q) - q) * math.sin(delta) ** 2
            weighted = float(np.sum(prob * fid))
            unweighted = float(np.mean(fid))
            corrected = 1 - p / 2 + x / 2
            sim_err = max(sim_err, abs(weighted - corrected), abs(unweighted - corrected))
            printed_gap = max(printed_gap, abs(weighted - (q - x / 2)))
    out.append(
        _discrepancy(
            "one-arm ADC keep-all fidelity",
            sim_err <= 1e-11 and printed_gap > 1e-3,
            f"printed q - x/2 is off by up to {printed_gap:.3f}; simulation gives 1 - p/2 + x/2 "
            f"(error {sim_err:.1e})",
        )
    )

    # Two-arm ADC keep-all fidelity: the printed formula is the unweighted mean.
    sim_err, weight_gap = 0.0, 0.0
    for p in (0.2, 0.5, 0.8):
        s = DistributionScenario.two_arm(BellKind.PSI_PLUS, ChannelKind.ADC, p)
        maps = outcome_maps(distribute(s))
        for delta in DELTA_GRID:
            c2 = math.cos(delta) ** 2
            printed = (2 - p * (1 + c2)) / (2 * (1 - p * p * c2))
            prob, fid = outcome_fidelities(maps, delta)
            sim_err = max(sim_err, abs(float(np.mean(fid)) - printed))
            weight_gap = max(weight_gap, abs(float(np.sum(prob * fid)) - printed))
        prob, fid = outcome_fidelities(maps, 0.0)
        weighted0 = float(np.sum(prob * fid))
        sim_err = max(sim_err, abs(weighted0 - (1 - p)))
    out.append(
        _discrepancy(
            "two-arm ADC keep-all fidelity weighting",
            sim_err <= 1e-11 and weight_gap > 1e-3,
            "printed [2 - p(1 + cos^2 d)]/[2(1 - p^2 cos^2 d)] equals the unweighted outcome mean; "
            f"the probability-weighted mean is (2 - p - p cos^2 d)/2 (gap up to {weight_gap:.3f}, 1 - p at d = 0)",
        )
    )

    # Depolarized output diagonal.
    diag_err, printed_trace_gap = 0.0, 0.0
    for arms, p in itertools.product((Arms.ONE, Arms.TWO), (0.2, 0.5, 0.8)):
        q = 1 - p
        chi, xi = (1.0, q) if arms is Arms.ONE else (1 + q, q * q)
        mu = (1 - q) / 2
        s = DistributionScenario(BellKind.PSI_PLUS, ChannelKind.DC, p, p if arms is Arms.TWO else 0.0, arms)
        shared = distribute(s)
        inp = BlochState(math.pi / 3, 0.7)
        rho_in = density(np.array([math.cos(math.pi / 6) * np.exp(0.7j), math.sin(math.pi / 6)]))
        for o in teleport(inp, shared):
            out_rho = o.corrected_state
            diag_err = max(
                diag_err,
                abs(out_rho[0, 0].real - (xi * rho_in[0, 0].real + mu * chi)),
                abs(out_rho[1, 1].real - (xi * rho_in[1, 1].real + mu * chi)),
                abs(out_rho[0, 1] - xi * rho_in[0, 1]),
            )
        printed_trace = chi * 1.0 + 2 * mu * chi
        printed_trace_gap = max(printed_trace_gap, abs(printed_trace - 1.0))
    out.append(
        _discrepancy(
            "depolarized output diagonal",
            diag_err <= 1e-12 and printed_trace_gap > 1e-3,
            "printed chi rho00 + mu chi is not trace preserving (trace off by up to "
            f"{printed_trace_gap:.2f}); simulation gives xi rho00 + mu chi (error {diag_err:.1e})",
        )
    )
    return out


def _discrepancy(name: str, confirmed: bool, detail: str) -> CheckResult:
    if confirmed:
        return CheckResult(name, EXPECTED, detail)
    return CheckResult(name, FAIL, "expected discrepancy not reproduced: " + detail)


CHECK_GROUPS: tuple[Callable[[], list[CheckResult]], ...] = (
    _channel_and_entanglement,
    _fef_oracle,
    _fidelity_formulas,
    _outcome_structure,
    _averages,
    _threshold_checks,
    _unequal_boundaries,
    _cloning_references,
    _regions,
    _known_discrepancies,
)


def run_checks() -> list[CheckResult]:
    results = []
    for group in CHECK_GROUPS:
        results.extend(group())
    return results
