"""Security references for teleportation and the damping rates that reach them.

A teleported state beats measure-and-resend when its fidelity exceeds 2/3 and
beats the optimal universal 1->2 cloner when it exceeds 5/6. For inputs of
known polar angle the phase-covariant cloning machine (PCCM) sets a stricter,
angle-dependent bar.

Every threshold here is found numerically (grid scan plus bisection) and
compared against its analytic value afterwards, never read from a table.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .channels import Arms, ChannelKind, DistributionScenario, distribute
from .entanglement import fef_closed_form, fully_entangled_fraction
from .states import BellKind, BlochState
from .teleport import combine_outcomes, direct_transmission_fidelity, outcome_fidelities, outcome_maps

CLASSICAL_LIMIT = 2.0 / 3.0
NO_CLONING_LIMIT = 5.0 / 6.0
SCAN_STEP = 1e-3
BISECT_TOL = 1e-9
DELTA_SCAN_POINTS = 2048


def universal_clone_fidelity(m: int) -> float:
    """Fidelity of each copy from the optimal universal 1 -> m qubit cloner."""
    if int(m) != m or m < 1:
        raise ValueError(f"number of copies must be a positive integer, got {m}")
    return (2 * m + 1) / (3 * m)


def pccm_fidelity(delta: float) -> float:
    """Optimal phase-covariant cloning fidelity for inputs of polar angle ``delta``."""
    if not 0.0 <= delta <= math.pi:
        raise ValueError(f"polar angle {delta} outside [0, pi]")
    kappa = 0.0 if delta < math.pi / 2 else 1.0
    return (
        0.5 * math.sin((delta + kappa * math.pi) / 2) ** 2
        + math.cos((delta - kappa * math.pi) / 2) ** 4
        + math.sqrt(2) / 4 * math.sin(delta) ** 2
    )


def pccm_pole_series(delta_offset: float) -> float:
    """Quadratic expansion of :func:`pccm_fidelity` around either pole."""
    return 1.0 - (3.0 - 2.0 * math.sqrt(2)) / 8.0 * delta_offset**2


class Level(enum.Enum):
    CLASSICAL = "classical"
    QUANTUM = "quantum"
    SECURE = "secure"


class Reference(enum.Enum):
    CLASSICAL = "classical"
    UNIVERSAL_CLONE = "nocloning"
    PCCM = "pccm"


@dataclass(frozen=True)
class SecurityVerdict:
    level: Level
    reference: Reference


def reference_fidelity(reference: Reference, delta: float | None = None) -> float:
    reference = Reference(reference)
    if reference is Reference.CLASSICAL:
        return CLASSICAL_LIMIT
    if reference is Reference.UNIVERSAL_CLONE:
        return NO_CLONING_LIMIT
    if delta is None:
        raise ValueError("the PCCM reference needs the input polar angle")
    return pccm_fidelity(delta)


def classify(fidelity: float, reference: Reference = Reference.UNIVERSAL_CLONE, delta: float | None = None):
    """Place a fidelity in the classical / quantum / secure bands.

    Classical means F <= 2/3, secure means F above the cloning reference, and
    quantum is everything in between.
    """
    reference = Reference(reference)
    if reference is Reference.CLASSICAL:
        raise ValueError("classify needs a cloning reference (nocloning or pccm)")
    if fidelity <= CLASSICAL_LIMIT:
        level = Level.CLASSICAL
    elif fidelity <= reference_fidelity(reference, delta):
        level = Level.QUANTUM
    else:
        level = Level.SECURE
    return SecurityVerdict(level, reference)


def _bisect(f: Callable[[float], float], lo: float, hi: float, f_lo: float, tol: float) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_crossings(
    f: Callable[[float], float], lo: float, hi: float, n: int, tol: float = BISECT_TOL
) -> list[float]:
    """Points in [lo, hi] where ``f`` strictly changes sign.

    ``f`` is sampled on ``n`` equally spaced points; every bracket with a sign
    change is bisected to width ``tol``. A run of exact zeros between opposite
    signs yields its midpoint; touching zero without a sign change yields
    nothing.
    """
    xs = np.linspace(lo, hi, n)
    vals = [f(float(x)) for x in xs]
    crossings = []
    last = None
    for j, v in enumerate(vals):
        if v == 0.0:
            continue
        if last is not None and (vals[last] > 0) != (v > 0):
            if j == last + 1:
                crossings.append(_bisect(f, float(xs[last]), float(xs[j]), vals[last], tol))
            else:
                crossings.append(float(0.5 * (xs[last + 1] + xs[j - 1])))
        last = j
    return crossings


@dataclass(frozen=True)
class ThresholdResult:
    label: str
    target: float
    crossings: tuple[float, ...]
    analytic_expected: float | None = None
    tolerance: float = 1e-6

    @property
    def matches(self) -> bool | None:
        """Whether the single crossing agrees with the analytic value (None if there is none)."""
        if self.analytic_expected is None:
            return None
        return len(self.crossings) == 1 and abs(self.crossings[0] - self.analytic_expected) <= self.tolerance


def critical_damping(
    quantity: Callable[[float], float],
    target: float,
    label: str = "",
    analytic_expected: float | None = None,
    step: float = SCAN_STEP,
    tolerance: float = 1e-6,
) -> ThresholdResult:
    """Damping rates in [0, 1] where ``quantity(p)`` crosses ``target``."""
    n = int(round(1.0 / step)) + 1
    crossings = find_crossings(lambda p: quantity(p) - target, 0.0, 1.0, n)
    return ThresholdResult(label, target, tuple(crossings), analytic_expected, tolerance)


def simulated_fef(kind, bell, arms: Arms) -> Callable[[float], float]:
    """f_ent of the distributed pair as a function of a common damping rate."""

    def f(p: float) -> float:
        if Arms(arms) is Arms.ONE:
            s = DistributionScenario.one_arm(bell, kind, p)
        else:
            s = DistributionScenario.two_arm(bell, kind, p)
        return fully_entangled_fraction(distribute(s).rho)

    return f


def _shared(kind, bell, arms: Arms, p: float):
    if Arms(arms) is Arms.ONE:
        return distribute(DistributionScenario.one_arm(bell, kind, p))
    return distribute(DistributionScenario.two_arm(bell, kind, p))


def worst_case_fidelity(kind, bell, arms: Arms, n_delta: int = 129) -> Callable[[float], float]:
    """Smallest outcome fidelity over a polar-angle grid (poles included), per p."""
    deltas = np.linspace(0.0, math.pi, n_delta)

    def f(p: float) -> float:
        _, fid = outcome_fidelities(outcome_maps(_shared(kind, bell, arms, p)), deltas)
        return float(np.nanmin(fid))

    return f


def equatorial_fidelity(kind, bell, arms: Arms) -> Callable[[float], float]:
    """Probability-weighted teleportation fidelity for an equatorial input."""

    def f(p: float) -> float:
        prob, fid = outcome_fidelities(outcome_maps(_shared(kind, bell, arms, p)), math.pi / 2)
        return float(combine_outcomes(prob, fid, "weighted"))

    return f


def g_boundary(x: float) -> float:
    """Largest p_b keeping f_ent >= 3/4 for a |phi> pair under two-arm ADC, given p_a = x."""
    if abs(1.0 - 2.0 * x) < 1e-6:
        x = 0.5 - 1e-6
    root = math.sqrt(max(0.0, (1.0 - x) * (2.0 * x * x - 6.0 * x + 3.0)))
    return (-3.0 + x * (3.0 + 2.0 * x) + 2.0 * root) / (1.0 - 2.0 * x) ** 2


def analytic_unequal_boundary(kind, bell, target: float, p_fixed: float) -> float | None:
    """Closed-form boundary on the free rate, or None if unknown or outside [0, 1]."""
    value = _analytic_unequal_boundary(kind, bell, target, p_fixed)
    if value is None or not 0.0 <= value <= 1.0:
        return None
    return value


def _analytic_unequal_boundary(kind, bell, target: float, p_fixed: float) -> float | None:
    kind, bell = ChannelKind(kind), BellKind(bell)
    q = 1.0 - p_fixed
    if kind is ChannelKind.ADC and bell.is_psi and target == 0.75:
        return p_fixed - 3.0 + 2.0 * math.sqrt(3.0 * q)
    if kind is ChannelKind.ADC and not bell.is_psi and target == 0.75:
        return g_boundary(p_fixed)
    if kind is ChannelKind.ADC and not bell.is_psi and target == 0.5:
        known = {0.5: 7.0 / 8.0, 0.25: (6.0 * math.sqrt(6.0) - 13.0) / 2.0}
        return known.get(p_fixed)
    if kind is ChannelKind.PDC and target == 0.75:
        return (1.0 - 2.0 * p_fixed) / (2.0 * q)
    if kind is ChannelKind.DC and target == 0.75:
        return (1.0 - 3.0 * p_fixed) / (3.0 * q)
    return None


def unequal_rate_boundary(kind, bell, target: float, p_fixed: float) -> list[float]:
    """Rates of the free arm where f_ent crosses ``target`` with the other arm at ``p_fixed``.

    The two-arm formulas are symmetric in the arms, so the free rate may be read
    as either p_a or p_b. An empty list means no admissible boundary.
    """

    def f(x: float) -> float:
        return fef_closed_form(DistributionScenario.two_arm(bell, kind, p_a=x, p_b=p_fixed)) - target

    return find_crossings(f, 0.0, 1.0, int(round(1.0 / SCAN_STEP)) + 1)


def secure_delta_range(
    curve: Callable[[float], float],
    reference: Reference,
    n_points: int = DELTA_SCAN_POINTS,
    tol: float = BISECT_TOL,
) -> list[tuple[float, float]]:
    """Maximal polar-angle intervals where ``curve(delta)`` beats ``reference``."""
    reference = Reference(reference)

    def margin(d: float) -> float:
        return curve(d) - reference_fidelity(reference, d)

    xs = np.linspace(0.0, math.pi, n_points)
    vals = [margin(float(x)) for x in xs]
    intervals = []
    start = None
    for i, v in enumerate(vals):
        inside = v > 0
        if inside and start is None:
            start = 0.0 if i == 0 else _edge(margin, xs[i - 1], xs[i], tol)
        elif not inside and start is not None:
            intervals.append((start, _edge(margin, xs[i - 1], xs[i], tol)))
            start = None
    if start is not None:
        intervals.append((start, math.pi))
    return intervals


def _edge(margin, a: float, b: float, tol: float) -> float:
    # One end is strictly positive, the other is not.
    a, b = float(a), float(b)
    a_in = margin(a) > 0
    while b - a > tol:
        mid = 0.5 * (a + b)
        if (margin(mid) > 0) == a_in:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)


def teleport_curve(shared, outcome: int | None = None, averaging="weighted") -> Callable[[float], float]:
    """Teleportation fidelity versus polar angle (gamma = 0) for a fixed shared pair.

    With ``outcome`` set, the curve is that outcome's fidelity; otherwise the
    outcomes are combined according to ``averaging``.
    """
    maps = outcome_maps(shared)

    def f(delta: float) -> float:
        prob, fid = outcome_fidelities(maps, delta)
        if outcome is not None:
            return float(fid[outcome])
        return float(combine_outcomes(prob, fid, averaging))

    return f


def direct_curve(kind, p: float) -> Callable[[float], float]:
    return lambda d: direct_transmission_fidelity(BlochState(d), kind, p)


def _pole_quartic(curve: Callable[[float], float]) -> float:
    # Fit 1 - F(pi - t) by even powers of t on a small window; return the t^4 coefficient.
    t = np.linspace(0.02, 0.25, 48)
    y = np.array([curve(math.pi - x) for x in t]) - 1.0
    basis = np.stack([t**2, t**4, t**6, t**8], axis=1)
    coef, *_ = np.linalg.lstsq(basis, y, rcond=None)
    return float(coef[1])


def pole_quartic_coefficients(p: float) -> tuple[float, float]:
    """t^4 coefficients of F(pi - t) for the even ADC |psi> outcome and the PCCM."""
    shared = _shared(ChannelKind.ADC, BellKind.PSI_PLUS, Arms.TWO, p)
    return _pole_quartic(teleport_curve(shared, outcome=0)), _pole_quartic(pccm_fidelity)


def pole_neighbourhood_bound(lo: float = 0.01, hi: float = 0.5) -> float:
    """Largest damping rate for which the even-outcome fidelity stays above the PCCM near |1>.

    Near delta = pi the even outcomes of the two-arm |psi> ADC protocol lose
    fidelity only at fourth order, with a coefficient growing with p. The
    bound is the rate at which that quartic coefficient falls to the PCCM's.
    """

    def gap(p: float) -> float:
        tele, pccm = pole_quartic_coefficients(p)
        return tele - pccm

    return _bisect(gap, lo, hi, gap(lo), 1e-9)


@dataclass(frozen=True)
class ThresholdCase:
    label: str
    kind: ChannelKind
    arms: Arms
    bell: BellKind
    measure: str  # "fef", "min_fidelity" or "equator"
    target: float
    expected: float | None
    tolerance: float = 1e-6

    def quantity(self) -> Callable[[float], float]:
        if self.measure == "fef":
            return simulated_fef(self.kind, self.bell, self.arms)
        if self.measure == "min_fidelity":
            return worst_case_fidelity(self.kind, self.bell, self.arms)
        return equatorial_fidelity(self.kind, self.bell, self.arms)

    def solve(self) -> ThresholdResult:
        return critical_damping(self.quantity(), self.target, self.label, self.expected, tolerance=self.tolerance)


def _cases() -> list[ThresholdCase]:
    adc, pdc, dc = ChannelKind.ADC, ChannelKind.PDC, ChannelKind.DC
    psi, phi = BellKind.PSI_PLUS, BellKind.PHI_PLUS
    one, two = Arms.ONE, Arms.TWO
    r2, r3, r6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)
    pccm_eq = pccm_fidelity(math.pi / 2)
    return [
        ThresholdCase("adc two-arm psi f_ent=1/2", adc, two, psi, "fef", 0.5, 0.5),
        ThresholdCase("adc two-arm psi f_ent=3/4", adc, two, psi, "fef", 0.75, 0.25),
        ThresholdCase("adc two-arm phi f_ent=3/4", adc, two, phi, "fef", 0.75, 1 - r2 / 2),
        ThresholdCase("adc one-arm f_ent=1/2", adc, one, psi, "fef", 0.5, 2 * (r2 - 1)),
        ThresholdCase("adc one-arm f_ent=3/4", adc, one, psi, "fef", 0.75, 2 * r3 - 3),
        ThresholdCase("pdc two-arm f_ent=3/4", pdc, two, psi, "fef", 0.75, 1 - r2 / 2),
        ThresholdCase("pdc one-arm f_ent=3/4", pdc, one, psi, "fef", 0.75, 0.5),
        ThresholdCase("dc two-arm f_ent=1/2", dc, two, psi, "fef", 0.5, 1 - r3 / 3),
        ThresholdCase("dc two-arm f_ent=3/4", dc, two, psi, "fef", 0.75, 1 - r6 / 3),
        ThresholdCase("dc one-arm f_ent=1/2", dc, one, psi, "fef", 0.5, 2 / 3),
        ThresholdCase("dc one-arm f_ent=3/4", dc, one, psi, "fef", 0.75, 1 / 3),
        ThresholdCase("adc two-arm psi min F=5/6", adc, two, psi, "min_fidelity", NO_CLONING_LIMIT, 1 / 11, 1e-4),
        ThresholdCase("adc two-arm psi min F=2/3", adc, two, psi, "min_fidelity", CLASSICAL_LIMIT, 1 / 5, 1e-4),
        ThresholdCase("adc two-arm phi min F=5/6", adc, two, phi, "min_fidelity", NO_CLONING_LIMIT, 1 / 6, 1e-4),
        ThresholdCase("adc two-arm psi equator F=PCCM", adc, two, psi, "equator", pccm_eq, 1 - r2 / 2),
        ThresholdCase("pdc two-arm equator F=PCCM", pdc, two, psi, "equator", pccm_eq, 1 - 2 ** -0.25),
        ThresholdCase("pdc one-arm equator F=PCCM", pdc, one, psi, "equator", pccm_eq, 1 - 1 / r2),
    ]


THRESHOLD_CASES: tuple[ThresholdCase, ...] = tuple(_cases())


@functools.lru_cache(maxsize=1)
def threshold_table() -> tuple[ThresholdResult, ...]:
    """Every case in :data:`THRESHOLD_CASES`, solved."""
    return tuple(case.solve() for case in THRESHOLD_CASES)


def crossings_in(results: Sequence[ThresholdResult], label: str) -> ThresholdResult:
    for r in results:
        if r.label == label:
            return r
    raise KeyError(label)
