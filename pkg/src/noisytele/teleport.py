"""Standard one-qubit teleportation over a noisy shared pair.

Circuit: the input qubit and Alice's half of the pair go through a CNOT
(control = input) and a Hadamard on the input. Both are then measured in the
computational basis, giving bits ``(b_in, b_a)``, and Bob applies a Pauli
correction chosen by the outcome.

Outcome indices ``k = 0..3`` follow the labelling m_0..m_3 used with the
analytic fidelity formulas. For |psi+> and |phi+> the index is
``k = 2*b_in + b_a``. For |psi-> and |phi-> the ``b_in`` bit is flipped first,
so each +/- pair shares one correction table:

    |psi±>:  m_0 -> X, m_1 -> I, m_2 -> Y, m_3 -> Z
    |phi±>:  m_0 -> I, m_1 -> X, m_2 -> Z, m_3 -> Y

The mapping was fixed by matching simulated conditional states to the
analytic ADC output states at p=0.5, delta=pi/3, gamma=0;
:func:`calibrate_outcome_index` repeats that match.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .channels import Arms, ChannelKind, DistributionScenario, SharedState, apply_channel, kraus_ops
from .smallmat import dagger, kron, partial_trace
from .states import PAULIS, BellKind, BlochState, bell_state, bloch_to_ket, density

PROB_FLOOR = 1e-15
GL_NODES = 64
GAMMA_NODES = 16
PAULI_ORDER = ("I", "X", "Y", "Z")

_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def _cnot_01() -> np.ndarray:
    u = np.zeros((8, 8), dtype=complex)
    for col in range(8):
        i, a, b = (col >> 2) & 1, (col >> 1) & 1, col & 1
        u[(i << 2) | ((a ^ i) << 1) | b, col] = 1.0
    return u


TELEPORT_UNITARY = np.kron(_H, np.eye(4)) @ _cnot_01()

OUTCOME_INDEX = {
    BellKind.PSI_PLUS: {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3},
    BellKind.PHI_PLUS: {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3},
    BellKind.PSI_MINUS: {(1, 0): 0, (1, 1): 1, (0, 0): 2, (0, 1): 3},
    BellKind.PHI_MINUS: {(1, 0): 0, (1, 1): 1, (0, 0): 2, (0, 1): 3},
}

_PSI_TABLE = ("X", "I", "Y", "Z")
_PHI_TABLE = ("I", "X", "Z", "Y")


class Provenance(enum.Enum):
    STANDARD = "standard"
    PAPER_PRESCRIBED = "paper"
    BRUTE_FORCE_OPTIMAL = "optimal"


@dataclass(frozen=True)
class CorrectionStrategy:
    """Pauli applied by Bob for each outcome index k (``table[k]``)."""

    table: tuple[str, str, str, str]
    provenance: Provenance = Provenance.STANDARD

    def __post_init__(self):
        table = tuple(self.table)
        if len(table) != 4 or any(t not in PAULIS for t in table):
            raise ValueError(f"correction table must hold four Pauli labels, got {self.table!r}")
        object.__setattr__(self, "table", table)

    def pauli(self, k: int) -> np.ndarray:
        return PAULIS[self.table[k]]


def standard_strategy(bell: BellKind) -> CorrectionStrategy:
    """Corrections that make teleportation exact over the noiseless ``bell`` pair."""
    return CorrectionStrategy(_PSI_TABLE if BellKind(bell).is_psi else _PHI_TABLE, Provenance.STANDARD)


def paper_strategy(bell: BellKind) -> CorrectionStrategy:
    """Corrections prescribed for the ADC analysis (m_1 -> I, m_0 -> X, ... for |psi>)."""
    return CorrectionStrategy(_PSI_TABLE if BellKind(bell).is_psi else _PHI_TABLE, Provenance.PAPER_PRESCRIBED)


@dataclass(frozen=True)
class TeleportOutcome:
    """Result of one measurement outcome.

    ``conditional_state``, ``corrected_state`` and ``fidelity`` are None when
    the outcome has probability below 1e-15.
    """

    k: int
    probability: float
    conditional_state: np.ndarray | None
    corrected_state: np.ndarray | None
    fidelity: float | None

    @property
    def defined(self) -> bool:
        return self.fidelity is not None


def _bell_of(shared: SharedState, bell: BellKind | None) -> BellKind:
    if bell is not None:
        return BellKind(bell)
    if shared.scenario is not None:
        return shared.scenario.bell
    return BellKind.PHI_PLUS


def _bob_blocks(rho_in: np.ndarray, rho_ab: np.ndarray) -> dict[tuple[int, int], np.ndarray]:
    """Unnormalised Bob states keyed by measured bits (b_in, b_a)."""
    full = TELEPORT_UNITARY @ kron(rho_in, rho_ab) @ dagger(TELEPORT_UNITARY)
    blocks = {}
    for b_in in (0, 1):
        for b_a in (0, 1):
            proj = np.zeros(8)
            proj[[(b_in << 2) | (b_a << 1), (b_in << 2) | (b_a << 1) | 1]] = 1.0
            blocks[(b_in, b_a)] = partial_trace(full * np.outer(proj, proj), [2, 2, 2], [2])
    return blocks


def teleport(
    input_state: BlochState,
    shared: SharedState,
    strategy: CorrectionStrategy | None = None,
    bell: BellKind | None = None,
) -> list[TeleportOutcome]:
    """Teleport ``input_state`` over ``shared``; one record per outcome, ordered by k.

    ``bell`` selects the outcome labelling and defaults to the Bell state the
    shared pair was distributed from.
    """
    bell = _bell_of(shared, bell)
    strategy = strategy or standard_strategy(bell)
    ket = bloch_to_ket(input_state)
    blocks = _bob_blocks(density(ket), shared.rho)
    outcomes: list[TeleportOutcome | None] = [None] * 4
    for bits, block in blocks.items():
        k = OUTCOME_INDEX[bell][bits]
        prob = float(np.trace(block).real)
        if prob < PROB_FLOOR:
            outcomes[k] = TeleportOutcome(k, max(prob, 0.0), None, None, None)
            continue
        cond = block / prob
        pk = strategy.pauli(k)
        corrected = pk @ cond @ dagger(pk)
        fid = float(np.real(np.conj(ket) @ corrected @ ket))
        outcomes[k] = TeleportOutcome(k, prob, cond, corrected, fid)
    return outcomes


@dataclass(frozen=True)
class FidelityReport:
    per_outcome: tuple[tuple[int, float, float | None], ...]
    probability_weighted_mean: float
    unweighted_outcome_mean: float

    def selective_mean(self, kept: Iterable[int]) -> float:
        """Fidelity of the post-selected protocol that keeps only ``kept`` outcomes."""
        kept = set(kept)
        rows = [(p, f) for k, p, f in self.per_outcome if k in kept and f is not None]
        total = sum(p for p, _ in rows)
        return sum(p * f for p, f in rows) / total


def fidelity_report(outcomes: Sequence[TeleportOutcome]) -> FidelityReport:
    defined = [o for o in outcomes if o.defined]
    total = sum(o.probability for o in defined)
    weighted = sum(o.probability * o.fidelity for o in defined) / total
    unweighted = sum(o.fidelity for o in defined) / len(defined)
    return FidelityReport(
        tuple((o.k, o.probability, o.fidelity) for o in outcomes),
        weighted,
        unweighted,
    )


def outcome_maps(
    shared: SharedState,
    strategy: CorrectionStrategy | None = None,
    bell: BellKind | None = None,
) -> np.ndarray:
    """Linear maps from the input density matrix to Bob's corrected states.

    Returns ``T`` with shape (4, 2, 2, 2, 2) so that outcome k leaves Bob with
    the unnormalised state ``sum_ij T[k, :, :, i, j] * rho_in[i, j]``. Built by
    running the circuit on the matrix units |i><j|.
    """
    bell = _bell_of(shared, bell)
    strategy = strategy or standard_strategy(bell)
    t = np.zeros((4, 2, 2, 2, 2), dtype=complex)
    for i in (0, 1):
        for j in (0, 1):
            unit = np.zeros((2, 2), dtype=complex)
            unit[i, j] = 1.0
            for bits, block in _bob_blocks(unit, shared.rho).items():
                k = OUTCOME_INDEX[bell][bits]
                pk = strategy.pauli(k)
                t[k, :, :, i, j] = pk @ block @ dagger(pk)
    return t


def _kets(deltas, gammas) -> np.ndarray:
    deltas, gammas = np.broadcast_arrays(np.asarray(deltas, float), np.asarray(gammas, float))
    kets = np.empty(deltas.shape + (2,), dtype=complex)
    kets[..., 0] = np.cos(deltas / 2) * np.exp(1j * gammas)
    kets[..., 1] = np.sin(deltas / 2)
    return kets


def outcome_fidelities(maps: np.ndarray, deltas, gammas=0.0) -> tuple[np.ndarray, np.ndarray]:
    """Outcome probabilities and fidelities on a batch of input states.

    Returns ``(prob, fid)``, each of shape ``broadcast(deltas, gammas) + (4,)``.
    Undefined fidelities (probability below 1e-15) are NaN.
    """
    kets = _kets(deltas, gammas)
    rho_in = kets[..., :, None] * np.conj(kets[..., None, :])
    bob = np.einsum("kabij,...ij->...kab", maps, rho_in)
    prob = np.real(np.einsum("...kaa->...k", bob))
    num = np.real(np.einsum("...a,...kab,...b->...k", np.conj(kets), bob, kets))
    with np.errstate(invalid="ignore", divide="ignore"):
        fid = np.where(prob >= PROB_FLOOR, num / np.where(prob >= PROB_FLOOR, prob, 1.0), np.nan)
    return prob, fid


@dataclass(frozen=True)
class Selective:
    """Keep only the outcomes in ``kept``, inputs drawn from ``hemisphere``.

    ``hemisphere`` is ``"upper"`` (delta < pi/2), ``"lower"`` or ``"full"``.
    """

    kept: frozenset
    hemisphere: str = "full"

    def __post_init__(self):
        object.__setattr__(self, "kept", frozenset(int(k) for k in self.kept))
        if not self.kept <= {0, 1, 2, 3} or not self.kept:
            raise ValueError(f"kept outcomes {sorted(self.kept)} must be a nonempty subset of 0..3")
        if self.hemisphere not in ("upper", "lower", "full"):
            raise ValueError(f"unknown hemisphere {self.hemisphere!r}")


def combine_outcomes(prob: np.ndarray, fid: np.ndarray, averaging) -> np.ndarray:
    """Collapse the per-outcome axis according to ``averaging``.

    ``"weighted"`` gives sum_k p_k F_k, ``"unweighted"`` gives (1/4) sum_k F_k,
    and a :class:`Selective` gives the probability-weighted mean over the kept
    outcomes. Undefined outcomes are dropped and the weights renormalised.
    """
    ok = ~np.isnan(fid)
    f0 = np.where(ok, fid, 0.0)
    if averaging == "weighted":
        w = np.where(ok, prob, 0.0)
    elif averaging == "unweighted":
        w = ok.astype(float)
    elif isinstance(averaging, Selective):
        mask = np.zeros(4, dtype=bool)
        mask[list(averaging.kept)] = True
        w = np.where(ok & mask, prob, 0.0)
    else:
        raise ValueError(f"unknown averaging {averaging!r}")
    return np.sum(w * f0, axis=-1) / np.sum(w, axis=-1)


def sphere_nodes(hemisphere: str = "full", n_polar: int = GL_NODES, n_azimuth: int = GAMMA_NODES):
    """Quadrature nodes for averaging over (part of) the Bloch sphere.

    Gauss-Legendre in u = cos(delta) times a uniform azimuth rule. Returns
    ``(deltas, gammas, weights)`` on an (n_polar, n_azimuth) grid with weights
    summing to 1.
    """
    lo, hi = {"full": (-1.0, 1.0), "upper": (0.0, 1.0), "lower": (-1.0, 0.0)}[hemisphere]
    x, w = np.polynomial.legendre.leggauss(n_polar)
    u = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
    gammas = 2 * np.pi * np.arange(n_azimuth) / n_azimuth
    deltas = np.arccos(np.clip(u, -1.0, 1.0))
    weights = np.outer(w / w.sum(), np.full(n_azimuth, 1.0 / n_azimuth))
    return deltas[:, None] + 0.0 * gammas[None, :], gammas[None, :] + 0.0 * deltas[:, None], weights


def bloch_average_fidelity(
    shared: SharedState,
    strategy: CorrectionStrategy | None = None,
    averaging="weighted",
    bell: BellKind | None = None,
    n_polar: int = GL_NODES,
    n_azimuth: int = GAMMA_NODES,
) -> float:
    """Average teleportation fidelity over uniformly distributed input states."""
    hemisphere = averaging.hemisphere if isinstance(averaging, Selective) else "full"
    deltas, gammas, weights = sphere_nodes(hemisphere, n_polar, n_azimuth)
    prob, fid = outcome_fidelities(outcome_maps(shared, strategy, bell), deltas, gammas)
    return float(np.sum(weights * combine_outcomes(prob, fid, averaging)))


def optimal_strategy(shared: SharedState, objective="average", bell: BellKind | None = None) -> CorrectionStrategy:
    """Best Pauli per outcome, found by trying all four.

    ``objective`` is ``"average"`` (per-outcome fidelity averaged over the
    Bloch sphere) or a :class:`BlochState` (fidelity at that input). Ties go to
    the earlier Pauli in the order I, X, Y, Z.
    """
    bell = _bell_of(shared, bell)
    raw = outcome_maps(shared, CorrectionStrategy(("I",) * 4), bell)
    if objective == "average":
        deltas, gammas, weights = sphere_nodes()
    elif isinstance(objective, BlochState):
        deltas, gammas, weights = np.array([objective.delta]), np.array([objective.gamma]), np.array([1.0])
    else:
        raise ValueError(f"unknown objective {objective!r}")

    table = []
    for k in range(4):
        scores = []
        for label in PAULI_ORDER:
            pk = PAULIS[label]
            m = np.einsum("ab,bcij,cd->adij", pk, raw[k], dagger(pk))
            _, fid = outcome_fidelities(m[None], deltas, gammas)
            scores.append(float(np.nansum(weights * fid[..., 0])))
        best = max(scores)
        table.append(next(lbl for lbl, s in zip(PAULI_ORDER, scores) if s >= best - 1e-12))
    return CorrectionStrategy(tuple(table), Provenance.BRUTE_FORCE_OPTIMAL)


def adc_output_state(bell: BellKind, k: int, p: float, s: BlochState) -> np.ndarray:
    """Analytic corrected output state for the two-arm ADC with equal rates."""
    rho_in = density(bloch_to_ket(s))
    c = math.cos(s.delta)
    sign = (-1) ** k
    q = 1.0 - p
    if BellKind(bell).is_psi:
        extra = np.zeros((2, 2), dtype=complex)
        extra[(k + 1) % 2, (k + 1) % 2] = 1.0
        return (q * rho_in + p * (1 + sign * c) * extra) / (1 + sign * p * c)
    flip = PAULIS["X"] if k % 2 else PAULIS["I"]
    e0 = flip @ np.diag([1.0, 0.0]) @ flip
    e1 = flip @ np.diag([0.0, 1.0]) @ flip
    return (q * rho_in + p * (1 + sign * p * c) * e0 + sign * p * q * c * e1) / (1 + sign * p * c)


def calibrate_outcome_index(
    bell: BellKind, p: float = 0.5, ref: BlochState = BlochState(math.pi / 3, 0.0), atol: float = 1e-12
) -> dict[tuple[int, int], int]:
    """Derive the bits -> k labelling by matching simulated conditional states.

    For each measured bit pair, finds the unique k whose analytic pre-correction
    state P_k rho_out(m_k) P_k equals the simulated conditional state. Raises
    if the match is missing or ambiguous.
    """
    bell = BellKind(bell)
    table = paper_strategy(bell)
    shared = SharedState(
        apply_channel(
            apply_channel(density(bell_state(bell)), kraus_ops(ChannelKind.ADC, p), 0),
            kraus_ops(ChannelKind.ADC, p),
            1,
        )
    )
    blocks = _bob_blocks(density(bloch_to_ket(ref)), shared.rho)
    mapping = {}
    for bits, block in blocks.items():
        cond = block / np.trace(block).real
        hits = []
        for k in range(4):
            pk = table.pauli(k)
            expected = pk @ adc_output_state(bell, k, p, ref) @ dagger(pk)
            if np.allclose(cond, expected, atol=atol):
                hits.append(k)
        if len(hits) != 1:
            raise RuntimeError(f"outcome calibration failed for {bell} bits {bits}: matches {hits}")
        mapping[bits] = hits[0]
    return mapping


def closed_form_fidelity(scenario: DistributionScenario, k: int, s: BlochState) -> float:
    """Analytic state-dependent fidelity of outcome ``k``.

    Covers unwatched channels with equal rates on both arms or a single noisy
    arm; every other configuration raises ``ValueError``.
    """
    if scenario.watched:
        raise ValueError("no closed-form fidelity for watched channels")
    if scenario.arms is Arms.TWO and not scenario.equal_rates:
        raise ValueError("closed-form fidelities assume equal damping rates on both arms")
    one_arm = scenario.arms is Arms.ONE
    p = scenario.p_b
    q = 1.0 - p
    c = math.cos(s.delta)
    sin2 = math.sin(s.delta) ** 2
    sign = (-1) ** k

    if scenario.kind is ChannelKind.ADC:
        if one_arm:
            if not scenario.bell.is_psi:
                # Same output family as |psi>, with the outcome parity swapped.
                sign = -sign
            x = (math.sqrt(q) - q) * sin2
            return 1.0 - 0.5 * (p * (1 + sign * c) - x)
        if scenario.bell.is_psi:
            return 1.0 - p * (1 + sign * c) ** 2 / (2 * (1 + sign * p * c))
        return 1.0 - p * (3 - 2 * p - (2 * p - 1) * math.cos(2 * s.delta)) / (4 * (1 + sign * p * c))
    if scenario.kind is ChannelKind.PDC:
        return 1.0 - 0.5 * p * sin2 if one_arm else 1.0 - 0.5 * p * (2 - p) * sin2
    return 0.5 + 0.5 * q if one_arm else 0.5 + 0.5 * q * q


def direct_transmission_fidelity(s: BlochState, kind: ChannelKind, p: float) -> float:
    """Fidelity when the input qubit itself crosses the channel (shared pair ideal)."""
    ket = bloch_to_ket(s)
    out = apply_channel(density(ket), kraus_ops(kind, p), 0, n_qubits=1)
    return float(np.real(np.conj(ket) @ out @ ket))


def direct_transmission_closed_form(s: BlochState, kind: ChannelKind, p: float) -> float:
    q = 1.0 - p
    kind = ChannelKind(kind)
    if kind is ChannelKind.ADC:
        return 1.0 - 0.5 * (2 * p * math.sin(s.delta / 2) ** 2 - (math.sqrt(q) - q) * math.sin(s.delta) ** 2)
    if kind is ChannelKind.PDC:
        return 1.0 - 0.5 * p * math.sin(s.delta) ** 2
    return 0.5 + 0.5 * q


def direct_transmission_average(kind: ChannelKind, p: float) -> float:
    deltas, gammas, weights = sphere_nodes()
    vals = np.vectorize(lambda d, g: direct_transmission_fidelity(BlochState(float(d), float(g)), kind, p))(
        deltas, gammas
    )
    return float(np.sum(weights * vals))
