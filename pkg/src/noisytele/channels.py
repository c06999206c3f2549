"""Noisy distribution of a Bell pair through damping channels.

Three single-qubit channels are modelled by their Kraus sets: amplitude
damping (ADC), phase damping (PDC) and depolarizing (DC). A Bell pair is sent
either with both halves through independent channels (two-arm) or with only
Bob's half travelling (one-arm). In a *watched* channel the environment is
monitored and the pair is kept only when no excitation was emitted into it,
which amounts to keeping the first Kraus branch on every noisy arm.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .smallmat import dagger, is_density_matrix
from .states import PAULI_I, PAULI_X, PAULI_Y, PAULI_Z, BellKind, bell_state, density

POSTSELECTION_FLOOR = 1e-15


class ChannelKind(enum.Enum):
    ADC = "adc"
    PDC = "pdc"
    DC = "dc"


class Arms(enum.Enum):
    ONE = "one"
    TWO = "two"


class PostSelectionError(ValueError):
    """The watched channel keeps the pair with (numerically) zero probability."""


def _check_prob(p: float, name: str = "p") -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name}={p} is not a probability")
    return p


@dataclass(frozen=True)
class DistributionScenario:
    """How the initial Bell pair reaches Alice and Bob.

    For ``Arms.ONE`` only Bob's qubit is damped and ``p_a`` is always 0.
    """

    bell: BellKind
    kind: ChannelKind
    p_b: float
    p_a: float = 0.0
    arms: Arms = Arms.TWO
    watched: bool = False

    def __post_init__(self):
        object.__setattr__(self, "bell", BellKind(self.bell))
        object.__setattr__(self, "kind", ChannelKind(self.kind))
        object.__setattr__(self, "arms", Arms(self.arms))
        _check_prob(self.p_b, "p_b")
        _check_prob(self.p_a, "p_a")
        if self.arms is Arms.ONE and self.p_a != 0.0:
            raise ValueError("one-arm distribution leaves Alice's qubit noiseless (p_a must be 0)")

    @classmethod
    def two_arm(cls, bell, kind, p_a, p_b=None, watched=False):
        return cls(bell, kind, p_b=p_a if p_b is None else p_b, p_a=p_a, arms=Arms.TWO, watched=watched)

    @classmethod
    def one_arm(cls, bell, kind, p_b, watched=False):
        return cls(bell, kind, p_b=p_b, p_a=0.0, arms=Arms.ONE, watched=watched)

    @property
    def q_a(self) -> float:
        return 1.0 - self.p_a

    @property
    def q_b(self) -> float:
        return 1.0 - self.p_b

    @property
    def equal_rates(self) -> bool:
        return self.arms is Arms.TWO and self.p_a == self.p_b


@dataclass(frozen=True)
class SharedState:
    """Two-qubit state held by Alice and Bob after distribution.

    ``success_probability`` is the post-selection probability of a watched
    channel and exactly 1 otherwise.
    """

    rho: np.ndarray
    success_probability: float = 1.0
    scenario: DistributionScenario | None = field(default=None, compare=False)

    def __post_init__(self):
        if not is_density_matrix(self.rho, 1e-12):
            raise ValueError("shared state is not a valid density matrix")
        if not 0.0 < self.success_probability <= 1.0:
            raise ValueError(f"success probability {self.success_probability} outside (0, 1]")


def kraus_ops(kind: ChannelKind, p: float) -> list[np.ndarray]:
    """Kraus operators of a single-qubit channel with damping rate ``p``.

    The first operator is always the no-excitation branch used for watched
    channels.
    """
    p = _check_prob(p)
    q = 1.0 - p
    kind = ChannelKind(kind)
    if kind is ChannelKind.ADC:
        return [
            np.diag([1.0, math.sqrt(q)]).astype(complex),
            math.sqrt(p) * np.array([[0, 1], [0, 0]], dtype=complex),
        ]
    if kind is ChannelKind.PDC:
        return [
            math.sqrt(q) * PAULI_I,
            math.sqrt(p) * np.diag([1.0, 0.0]).astype(complex),
            math.sqrt(p) * np.diag([0.0, 1.0]).astype(complex),
        ]
    a = math.sqrt(max(0.0, 1.0 - 0.75 * p))
    b = math.sqrt(p / 4.0)
    return [a * PAULI_I, b * PAULI_X, b * PAULI_Y, b * PAULI_Z]


def apply_channel(rho, ops, qubit: int, n_qubits: int = 2) -> np.ndarray:
    """Apply a single-qubit Kraus map to one qubit of an ``n_qubits`` register."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros_like(rho)
    for k in ops:
        full = np.eye(1, dtype=complex)
        for i in range(n_qubits):
            full = np.kron(full, k if i == qubit else PAULI_I)
        out += full @ rho @ dagger(full)
    return out


def _noisy_arms(s: DistributionScenario) -> list[tuple[int, float]]:
    if s.arms is Arms.ONE:
        return [(1, s.p_b)]
    return [(0, s.p_a), (1, s.p_b)]


def _postselect(rho: np.ndarray, s: DistributionScenario) -> SharedState:
    prob = float(np.trace(rho).real)
    if prob < POSTSELECTION_FLOOR:
        raise PostSelectionError("post-selected state undefined: no-excitation branch has zero probability")
    return SharedState(rho / prob, prob, s)


def distribute(s: DistributionScenario) -> SharedState:
    """Send the Bell pair of ``s`` through its channels by direct simulation."""
    rho = density(bell_state(s.bell))
    for qubit, p in _noisy_arms(s):
        ops = kraus_ops(s.kind, p)
        rho = apply_channel(rho, ops[:1] if s.watched else ops, qubit)
    if s.watched:
        return _postselect(rho, s)
    return SharedState(0.5 * (rho + dagger(rho)), 1.0, s)


def _ket(*amps) -> np.ndarray:
    return np.array(amps, dtype=complex)


def _proj(index: int) -> np.ndarray:
    e = np.zeros(4, dtype=complex)
    e[index] = 1.0
    return density(e)


def closed_form_shared(s: DistributionScenario) -> SharedState:
    """Shared state assembled from the analytic expressions for each channel.

    Serves as an independent oracle for :func:`distribute`.
    """
    pa, pb, qa, qb = s.p_a, s.p_b, s.q_a, s.q_b
    sign = 1.0 if s.bell in (BellKind.PSI_PLUS, BellKind.PHI_PLUS) else -1.0
    bell = density(bell_state(s.bell))
    one_arm = s.arms is Arms.ONE

    if s.kind is ChannelKind.ADC and s.bell.is_psi:
        if one_arm:
            psi = _ket(0, sign * math.sqrt(qb), 1, 0)
            if s.watched:
                return _postselect(density(psi) * 0.5, s)
            return SharedState(0.5 * (density(psi) + pb * _proj(0)), 1.0, s)
        v = _ket(0, math.sqrt(qb), sign * math.sqrt(qa), 0)
        if s.watched:
            return _postselect(0.5 * density(v), s)
        return SharedState(0.5 * density(v) + 0.5 * (pa + pb) * _proj(0), 1.0, s)

    if s.kind is ChannelKind.ADC:
        if one_arm:
            phi = _ket(1, 0, 0, sign * math.sqrt(qb))
            if s.watched:
                return _postselect(0.5 * density(phi), s)
            return SharedState(0.5 * (density(phi) + pb * _proj(2)), 1.0, s)
        phi = _ket(1, 0, 0, sign * math.sqrt(qa * qb))
        if s.watched:
            return _postselect(0.5 * density(phi), s)
        rho = 0.5 * (density(phi) + qb * pa * _proj(1) + pb * qa * _proj(2) + pa * pb * _proj(0))
        return SharedState(rho, 1.0, s)

    qq = qa * qb
    if s.kind is ChannelKind.PDC:
        if s.watched:
            return _postselect(qq * bell, s)
        support = (1, 2) if s.bell.is_psi else (0, 3)
        rho = 0.5 * (1.0 - qq) * (_proj(support[0]) + _proj(support[1])) + qq * bell
        return SharedState(rho, 1.0, s)

    if s.watched:
        return _postselect((4.0 - 3.0 * pa) * (4.0 - 3.0 * pb) / 16.0 * bell, s)
    others = sum(density(bell_state(k)) for k in BellKind if k is not s.bell)
    rho = 0.25 * (1.0 - qq) * others + 0.25 * (1.0 + 3.0 * qq) * bell
    return SharedState(rho, 1.0, s)
