"""Entanglement of the shared pair: concurrence and fully entangled fraction.

The fully entangled fraction is the largest overlap of a two-qubit state with
any maximally entangled state. Writing every such state as a real unit
combination of magic-basis vectors turns the maximisation into the top
eigenvalue of a real symmetric 4x4 matrix. :func:`fef_sampled` reaches the
same number by brute-force search and is kept as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import Arms, ChannelKind, DistributionScenario
from .smallmat import dagger, hermitian_eig, is_density_matrix, psd_sqrt
from .states import PAULI_Y, magic_basis, random_mes_batch

_YY = np.kron(PAULI_Y, PAULI_Y)
EIG_CLAMP = 1e-10
# Eigenvalues of rho below this are rounding noise of an exact zero.
RANK_FLOOR = 1e-13


def _check_density(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4) or not is_density_matrix(rho, 1e-10):
        raise ValueError("expected a 4x4 two-qubit density matrix")
    return rho


def wootters_lambdas(rho) -> np.ndarray:
    """Square roots of the eigenvalues of rho rho~, in decreasing order.

    rho~ = (Y⊗Y) rho* (Y⊗Y). The values are the singular values of
    sqrt(rho)* (Y⊗Y) sqrt(rho). On the support of rho, with rho = V D^2 V^H,
    those equal the singular values of the small symmetric matrix
    tau = D V^T (Y⊗Y) V D, read off as the positive eigenvalues of the
    Hermitian block [[0, tau], [tau^H, 0]]. No square root of a
    nearly-zero eigenvalue is ever taken, so rank-deficient states keep
    full accuracy.
    """
    rho = _check_density(rho)
    vals, vecs = hermitian_eig(rho)
    if vals[0] < -EIG_CLAMP:
        raise ValueError(f"density matrix has negative eigenvalue {vals[0]:.3e}")
    support = vals > RANK_FLOOR
    d = np.sqrt(vals[support])
    v = vecs[:, support]
    tau = (v.T @ _YY @ v) * np.outer(d, d)
    r = len(d)
    block = np.zeros((2 * r, 2 * r), dtype=complex)
    block[:r, r:] = tau
    block[r:, :r] = dagger(tau)
    sv = np.clip(hermitian_eig(block)[0][r:], 0.0, None)[::-1]
    return np.concatenate([sv, np.zeros(4 - r)])


def concurrence(rho) -> float:
    """Wootters concurrence max(0, l1 - l2 - l3 - l4) of a two-qubit state."""
    lam = wootters_lambdas(rho)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_hermitized(rho) -> float:
    """Concurrence from the spectrum of sqrt(rho) rho~ sqrt(rho).

    Same quantity as :func:`concurrence`, but the eigenvalue square roots
    amplify rounding noise to about 1e-8 on rank-deficient states. Kept as a
    cross-check.
    """
    rho = _check_density(rho)
    flipped = _YY @ np.conj(rho) @ _YY
    root = psd_sqrt(rho)
    m = root @ flipped @ root
    vals, _ = hermitian_eig(0.5 * (m + dagger(m)))
    if vals[0] < -EIG_CLAMP:
        raise ValueError(f"spin-flipped product has negative eigenvalue {vals[0]:.3e}")
    lam = np.sort(np.sqrt(np.clip(vals, 0.0, None)))[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def fully_entangled_fraction(rho) -> float:
    """Largest <Phi|rho|Phi> over maximally entangled |Phi>."""
    rho = _check_density(rho)
    e = magic_basis()
    m = np.conj(e) @ rho @ e.T
    vals, _ = hermitian_eig(np.real(m).astype(complex))
    return float(vals[-1])


def _overlaps(rho: np.ndarray, angles: np.ndarray) -> np.ndarray:
    phis = random_mes_batch(angles)
    return np.real(np.einsum("ni,ij,nj->n", np.conj(phis), rho, phis))


def fef_sampled(rho, n_samples: int, seed: int | None = 0) -> float:
    """Fully entangled fraction by random search over maximally entangled states.

    Draws ``n_samples`` states from uniformly random Euler angles, then polishes
    the best one by coordinate search on the three angles with the step halved
    from pi/8 down to 1e-7. The result never exceeds the exact value.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    rho = np.asarray(rho, dtype=complex)
    rng = np.random.default_rng(seed)
    angles = rng.uniform(0.0, 1.0, size=(n_samples, 3)) * np.array([2 * np.pi, np.pi, 2 * np.pi])
    values = _overlaps(rho, angles)
    best_idx = int(np.argmax(values))
    x = angles[best_idx].copy()
    best = float(values[best_idx])

    step = np.pi / 8
    while step >= 1e-7:
        improved = False
        for i in range(3):
            trial = np.array([x, x])
            trial[0, i] += step
            trial[1, i] -= step
            vals = _overlaps(rho, trial)
            j = int(np.argmax(vals))
            if vals[j] > best:
                best = float(vals[j])
                x = trial[j]
                improved = True
        if not improved:
            step /= 2
    return best


def max_teleport_fidelity(f_ent: float) -> float:
    """Best average fidelity reachable with the standard protocol: (2f + 1)/3."""
    if not 0.25 - 1e-12 <= f_ent <= 1.0 + 1e-12:
        raise ValueError(f"fully entangled fraction {f_ent} outside [1/4, 1]")
    return (2.0 * f_ent + 1.0) / 3.0


@dataclass(frozen=True)
class EntanglementReport:
    concurrence: float
    f_ent: float
    f_max_teleport: float


def entanglement_report(rho) -> EntanglementReport:
    f = fully_entangled_fraction(rho)
    return EntanglementReport(concurrence(rho), f, max_teleport_fidelity(f))


def adc_psi_switch_rate(p_b: float) -> float:
    """Value of p_a above which the |psi> two-arm ADC fraction switches branch.

    Below it the overlap with the original Bell state, (sqrt(q_a)+sqrt(q_b))^2/4,
    is the larger one; above it the overlap (p_a+p_b)/4 with |phi> wins.
    """
    return 0.5 * ((1.0 - p_b) + math.sqrt(max(0.0, 1.0 + 2.0 * p_b - 3.0 * p_b * p_b)))


def _watched_pure_concurrence(s: DistributionScenario) -> float:
    qa, qb = s.q_a, s.q_b
    if s.kind is not ChannelKind.ADC:
        return 1.0
    if s.arms is Arms.ONE:
        return 2.0 * math.sqrt(qb) / (1.0 + qb)
    if s.bell.is_psi:
        return 2.0 * math.sqrt(qa * qb) / (qa + qb)
    return 2.0 * math.sqrt(qa * qb) / (1.0 + qa * qb)


def fef_closed_form(s: DistributionScenario) -> float:
    """Analytic fully entangled fraction of the distributed state."""
    pa, pb, qa, qb = s.p_a, s.p_b, s.q_a, s.q_b
    if s.watched:
        # Watched channels leave a pure state, where f = (1 + C)/2.
        return 0.5 * (1.0 + _watched_pure_concurrence(s))

    if s.kind is ChannelKind.ADC:
        if s.arms is Arms.ONE:
            return 0.25 * (1.0 + math.sqrt(qb)) ** 2
        if s.bell.is_psi:
            if s.equal_rates:
                p = pa
                return 1.0 - p if p <= 2.0 / 3.0 else p / 2.0
            if pa <= adc_psi_switch_rate(pb):
                return 0.25 * (math.sqrt(qa) + math.sqrt(qb)) ** 2
            return 0.25 * (pa + pb)
        if s.equal_rates:
            p = pa
            return 0.25 * 2.0 * (p * p - 2.0 * p + 2.0)
        return 0.25 * (pa * pb + (1.0 + math.sqrt(qa * qb)) ** 2)

    if s.kind is ChannelKind.PDC:
        if s.arms is Arms.ONE:
            return 0.5 * (2.0 - pb)
        if s.equal_rates:
            p = pa
            return 0.5 * (p * p - 2.0 * p + 2.0)
        return 0.5 * (1.0 + qa * qb)

    qq = qa * qb
    return max(0.25 * (1.0 + 3.0 * qq), 0.25 * (1.0 - qq))


def concurrence_closed_form(s: DistributionScenario) -> float:
    """Analytic concurrence of the distributed state."""
    pa, pb, qa, qb = s.p_a, s.p_b, s.q_a, s.q_b
    if s.watched:
        return _watched_pure_concurrence(s)
    if s.kind is ChannelKind.ADC:
        if s.arms is Arms.ONE:
            return math.sqrt(qb)
        c1 = math.sqrt(qa * qb)
        return c1 if s.bell.is_psi else (1.0 - math.sqrt(pa * pb)) * c1
    if s.kind is ChannelKind.PDC:
        return qa * qb
    if s.arms is Arms.ONE:
        return max(0.0, 1.0 - 1.5 * pb)
    return max(0.0, (3.0 * qa * qb - 1.0) / 2.0)
