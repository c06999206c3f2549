"""Qubit kets from Bloch angles, Bell states and the magic basis.

Two-qubit vectors use the computational ordering |00>, |01>, |10>, |11>
throughout the package, first factor being the left (Alice's) qubit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

SQRT_HALF = 1.0 / math.sqrt(2.0)

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {"I": PAULI_I, "X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}


@dataclass(frozen=True)
class BlochState:
    """Pure qubit state cos(delta/2) e^{i gamma}|0> + sin(delta/2)|1>.

    ``delta`` is the polar angle in [0, pi]; ``gamma`` the azimuth, reduced
    modulo 2 pi on construction.
    """

    delta: float
    gamma: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.delta <= math.pi:
            raise ValueError(f"polar angle {self.delta} outside [0, pi]")
        gamma = math.fmod(self.gamma, 2 * math.pi) % (2 * math.pi)
        # A tiny negative angle rounds up to exactly 2 pi.
        object.__setattr__(self, "gamma", 0.0 if gamma >= 2 * math.pi else gamma)


class BellKind(enum.Enum):
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"

    @property
    def is_psi(self) -> bool:
        return self in (BellKind.PSI_PLUS, BellKind.PSI_MINUS)


def bloch_to_ket(s: BlochState) -> np.ndarray:
    # The phase sits on |0>, not on |1>.
    return np.array(
        [math.cos(s.delta / 2) * np.exp(1j * s.gamma), math.sin(s.delta / 2)],
        dtype=complex,
    )


def density(ket) -> np.ndarray:
    ket = np.asarray(ket, dtype=complex)
    return np.outer(ket, np.conj(ket))


def bell_state(k: BellKind) -> np.ndarray:
    vecs = {
        BellKind.PSI_PLUS: [0, SQRT_HALF, SQRT_HALF, 0],
        BellKind.PSI_MINUS: [0, SQRT_HALF, -SQRT_HALF, 0],
        BellKind.PHI_PLUS: [SQRT_HALF, 0, 0, SQRT_HALF],
        BellKind.PHI_MINUS: [SQRT_HALF, 0, 0, -SQRT_HALF],
    }
    return np.array(vecs[BellKind(k)], dtype=complex)


def magic_basis() -> np.ndarray:
    """Magic basis vectors as the rows of a 4x4 array.

    Rows are |phi+>, i|phi->, i|psi+>, |psi->. Every maximally entangled state
    equals a real unit combination of these rows up to a global phase.
    """
    return np.array(
        [
            bell_state(BellKind.PHI_PLUS),
            1j * bell_state(BellKind.PHI_MINUS),
            1j * bell_state(BellKind.PSI_PLUS),
            bell_state(BellKind.PSI_MINUS),
        ]
    )


def su2(alpha: float, beta: float, theta: float) -> np.ndarray:
    """Rz(alpha) Ry(beta) Rz(theta)."""

    def rz(a):
        return np.diag([np.exp(-0.5j * a), np.exp(0.5j * a)])

    c, s = math.cos(beta / 2), math.sin(beta / 2)
    ry = np.array([[c, -s], [s, c]], dtype=complex)
    return rz(alpha) @ ry @ rz(theta)


def random_mes(u_params) -> np.ndarray:
    """Maximally entangled state (U ⊗ I)|phi+> with U = su2(*u_params).

    Sweeping the three Euler angles reaches every maximally entangled
    two-qubit state up to a global phase, since (U_A ⊗ U_B)|phi+> equals
    (U_A U_B^T ⊗ I)|phi+>.
    """
    u = su2(*u_params)
    return np.kron(u, PAULI_I) @ bell_state(BellKind.PHI_PLUS)


def random_mes_batch(angles) -> np.ndarray:
    """Vectorised :func:`random_mes` over an ``(n, 3)`` array of angles."""
    angles = np.atleast_2d(np.asarray(angles, dtype=float))
    a, b, t = angles[:, 0], angles[:, 1], angles[:, 2]
    c, s = np.cos(b / 2), np.sin(b / 2)
    ea, et = np.exp(-0.5j * a), np.exp(-0.5j * t)
    u = np.empty((len(angles), 2, 2), dtype=complex)
    u[:, 0, 0] = ea * c * et
    u[:, 0, 1] = -ea * s / et
    u[:, 1, 0] = s * et / ea
    u[:, 1, 1] = c / (ea * et)
    # (U ⊗ I)|phi+> has amplitude U[j, i]/sqrt(2) on |j i>.
    return u.reshape(len(angles), 4) * SQRT_HALF


def random_pure_state(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Haar-random unit vector drawn with ``rng``."""
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_density_matrix(rng: np.random.Generator, dim: int = 4, rank: int | None = None) -> np.ndarray:
    """Random density matrix G G^H / tr(G G^H) with a complex Gaussian ``dim x rank`` G."""
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ np.conj(g.T)
    return rho / np.trace(rho).real
