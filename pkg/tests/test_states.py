import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noisytele.entanglement import concurrence
from noisytele.states import (
    BellKind,
    BlochState,
    PAULI_X,
    bell_state,
    bloch_to_ket,
    density,
    magic_basis,
    random_mes,
    random_mes_batch,
    su2,
)

import oracle

angles = st.floats(min_value=-10, max_value=10, allow_nan=False)
S = 1 / math.sqrt(2)


def test_bloch_poles_and_equator():
    assert np.allclose(bloch_to_ket(BlochState(0.0, 0.0)), [1, 0])
    assert np.allclose(bloch_to_ket(BlochState(math.pi, 2.3)), [0, 1])
    assert np.allclose(bloch_to_ket(BlochState(math.pi / 2, math.pi)), [-S, S])


def test_bloch_state_validates_and_wraps():
    with pytest.raises(ValueError):
        BlochState(-0.1)
    with pytest.raises(ValueError):
        BlochState(math.pi + 1e-9)
    assert BlochState(1.0, 2 * math.pi + 0.5).gamma == pytest.approx(0.5)
    assert BlochState(1.0, -0.5).gamma == pytest.approx(2 * math.pi - 0.5)
    assert 0.0 <= BlochState(1.0, -1e-18).gamma < 2 * math.pi


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0, max_value=math.pi), angles)
def test_ket_norm_and_density(delta, gamma):
    k = bloch_to_ket(BlochState(delta, gamma))
    assert abs(np.linalg.norm(k) - 1) < 1e-13
    rho = density(k)
    assert np.allclose(rho, rho.conj().T) and abs(np.trace(rho) - 1) < 1e-13
    assert np.linalg.eigvalsh(rho)[0] > -1e-13


def test_bell_vectors_and_ordering():
    assert np.allclose(bell_state(BellKind.PSI_PLUS), [0, S, S, 0])
    assert np.allclose(bell_state(BellKind.PHI_MINUS), [S, 0, 0, -S])
    assert len(BellKind) == 4
    for k in BellKind:
        v = bell_state(k)
        assert abs(np.linalg.norm(v) - 1) < 1e-14
        assert concurrence(density(v)) == pytest.approx(1, abs=1e-12)


def test_magic_basis_orthonormal_and_maximally_entangled():
    e = magic_basis()
    assert np.max(np.abs(e.conj() @ e.T - np.eye(4))) < 1e-14
    for row in e:
        assert oracle.concurrence(density(row)) == pytest.approx(1, abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(min_value=-1, max_value=1), min_size=4, max_size=4))
def test_real_magic_combinations_are_maximally_entangled(coeffs):
    a = np.array(coeffs)
    if np.linalg.norm(a) < 1e-3:
        return
    v = (a / np.linalg.norm(a)) @ magic_basis()
    assert oracle.concurrence(density(v)) == pytest.approx(1, abs=1e-10)


def test_random_mes_examples():
    assert np.allclose(random_mes((0, 0, 0)), bell_state(BellKind.PHI_PLUS))
    v = random_mes((0, math.pi, 0))  # Ry(pi) = -iY maps |phi+> to -|psi->
    assert np.allclose(v, -bell_state(BellKind.PSI_MINUS), atol=1e-15)
    # X (x) I applied by hand to |phi+> gives |psi+>; su2 with Euler angles (pi/2, pi, -pi/2) equals iX.
    u = su2(math.pi / 2, math.pi, -math.pi / 2)
    assert np.allclose(u, 1j * PAULI_X)
    v = random_mes((math.pi / 2, math.pi, -math.pi / 2))
    assert abs(np.vdot(bell_state(BellKind.PSI_PLUS), v)) == pytest.approx(1, abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(angles, angles, angles)
def test_random_mes_properties(a, b, t):
    v = random_mes((a, b, t))
    assert abs(np.linalg.norm(v) - 1) < 1e-13
    rho = density(v).reshape(2, 2, 2, 2)
    assert np.allclose(np.einsum("ijkj->ik", rho), np.eye(2) / 2, atol=1e-12)
    assert np.allclose(np.einsum("ijil->jl", rho), np.eye(2) / 2, atol=1e-12)
    assert oracle.concurrence(density(v)) == pytest.approx(1, abs=1e-10)
    assert np.allclose(random_mes_batch([[a, b, t]])[0], v, atol=1e-14)


def test_su2_is_unitary_with_unit_determinant():
    rng = np.random.default_rng(5)
    for _ in range(20):
        u = su2(*rng.uniform(-7, 7, 3))
        assert np.allclose(u @ u.conj().T, np.eye(2), atol=1e-14)
        assert np.linalg.det(u) == pytest.approx(1)


def test_two_sided_unitary_folds_onto_one_side():
    rng = np.random.default_rng(9)
    phi = bell_state(BellKind.PHI_PLUS)
    for _ in range(20):
        ua, ub = oracle.haar_unitary(rng), oracle.haar_unitary(rng)
        lhs = np.kron(ua, ub) @ phi
        rhs = np.kron(ua @ ub.T, np.eye(2)) @ phi
        assert np.max(np.abs(lhs - rhs)) < 1e-12
