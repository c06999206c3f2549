import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noisytele.channels import ChannelKind, DistributionScenario, distribute
from noisytele.entanglement import (
    adc_psi_switch_rate,
    concurrence,
    concurrence_closed_form,
    concurrence_hermitized,
    entanglement_report,
    fef_closed_form,
    fef_sampled,
    fully_entangled_fraction,
    max_teleport_fidelity,
    wootters_lambdas,
)
from noisytele.smallmat import hermitian_eig
from noisytele.states import BellKind, bell_state, density, magic_basis

import oracle

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=4))
def test_concurrence_and_fef_match_lapack_oracle(seed, rank):
    rho = oracle.random_density(np.random.default_rng(seed), 4, rank)
    assert concurrence(rho) == pytest.approx(oracle.concurrence(rho), abs=1e-10)
    assert fully_entangled_fraction(rho) == pytest.approx(oracle.fef(rho), abs=1e-12)


def test_hermitized_route_agrees_to_its_accuracy():
    rng = np.random.default_rng(4)
    for rank in (1, 2, 3, 4):
        for _ in range(10):
            rho = oracle.random_density(rng, 4, rank)
            assert concurrence_hermitized(rho) == pytest.approx(concurrence(rho), abs=1e-7)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_local_unitaries_leave_entanglement_unchanged(seed):
    rng = np.random.default_rng(seed)
    rho = oracle.random_density(rng, 4)
    u = np.kron(oracle.haar_unitary(rng), oracle.haar_unitary(rng))
    moved = u @ rho @ u.conj().T
    assert concurrence(moved) == pytest.approx(concurrence(rho), abs=1e-10)
    assert fully_entangled_fraction(moved) == pytest.approx(fully_entangled_fraction(rho), abs=1e-10)


def test_known_states():
    for k in BellKind:
        rho = density(bell_state(k))
        assert concurrence(rho) == pytest.approx(1, abs=1e-12)
        assert fully_entangled_fraction(rho) == pytest.approx(1, abs=1e-12)
    product = np.kron(np.diag([1, 0]), np.diag([0, 1])).astype(complex)
    assert concurrence(product) == 0.0
    assert fully_entangled_fraction(product) == pytest.approx(0.5)
    assert fully_entangled_fraction(np.eye(4) / 4) == pytest.approx(0.25)
    assert wootters_lambdas(np.eye(4) / 4) == pytest.approx([0.25] * 4)


def test_werner_states():
    for w in np.linspace(0, 1, 11):
        rho = w * density(bell_state(BellKind.PSI_MINUS)) + (1 - w) * np.eye(4) / 4
        assert fully_entangled_fraction(rho) == pytest.approx((1 + 3 * w) / 4, abs=1e-13)
        assert concurrence(rho) == pytest.approx(max(0.0, (3 * w - 1) / 2), abs=1e-12)


def test_pure_states_obey_fef_concurrence_relation():
    rng = np.random.default_rng(12)
    for _ in range(100):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        rho = density(v)
        assert concurrence(rho) == pytest.approx(oracle.pure_concurrence(v), abs=1e-10)
        assert fully_entangled_fraction(rho) == pytest.approx((1 + oracle.pure_concurrence(v)) / 2, abs=1e-9)


def test_sampled_fef_never_exceeds_exact():
    rng = np.random.default_rng(8)
    for i in range(15):
        rho = oracle.random_density(rng, 4, 1 + i % 4)
        exact = fully_entangled_fraction(rho)
        sampled = fef_sampled(rho, 300, seed=i)
        assert sampled <= exact + 1e-12
        assert exact - sampled < 1e-5
    assert fef_sampled(rho, 50, seed=3) == fef_sampled(rho, 50, seed=3)
    with pytest.raises(ValueError):
        fef_sampled(rho, 0)


def test_magic_eigenproblem_one_arm_adc_example():
    s = DistributionScenario.one_arm(BellKind.PSI_PLUS, ChannelKind.ADC, 0.36)
    rho = distribute(s).rho
    e = magic_basis()
    top = hermitian_eig(np.real(e.conj() @ rho @ e.T).astype(complex))[0][-1]
    assert top == pytest.approx(0.81, abs=1e-12)


def test_max_teleport_fidelity():
    assert max_teleport_fidelity(1.0) == 1.0
    assert max_teleport_fidelity(0.5) == pytest.approx(2 / 3)
    assert max_teleport_fidelity(0.25) == pytest.approx(0.5)
    for bad in (0.2, 1.01):
        with pytest.raises(ValueError):
            max_teleport_fidelity(bad)


def test_entanglement_report_fields():
    r = entanglement_report(density(bell_state(BellKind.PHI_MINUS)))
    assert r.concurrence == pytest.approx(1) and r.f_ent == pytest.approx(1) and r.f_max_teleport == pytest.approx(1)


def test_rejects_non_states():
    with pytest.raises(ValueError):
        concurrence(np.eye(4))
    with pytest.raises(ValueError):
        fully_entangled_fraction(np.eye(2) / 2)


def test_closed_form_reference_values():
    s = DistributionScenario.two_arm(BellKind.PSI_PLUS, ChannelKind.ADC, 0.36)
    assert fef_closed_form(s) == pytest.approx(0.64)
    assert concurrence_closed_form(s) == pytest.approx(0.64)
    s = DistributionScenario.one_arm(BellKind.PSI_PLUS, ChannelKind.DC, 2 / 3)
    assert concurrence_closed_form(s) == pytest.approx(0.0, abs=1e-15)
    assert fef_closed_form(s) == pytest.approx(0.5)
    pa, pb = 0.3, 0.6
    s = DistributionScenario.two_arm(BellKind.PHI_PLUS, ChannelKind.ADC, pa, pb)
    assert concurrence_closed_form(s) == pytest.approx((1 - math.sqrt(pa * pb)) * math.sqrt((1 - pa) * (1 - pb)))


def test_adc_switch_branch_direction():
    # Below the switch rate the overlap with the original Bell state wins.
    pb = 0.3
    pa_switch = adc_psi_switch_rate(pb)
    for pa, branch in ((pa_switch - 0.05, "bell"), (min(1.0, pa_switch + 0.05), "flip")):
        s = DistributionScenario.two_arm(BellKind.PSI_PLUS, ChannelKind.ADC, pa, pb)
        f = fully_entangled_fraction(distribute(s).rho)
        bell = 0.25 * (math.sqrt(1 - pa) + math.sqrt(1 - pb)) ** 2
        flip = 0.25 * (pa + pb)
        assert f == pytest.approx(bell if branch == "bell" else flip, abs=1e-12)
        assert f == pytest.approx(max(bell, flip), abs=1e-12)


def test_watched_closed_forms_are_pure_state_values():
    s = DistributionScenario.two_arm(BellKind.PSI_MINUS, ChannelKind.ADC, 0.2, 0.7, watched=True)
    qa, qb = 0.8, 0.3
    c = 2 * math.sqrt(qa * qb) / (qa + qb)
    assert concurrence_closed_form(s) == pytest.approx(c)
    assert fef_closed_form(s) == pytest.approx((1 + c) / 2)
    rho = distribute(s).rho
    assert concurrence(rho) == pytest.approx(c, abs=1e-12)
