import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noisytele.channels import (
    Arms,
    ChannelKind,
    DistributionScenario,
    PostSelectionError,
    SharedState,
    apply_channel,
    closed_form_shared,
    distribute,
    kraus_ops,
)
from noisytele.states import PAULIS, BellKind, bell_state, density

import oracle

probs = st.floats(min_value=0, max_value=1)
kinds = st.sampled_from(list(ChannelKind))
bells = st.sampled_from(list(BellKind))


@settings(max_examples=60, deadline=None)
@given(kinds, probs)
def test_kraus_completeness(kind, p):
    total = sum(k.conj().T @ k for k in kraus_ops(kind, p))
    assert np.max(np.abs(total - np.eye(2))) < 1e-13


def test_kraus_examples():
    ops = kraus_ops(ChannelKind.ADC, 0.0)
    assert np.allclose(ops[0], np.eye(2)) and np.allclose(ops[1], 0)
    ops = kraus_ops(ChannelKind.DC, 1.0)
    for op, label in zip(ops, "IXYZ"):
        assert np.allclose(op, 0.5 * PAULIS[label])
    rho = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
    out = apply_channel(rho, kraus_ops(ChannelKind.PDC, 0.36), 0, n_qubits=1)
    assert out[0, 1] == pytest.approx(0.64 * 0.5)


def test_kraus_rejects_bad_rate():
    for p in (-0.1, 1.1):
        with pytest.raises(ValueError):
            kraus_ops(ChannelKind.ADC, p)


def test_dc_map_is_pauli_mixture():
    rng = np.random.default_rng(1)
    rho = oracle.random_density(rng, 2)
    p = 0.37
    expected = (1 - 0.75 * p) * rho + p / 4 * sum(PAULIS[s] @ rho @ PAULIS[s] for s in "XYZ")
    assert np.allclose(apply_channel(rho, kraus_ops(ChannelKind.DC, p), 0, 1), expected, atol=1e-15)


def test_adc_composition():
    rng = np.random.default_rng(2)
    rho = oracle.random_density(rng, 4)
    p1, p2 = 0.3, 0.45
    twice = apply_channel(apply_channel(rho, kraus_ops(ChannelKind.ADC, p1), 1), kraus_ops(ChannelKind.ADC, p2), 1)
    once = apply_channel(rho, kraus_ops(ChannelKind.ADC, 1 - (1 - p1) * (1 - p2)), 1)
    assert np.max(np.abs(twice - once)) < 1e-12


@settings(max_examples=80, deadline=None)
@given(kinds, bells, probs, probs, st.booleans(), st.booleans())
def test_distribute_matches_hand_expanded_channels(kind, bell, pa, pb, one_arm, watched):
    if one_arm:
        s = DistributionScenario.one_arm(bell, kind, pb, watched=watched)
    else:
        s = DistributionScenario.two_arm(bell, kind, pa, pb, watched=watched)
    expected, success = oracle.shared_state(bell.value, kind.value, pa, pb, one_arm, watched)
    if success < 1e-15:
        with pytest.raises(PostSelectionError):
            distribute(s)
        return
    shared = distribute(s)
    assert np.max(np.abs(shared.rho - expected)) < 1e-12
    assert shared.success_probability == pytest.approx(success if watched else 1.0, abs=1e-13)
    if not watched:
        assert shared.success_probability == 1.0


def test_watched_success_probabilities():
    pa, pb = 0.3, 0.7
    qa, qb = 1 - pa, 1 - pb
    expect = {
        (ChannelKind.PDC, BellKind.PSI_PLUS): qa * qb,
        (ChannelKind.DC, BellKind.PHI_MINUS): (4 - 3 * pa) * (4 - 3 * pb) / 16,
        (ChannelKind.ADC, BellKind.PSI_MINUS): 0.5 * (qa + qb),
        (ChannelKind.ADC, BellKind.PHI_PLUS): 0.5 * (1 + qa * qb),
    }
    for (kind, bell), value in expect.items():
        s = DistributionScenario.two_arm(bell, kind, pa, pb, watched=True)
        assert distribute(s).success_probability == pytest.approx(value, abs=1e-13)


def test_reference_shared_states():
    p = 0.4
    q = 1 - p
    s = DistributionScenario.two_arm(BellKind.PSI_PLUS, ChannelKind.ADC, p)
    expected = q * density(bell_state(BellKind.PSI_PLUS))
    expected[0, 0] += p
    assert np.allclose(distribute(s).rho, expected, atol=1e-15)

    s = DistributionScenario.one_arm(BellKind.PHI_PLUS, ChannelKind.ADC, p, watched=True)
    v = np.array([1, 0, 0, math.sqrt(q)]) / math.sqrt(2 - p)
    out = distribute(s)
    assert np.allclose(out.rho, np.outer(v, v), atol=1e-15)
    assert out.success_probability == pytest.approx((2 - p) / 2)

    for bell in BellKind:
        s = DistributionScenario.two_arm(bell, ChannelKind.DC, 0.2, 0.9, watched=True)
        out = distribute(s)
        assert np.allclose(out.rho, density(bell_state(bell)), atol=1e-15)
        assert out.success_probability == pytest.approx((4 - 0.6) * (4 - 2.7) / 16)


def test_closed_form_examples():
    s = DistributionScenario.two_arm(BellKind.PHI_PLUS, ChannelKind.PDC, 1.0, 0.3)
    rho = closed_form_shared(s).rho
    assert np.allclose(rho - np.diag(np.diag(rho)), 0)
    s = DistributionScenario.two_arm(BellKind.PSI_MINUS, ChannelKind.DC, 1.0)
    assert np.allclose(closed_form_shared(s).rho, np.eye(4) / 4, atol=1e-15)
    s = DistributionScenario.one_arm(BellKind.PSI_PLUS, ChannelKind.ADC, 0.0)
    assert np.allclose(closed_form_shared(s).rho, density(bell_state(BellKind.PSI_PLUS)))


def test_unwatched_channels_preserve_trace():
    for kind, bell, p in itertools.product(ChannelKind, BellKind, (0.0, 0.25, 1.0)):
        rho = distribute(DistributionScenario.two_arm(bell, kind, p, 1 - p)).rho
        assert abs(np.trace(rho) - 1) < 1e-15


def test_scenario_validation():
    with pytest.raises(ValueError):
        DistributionScenario(BellKind.PSI_PLUS, ChannelKind.ADC, p_b=0.1, p_a=0.2, arms=Arms.ONE)
    with pytest.raises(ValueError):
        DistributionScenario.two_arm(BellKind.PSI_PLUS, ChannelKind.ADC, 1.5)
    s = DistributionScenario.two_arm("phi-", "dc", 0.25, 0.5)
    assert s.bell is BellKind.PHI_MINUS and s.kind is ChannelKind.DC
    assert (s.q_a, s.q_b) == (0.75, 0.5) and not s.equal_rates
    assert DistributionScenario.two_arm("psi+", "adc", 0.3).equal_rates


def test_post_selection_failure():
    s = DistributionScenario.two_arm(BellKind.PSI_PLUS, ChannelKind.ADC, 1.0, watched=True)
    with pytest.raises(PostSelectionError, match="post-selected state undefined"):
        distribute(s)
    s = DistributionScenario.two_arm(BellKind.PSI_PLUS, ChannelKind.PDC, 1.0, 0.2, watched=True)
    with pytest.raises(PostSelectionError):
        distribute(s)


def test_shared_state_validation():
    with pytest.raises(ValueError):
        SharedState(np.eye(4))
    with pytest.raises(ValueError):
        SharedState(np.eye(4) / 4, success_probability=0.0)
