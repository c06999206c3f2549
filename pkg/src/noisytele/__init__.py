"""Quantum teleportation over Bell pairs degraded by damping channels."""

from .channels import (
    Arms,
    ChannelKind,
    DistributionScenario,
    PostSelectionError,
    SharedState,
    closed_form_shared,
    distribute,
    kraus_ops,
)
from .entanglement import (
    concurrence,
    entanglement_report,
    fef_closed_form,
    fef_sampled,
    fully_entangled_fraction,
    max_teleport_fidelity,
)
from .security import (
    Reference,
    classify,
    critical_damping,
    pccm_fidelity,
    secure_delta_range,
    universal_clone_fidelity,
    unequal_rate_boundary,
)
from .states import BellKind, BlochState
from .teleport import (
    CorrectionStrategy,
    Selective,
    bloch_average_fidelity,
    closed_form_fidelity,
    direct_transmission_fidelity,
    optimal_strategy,
    standard_strategy,
    teleport,
)

__all__ = [
    "Arms",
    "BellKind",
    "BlochState",
    "ChannelKind",
    "CorrectionStrategy",
    "DistributionScenario",
    "PostSelectionError",
    "Reference",
    "Selective",
    "SharedState",
    "bloch_average_fidelity",
    "classify",
    "closed_form_fidelity",
    "closed_form_shared",
    "concurrence",
    "critical_damping",
    "direct_transmission_fidelity",
    "distribute",
    "entanglement_report",
    "fef_closed_form",
    "fef_sampled",
    "fully_entangled_fraction",
    "kraus_ops",
    "max_teleport_fidelity",
    "optimal_strategy",
    "pccm_fidelity",
    "secure_delta_range",
    "standard_strategy",
    "teleport",
    "unequal_rate_boundary",
    "universal_clone_fidelity",
]
