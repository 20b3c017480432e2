"""Spectral analysis of finite-dimensional quantum channels.

Decides from the peripheral spectrum of a kick channel whether bath
dynamical decoupling applies (the kick must be ergodic) and whether repeated
kicking suppresses all Hamiltonian evolution in the Zeno limit (the kick
must have no decoherence-free subsystem), and simulates the kicked
evolutions to desk scale.
"""

from .channel import (
    ChannelError,
    ChoiState,
    KrausChannel,
    Superoperator,
    apply,
    choi,
    compose,
    extend_with_identity,
    identity_superoperator,
    load_channel,
    power,
    save_channel,
    to_superoperator,
    validate_cptp,
)
from .classify import Classification, CycleStructure, classify, cycle_structure
from .hamiltonian import SchmidtDecomposition, adjoint_rep, random_hamiltonian, schmidt
from .harness import (
    SweepConfig,
    SweepRecord,
    choi_distance,
    reduced_choi_purity,
    reproduce,
    sweep,
)
from .spectral import (
    PeripheralDecomposition,
    SpectralError,
    analyze_peripheral,
    fixed_point_state,
    peripheral_power,
)
from .zeno import (
    DdVerdict,
    dd_check,
    dd_evolution,
    suppression_check,
    target_evolution,
    zeno_evolution,
    zeno_hamiltonian,
)
from .zoo import builtin, names

__version__ = "0.1.0"
