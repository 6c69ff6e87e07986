"""Commutator-norm complementarity of generalized Bell operators.

Closed forms for two qubits and two qudits, the exhaustive single-pair scan,
and a derivative-free optimizer that reproduces both, with a CLI on top.
"""

from .bases import (
    PAULI,
    clock_z,
    commutation_phase,
    expand_in_pauli,
    expand_in_weyl,
    flat_index,
    index_pair,
    index_successor,
    omega,
    property_suite,
    reconstruct_from_weyl,
    shift_x,
    weyl,
    weyl_basis,
    weyl_by_index,
)
from .bell import (
    CLASSICAL_CHSH_BOUND,
    ChshSettings,
    bell_operator,
    chsh_correlations,
    chsh_sum,
    chsh_value,
    classic_bell_operator,
    classic_bell_operator_normalized,
    singlet_correlation,
    singlet_correlation_trace,
    singlet_projector,
    singlet_state,
    spin_observable,
    unit_vector,
)
from .complementarity import (
    CoeffTensor,
    QubitSupremum,
    QuditSetting,
    ScanResult,
    best_known_commutator_norm,
    commutator_norm_bound,
    commutator_norm_direct,
    commutator_weights,
    conjugate_coeffs_qubit,
    generalized_bell,
    local_observable_qubit,
    local_observable_qudit,
    offblock_mass,
    qubit_commutator_closed_form,
    qubit_commutator_norm,
    qubit_max_commutator_norm,
    qudit_commutator_coeffs,
    qudit_commutator_norm,
    random_coeff_tensor,
    rotation_taking_z_to,
    unitary_to_rotation,
)
from .errors import DomainError, OptimizationError, ShapeError
from .linalg import (
    commutator,
    dagger,
    haar_unitary,
    hs_inner,
    hs_norm,
    is_hermitian,
    is_unitary,
    matmul,
    tensor,
)
from .optimizer import (
    Block,
    OptimizationConfig,
    OptimizationResult,
    generator_to_unitary,
    maximize,
    maximize_m2,
    maximize_md,
    maximize_md_conjugated,
    project,
    split_point,
)

__version__ = "0.1.0"
