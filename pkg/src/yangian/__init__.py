"""
Modules sur la q-Yangienne: évaluation, produits tensoriels, R-matrices,
mineurs quantiques et vecteurs singuliers.
"""

from .modules import EvalModule, OperatorPoly, TensorModule, YangianModule, tensor_highest_weight
from .rmatrix import (
    RMatrixKind,
    TrigRMatrix,
    antisymmetrizer,
    antisymmetrizer_scalar,
    constant_r_matrix,
    fused_r_matrix,
    q_permutation,
    r_matrix,
    trigonometric_r_matrix,
)
from .minors import MinorForm, comatrix, qdet, quantum_minor
from .lowering import (
    LoweringVariant,
    apply_tau_product,
    branching_eigenvalues,
    branching_vector,
    gt_vector,
    lowering_minor,
    lowering_tau,
)
from .theta import expected_leading_vector, leading_component, theta_vector
from .identities import (
    MINOR_SUITE,
    RTT_SUITE,
    IdentityReport,
    MinorIdentity,
    verify_gt_vectors,
    verify_minor_identities,
)

__all__ = [
    "EvalModule",
    "OperatorPoly",
    "TensorModule",
    "YangianModule",
    "tensor_highest_weight",
    "RMatrixKind",
    "TrigRMatrix",
    "antisymmetrizer",
    "antisymmetrizer_scalar",
    "constant_r_matrix",
    "fused_r_matrix",
    "q_permutation",
    "r_matrix",
    "trigonometric_r_matrix",
    "MinorForm",
    "comatrix",
    "qdet",
    "quantum_minor",
    "LoweringVariant",
    "apply_tau_product",
    "branching_eigenvalues",
    "branching_vector",
    "gt_vector",
    "lowering_minor",
    "lowering_tau",
    "expected_leading_vector",
    "leading_component",
    "theta_vector",
    "MINOR_SUITE",
    "RTT_SUITE",
    "IdentityReport",
    "MinorIdentity",
    "verify_gt_vectors",
    "verify_minor_identities",
]
