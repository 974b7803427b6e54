"""Numerical quantum-information toolkit built around the Holevo chi quantity.

Core value types (density matrices, ensembles, channels, POVMs) live in
their own modules; `campaigns` runs seeded randomized verification of the
entropy inequalities, `service` exposes everything over HTTP, and `cli`
wraps the same handlers for the command line.
"""

from .linalg import (EigenSystem, Rng, dagger, ginibre_density, haar_state,
                     haar_unitary, hermitian_eig, kron, matmul, partial_trace)
from .states import (DensityMatrix, Ensemble, PureState, density_from_pure,
                     mix, validate_density)
from .entropy import (ChiReport, chi_partial_trace_slack, concavity_slack,
                      cq_state, holevo_chi, shannon_entropy, ssa_slack,
                      von_neumann_entropy)
from .channels import (QuantumChannel, StinespringDilation,
                       ancilla_invariance_slack, apply, apply_to_ensemble,
                       channel_from_dilation, channel_from_kraus,
                       chi_monotonicity_slack, dilation_from_kraus)
from .measurements import (AccessibleInfoResult, Povm, holevo_gap,
                           mutual_information, optimize_accessible_info)
from .no_go import (FactorizationResult, cloning_chi_gain, controlled_unitary,
                    disentangle, disentangle_chi_gain, extract_pointer_state,
                    no_cloning_residual)
from .campaigns import CampaignConfig, CampaignReport, run_campaign

__version__ = "0.1.0"
