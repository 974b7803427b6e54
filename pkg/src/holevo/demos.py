"""Named desk-scale demonstrations with independently derived reference values.

Each demo returns a flat dict of numbers/flags, suitable for printing or for
the /demo endpoint.  The `expected` entries were computed ahead of time with
the matching brute-force oracle (eigenvalue arithmetic, parameter sweeps,
Schmidt spectra), not with the code paths being demonstrated.
"""

import numpy as np

from .linalg import Rng
from .states import DensityMatrix, Ensemble, PureState, density_from_pure
from .entropy import holevo_chi
from .channels import apply_to_ensemble, chi_monotonicity_slack, depolarizing_channel
from .measurements import optimize_accessible_info
from .no_go import (cloning_chi_gain, controlled_unitary, disentangle_chi_gain,
                    extract_pointer_state, no_cloning_residual)


def bb84_pair() -> Ensemble:
    """Equiprobable {|0><0|, |+><+|}: the standard non-orthogonal test pair."""
    k0 = PureState(np.array([1, 0], dtype=complex))
    kp = PureState(np.array([1, 1], dtype=complex) / np.sqrt(2))
    return Ensemble(np.array([0.5, 0.5]),
                    (density_from_pure(k0), density_from_pure(kp)))


def demo_bb84_chi() -> dict:
    rep = holevo_chi(bb84_pair())
    return {
        "chi": rep.chi,
        "mixture_entropy": rep.mixture_entropy,
        "member_entropies": list(rep.member_entropies),
        "expected_chi": 0.6008760366928562,
    }


def demo_accessible_info() -> dict:
    res = optimize_accessible_info(bb84_pair(), outcomes=2, restarts=20,
                                   iters=500, rng=Rng(2024))
    return {
        "best_mutual_info": res.best_mutual_info,
        "chi_upper_bound": res.chi_upper_bound,
        "converged": res.converged,
        "expected_optimum": 0.3991239633071437,
    }


def demo_depolarizing_slack() -> dict:
    e = bb84_pair()
    ch = depolarizing_channel(0.5)
    out = holevo_chi(apply_to_ensemble(ch, e))
    return {
        "chi_before": holevo_chi(e).chi,
        "chi_after": out.chi,
        "slack": chi_monotonicity_slack(ch, e),
        "expected_chi_after": 0.09657417614279562,
        "expected_slack": 0.5043018605500605,
    }


def demo_cloning_gain() -> dict:
    return {
        "gain": cloning_chi_gain(bb84_pair()),
        "expected_gain": 0.210402087766277,
    }


def demo_disentangle_gain() -> dict:
    bell = PureState(np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2))
    skew = PureState(np.array([np.sqrt(0.9), 0, 0, np.sqrt(0.1)], dtype=complex))
    return {
        "bell_gain": disentangle_chi_gain(bell, (2, 2)),
        "skew_gain": disentangle_chi_gain(skew, (2, 2)),
        "expected_bell_gain": 2.0,
        "expected_skew_gain": 0.9379911871785622,
    }


def demo_cnot_factorization() -> dict:
    cnot = controlled_unitary(2, [np.eye(2), np.array([[0, 1], [1, 0]])])
    zero = PureState(np.array([1, 0], dtype=complex))
    plus = PureState(np.array([1, 1], dtype=complex) / np.sqrt(2))
    basis_case = extract_pointer_state(cnot, zero, zero, (2, 2))
    entangling_case = extract_pointer_state(cnot, plus, zero, (2, 2))
    return {
        "basis_input_factorizes": basis_case.factorizes,
        "basis_input_fidelity": basis_case.fidelity,
        "superposed_input_factorizes": entangling_case.factorizes,
        "superposed_input_fidelity": entangling_case.fidelity,
        "expected_superposed_fidelity": 0.5,
    }


def demo_no_cloning_identity() -> dict:
    from .linalg import haar_unitary
    targets = [haar_unitary(2, Rng(7).child(i)) for i in range(2)]
    u = controlled_unitary(2, targets)
    zero = PureState(np.array([1, 0], dtype=complex))
    one = PureState(np.array([0, 1], dtype=complex))
    residual = no_cloning_residual(u, zero, one, zero, (2, 2))
    return {"residual": residual, "expected_max_residual": 1e-8}


DEMOS = {
    "bb84_chi": demo_bb84_chi,
    "accessible_info": demo_accessible_info,
    "depolarizing_slack": demo_depolarizing_slack,
    "cloning_gain": demo_cloning_gain,
    "disentangle_gain": demo_disentangle_gain,
    "cnot_factorization": demo_cnot_factorization,
    "no_cloning_identity": demo_no_cloning_identity,
}


def run_demo(name: str) -> dict:
    if name not in DEMOS:
        raise KeyError(f"unknown demo {name!r}; known: " + ", ".join(DEMOS))
    return DEMOS[name]()
