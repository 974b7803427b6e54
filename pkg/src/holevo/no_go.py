"""Executable demonstrations of no-go consequences of chi monotonicity.

These operations probe when a joint unitary can leave one subsystem's pure
state untouched (writing only a "pointer" on the other), and quantify the
chi increase that hypothetical cloning or disentangling maps would cause.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, NotHermitian, PremiseNotSatisfied
from .linalg import dagger, kron, partial_trace
from .states import DensityMatrix, Ensemble, PureState, density_from_pure
from .entropy import holevo_chi, von_neumann_entropy

FACTORIZATION_TOL = 1e-9


@dataclass(frozen=True)
class FactorizationResult:
    """Whether U(|phi> (x) |s>) = |phi> (x) |pointer> for some pointer state."""

    factorizes: bool
    fidelity: float
    pointer_state: Optional[PureState]


def _check_unitary(u: np.ndarray, n: int):
    if u.shape != (n, n):
        raise DimensionMismatch(f"unitary shape {u.shape}, expected {(n, n)}")
    dev = float(np.abs(dagger(u) @ u - np.eye(n)).max())
    if dev > 1e-9:
        raise NotHermitian("matrix is not unitary", dev)


def extract_pointer_state(u: np.ndarray, phi: PureState, s: PureState,
                          dims) -> FactorizationResult:
    """Test whether the joint unitary leaves subsystem A in state |phi>.

    fidelity is <phi| tr_B(U |phi,s><phi,s| U†) |phi>; when it reaches 1
    (within tolerance) the B output is a well-defined pointer state, which
    is returned normalized.
    """
    da, db = dims
    _check_unitary(u, da * db)
    if phi.dim != da or s.dim != db:
        raise DimensionMismatch("input state dimensions do not match dims")
    out = u @ np.kron(phi.amplitudes, s.amplitudes)
    rho_a = partial_trace(np.outer(out, out.conj()), dims, {0})
    fidelity = float(np.real(phi.amplitudes.conj() @ rho_a @ phi.amplitudes))
    fidelity = min(max(fidelity, 0.0), 1.0)
    if 1.0 - fidelity > FACTORIZATION_TOL:
        return FactorizationResult(False, fidelity, None)
    pointer = out.reshape(da, db).T @ phi.amplitudes.conj()
    pointer = pointer / np.linalg.norm(pointer)
    return FactorizationResult(True, fidelity, PureState(pointer))


def no_cloning_residual(u: np.ndarray, phi: PureState, psi: PureState,
                        s: PureState, dims) -> float:
    """|<phi|psi>| * |1 - <pointer_phi|pointer_psi>|.

    Valid only when the unitary factorizes for both inputs; the identity
    then forces either orthogonal inputs or identical pointers, so the
    residual vanishes up to round-off.
    """
    res_phi = extract_pointer_state(u, phi, s, dims)
    res_psi = extract_pointer_state(u, psi, s, dims)
    if not res_phi.factorizes or not res_psi.factorizes:
        raise PremiseNotSatisfied(
            "unitary does not preserve both inputs "
            f"(fidelities {res_phi.fidelity:.6f}, {res_psi.fidelity:.6f})"
        )
    overlap_in = phi.amplitudes.conj() @ psi.amplitudes
    overlap_ptr = (res_phi.pointer_state.amplitudes.conj()
                   @ res_psi.pointer_state.amplitudes)
    return float(abs(overlap_in) * abs(1.0 - overlap_ptr))


def controlled_unitary(control_dim: int, targets) -> np.ndarray:
    """Block-diagonal sum_i |i><i| (x) V_i over the control basis."""
    targets = [np.asarray(t, dtype=complex) for t in targets]
    if len(targets) != control_dim:
        raise DimensionMismatch(
            f"need {control_dim} target unitaries, got {len(targets)}"
        )
    dt = targets[0].shape[0]
    for t in targets:
        _check_unitary(t, dt)
    u = np.zeros((control_dim * dt, control_dim * dt), dtype=complex)
    for i, t in enumerate(targets):
        u[i * dt:(i + 1) * dt, i * dt:(i + 1) * dt] = t
    return u


def cloning_chi_gain(e: Ensemble) -> float:
    """chi of the doubled ensemble {p_x, rho_x (x) rho_x} minus chi of the input.

    A strictly positive gain for non-orthogonal pure ensembles certifies that
    perfect cloning cannot be a trace-preserving quantum operation.
    """
    for s in e.states:
        top = float(np.linalg.eigvalsh(s.mat)[-1])
        if 1.0 - top > 1e-9:
            raise PremiseNotSatisfied(
                f"ensemble member is mixed (largest eigenvalue {top:.6f})"
            )
    doubled = Ensemble(
        e.probs, tuple(DensityMatrix(kron(s.mat, s.mat)) for s in e.states)
    )
    return holevo_chi(doubled).chi - holevo_chi(e).chi


def disentangle(rho12: DensityMatrix, dims) -> DensityMatrix:
    """Replace a bipartite state by the product of its reductions."""
    d1, d2 = dims
    if rho12.dim != d1 * d2:
        raise DimensionMismatch(f"state dim {rho12.dim} does not match {d1}x{d2}")
    r1 = partial_trace(rho12.mat, dims, {0})
    r2 = partial_trace(rho12.mat, dims, {1})
    return DensityMatrix(kron(r1, r2))


def disentangle_chi_gain(psi12: PureState, dims) -> float:
    """chi increase caused by disentangling a bipartite pure state.

    The input chi (singleton pure ensemble) is zero; the output chi over the
    eigen-ensemble of the product of reductions is S(rho_1) + S(rho_2), i.e.
    twice the entanglement entropy.  Zero iff the input is a product state.
    """
    d1, d2 = dims
    if psi12.dim != d1 * d2:
        raise DimensionMismatch(f"state dim {psi12.dim} does not match {d1}x{d2}")
    rho = density_from_pure(psi12)
    r1 = DensityMatrix(partial_trace(rho.mat, dims, {0}))
    r2 = DensityMatrix(partial_trace(rho.mat, dims, {1}))
    return von_neumann_entropy(r1) + von_neumann_entropy(r2)
