"""Entropies, the Holevo chi quantity, and entropy-inequality slacks.

All entropies are in bits (base-2 logarithms), so a uniform pair of
orthogonal qubit states carries exactly one bit of chi.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotPositive, NotUnitTrace
from .linalg import kron, partial_trace
from .states import DensityMatrix, Ensemble, mix

# Round-off on rank-deficient states produces tiny negative eigenvalues;
# anything inside this window is treated as exactly zero before p*log(p).
CLIP = 1e-12


@dataclass(frozen=True)
class ChiReport:
    """Holevo chi together with the entropies it is assembled from."""

    chi: float
    mixture_entropy: float
    member_entropies: tuple


def _plogp_sum(values) -> float:
    total = 0.0
    for v in values:
        if v > CLIP:
            total -= v * np.log2(v)
    return float(total)


def shannon_entropy(p) -> float:
    """Shannon entropy of a probability distribution, in bits."""
    p = np.asarray(p, dtype=float)
    if p.size and p.min() < 0:
        raise NotPositive("probability is negative", float(-p.min()))
    dev = abs(p.sum() - 1.0)
    if dev > 1e-9:
        raise NotUnitTrace("probabilities do not sum to 1", float(dev))
    return _plogp_sum(p)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Shannon entropy of the eigenvalue spectrum, in bits."""
    evs = np.linalg.eigvalsh(rho.mat)
    if evs[0] < -1e-9:
        raise NotPositive("state has a negative eigenvalue", float(-evs[0]))
    return _plogp_sum(np.clip(evs, 0.0, None))


def holevo_chi(e: Ensemble) -> ChiReport:
    """chi = S(mixture) - sum_x p_x S(rho_x)."""
    members = tuple(von_neumann_entropy(s) for s in e.states)
    mixture = von_neumann_entropy(mix(e))
    first = e.states[0].mat
    if all(np.array_equal(first, s.mat) for s in e.states[1:]):
        # Identical members: chi vanishes exactly, not just to round-off.
        return ChiReport(0.0, mixture, members)
    chi = mixture - float(np.dot(e.probs, members))
    return ChiReport(chi, mixture, members)


def cq_state(p, flag_dim: int, states) -> DensityMatrix:
    """Classical-quantum joint state sum_i p_i |i><i| (x) rho_i.

    The classical register uses orthonormal flag states |i> of dimension
    `flag_dim`, which must be at least the number of members.
    """
    p = np.asarray(p, dtype=float)
    states = tuple(states)
    if flag_dim < len(p):
        raise DimensionMismatch(
            f"flag dimension {flag_dim} below member count {len(p)}"
        )
    if len(p) != len(states):
        raise DimensionMismatch("probs and states differ in length")
    if p.size and p.min() < 0:
        raise NotPositive("probability is negative", float(-p.min()))
    dev = abs(p.sum() - 1.0)
    if dev > 1e-9:
        raise NotUnitTrace("probabilities do not sum to 1", float(dev))
    dims = {s.dim for s in states}
    if len(dims) != 1:
        raise DimensionMismatch(f"members have mixed dimensions {dims}")
    d = dims.pop()
    total = np.zeros((flag_dim * d, flag_dim * d), dtype=complex)
    flag = np.zeros((flag_dim, flag_dim), dtype=complex)
    for i, (pi, s) in enumerate(zip(p, states)):
        flag[:] = 0
        flag[i, i] = 1
        total += pi * kron(flag, s.mat)
    return DensityMatrix(total)


def ssa_slack(rho_xyz: DensityMatrix, dims) -> float:
    """Strong-subadditivity slack S(XY) + S(YZ) - S(XYZ) - S(Y), in bits.

    Nonnegative (up to round-off) for every tripartite state.
    """
    dx, dy, dz = dims
    if rho_xyz.dim != dx * dy * dz:
        raise DimensionMismatch(
            f"state dim {rho_xyz.dim} does not match {dx}x{dy}x{dz}"
        )
    m = rho_xyz.mat
    s_xy = von_neumann_entropy(DensityMatrix(partial_trace(m, dims, {0, 1})))
    s_yz = von_neumann_entropy(DensityMatrix(partial_trace(m, dims, {1, 2})))
    s_y = von_neumann_entropy(DensityMatrix(partial_trace(m, dims, {1})))
    s_xyz = von_neumann_entropy(rho_xyz)
    return s_xy + s_yz - s_xyz - s_y


def chi_partial_trace_slack(e_joint: Ensemble, dims) -> float:
    """chi of a bipartite ensemble minus chi of its traced-down ensemble.

    Tracing out the second subsystem from every member can only reduce chi,
    so the returned value is nonnegative up to round-off.
    """
    dx, dy = dims
    if e_joint.dim != dx * dy:
        raise DimensionMismatch(
            f"ensemble dim {e_joint.dim} does not match {dx}x{dy}"
        )
    traced = Ensemble(
        e_joint.probs,
        tuple(DensityMatrix(partial_trace(s.mat, dims, {0})) for s in e_joint.states),
    )
    return holevo_chi(e_joint).chi - holevo_chi(traced).chi


def concavity_slack(e: Ensemble) -> float:
    """S(mixture) - sum p_i S(rho_i): zero iff all weighted members coincide."""
    return holevo_chi(e).chi
