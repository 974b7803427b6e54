"""CPTP channels in Kraus form and their environment (dilation) picture.

Subsystem convention for dilations: system first, environment second, so a
dilation unitary acts on C^dim_sys (x) C^dim_env.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IncompleteKraus, NotHermitian
from .linalg import Rng, dagger, hermitian_eig, kron
from .states import DensityMatrix, Ensemble
from .entropy import holevo_chi

COMPLETENESS_TOL = 1e-9
UNITARY_TOL = 1e-9
# Kraus operators with no entry above this are dropped before the d^2 bound.
PRUNE_TOL = 1e-12


@dataclass(frozen=True)
class QuantumChannel:
    """Trace-preserving operator-sum map rho -> sum_i K_i rho K_i†."""

    kraus: tuple

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        if not ops:
            raise DimensionMismatch("channel needs at least one Kraus operator")
        shape = ops[0].shape
        if any(k.shape != shape for k in ops):
            raise DimensionMismatch("Kraus operators have mixed shapes")
        total = sum(dagger(k) @ k for k in ops)
        dev = float(np.abs(total - np.eye(shape[1])).max())
        if dev > COMPLETENESS_TOL:
            raise IncompleteKraus(dev)
        for k in ops:
            k.setflags(write=False)
        object.__setattr__(self, "kraus", ops)

    @property
    def dim_in(self) -> int:
        return self.kraus[0].shape[1]

    @property
    def dim_out(self) -> int:
        return self.kraus[0].shape[0]


@dataclass(frozen=True)
class StinespringDilation:
    """Unitary system-environment interaction realizing a channel."""

    dim_sys: int
    dim_env: int
    unitary: np.ndarray
    env_state: DensityMatrix

    def __post_init__(self):
        u = np.asarray(self.unitary, dtype=complex)
        n = self.dim_sys * self.dim_env
        if u.shape != (n, n):
            raise DimensionMismatch(f"unitary shape {u.shape}, expected {(n, n)}")
        dev = float(np.abs(dagger(u) @ u - np.eye(n)).max())
        if dev > UNITARY_TOL:
            raise NotHermitian("dilation matrix is not unitary", dev)
        if self.env_state.dim != self.dim_env:
            raise DimensionMismatch("environment state dimension mismatch")
        u.setflags(write=False)
        object.__setattr__(self, "unitary", u)


def pure_env(dim_env: int) -> DensityMatrix:
    """The default |0><0| environment state."""
    m = np.zeros((dim_env, dim_env), dtype=complex)
    m[0, 0] = 1
    return DensityMatrix(m)


def channel_from_kraus(ops) -> QuantumChannel:
    return QuantumChannel(tuple(ops))


def apply(ch: QuantumChannel, rho: DensityMatrix) -> DensityMatrix:
    if rho.dim != ch.dim_in:
        raise DimensionMismatch(f"state dim {rho.dim} != channel input {ch.dim_in}")
    out = sum(k @ rho.mat @ dagger(k) for k in ch.kraus)
    return DensityMatrix((out + dagger(out)) / 2)


def channel_from_dilation(dil: StinespringDilation) -> QuantumChannel:
    """Extract Kraus operators from tr_E[U(rho (x) rho_E)U†].

    A pure environment |e0> gives K_i = (I (x) <i|) U (I (x) |e0>).  A mixed
    environment is handled by purifying it: each eigenvector |e_j> with
    weight q_j contributes operators sqrt(q_j) (I (x) <i|) U (I (x) |e_j>).
    """
    d, m = dil.dim_sys, dil.dim_env
    u4 = dil.unitary.reshape(d, m, d, m)
    eig = hermitian_eig(dil.env_state.mat)
    ops = []
    for j in range(m):
        q = eig.eigenvalues[j]
        if q < PRUNE_TOL:
            continue
        vec = eig.eigenvectors[:, j]
        block = np.tensordot(u4, vec, axes=([3], [0]))  # (d, m, d)
        for i in range(m):
            ops.append(np.sqrt(q) * block[:, i, :])
    return QuantumChannel(tuple(ops))


def dilation_from_kraus(ch: QuantumChannel, rng: Rng) -> StinespringDilation:
    """Build a unitary environment model reproducing the channel.

    The environment dimension equals the number of surviving Kraus operators
    (at most dim^2 after pruning near-zero ones).  The isometry
    V|psi> = sum_i K_i|psi> (x) |i> is completed to a unitary with columns
    drawn from `rng` and orthonormalized, so results are reproducible; the
    channel action does not depend on the completion.
    """
    if ch.dim_in != ch.dim_out:
        raise DimensionMismatch("dilation requires a square channel")
    d = ch.dim_in
    ops = [k for k in ch.kraus if np.abs(k).max() >= PRUNE_TOL]
    m = len(ops)
    if m > d * d:
        raise DimensionMismatch(
            f"{m} Kraus operators exceed the d^2 = {d * d} environment bound"
        )
    n = d * m
    # Column b of V holds K_i applied to basis state b, stacked as (sys, env).
    v = np.zeros((n, d), dtype=complex)
    for i, k in enumerate(ops):
        block = v.reshape(d, m, d)
        block[:, i, :] = k
    cols = [v[:, b] for b in range(d)]
    g = rng.generator()
    while len(cols) < n:
        cand = g.standard_normal(n) + 1j * g.standard_normal(n)
        for c in cols:
            cand = cand - c * (c.conj() @ cand)
        norm = np.linalg.norm(cand)
        if norm > 1e-8:
            cols.append(cand / norm)
    u = np.column_stack(cols)
    # Reorder columns so index (b, env=0) carries V's column b.
    perm = np.zeros(n, dtype=int)
    perm[[b * m for b in range(d)]] = range(d)
    rest = [i for i in range(n) if i % m != 0]
    perm[rest] = range(d, n)
    u = u[:, perm]
    return StinespringDilation(d, m, u, pure_env(m))


def apply_to_ensemble(ch: QuantumChannel, e: Ensemble) -> Ensemble:
    return Ensemble(e.probs, tuple(apply(ch, s) for s in e.states))


def chi_monotonicity_slack(ch: QuantumChannel, e: Ensemble) -> float:
    """chi before minus chi after the channel; nonnegative up to round-off."""
    return holevo_chi(e).chi - holevo_chi(apply_to_ensemble(ch, e)).chi


def ancilla_invariance_slack(e: Ensemble, env: DensityMatrix) -> float:
    """|chi of {p_x, env (x) rho_x} - chi of {p_x, rho_x}|; vanishes always."""
    joint = Ensemble(
        e.probs, tuple(DensityMatrix(kron(env.mat, s.mat)) for s in e.states)
    )
    return abs(holevo_chi(joint).chi - holevo_chi(e).chi)


# --- Named channel factories (campaign diversity beyond Haar dilations) ---

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def identity_channel(dim: int) -> QuantumChannel:
    return QuantumChannel((np.eye(dim, dtype=complex),))


def unitary_channel(u: np.ndarray) -> QuantumChannel:
    return QuantumChannel((np.asarray(u, dtype=complex),))


def depolarizing_channel(p: float) -> QuantumChannel:
    """Qubit channel rho -> (1-p) rho + p I/2."""
    if not 0 <= p <= 1:
        raise DimensionMismatch(f"depolarizing strength {p} outside [0, 1]")
    ops = [np.sqrt(1 - 3 * p / 4) * np.eye(2, dtype=complex)]
    if p > 0:
        w = np.sqrt(p / 4)
        ops += [w * _PAULI_X, w * _PAULI_Y, w * _PAULI_Z]
    return QuantumChannel(tuple(ops))


def dephasing_channel(dim: int = 2) -> QuantumChannel:
    """Complete dephasing in the computational basis."""
    ops = []
    for i in range(dim):
        proj = np.zeros((dim, dim), dtype=complex)
        proj[i, i] = 1
        ops.append(proj)
    return QuantumChannel(tuple(ops))


def amplitude_damping_channel(gamma: float) -> QuantumChannel:
    if not 0 <= gamma <= 1:
        raise DimensionMismatch(f"damping strength {gamma} outside [0, 1]")
    k0 = np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex)
    k1 = np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex)
    return QuantumChannel((k0, k1))


def measurement_channel(projectors) -> QuantumChannel:
    """Projective-measurement channel rho -> sum_i P_i rho P_i."""
    return QuantumChannel(tuple(np.asarray(p, dtype=complex) for p in projectors))
