"""Dense complex matrix algebra and seeded random generators.

Everything here works on plain ``numpy.ndarray`` of dtype complex128.
Subsystem convention: the leftmost factor of a Kronecker product is
subsystem 0.
"""

from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import DimensionMismatch, NotHermitian

# Mixing constant for deriving child streams (golden-ratio increment).
_STREAM_MIX = 0x9E3779B97F4A7C15
_U64 = 1 << 64


@dataclass(frozen=True)
class Rng:
    """Counter-based random source: a pure value, never shared mutable state.

    Identical (seed, stream) pairs produce identical output sequences on
    every platform, so parallel campaigns are reproducible regardless of
    scheduling.
    """

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        """Fresh numpy Generator keyed by (seed, stream)."""
        key = np.array([self.seed % _U64, self.stream % _U64], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    def child(self, index: int) -> "Rng":
        """Derive an independent substream, e.g. one per trial or restart."""
        mixed = (self.stream * _STREAM_MIX + index + 1) % _U64
        return Rng(self.seed, mixed)


@dataclass(frozen=True)
class EigenSystem:
    """Hermitian eigendecomposition: ascending eigenvalues, orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def partial_trace(m: np.ndarray, dims, keep) -> np.ndarray:
    """Trace out every subsystem not in `keep`.

    Parameters
    ----------
    m : square matrix on the tensor product of `dims`
    dims : sequence of subsystem dimensions, subsystem 0 leftmost
    keep : nonempty collection of subsystem indices to retain
    """
    dims = list(dims)
    n = len(dims)
    keep = sorted(set(keep))
    if not keep:
        raise DimensionMismatch("keep set must be nonempty")
    if any(k < 0 or k >= n for k in keep):
        raise DimensionMismatch(f"keep indices {keep} out of range for {n} subsystems")
    total = prod(dims)
    if m.shape != (total, total):
        raise DimensionMismatch(
            f"matrix shape {m.shape} does not match subsystem dims {dims}"
        )
    t = m.reshape(dims + dims)
    drop = [i for i in range(n) if i not in keep]
    for idx in sorted(drop, reverse=True):
        t = np.trace(t, axis1=idx, axis2=idx + len(dims))
        dims.pop(idx)
    kept = prod(dims)
    return np.ascontiguousarray(t.reshape(kept, kept))


def hermitian_eig(h: np.ndarray, tol: float = 1e-9) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized via (h + h†)/2 before solving, to absorb
    accumulated round-off; inputs deviating from Hermiticity by more than
    `tol` in max-entry norm are rejected.
    """
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionMismatch(f"expected square matrix, got {h.shape}")
    dev = float(np.abs(h - dagger(h)).max()) if h.size else 0.0
    if dev > tol:
        raise NotHermitian("matrix is not Hermitian", dev)
    w, v = np.linalg.eigh((h + dagger(h)) / 2)
    return EigenSystem(w, v)


def haar_unitary(d: int, rng: Rng) -> np.ndarray:
    """Haar-distributed d x d unitary via QR of a Ginibre matrix.

    The diagonal of R is phase-fixed so the distribution is exactly the
    Haar measure rather than the biased raw-QR output.
    """
    g = rng.generator()
    z = (g.standard_normal((d, d)) + 1j * g.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    phases = diag / np.abs(diag)
    return q * phases


def ginibre_density(d: int, rank: int, rng: Rng) -> np.ndarray:
    """Random density matrix G G† / Tr(G G†) with G a d x rank Ginibre matrix."""
    if not 1 <= rank <= d:
        raise DimensionMismatch(f"rank {rank} out of range [1, {d}]")
    g = rng.generator()
    G = (g.standard_normal((d, rank)) + 1j * g.standard_normal((d, rank))) / np.sqrt(2)
    rho = G @ dagger(G)
    return rho / np.trace(rho).real


def haar_state(d: int, rng: Rng) -> np.ndarray:
    """Haar-random pure-state amplitude vector of dimension d."""
    g = rng.generator()
    v = g.standard_normal(d) + 1j * g.standard_normal(d)
    return v / np.linalg.norm(v)


def simplex_sample(k: int, rng: Rng) -> np.ndarray:
    """Uniform sample from the probability simplex with k outcomes."""
    g = rng.generator()
    e = g.standard_exponential(k)
    return e / e.sum()
