"""Density matrices, pure states, and probability-weighted ensembles."""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotPositive, NotUnitTrace
from .linalg import dagger

HERMITIAN_TOL = 1e-9
TRACE_TOL = 1e-9
POSITIVITY_TOL = 1e-9
NORM_TOL = 1e-10


def density_violations(m: np.ndarray, tol: float = HERMITIAN_TOL):
    """Return every violated density-matrix invariant as (name, magnitude).

    Empty list means `m` is a valid density matrix at tolerance `tol`.
    """
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected square matrix, got {m.shape}")
    out = []
    herm_dev = float(np.abs(m - dagger(m)).max())
    if herm_dev > tol:
        out.append(("hermitian", herm_dev))
    trace_dev = abs(np.trace(m) - 1.0)
    if trace_dev > tol:
        out.append(("unit_trace", float(trace_dev)))
    evs = np.linalg.eigvalsh((m + dagger(m)) / 2)
    if evs[0] < -tol:
        out.append(("positive", float(-evs[0])))
    return out


def validate_density(m: np.ndarray, tol: float = HERMITIAN_TOL) -> "DensityMatrix":
    """Construct a DensityMatrix, raising on the first violated invariant."""
    for name, magnitude in density_violations(m, tol):
        if name == "hermitian":
            raise NotHermitian("density matrix is not Hermitian", magnitude)
        if name == "unit_trace":
            raise NotUnitTrace("density matrix trace differs from 1", magnitude)
        raise NotPositive("density matrix has a negative eigenvalue", magnitude)
    return DensityMatrix(m, tol=tol)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix."""

    mat: np.ndarray
    tol: float = field(default=HERMITIAN_TOL, repr=False, compare=False)

    def __post_init__(self):
        violations = density_violations(self.mat, self.tol)
        if violations:
            name, magnitude = violations[0]
            exc = {"hermitian": NotHermitian, "unit_trace": NotUnitTrace,
                   "positive": NotPositive}[name]
            raise exc(f"invalid density matrix: {name}", magnitude)
        m = np.asarray(self.mat, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex)
        norm_dev = abs(np.linalg.norm(a) - 1.0)
        if norm_dev > NORM_TOL:
            raise NotUnitTrace("pure state is not normalized", float(norm_dev))
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]


@dataclass(frozen=True)
class Ensemble:
    """Probability-weighted list of density matrices sharing one dimension."""

    probs: np.ndarray
    states: tuple

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float)
        states = tuple(self.states)
        if len(states) == 0 or len(p) != len(states):
            raise DimensionMismatch("ensemble needs matching, nonempty probs/states")
        if p.min() < 0:
            raise NotPositive("ensemble probability is negative", float(-p.min()))
        sum_dev = abs(p.sum() - 1.0)
        if sum_dev > TRACE_TOL:
            raise NotUnitTrace("ensemble probabilities do not sum to 1", float(sum_dev))
        dims = {s.dim for s in states}
        if len(dims) != 1:
            raise DimensionMismatch(f"ensemble members have mixed dimensions {dims}")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)
        object.__setattr__(self, "states", states)

    @property
    def dim(self) -> int:
        return self.states[0].dim

    def __len__(self) -> int:
        return len(self.states)


def density_from_pure(v: PureState) -> DensityMatrix:
    """Rank-one projector |v><v|."""
    a = v.amplitudes
    return DensityMatrix(np.outer(a, a.conj()))


def mix(e: Ensemble) -> DensityMatrix:
    """Convex combination of the ensemble members."""
    total = sum(p * s.mat for p, s in zip(e.probs, e.states))
    return DensityMatrix(total)
