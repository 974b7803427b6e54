"""Seeded randomized verification campaigns with counterexample capture.

Every trial is a pure function of (seed, check index, trial index), so
serial and parallel runs aggregate to identical reports.  A check returns a
"slack": nonnegative when the property holds, with violation magnitude
max(0, -slack).  Equality-style checks return minus their deviation.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import UnknownCheck
from .linalg import (Rng, ginibre_density, haar_state, haar_unitary, kron,
                     simplex_sample)
from .states import DensityMatrix, Ensemble, PureState
from .entropy import (chi_partial_trace_slack, concavity_slack, cq_state,
                      holevo_chi, shannon_entropy, ssa_slack,
                      von_neumann_entropy)
from .channels import (StinespringDilation, ancilla_invariance_slack,
                       channel_from_dilation, chi_monotonicity_slack,
                       pure_env, unitary_channel)
from .measurements import Povm, holevo_gap
from .no_go import (cloning_chi_gain, controlled_unitary, disentangle_chi_gain,
                    no_cloning_residual)
from . import serialize


def _random_ensemble(rng: Rng, dim: int, ensemble_size: int) -> Ensemble:
    g = rng.generator()
    k = int(g.integers(2, ensemble_size + 1))
    probs = simplex_sample(k, rng.child(0))
    states = tuple(
        DensityMatrix(ginibre_density(
            dim, int(g.integers(1, dim + 1)), rng.child(i + 1)))
        for i in range(k)
    )
    return Ensemble(probs, states)


def _random_dilation(rng: Rng, dim: int) -> StinespringDilation:
    g = rng.generator()
    m = int(g.integers(1, dim * dim + 1))
    u = haar_unitary(dim * m, rng.child(0))
    return StinespringDilation(dim, m, u, pure_env(m))


def _random_povm(rng: Rng, dim: int) -> Povm:
    """Random POVM: PSD pieces A_y sandwiched by (sum A_y)^(-1/2)."""
    g = rng.generator()
    k = int(g.integers(2, dim * dim + 1))
    pieces = []
    for i in range(k):
        gi = rng.child(i).generator()
        G = gi.standard_normal((dim, dim)) + 1j * gi.standard_normal((dim, dim))
        pieces.append(G @ G.conj().T)
    total = sum(pieces)
    w, v = np.linalg.eigh(total)
    inv_sqrt = v @ np.diag(1.0 / np.sqrt(w)) @ v.conj().T
    return Povm(tuple(inv_sqrt @ a @ inv_sqrt for a in pieces))


# --- Check implementations: (rng, dim, ensemble_size) -> (slack, inputs) ---


def _check_chi_monotone(rng, dim, ensemble_size):
    e = _random_ensemble(rng.child(0), dim, ensemble_size)
    dil = _random_dilation(rng.child(1), dim)
    ch = channel_from_dilation(dil)
    slack = chi_monotonicity_slack(ch, e)
    return slack, {
        "ensemble": serialize.ensemble_to_dict(e),
        "dilation": serialize.dilation_to_dict(dil),
    }


def _check_chi_unitary_invariant(rng, dim, ensemble_size):
    e = _random_ensemble(rng.child(0), dim, ensemble_size)
    u = haar_unitary(dim, rng.child(1))
    dev = abs(chi_monotonicity_slack(unitary_channel(u), e))
    return -dev, {
        "ensemble": serialize.ensemble_to_dict(e),
        "unitary": serialize.matrix_to_dict(u),
    }


def _check_chi_ancilla_invariant(rng, dim, ensemble_size):
    e = _random_ensemble(rng.child(0), dim, ensemble_size)
    g = rng.child(1).generator()
    env = DensityMatrix(ginibre_density(
        dim, int(g.integers(1, dim + 1)), rng.child(2)))
    dev = ancilla_invariance_slack(e, env)
    return -dev, {
        "ensemble": serialize.ensemble_to_dict(e),
        "environment": serialize.matrix_to_dict(env.mat),
    }


def _check_chi_partial_trace_monotone(rng, dim, ensemble_size):
    e = _random_ensemble(rng.child(0), dim * dim, ensemble_size)
    slack = chi_partial_trace_slack(e, (dim, dim))
    return slack, {"ensemble": serialize.ensemble_to_dict(e),
                   "dims": [dim, dim]}


def _check_ssa(rng, dim, ensemble_size):
    d3 = dim ** 3
    g = rng.child(0).generator()
    rho = DensityMatrix(ginibre_density(
        d3, int(g.integers(1, d3 + 1)), rng.child(1)))
    slack = ssa_slack(rho, (dim, dim, dim))
    return slack, {"state": serialize.matrix_to_dict(rho.mat),
                   "dims": [dim, dim, dim]}


def _check_cq_entropy_identity(rng, dim, ensemble_size):
    g = rng.child(0).generator()
    k = int(g.integers(2, ensemble_size + 1))
    p = simplex_sample(k, rng.child(1))
    states = tuple(
        DensityMatrix(ginibre_density(
            dim, int(g.integers(1, dim + 1)), rng.child(i + 2)))
        for i in range(k)
    )
    joint = cq_state(p, k, states)
    expected = shannon_entropy(p) + float(
        np.dot(p, [von_neumann_entropy(s) for s in states]))
    dev = abs(von_neumann_entropy(joint) - expected)
    return -dev, {
        "probs": p.tolist(),
        "states": [serialize.matrix_to_dict(s.mat) for s in states],
    }


def _check_holevo_bound(rng, dim, ensemble_size):
    e = _random_ensemble(rng.child(0), dim, ensemble_size)
    m = _random_povm(rng.child(1), dim)
    slack = holevo_gap(e, m)
    return slack, {
        "ensemble": serialize.ensemble_to_dict(e),
        "povm": serialize.povm_to_dict(m),
    }


def _check_concavity(rng, dim, ensemble_size):
    e = _random_ensemble(rng.child(0), dim, ensemble_size)
    return concavity_slack(e), {"ensemble": serialize.ensemble_to_dict(e)}


def _check_no_cloning_residual(rng, dim, ensemble_size):
    g = rng.child(0).generator()
    s = PureState(haar_state(dim, rng.child(1)))
    i, j = g.choice(dim, size=2, replace=False)
    basis = np.eye(dim, dtype=complex)
    phi, psi = PureState(basis[i]), PureState(basis[j])
    if g.integers(2) == 0:
        targets = [haar_unitary(dim, rng.child(10 + t)) for t in range(dim)]
        u = controlled_unitary(dim, targets)
    else:
        # Tensor-product unitary whose A factor fixes the control basis.
        phases = np.exp(2j * np.pi * g.random(dim))
        u = kron(np.diag(phases), haar_unitary(dim, rng.child(10)))
    residual = no_cloning_residual(u, phi, psi, s, (dim, dim))
    return -residual, {
        "unitary": serialize.matrix_to_dict(u),
        "phi_index": int(i),
        "psi_index": int(j),
        "standard_state": serialize.matrix_to_dict(
            s.amplitudes.reshape(-1, 1)),
    }


def _check_clone_chi_gain(rng, dim, ensemble_size):
    # Equiprobable pure pair with overlap modulus in [0.1, 0.9], built
    # directly so the draw never needs rejection.
    g = rng.child(0).generator()
    phi = haar_state(dim, rng.child(1))
    raw = haar_state(dim, rng.child(2))
    perp = raw - phi * (phi.conj() @ raw)
    perp = perp / np.linalg.norm(perp)
    c = g.uniform(0.1, 0.9)
    alpha = g.uniform(0, 2 * np.pi)
    psi = c * np.exp(1j * alpha) * phi + np.sqrt(1 - c * c) * perp
    e = Ensemble(
        np.array([0.5, 0.5]),
        (DensityMatrix(np.outer(phi, phi.conj())),
         DensityMatrix(np.outer(psi, psi.conj()))),
    )
    gain = cloning_chi_gain(e)
    # Strictness contract: the gain must exceed 1e-3 on this family.
    return gain - 1e-3, {"ensemble": serialize.ensemble_to_dict(e),
                         "overlap": float(c)}


def _check_disentangle_chi_gain(rng, dim, ensemble_size):
    psi = PureState(haar_state(dim * dim, rng.child(0)))
    gain = disentangle_chi_gain(psi, (dim, dim))
    return gain, {"state": serialize.matrix_to_dict(
        psi.amplitudes.reshape(-1, 1)), "dims": [dim, dim]}


CHECKS = {
    "chi_monotone": _check_chi_monotone,
    "chi_unitary_invariant": _check_chi_unitary_invariant,
    "chi_ancilla_invariant": _check_chi_ancilla_invariant,
    "chi_partial_trace_monotone": _check_chi_partial_trace_monotone,
    "ssa": _check_ssa,
    "cq_entropy_identity": _check_cq_entropy_identity,
    "holevo_bound": _check_holevo_bound,
    "concavity": _check_concavity,
    "no_cloning_residual": _check_no_cloning_residual,
    "clone_chi_gain": _check_clone_chi_gain,
    "disentangle_chi_gain": _check_disentangle_chi_gain,
}

_CHECK_INDEX = {name: i for i, name in enumerate(CHECKS)}


@dataclass(frozen=True)
class CampaignConfig:
    check: str = "all"
    dim: int = 2
    trials: int = 100
    seed: int = 0
    ensemble_size: int = 3
    tolerance: float = 1e-8

    def __post_init__(self):
        if self.check != "all" and self.check not in CHECKS:
            raise UnknownCheck(
                f"unknown check {self.check!r}; known: all, "
                + ", ".join(CHECKS)
            )
        if not 2 <= self.dim <= 6:
            raise UnknownCheck(f"dim {self.dim} outside supported range 2..6")
        if self.trials < 1:
            raise UnknownCheck("trials must be positive")
        if not 2 <= self.ensemble_size <= 6:
            raise UnknownCheck(
                f"ensemble_size {self.ensemble_size} outside range 2..6")

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "dim": self.dim,
            "trials": self.trials,
            "seed": self.seed,
            "ensemble_size": self.ensemble_size,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class CheckOutcome:
    check: str
    trials: int
    min_slack: float
    max_violation: float
    violations: tuple
    wall_time: float

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "trials": self.trials,
            "min_slack": self.min_slack,
            "max_violation": self.max_violation,
            "violations": list(self.violations),
            "wall_time": self.wall_time,
        }


@dataclass(frozen=True)
class CampaignReport:
    config: CampaignConfig
    checks: tuple

    @property
    def total_violations(self) -> int:
        return sum(len(c.violations) for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "total_violations": self.total_violations,
            "checks": [c.to_dict() for c in self.checks],
        }


def trial_rng(seed: int, check: str, trial: int) -> Rng:
    """The Rng a given trial draws from; embedded in violation records."""
    return Rng(seed).child(_CHECK_INDEX[check]).child(trial)


def _run_trial(args):
    check, trial, seed, dim, ensemble_size, tolerance = args
    rng = trial_rng(seed, check, trial)
    slack, inputs = CHECKS[check](rng, dim, ensemble_size)
    slack = float(slack)
    if slack < -tolerance:
        record = {
            "trial": trial,
            "seed": seed,
            "stream": rng.stream,
            "slack": slack,
            "inputs": inputs,
        }
        return trial, slack, record
    return trial, slack, None


def run_campaign(cfg: CampaignConfig, jobs: int = 1) -> CampaignReport:
    """Run the configured check (or every registered check) for cfg.trials."""
    names = list(CHECKS) if cfg.check == "all" else [cfg.check]
    outcomes = []
    for name in names:
        start = time.perf_counter()
        args = [(name, t, cfg.seed, cfg.dim, cfg.ensemble_size, cfg.tolerance)
                for t in range(cfg.trials)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run_trial, args,
                                        chunksize=max(1, cfg.trials // (4 * jobs))))
        else:
            results = [_run_trial(a) for a in args]
        results.sort(key=lambda r: r[0])
        slacks = [r[1] for r in results]
        violations = tuple(r[2] for r in results if r[2] is not None)
        min_slack = min(slacks)
        outcomes.append(CheckOutcome(
            check=name,
            trials=cfg.trials,
            min_slack=min_slack,
            max_violation=max(0.0, -min_slack),
            violations=violations,
            wall_time=time.perf_counter() - start,
        ))
    return CampaignReport(cfg, tuple(outcomes))
