"""POVMs, mutual information, and a random-restart accessible-information maximizer."""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidPovm, NotPositive
from .linalg import Rng, dagger
from .states import Ensemble
from .entropy import _plogp_sum, holevo_chi

POVM_TOL = 1e-9
_CLIP = 1e-12


@dataclass(frozen=True)
class Povm:
    """Positive elements summing to the identity."""

    elements: tuple

    def __post_init__(self):
        els = tuple(np.asarray(el, dtype=complex) for el in self.elements)
        if not els:
            raise InvalidPovm("POVM needs at least one element")
        d = els[0].shape[0]
        if any(el.shape != (d, d) for el in els):
            raise InvalidPovm("POVM elements have mixed shapes")
        for el in els:
            herm = float(np.abs(el - dagger(el)).max())
            if herm > POVM_TOL:
                raise InvalidPovm(f"element not Hermitian (deviation {herm:.3e})")
            low = float(np.linalg.eigvalsh((el + dagger(el)) / 2)[0])
            if low < -POVM_TOL:
                raise InvalidPovm(f"element not positive (eigenvalue {low:.3e})")
        dev = float(np.abs(sum(els) - np.eye(d)).max())
        if dev > POVM_TOL:
            raise InvalidPovm(f"elements do not sum to identity (deviation {dev:.3e})")
        for el in els:
            el.setflags(write=False)
        object.__setattr__(self, "elements", els)

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class AccessibleInfoResult:
    best_mutual_info: float
    best_povm: Povm
    chi_upper_bound: float
    restarts_used: int
    converged: bool


def outcome_distribution(e: Ensemble, m: Povm) -> np.ndarray:
    """Joint distribution p(x, y) = p_x Tr(E_y rho_x), clipped and renormalized."""
    if e.dim != m.dim:
        raise DimensionMismatch(f"ensemble dim {e.dim} != POVM dim {m.dim}")
    joint = np.empty((len(e), len(m)))
    for x, (px, s) in enumerate(zip(e.probs, e.states)):
        for y, el in enumerate(m.elements):
            joint[x, y] = px * np.trace(el @ s.mat).real
    low = joint.min()
    if low < -1e-9:
        raise NotPositive("joint probability is negative", float(-low))
    joint = np.where(np.abs(joint) <= _CLIP, 0.0, np.clip(joint, 0.0, None))
    return joint / joint.sum()


def mutual_information(e: Ensemble, m: Povm) -> float:
    """H(X:Y) between preparation and measurement outcome, in bits."""
    joint = outcome_distribution(e, m)
    hx = _plogp_sum(joint.sum(axis=1))
    hy = _plogp_sum(joint.sum(axis=0))
    hxy = _plogp_sum(joint.ravel())
    return hx + hy - hxy


def holevo_gap(e: Ensemble, m: Povm) -> float:
    """chi minus extracted mutual information; nonnegative by Holevo's bound."""
    return holevo_chi(e).chi - mutual_information(e, m)


def povm_from_vectors(vectors: np.ndarray) -> Povm:
    """Rank-one POVM from unnormalized vectors via completeness re-projection.

    Given rows a_y, forms M = sum a_y a_y†, and returns elements
    M^{-1/2} a_y a_y† M^{-1/2}, which sum to the identity by construction.
    Fails if M is close to singular.
    """
    vectors = np.asarray(vectors, dtype=complex)
    gram = vectors.T @ vectors.conj()
    w, v = np.linalg.eigh((gram + dagger(gram)) / 2)
    if w[0] < 1e-10:
        raise InvalidPovm(f"vector set spans too little (eigenvalue {w[0]:.3e})")
    inv_sqrt = v @ np.diag(1.0 / np.sqrt(w)) @ dagger(v)
    els = []
    for a in vectors:
        u = inv_sqrt @ a
        els.append(np.outer(u, u.conj()))
    return Povm(tuple(els))


def _ascend(e: Ensemble, outcomes: int, iters: int, rng: Rng):
    """One restart of multiplicative-perturbation hill climbing."""
    g = rng.generator()
    d = e.dim
    vectors = (g.standard_normal((outcomes, d))
               + 1j * g.standard_normal((outcomes, d))) / np.sqrt(2)
    povm = povm_from_vectors(vectors)
    best = mutual_information(e, povm)
    step = 0.2
    last_improve = 0
    for it in range(1, iters + 1):
        noise = 1 + step * (g.standard_normal(vectors.shape)
                            + 1j * g.standard_normal(vectors.shape))
        cand = vectors * noise
        try:
            cand_povm = povm_from_vectors(cand)
            mi = mutual_information(e, cand_povm)
        except InvalidPovm:
            mi = -1.0
        if mi > best:
            vectors, povm, best = cand, cand_povm, mi
            step = min(step * 1.5, 1.0)
            last_improve = it
        else:
            step = max(step * 0.5, 1e-6)
    return best, povm, last_improve


def optimize_accessible_info(e: Ensemble, outcomes: int | None = None,
                             restarts: int = 20, iters: int = 500,
                             rng: Rng = Rng(0)) -> AccessibleInfoResult:
    """Best mutual information found over random-restart local ascent.

    The result is a certified lower bound on the accessible information only;
    global optimality is not claimed.  Restarts are independent (restart r
    draws from rng.child(r)) and the reducer takes the max, so the outcome
    does not depend on scheduling and never decreases as restarts grow.
    """
    if outcomes is None:
        outcomes = min(e.dim ** 2, 2 * len(e))
    if outcomes < 2:
        raise DimensionMismatch(f"need at least 2 outcomes, got {outcomes}")
    chi = holevo_chi(e).chi
    best = -1.0
    best_povm = None
    converged = False
    for r in range(restarts):
        mi, povm, last_improve = _ascend(e, outcomes, iters, rng.child(r))
        if mi > best:
            best, best_povm = mi, povm
            converged = last_improve <= iters - 10
    return AccessibleInfoResult(
        best_mutual_info=max(best, 0.0),
        best_povm=best_povm,
        chi_upper_bound=chi,
        restarts_used=restarts,
        converged=converged,
    )
