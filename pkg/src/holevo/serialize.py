"""JSON wire formats shared by the CLI, the service, and campaign reports.

Matrices travel as {"rows": n, "cols": m, "re": [...], "im": [...]},
row-major binary64.
"""

import numpy as np

from .errors import DimensionMismatch
from .channels import QuantumChannel, StinespringDilation
from .entropy import ChiReport
from .measurements import AccessibleInfoResult, Povm
from .states import DensityMatrix, Ensemble, validate_density


def matrix_to_dict(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got ndim={a.ndim}")
    if not np.isfinite(a).all():
        raise DimensionMismatch("matrix has non-finite entries")
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "re": a.real.ravel().tolist(),
        "im": a.imag.ravel().tolist(),
    }


def matrix_from_dict(d: dict) -> np.ndarray:
    rows, cols = int(d["rows"]), int(d["cols"])
    re = np.asarray(d["re"], dtype=float)
    im = np.asarray(d["im"], dtype=float)
    if rows <= 0 or cols <= 0:
        raise DimensionMismatch("matrix dimensions must be positive")
    if re.shape != (rows * cols,) or im.shape != (rows * cols,):
        raise DimensionMismatch(
            f"entry count does not match {rows}x{cols} matrix"
        )
    a = (re + 1j * im).reshape(rows, cols)
    if not np.isfinite(a).all():
        raise DimensionMismatch("matrix has non-finite entries")
    return a


def ensemble_to_dict(e: Ensemble) -> dict:
    return {
        "probs": e.probs.tolist(),
        "states": [matrix_to_dict(s.mat) for s in e.states],
    }


def ensemble_from_dict(d: dict, tol: float = 1e-9) -> Ensemble:
    states = tuple(validate_density(matrix_from_dict(s), tol) for s in d["states"])
    return Ensemble(np.asarray(d["probs"], dtype=float), states)


def density_to_dict(rho: DensityMatrix) -> dict:
    return matrix_to_dict(rho.mat)


def density_from_dict(d: dict, tol: float = 1e-9) -> DensityMatrix:
    return validate_density(matrix_from_dict(d), tol)


def channel_to_dict(ch: QuantumChannel) -> dict:
    return {
        "dim_in": ch.dim_in,
        "dim_out": ch.dim_out,
        "kraus": [matrix_to_dict(k) for k in ch.kraus],
    }


def channel_from_dict(d: dict) -> QuantumChannel:
    ch = QuantumChannel(tuple(matrix_from_dict(k) for k in d["kraus"]))
    if "dim_in" in d and ch.dim_in != int(d["dim_in"]):
        raise DimensionMismatch("declared dim_in does not match Kraus shapes")
    if "dim_out" in d and ch.dim_out != int(d["dim_out"]):
        raise DimensionMismatch("declared dim_out does not match Kraus shapes")
    return ch


def dilation_to_dict(dil: StinespringDilation) -> dict:
    return {
        "dim_sys": dil.dim_sys,
        "dim_env": dil.dim_env,
        "unitary": matrix_to_dict(dil.unitary),
        "env_state": matrix_to_dict(dil.env_state.mat),
    }


def dilation_from_dict(d: dict) -> StinespringDilation:
    return StinespringDilation(
        int(d["dim_sys"]),
        int(d["dim_env"]),
        matrix_from_dict(d["unitary"]),
        validate_density(matrix_from_dict(d["env_state"])),
    )


def povm_to_dict(m: Povm) -> dict:
    return {"dim": m.dim, "elements": [matrix_to_dict(el) for el in m.elements]}


def povm_from_dict(d: dict) -> Povm:
    m = Povm(tuple(matrix_from_dict(el) for el in d["elements"]))
    if "dim" in d and m.dim != int(d["dim"]):
        raise DimensionMismatch("declared dim does not match element shapes")
    return m


def chi_report_to_dict(r: ChiReport) -> dict:
    return {
        "chi": r.chi,
        "mixture_entropy": r.mixture_entropy,
        "member_entropies": list(r.member_entropies),
    }


def accessible_info_to_dict(r: AccessibleInfoResult) -> dict:
    return {
        "best_mutual_info": r.best_mutual_info,
        "chi_upper_bound": r.chi_upper_bound,
        "povm": povm_to_dict(r.best_povm),
        "restarts_used": r.restarts_used,
        "converged": r.converged,
    }
