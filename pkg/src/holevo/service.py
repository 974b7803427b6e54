"""FastAPI service exposing chi computation, channel application, POVM
optimization, verification campaigns, and the named demonstrations."""

from fastapi import FastAPI, HTTPException

from .errors import HolevoError
from .linalg import Rng
from .states import validate_density
from .entropy import holevo_chi
from .channels import apply
from .measurements import optimize_accessible_info
from .campaigns import run_campaign
from .demos import DEMOS, run_demo
from . import serialize
from .schemas import (ApplyRequest, ApplyResponse, ChiResponse, DemoResponse,
                      EnsembleModel, MatrixModel, OptimizePovmRequest,
                      OptimizePovmResponse, PovmModel, VerifyRequest,
                      VerifyResponse)

app = FastAPI(title="holevo", description="Numerical quantum-information service")


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except HolevoError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/chi", response_model=ChiResponse)
def chi_endpoint(ensemble: EnsembleModel) -> ChiResponse:
    e = _guard(ensemble.to_ensemble)
    rep = _guard(holevo_chi, e)
    return ChiResponse(**serialize.chi_report_to_dict(rep))


@app.post("/apply", response_model=ApplyResponse)
def apply_endpoint(req: ApplyRequest) -> ApplyResponse:
    ch = _guard(req.channel.to_channel)
    rho = _guard(validate_density, req.state.to_array())
    out = _guard(apply, ch, rho)
    return ApplyResponse(state=MatrixModel.from_array(out.mat))


@app.post("/optimize-povm", response_model=OptimizePovmResponse)
def optimize_endpoint(req: OptimizePovmRequest) -> OptimizePovmResponse:
    e = _guard(req.ensemble.to_ensemble)
    res = _guard(optimize_accessible_info, e, outcomes=req.outcomes,
                 restarts=req.restarts, iters=req.iters, rng=Rng(req.seed))
    payload = serialize.accessible_info_to_dict(res)
    return OptimizePovmResponse(
        best_mutual_info=payload["best_mutual_info"],
        chi_upper_bound=payload["chi_upper_bound"],
        povm=PovmModel(**payload["povm"]),
        restarts_used=payload["restarts_used"],
        converged=payload["converged"],
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    cfg = _guard(req.to_config)
    report = run_campaign(cfg, jobs=req.jobs)
    return VerifyResponse(**report.to_dict())


@app.get("/demo/{name}", response_model=DemoResponse)
def demo_endpoint(name: str) -> DemoResponse:
    if name not in DEMOS:
        raise HTTPException(status_code=404,
                            detail=f"unknown demo {name!r}")
    return DemoResponse(name=name, values=run_demo(name))


@app.get("/demos")
def demos_endpoint() -> dict:
    return {"demos": list(DEMOS)}
