"""Pydantic request/response models for the HTTP service.

These mirror the JSON wire formats in `serialize`; the service and the CLI
share them so a file accepted by one is accepted by the other.
"""

from typing import Optional

from pydantic import BaseModel, Field

from . import serialize
from .campaigns import CampaignConfig


class MatrixModel(BaseModel):
    rows: int
    cols: int
    re: list[float]
    im: list[float]

    def to_array(self):
        return serialize.matrix_from_dict(self.model_dump())

    @classmethod
    def from_array(cls, a) -> "MatrixModel":
        return cls(**serialize.matrix_to_dict(a))


class EnsembleModel(BaseModel):
    probs: list[float]
    states: list[MatrixModel]

    def to_ensemble(self):
        return serialize.ensemble_from_dict(self.model_dump())

    @classmethod
    def from_ensemble(cls, e) -> "EnsembleModel":
        return cls(**serialize.ensemble_to_dict(e))


class ChannelModel(BaseModel):
    dim_in: Optional[int] = None
    dim_out: Optional[int] = None
    kraus: list[MatrixModel]

    def to_channel(self):
        d = self.model_dump()
        if d.get("dim_in") is None:
            d.pop("dim_in", None)
        if d.get("dim_out") is None:
            d.pop("dim_out", None)
        return serialize.channel_from_dict(d)


class PovmModel(BaseModel):
    dim: Optional[int] = None
    elements: list[MatrixModel]

    def to_povm(self):
        d = self.model_dump()
        if d.get("dim") is None:
            d.pop("dim", None)
        return serialize.povm_from_dict(d)


class ChiResponse(BaseModel):
    chi: float
    mixture_entropy: float
    member_entropies: list[float]


class ApplyRequest(BaseModel):
    channel: ChannelModel
    state: MatrixModel


class ApplyResponse(BaseModel):
    state: MatrixModel


class OptimizePovmRequest(BaseModel):
    ensemble: EnsembleModel
    outcomes: Optional[int] = None
    restarts: int = 20
    iters: int = 500
    seed: int = 0


class OptimizePovmResponse(BaseModel):
    best_mutual_info: float
    chi_upper_bound: float
    povm: PovmModel
    restarts_used: int
    converged: bool


class VerifyRequest(BaseModel):
    check: str = "all"
    dim: int = 2
    trials: int = 100
    seed: int = 0
    ensemble_size: int = Field(default=3, alias="ensemble_size")
    tolerance: float = 1e-8
    jobs: int = 1

    def to_config(self) -> CampaignConfig:
        return CampaignConfig(
            check=self.check,
            dim=self.dim,
            trials=self.trials,
            seed=self.seed,
            ensemble_size=self.ensemble_size,
            tolerance=self.tolerance,
        )


class CheckOutcomeModel(BaseModel):
    check: str
    trials: int
    min_slack: float
    max_violation: float
    violations: list[dict]
    wall_time: float


class VerifyResponse(BaseModel):
    config: dict
    total_violations: int
    checks: list[CheckOutcomeModel]


class DemoResponse(BaseModel):
    name: str
    values: dict
