"""Probabilistic sensing quality and the per-cycle sensory data requirement."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scenario import Position, ScenarioConfig


class InfeasibleSensingError(ValueError):
    """Sensing location outside the cone: success probability is zero."""


@dataclass(frozen=True)
class SensingParams:
    lambda_s: float
    t_f: float
    phi: float  # radians, 0 < phi < pi/2
    d_v: float

    @classmethod
    def from_config(cls, config: ScenarioConfig) -> "SensingParams":
        return cls(
            lambda_s=config.lambda_s,
            t_f=config.t_f_s,
            phi=config.phi_rad,
            d_v=config.D_V,
        )


def ssp(uav: Position, target: Position, params: SensingParams) -> float:
    """Successful sensing probability for one frame of hovering.

    exp(-lambda * t_f * d_t) inside the sensing cone (d_t*sin(phi) <= h*tan(phi),
    boundary included), zero outside.
    """
    if uav.z <= 0:
        raise ValueError(f"UAV altitude must be positive, got {uav.z}")
    d_t = uav.dist(target)
    r_s = uav.z * math.tan(params.phi)
    if d_t * math.sin(params.phi) > r_s:
        return 0.0
    return math.exp(-params.lambda_s * params.t_f * d_t)


def required_data(d_v: float, ssp_value: float) -> float:
    """Expected data size to collect so that at least d_v of it is valid."""
    if ssp_value <= 0:
        raise InfeasibleSensingError(
            "sensing success probability is zero; no data requirement is defined"
        )
    return d_v / ssp_value
