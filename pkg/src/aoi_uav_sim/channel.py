"""Air-to-ground channel statistics: LoS probability, path loss, small-scale fading.

The path-loss and Rice-factor expressions follow the UMi aerial-vehicle style
model with base-10 logarithms throughout; altitudes and distances in meters,
carrier frequency in GHz.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .scenario import Position


@dataclass(frozen=True)
class LinkGeometry:
    tx: Position
    rx: Position
    d_3d: float
    d_2d: float

    @classmethod
    def from_positions(cls, tx: Position, rx: Position) -> "LinkGeometry":
        return cls(tx=tx, rx=rx, d_3d=tx.dist(rx), d_2d=tx.horizontal_dist(rx))


@dataclass(frozen=True)
class ChannelGains:
    """Link-level channel parameters: LoS probability, per-state linear power
    gains 10^(-L/10), and the linear Rice shape factor of the LoS state."""

    p_los: float
    g_los: float
    g_nlos: float
    k_rice: float


def los_probability(geom: LinkGeometry, h: float) -> float:
    """Probability that the link has a line-of-sight component."""
    if h <= 0:
        raise ValueError(f"altitude must be positive, got {h}")
    lg_h = math.log10(h)
    d_c = max(294.05 * lg_h - 432.94, 18.0)
    if geom.d_2d < d_c:
        return 1.0
    p0 = 233.98 * lg_h - 0.95
    ratio = d_c / geom.d_2d
    return ratio + (1.0 - ratio) * math.exp(-geom.d_2d / p0)


def path_loss_db(geom: LinkGeometry, h: float, fc: float, los: bool) -> float:
    """Path loss in dB for the LoS or NLoS propagation state."""
    if geom.d_3d <= 0:
        raise ValueError("path loss undefined for zero distance")
    if h <= 0:
        raise ValueError(f"altitude must be positive, got {h}")
    lg_d = math.log10(geom.d_3d)
    lg_f = math.log10(fc)
    lg_h = math.log10(h)
    l_los = max(
        20.0 * lg_d + 20.0 * lg_f + 32.45,
        30.9 + (22.25 - 0.5 * lg_h) * lg_d + 20.0 * lg_f,
    )
    if los:
        return l_los
    return max(l_los, 32.4 + (43.2 - 7.6 * lg_h) * lg_d + 20.0 * lg_f)


def rice_k_factor(h: float) -> float:
    """Linear Rice shape factor; K[dB] = 4.217*lg(h) + 5.787."""
    if h <= 0:
        raise ValueError(f"altitude must be positive, got {h}")
    k_db = 4.217 * math.log10(h) + 5.787
    return 10.0 ** (k_db / 10.0)


def link_gains(tx: Position, rx: Position, fc: float) -> ChannelGains:
    """Bundle all channel parameters of a UAV-to-receiver link.

    The UAV altitude drives both the LoS probability and the Rice factor.
    """
    geom = LinkGeometry.from_positions(tx, rx)
    h = tx.z
    return ChannelGains(
        p_los=los_probability(geom, h),
        g_los=10.0 ** (-path_loss_db(geom, h, fc, los=True) / 10.0),
        g_nlos=10.0 ** (-path_loss_db(geom, h, fc, los=False) / 10.0),
        k_rice=rice_k_factor(h),
    )


def rice_params(k_rice: float) -> tuple[float, float]:
    """(nu, sigma) of the Gaussian construction of a Rice amplitude with
    mean-square one: zeta = sqrt((nu + sigma*Z1)^2 + (sigma*Z2)^2)."""
    nu = math.sqrt(k_rice / (k_rice + 1.0))
    sigma = math.sqrt(0.5 / (k_rice + 1.0))
    return nu, sigma


def sample_fading(los: bool, k_rice: float, rng: np.random.Generator, size=None):
    """Draw small-scale fading amplitudes: Rice (LoS) or unit-variance Rayleigh."""
    if los:
        if k_rice <= 0:
            raise ValueError(f"Rice factor must be positive, got {k_rice}")
        nu, sigma = rice_params(k_rice)
        a = nu + sigma * rng.standard_normal(size)
        b = sigma * rng.standard_normal(size)
        return np.hypot(a, b)
    return np.sqrt(-2.0 * np.log(rng.random(size)))
