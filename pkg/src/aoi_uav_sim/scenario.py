"""Scenario configuration, world geometry, seeding, and action projection."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field

import numpy as np

STAGE_SENSING = 0
STAGE_TRANSMISSION = 1

MODE_U2N = "u2n"
MODE_U2D = "u2d"

# Safety margin applied when clamping onto the sensing-cone boundary so that
# a clamped point never fails the cone test by one ulp.
_CONE_MARGIN = 1.0 - 1e-9


class ConfigError(ValueError):
    """Raised for unparsable config files or violated parameter invariants."""


@dataclass(frozen=True)
class Position:
    """3D Cartesian point in meters."""

    x: float
    y: float
    z: float

    def dist(self, other: "Position") -> float:
        return math.sqrt(
            (self.x - other.x) ** 2 + (self.y - other.y) ** 2 + (self.z - other.z) ** 2
        )

    def horizontal_dist(self, other: "Position") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Action:
    """A per-cycle decision: where to sense and where to transmit from."""

    sensing: Position
    transmission: Position


@dataclass
class UavState:
    """Per-UAV simulator state for one frame.

    ``frame`` mirrors the world frame index (0-based).  ``last_completion``
    is the frame index right after the most recent finished delivery, so
    ``aoi == frame - last_completion`` between completions.
    """

    index: int
    mode: str
    frame: int
    cycle: int
    pos: Position
    sensing_loc: Position
    transmission_loc: Position
    remaining_data: float
    aoi: int
    stage: int
    last_completion: int
    target: Position
    device: Position | None
    ds_required: float

    def copy(self) -> "UavState":
        return dataclasses.replace(self)


@dataclass
class WorldState:
    """Joint state of all UAVs plus the last allocation decision."""

    frame: int
    uavs: list[UavState]
    alloc: np.ndarray | None
    rng: np.random.Generator


_INT_FIELDS = {"M", "N", "K", "V_s", "N_epi", "N_f", "N_mini", "N_rm", "seed"}


@dataclass(frozen=True)
class ScenarioConfig:
    """Simulation parameters; defaults follow the standard parameter table."""

    M: int = 5
    N: int = 5
    K: int = 5
    P_u_dBm: float = 10.0
    N0_dBm: float = -85.0
    fc_GHz: float = 2.0
    H0_m: float = 10.0
    h_min_m: float = 50.0
    h_max_m: float = 150.0
    v_max_mps: float = 15.0
    t_f_s: float = 1.0
    phi_deg: float = 30.0
    lambda_s: float = 0.005
    R_th: float = 1.0
    D_V: float = 10.0
    V_s: int = 3
    cell_radius_m: float = 500.0
    N_epi: int = 500
    N_f: int = 300
    N_mini: int = 64
    N_rm: int = 10000
    alpha: float = 0.001
    nu: float = 0.9
    seed: int = 0

    @property
    def phi_rad(self) -> float:
        return math.radians(self.phi_deg)

    @property
    def p_u_watt(self) -> float:
        return dbm_to_watt(self.P_u_dBm)

    @property
    def n0_watt(self) -> float:
        return dbm_to_watt(self.N0_dBm)

    @property
    def bs_position(self) -> Position:
        return Position(0.0, 0.0, self.H0_m)

    def validate(self) -> None:
        checks = [
            ("M", self.M >= 0),
            ("N", self.N >= 0),
            ("K", self.K >= 0),
            ("h_min_m", self.h_min_m > 0),
            ("h_max_m", self.h_max_m >= self.h_min_m),
            ("v_max_mps", self.v_max_mps > 0),
            ("t_f_s", self.t_f_s > 0),
            ("phi_deg", 0.0 < self.phi_deg < 90.0),
            ("lambda_s", self.lambda_s > 0),
            ("R_th", self.R_th >= 0),
            ("D_V", self.D_V > 0),
            ("V_s", self.V_s >= 1),
            ("cell_radius_m", self.cell_radius_m > 0),
            ("N_epi", self.N_epi >= 1),
            ("N_f", self.N_f >= 1),
            ("N_mini", self.N_mini >= 1),
            ("N_rm", self.N_rm >= 1),
            ("alpha", self.alpha > 0),
            ("nu", 0.0 <= self.nu <= 1.0),
        ]
        for key, ok in checks:
            if not ok:
                raise ConfigError(f"invalid value for '{key}': {getattr(self, key)!r}")

    def replace(self, **overrides) -> "ScenarioConfig":
        cfg = dataclasses.replace(self, **overrides)
        cfg.validate()
        return cfg


def dbm_to_watt(dbm: float) -> float:
    return 10.0 ** (dbm / 10.0) * 1e-3


def load_config(path: str | None) -> ScenarioConfig:
    """Load a flat ``key: value`` config file; absent keys keep defaults.

    ``path=None`` returns the full default configuration.
    """
    if path is None:
        cfg = ScenarioConfig()
        cfg.validate()
        return cfg

    known = {f.name: f for f in dataclasses.fields(ScenarioConfig)}
    overrides: dict[str, float | int] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc

    for lineno, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if ":" not in text:
            raise ConfigError(f"{path}:{lineno}: expected 'key: value', got {text!r}")
        key, _, value = text.partition(":")
        key = key.strip()
        value = value.strip()
        if key not in known:
            raise ConfigError(f"{path}:{lineno}: unknown key '{key}'")
        try:
            if key in _INT_FIELDS:
                overrides[key] = int(value)
            else:
                overrides[key] = float(value)
        except ValueError as exc:
            raise ConfigError(
                f"{path}:{lineno}: malformed value for '{key}': {value!r}"
            ) from exc

    cfg = ScenarioConfig(**overrides)
    cfg.validate()
    return cfg


def _uniform_in_disc(rng: np.random.Generator, radius: float) -> tuple[float, float]:
    # Uniform over the disc area: radius scaled by sqrt of a uniform draw.
    r = radius * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return (r * math.cos(theta), r * math.sin(theta))


def init_scenario(config: ScenarioConfig, seed: int) -> WorldState:
    """Create the initial world: random targets/devices, UAVs at start points.

    U2N UAVs start on the BS at 100 m altitude; each U2D UAV starts above its
    own device at the same altitude.  Deterministic given (config, seed).
    """
    config.validate()
    rng = np.random.default_rng(seed)
    total = config.M + config.N

    targets = []
    for _ in range(total):
        x, y = _uniform_in_disc(rng, config.cell_radius_m)
        targets.append(Position(x, y, 0.0))
    devices: list[Position | None] = [None] * config.M
    for _ in range(config.N):
        x, y = _uniform_in_disc(rng, config.cell_radius_m)
        devices.append(Position(x, y, 0.0))

    start_altitude = 100.0
    uavs = []
    for i in range(total):
        if i < config.M:
            mode = MODE_U2N
            pos = Position(0.0, 0.0, start_altitude)
        else:
            mode = MODE_U2D
            dev = devices[i]
            assert dev is not None
            pos = Position(dev.x, dev.y, start_altitude)
        uavs.append(
            UavState(
                index=i,
                mode=mode,
                frame=0,
                cycle=1,
                pos=pos,
                sensing_loc=pos,
                transmission_loc=pos,
                remaining_data=0.0,
                aoi=0,
                stage=STAGE_SENSING,
                last_completion=0,
                target=targets[i],
                device=devices[i],
                ds_required=config.D_V,
            )
        )
    return WorldState(frame=0, uavs=uavs, alloc=None, rng=rng)


def _decode_component(v: float, lo: float, hi: float) -> float:
    return lo + (v + 1.0) * 0.5 * (hi - lo)


def decode_point(raw3, config: ScenarioConfig) -> Position:
    """Linear map of a raw [-1,1]^3 triple into cell/altitude coordinates."""
    r = config.cell_radius_m
    return Position(
        _decode_component(float(raw3[0]), -r, r),
        _decode_component(float(raw3[1]), -r, r),
        _decode_component(float(raw3[2]), config.h_min_m, config.h_max_m),
    )


def _clamp_point(p: Position, config: ScenarioConfig, cone_center: Position | None) -> Position:
    z = min(max(p.z, config.h_min_m), config.h_max_m)
    x, y = p.x, p.y
    rho_bs = math.hypot(x, y)
    if rho_bs > config.cell_radius_m:
        s = config.cell_radius_m / rho_bs
        x *= s
        y *= s
    if cone_center is not None:
        # rho <= z*tan(phi) is algebraically equivalent to the feasibility
        # condition d_t*sin(phi) <= z*tan(phi) of the sensing model.
        rho_max = z * math.tan(config.phi_rad) * _CONE_MARGIN
        rho = math.hypot(x - cone_center.x, y - cone_center.y)
        if rho > rho_max:
            s = rho_max / rho
            x = cone_center.x + (x - cone_center.x) * s
            y = cone_center.y + (y - cone_center.y) * s
    return Position(x, y, z)


def project_action(raw, target: Position, config: ScenarioConfig) -> Action:
    """Decode a raw 6-vector in [-1,1] into a feasible (sensing, transmission) pair.

    Total by projection: altitude and cell bounds are clamped for both points,
    and the sensing point is additionally pulled inside the sensing cone of
    ``target`` so the sensing success probability is always positive.
    """
    raw = np.asarray(raw, dtype=float)
    if raw.shape != (6,):
        raise ValueError(f"raw action must have 6 components, got shape {raw.shape}")
    sensing = _clamp_point(decode_point(raw[:3], config), config, cone_center=target)
    transmission = _clamp_point(decode_point(raw[3:], config), config, cone_center=None)
    return Action(sensing=sensing, transmission=transmission)


def project_positions(sensing: Position, transmission: Position, target: Position,
                      config: ScenarioConfig) -> Action:
    """Clamp already-decoded positions (idempotent companion of project_action)."""
    return Action(
        sensing=_clamp_point(sensing, config, cone_center=target),
        transmission=_clamp_point(transmission, config, cone_center=None),
    )
