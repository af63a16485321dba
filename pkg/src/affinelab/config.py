"""Flat sectioned key-value experiment configs.

Format: INI-style sections [experiment], [model], [init], [cbi] and
[measure.m] / [measure.mu] / [measure.n] / [measure.p]; all numerics are
decimal doubles, lists are JSON (e.g. ``points = [[0.5, 0.0, 1.0], ...]``
with the probability as last entry, ``theta_values = [4, 16, 64]``).
"""

from __future__ import annotations

import configparser
import json
from dataclasses import dataclass, field
from pathlib import Path

from .engine import VARIANCE_SCHEMES
from .params import CbiParams, InitialLaw, JumpMeasure, ModelParams

EXPERIMENT_KINDS = (
    "simulate",
    "estimate",
    "limit-law",
    "moments-check",
    "appendix-b",
    "thm-check-2",
    "thm-check-3",
    "thm-check-4",
    "scaling-check",
    "self-similarity",
    "generator-residual",
)

ESTIMATOR_KINDS = ("lse-theta", "lse-theta-m", "clse-gamma-delta", "clse-theta-m")


class ConfigError(ValueError):
    """Configuration problem; the message names the offending key."""


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    master_seed: int = 42
    replicates: int = 1
    n_obs: int = 1000
    steps_per_unit: int = 8
    limit_steps: int = 4096
    threads: int = 1
    t_eval: float = 1.0
    grid_per_unit: int = 32
    theta_values: tuple[float, ...] = (4.0, 16.0, 64.0)
    theta_scale: float = 4.0
    h: float = 0.02
    function: str = "x2_squared"
    point: tuple[float, float] = (1.0, 0.0)
    variance_scheme: str = "left"
    ks_tol: float | None = None
    model: ModelParams = field(default_factory=lambda: ModelParams(1.0, 0.0, 0.0, 0.0))
    init: InitialLaw = field(default_factory=lambda: InitialLaw(0.0, 0.0))
    cbi: CbiParams | None = None
    m_meas: JumpMeasure = field(default_factory=JumpMeasure.empty)
    mu_meas: JumpMeasure = field(default_factory=JumpMeasure.empty)
    input_path: str | None = None
    estimator_kind: str = "lse-theta-m"
    m_known: float | None = None

    def __post_init__(self):
        if self.kind not in EXPERIMENT_KINDS:
            raise ConfigError(f"[experiment] kind must be one of {EXPERIMENT_KINDS}, "
                              f"got {self.kind!r}")
        if self.replicates < 1:
            raise ConfigError("[experiment] replicates must be at least 1")
        if self.threads < 1:
            raise ConfigError("[experiment] threads must be at least 1")
        for key, val in (("steps_per_unit", self.steps_per_unit),
                         ("limit_steps", self.limit_steps)):
            if val < 1 or (val & (val - 1)) != 0:
                raise ConfigError(f"[experiment] {key} must be a power of two")
        if self.variance_scheme not in VARIANCE_SCHEMES:
            raise ConfigError(f"[experiment] variance_scheme must be one of "
                              f"{VARIANCE_SCHEMES}")
        if self.estimator_kind not in ESTIMATOR_KINDS:
            raise ConfigError(f"[experiment] estimator must be one of "
                              f"{ESTIMATOR_KINDS}")
        if self.n_obs < 2:
            raise ConfigError("[experiment] n_obs must be at least 2")

    def echo(self) -> dict:
        out = {
            "kind": self.kind,
            "master_seed": self.master_seed,
            "replicates": self.replicates,
            "n_obs": self.n_obs,
            "steps_per_unit": self.steps_per_unit,
            "limit_steps": self.limit_steps,
            "t_eval": self.t_eval,
            "grid_per_unit": self.grid_per_unit,
            "theta_values": list(self.theta_values),
            "theta_scale": self.theta_scale,
            "h": self.h,
            "function": self.function,
            "point": list(self.point),
            "variance_scheme": self.variance_scheme,
            "model": {"a": self.model.a, "b": self.model.b,
                      "m": self.model.m, "theta": self.model.theta},
            "init": {"y0": self.init.y0, "x0": self.init.x0},
        }
        if self.ks_tol is not None:
            out["ks_tol"] = self.ks_tol
        if self.cbi is not None:
            out["cbi"] = {
                "alpha": self.cbi.alpha,
                "b_imm": self.cbi.b_imm,
                "beta": self.cbi.beta,
                "n_rate": self.cbi.n_meas.rate,
                "p_rate": self.cbi.p_meas.rate,
            }
        if self.input_path is not None:
            out["input"] = self.input_path
            out["estimator"] = self.estimator_kind
        return out


def _parse_scalar(section: str, key: str, raw: str, conv, what: str):
    try:
        return conv(raw)
    except ValueError as exc:
        raise ConfigError(f"[{section}] {key} must be {what}, got {raw!r}") from exc


def _parse_json_list(section: str, key: str, raw: str):
    try:
        val = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"[{section}] {key} must be a JSON list") from exc
    if not isinstance(val, list):
        raise ConfigError(f"[{section}] {key} must be a JSON list")
    return val


def _read_measure(cp: configparser.ConfigParser, section: str) -> JumpMeasure:
    if not cp.has_section(section):
        return JumpMeasure.empty()
    rate = _parse_scalar(section, "rate", cp.get(section, "rate", fallback="0"),
                         float, "a number")
    raw_points = cp.get(section, "points", fallback="[]")
    rows = _parse_json_list(section, "points", raw_points)
    if not rows:
        if rate != 0.0:
            raise ConfigError(f"[{section}] a positive rate requires points")
        return JumpMeasure.empty()
    try:
        return JumpMeasure.from_rows(rate, rows)
    except ValueError as exc:
        raise ConfigError(f"[{section}] {exc}") from exc


def load_config(path: str | Path) -> ExperimentConfig:
    cp = configparser.ConfigParser()
    read = cp.read(str(path))
    if not read:
        raise ConfigError(f"config file not found: {path}")
    return config_from_parser(cp)


def config_from_parser(cp: configparser.ConfigParser) -> ExperimentConfig:
    if not cp.has_section("experiment"):
        raise ConfigError("missing [experiment] section")
    e = cp["experiment"]

    def get_int(key, default):
        return _parse_scalar("experiment", key, e.get(key, str(default)), int, "an integer")

    def get_float(key, default):
        return _parse_scalar("experiment", key, e.get(key, str(default)), float, "a number")

    kind = e.get("kind", "").strip()
    thetas = _parse_json_list("experiment", "theta_values",
                              e.get("theta_values", "[4, 16, 64]"))

    model_sec = cp["model"] if cp.has_section("model") else {}
    model = ModelParams(
        a=_parse_scalar("model", "a", model_sec.get("a", "1"), float, "a number"),
        b=_parse_scalar("model", "b", model_sec.get("b", "0"), float, "a number"),
        m=_parse_scalar("model", "m", model_sec.get("m", "0"), float, "a number"),
        theta=_parse_scalar("model", "theta", model_sec.get("theta", "0"), float, "a number"),
    )
    init_sec = cp["init"] if cp.has_section("init") else {}
    try:
        init = InitialLaw(
            y0=_parse_scalar("init", "y0", init_sec.get("y0", "0"), float, "a number"),
            x0=_parse_scalar("init", "x0", init_sec.get("x0", "0"), float, "a number"),
        )
    except ValueError as exc:
        raise ConfigError(f"[init] {exc}") from exc

    n_meas = _read_measure(cp, "measure.n")
    p_meas = _read_measure(cp, "measure.p")
    cbi = None
    if cp.has_section("cbi") or not (n_meas.is_empty and p_meas.is_empty):
        c = cp["cbi"] if cp.has_section("cbi") else {}
        try:
            cbi = CbiParams(
                alpha=_parse_scalar("cbi", "alpha", c.get("alpha", "0"), float, "a number"),
                b_imm=_parse_scalar("cbi", "b_imm", c.get("b_imm", "0"), float, "a number"),
                beta=_parse_scalar("cbi", "beta", c.get("beta", "0"), float, "a number"),
                n_meas=n_meas,
                p_meas=p_meas,
            )
        except ValueError as exc:
            raise ConfigError(f"[cbi] {exc}") from exc

    ks_tol = None
    if "ks_tol" in e:
        ks_tol = get_float("ks_tol", 0.0)

    point_raw = e.get("point", "[1.0, 0.0]")
    point = _parse_json_list("experiment", "point", point_raw)
    if len(point) != 2:
        raise ConfigError("[experiment] point must be a two-element list")

    return ExperimentConfig(
        kind=kind,
        master_seed=get_int("master_seed", 42),
        replicates=get_int("replicates", 1),
        n_obs=get_int("n_obs", 1000),
        steps_per_unit=get_int("steps_per_unit", 8),
        limit_steps=get_int("limit_steps", 4096),
        threads=get_int("threads", 1),
        t_eval=get_float("t_eval", 1.0),
        grid_per_unit=get_int("grid_per_unit", 32),
        theta_values=tuple(float(v) for v in thetas),
        theta_scale=get_float("theta_scale", 4.0),
        h=get_float("h", 0.02),
        function=e.get("function", "x2_squared").strip(),
        point=(float(point[0]), float(point[1])),
        variance_scheme=e.get("variance_scheme", "left").strip(),
        ks_tol=ks_tol,
        model=model,
        init=init,
        cbi=cbi,
        m_meas=_read_measure(cp, "measure.m"),
        mu_meas=_read_measure(cp, "measure.mu"),
        input_path=e.get("input", None),
        estimator_kind=e.get("estimator", "lse-theta-m").strip(),
        m_known=get_float("m_known", model.m) if "m_known" in e else None,
    )


__all__ = ["EXPERIMENT_KINDS", "ESTIMATOR_KINDS", "ConfigError",
           "ExperimentConfig", "load_config", "config_from_parser"]
