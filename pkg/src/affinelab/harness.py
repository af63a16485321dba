"""Config-driven experiment runner.

Every experiment follows the same replication contract: replicate ``r``
draws from a stream derived only from ``(master_seed, batch, r)``, all
per-replicate results land in index-keyed arrays, and reductions run
after the replication loop.  Outputs are therefore bit-identical for any
thread count and across re-runs.

Outputs per run: ``samples.csv`` (per-replicate statistics, header
documented per experiment) and ``report.json`` (config echo, summary
statistics, pass/fail gates).
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._backend import BACKEND_NAME, kernels
from ._parallel import parallel_ranges
from .config import ConfigError, ExperimentConfig
from .engine import TimeGrid, simulate_joint_path
from .estimators import (ObservationSeries, clse_gamma_delta, lse_theta_known_m,
                         lse_theta_m, theta_m_from_gamma_delta)
from .limits import (LimitFunctionals, limit_theta_m_stats,
                     limit_theta_stat_known_m, m_gap_functional)
from .params import validate_condition_c
from .rng import RngStream, substream
from .scaling import (ScalingExperiment, generator_residual,
                      run_scaling_experiment, self_similarity_check)
from .stats import ks_two_sample, moment_summary, variance_se

DEFAULT_KS_TOL = {"thm-check-2": 0.03, "thm-check-3": 0.03, "thm-check-4": 0.03,
                  "scaling-check": 0.04, "self-similarity": 0.02}
CROSS_ESTIMATOR_KS_TOL = 0.01
MEAN_SE_MULT = 4.0
VAR_SE_MULT = 5.0


@dataclass(frozen=True)
class Gate:
    name: str
    value: float
    bound: float
    op: str  # "<=", ">=", ">"
    passed: bool

    @staticmethod
    def check(name: str, value: float, bound: float, op: str = "<=") -> "Gate":
        if op == "<=":
            ok = value <= bound
        elif op == ">=":
            ok = value >= bound
        elif op == ">":
            ok = value > bound
        else:
            raise ValueError(f"unknown gate op {op!r}")
        return Gate(name, float(value), float(bound), op, bool(ok))

    def as_dict(self) -> dict:
        return {"name": self.name, "value": self.value, "bound": self.bound,
                "op": self.op, "pass": self.passed}


@dataclass
class RunReport:
    experiment: str
    seed: int
    threads: int
    backend: str
    config: dict
    stats: dict
    gates: list[Gate] = field(default_factory=list)
    wall_time_s: float = 0.0
    samples_header: list[str] = field(default_factory=list)
    samples_columns: list[np.ndarray] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(g.passed for g in self.gates)

    def as_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "seed": self.seed,
            "threads": self.threads,
            "backend": self.backend,
            "config": self.config,
            "stats": self.stats,
            "gates": [g.as_dict() for g in self.gates],
            "passed": self.passed,
            "wall_time_s": self.wall_time_s,
        }

    def write(self, out_dir: str | Path):
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        if self.samples_header:
            write_samples_csv(out / "samples.csv", self.samples_header,
                              self.samples_columns)
        (out / "report.json").write_text(
            json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n")


def write_samples_csv(path: str | Path, header: list[str], columns) -> None:
    """Full-precision CSV; integer-valued first columns print as integers."""
    cols = [np.asarray(c) for c in columns]
    n = len(cols[0]) if cols else 0
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for i in range(n):
            cells = []
            for c in cols:
                v = c[i]
                if np.issubdtype(c.dtype, np.integer):
                    cells.append(str(int(v)))
                else:
                    cells.append(f"{float(v):.17g}")
            fh.write(",".join(cells) + "\n")


def _summary_stats(name: str, arr: np.ndarray) -> dict:
    s = moment_summary(arr)
    return {f"{name}_mean": s.mean, f"{name}_variance": s.variance,
            f"{name}_se_mean": s.se_mean}


def _require_condition_c(cfg: ExperimentConfig):
    report = validate_condition_c(cfg.model, cfg.init)
    if not report.ok:
        raise ConfigError("[model] jointly critical setup required: "
                          + "; ".join(report.violations))


def _integer_steps(t: float, per_unit: int) -> int:
    steps = round(t * per_unit)
    if steps < 1 or abs(steps - t * per_unit) > 1e-9:
        raise ConfigError("[experiment] t_eval * steps_per_unit must be a "
                          "positive integer")
    return steps


# ---------------------------------------------------------------------------
# Experiment bodies
# ---------------------------------------------------------------------------

def _run_moments_check(cfg: ExperimentConfig, rng: RngStream, threads: int):
    _require_condition_c(cfg)
    cfg.model.require_simulatable()
    t = cfg.t_eval
    steps = _integer_steps(t, cfg.steps_per_unit)
    dt = t / steps
    n = cfg.replicates
    y_t = np.empty(n)
    x_t = np.empty(n)
    trapezoid = cfg.variance_scheme == "trapezoid"

    def task(lo, hi):
        ybuf = np.empty(steps + 1)
        xbuf = np.empty(steps + 1)
        for r in range(lo, hi):
            s = substream(rng, 0, r)
            kernels.fill_joint_path(ybuf, xbuf, s.master_seed, s.stream_id,
                                    cfg.model.a, cfg.model.b, cfg.model.m,
                                    cfg.model.theta, cfg.init.y0, cfg.init.x0,
                                    dt, trapezoid)
            y_t[r] = ybuf[-1]
            x_t[r] = xbuf[-1]

    parallel_ranges(n, threads, task)

    target_y = cfg.init.y0 + cfg.model.a * t
    target_x = cfg.init.x0 + cfg.model.m * t
    target_var_x = cfg.init.y0 * t + cfg.model.a * t * t / 2.0
    sy = moment_summary(y_t)
    sx = moment_summary(x_t)
    var_se = variance_se(x_t)
    stats = {**_summary_stats("y_t", y_t), **_summary_stats("x_t", x_t),
             "target_y_mean": target_y, "target_x_mean": target_x,
             "target_x_variance": target_var_x, "x_variance_se": var_se}
    gates = [
        Gate.check("mean_y_within_4se", abs(sy.mean - target_y),
                   MEAN_SE_MULT * sy.se_mean),
        Gate.check("mean_x_within_4se", abs(sx.mean - target_x),
                   MEAN_SE_MULT * sx.se_mean),
        Gate.check("var_x_within_5se", abs(sx.variance - target_var_x),
                   VAR_SE_MULT * var_se),
    ]
    header = ["replicate", "Y_t", "X_t"]
    cols = [np.arange(n), y_t, x_t]
    return header, cols, stats, gates


def _limit_batch(cfg: ExperimentConfig, rng: RngStream, threads: int,
                 batch: int, a: float, m: float) -> np.ndarray:
    n = cfg.replicates
    rows = np.empty((n, 5))

    def task(lo, hi):
        for r in range(lo, hi):
            s = substream(rng, batch, r)
            kernels.fill_limit_functionals(rows[r], s.master_seed, s.stream_id,
                                           a, m, cfg.limit_steps)

    parallel_ranges(n, threads, task)
    return rows


def _run_appendix_b(cfg: ExperimentConfig, rng: RngStream, threads: int):
    a, m = cfg.model.a, cfg.model.m
    if a < 0.0:
        raise ConfigError("[model] a must be nonnegative")
    rows = _limit_batch(cfg, rng, threads, 0, a, m)
    j = np.array([m_gap_functional(LimitFunctionals.from_row(r), m) for r in rows])
    target = m * a / 6.0
    sj = moment_summary(j)
    j2 = j * j
    sj2 = moment_summary(j2)
    stats = {**_summary_stats("J", j), "target_J_mean": target,
             "J2_mean": sj2.mean, "J2_se_mean": sj2.se_mean}
    gates = [Gate.check("mean_J_within_4se", abs(sj.mean - target),
                        MEAN_SE_MULT * sj.se_mean)]
    if m == 0.0:
        gates.append(Gate.check("mean_J2_bounded_away_from_0",
                                sj2.mean - MEAN_SE_MULT * sj2.se_mean, 0.0, ">"))
    header = ["replicate", "int_x", "int_x2", "x1", "int_y", "int_xdx", "J"]
    cols = [np.arange(cfg.replicates)] + [rows[:, k] for k in range(5)] + [j]
    return header, cols, stats, gates


def _run_limit_law(cfg: ExperimentConfig, rng: RngStream, threads: int):
    a, m = cfg.model.a, cfg.model.m
    if a < 0.0:
        raise ConfigError("[model] a must be nonnegative")
    rows = _limit_batch(cfg, rng, threads, 0, a, m)
    n = cfg.replicates
    thm2 = np.empty(n)
    thm3_t = np.empty(n)
    thm3_m = np.empty(n)
    jcol = np.empty(n)
    for r in range(n):
        f = LimitFunctionals.from_row(rows[r])
        thm2[r] = limit_theta_stat_known_m(f, m)
        thm3_t[r], thm3_m[r] = limit_theta_m_stats(f)
        jcol[r] = m_gap_functional(f, m)
    stats = {**_summary_stats("thm2", thm2), **_summary_stats("thm3_theta", thm3_t),
             **_summary_stats("thm3_m", thm3_m), **_summary_stats("J", jcol)}
    header = ["int_x", "int_x2", "x1", "int_y", "int_xdx",
              "thm2", "thm3_theta", "thm3_m", "J"]
    cols = [rows[:, k] for k in range(5)] + [thm2, thm3_t, thm3_m, jcol]
    return header, cols, stats, []


def _observation_batch(cfg: ExperimentConfig, rng: RngStream, threads: int,
                       batch: int):
    """Per-replicate estimator statistics from simulated observation series.

    Returns arrays (n_theta_known, n_theta_lse, m_lse, gamma, delta) plus
    degeneracy counters; all estimators are evaluated on the same series.
    """
    n_rep = cfg.replicates
    n = cfg.n_obs
    m_known = cfg.m_known if cfg.m_known is not None else cfg.model.m
    out = np.empty((n_rep, 5))
    flags = np.zeros((n_rep, 2), dtype=np.int64)  # degenerate, gamma_nonpositive
    trapezoid = cfg.variance_scheme == "trapezoid"

    def task(lo, hi):
        obs = np.empty(n + 1)
        for r in range(lo, hi):
            s = substream(rng, batch, r)
            kernels.fill_observations(obs, s.master_seed, s.stream_id,
                                      cfg.model.a, cfg.model.b, cfg.model.m,
                                      cfg.model.theta, cfg.init.y0, cfg.init.x0,
                                      cfg.steps_per_unit, trapezoid)
            series = ObservationSeries(obs)
            known = lse_theta_known_m(series, m_known)
            joint = lse_theta_m(series)
            reg = clse_gamma_delta(series)
            if known.degenerate or joint.degenerate or reg.degenerate:
                flags[r, 0] = 1
                out[r] = np.nan
                continue
            out[r, 0] = n * known.values["theta"]
            out[r, 1] = n * joint.values["theta"]
            out[r, 2] = joint.values["m"]
            out[r, 3] = reg.values["gamma"]
            out[r, 4] = reg.values["delta"]

    parallel_ranges(n_rep, threads, task)
    return out, flags


def _run_thm_check(cfg: ExperimentConfig, rng: RngStream, threads: int,
                   which: int):
    _require_condition_c(cfg)
    cfg.model.require_simulatable()
    ks_tol = cfg.ks_tol if cfg.ks_tol is not None else DEFAULT_KS_TOL[f"thm-check-{which}"]
    m = cfg.model.m
    m_known = cfg.m_known if cfg.m_known is not None else m
    est, flags = _observation_batch(cfg, rng, threads, 0)
    limit_rows = _limit_batch(cfg, rng, threads, 1, cfg.model.a, m)
    n_rep = cfg.replicates
    n_degenerate = int(flags[:, 0].sum())
    gates = []
    stats = {"n_degenerate": n_degenerate}
    if which == 2:
        lim = np.array([limit_theta_stat_known_m(LimitFunctionals.from_row(r), m_known)
                        for r in limit_rows])
        ks = ks_two_sample(est[:, 0], lim)
        stats.update(_summary_stats("n_theta_lse_known_m", est[:, 0]))
        stats.update(_summary_stats("limit_theta_known_m", lim))
        stats["ks_theta"] = ks
        gates.append(Gate.check("ks_n_theta_vs_limit", ks, ks_tol))
        header = ["replicate", "n_theta_lse_known_m", "limit_theta_known_m"]
        cols = [np.arange(n_rep), est[:, 0], lim]
    else:
        lim_t = np.empty(n_rep)
        lim_m = np.empty(n_rep)
        for r in range(n_rep):
            lim_t[r], lim_m[r] = limit_theta_m_stats(
                LimitFunctionals.from_row(limit_rows[r]))
        if which == 3:
            ks_t = ks_two_sample(est[:, 1], lim_t)
            ks_m = ks_two_sample(est[:, 2], lim_m)
            stats.update(_summary_stats("n_theta_lse", est[:, 1]))
            stats.update(_summary_stats("m_lse", est[:, 2]))
            stats.update({"ks_theta": ks_t, "ks_m": ks_m})
            gates += [Gate.check("ks_n_theta_lse_vs_limit", ks_t, ks_tol),
                      Gate.check("ks_m_lse_vs_limit", ks_m, ks_tol)]
            header = ["replicate", "n_theta_lse", "m_lse", "limit_theta", "limit_m"]
            cols = [np.arange(n_rep), est[:, 1], est[:, 2], lim_t, lim_m]
        else:
            theta_c = np.empty(n_rep)
            m_c = np.empty(n_rep)
            n_bad_gamma = 0
            for r in range(n_rep):
                th, mm, bad = theta_m_from_gamma_delta(est[r, 3], est[r, 4])
                if bad:
                    n_bad_gamma += 1
                    theta_c[r] = np.nan
                    m_c[r] = np.nan
                else:
                    theta_c[r] = cfg.n_obs * th
                    m_c[r] = mm
            stats["n_gamma_nonpositive"] = n_bad_gamma
            gates.append(Gate.check("no_gamma_nonpositive", n_bad_gamma, 0.0))
            ks_t = ks_two_sample(theta_c, lim_t)
            ks_m = ks_two_sample(m_c, lim_m)
            ks_cross = ks_two_sample(theta_c, est[:, 1])
            stats.update(_summary_stats("n_theta_clse", theta_c))
            stats.update(_summary_stats("m_clse", m_c))
            stats.update({"ks_theta": ks_t, "ks_m": ks_m,
                          "ks_theta_clse_vs_lse": ks_cross})
            gates += [Gate.check("ks_n_theta_clse_vs_limit", ks_t, ks_tol),
                      Gate.check("ks_m_clse_vs_limit", ks_m, ks_tol),
                      Gate.check("ks_n_theta_clse_vs_lse", ks_cross,
                                 CROSS_ESTIMATOR_KS_TOL)]
            header = ["replicate", "n_theta_clse", "m_clse", "n_theta_lse",
                      "limit_theta", "limit_m"]
            cols = [np.arange(n_rep), theta_c, m_c, est[:, 1], lim_t, lim_m]
    gates.insert(0, Gate.check("no_degenerate_series", n_degenerate, 0.0))
    return header, cols, stats, gates


def _run_scaling_check(cfg: ExperimentConfig, rng: RngStream, threads: int):
    if cfg.cbi is None:
        raise ConfigError("[cbi] section required for scaling-check")
    exp = ScalingExperiment(cbi=cfg.cbi, theta_values=cfg.theta_values,
                            t_eval=cfg.t_eval, n_paths=cfg.replicates,
                            grid_per_unit=cfg.grid_per_unit,
                            y0_scaled=cfg.init.y0)
    report = run_scaling_experiment(exp, rng, threads)
    ks_tol = cfg.ks_tol if cfg.ks_tol is not None else DEFAULT_KS_TOL["scaling-check"]
    stats = {
        "theta": list(report.thetas),
        "ks": list(report.ks),
        "mean": list(report.means),
        "mean_gap": list(report.mean_gaps),
        "se": list(report.se_means),
        "mean_target": report.mean_target,
        "monotone": report.monotone,
        "a_lim": report.limit.a_lim,
        "sigma2": report.limit.sigma2,
    }
    gates = [Gate.check(f"mean_gap_theta{theta:g}_within_4se",
                        abs(gap), MEAN_SE_MULT * se)
             for theta, gap, se in zip(report.thetas, report.mean_gaps,
                                       report.se_means)]
    gates.append(Gate.check("ks_at_largest_theta", report.ks[-1], ks_tol))
    gates.append(Gate.check("ks_monotone_within_2se",
                            1.0 if report.monotone else 0.0, 1.0, ">="))
    header = ["replicate"] + [f"scaled_y_theta{t:g}" for t in report.thetas] + ["limit_y"]
    cols = [np.arange(cfg.replicates)]
    cols += [report.samples[f"scaled_y_theta{t:g}"] for t in report.thetas]
    cols.append(report.samples["limit_y"])
    return header, cols, stats, gates


def _run_self_similarity(cfg: ExperimentConfig, rng: RngStream, threads: int):
    ks_tol = cfg.ks_tol if cfg.ks_tol is not None else DEFAULT_KS_TOL["self-similarity"]
    report = self_similarity_check(cfg.model, cfg.init, cfg.theta_scale,
                                   cfg.t_eval, cfg.replicates, rng,
                                   cfg.steps_per_unit, threads)
    stats = {"ks_x": report.ks_x, "ks_y": report.ks_y,
             "theta_scale": report.theta_scale, "t": report.t}
    gates = [Gate.check("ks_x", report.ks_x, ks_tol),
             Gate.check("ks_y", report.ks_y, ks_tol)]
    header = ["replicate", "x_scaled", "x_base", "y_scaled", "y_base"]
    cols = [np.arange(cfg.replicates)] + [report.samples[k] for k in
                                          ("x_scaled", "x_base", "y_scaled", "y_base")]
    return header, cols, stats, gates


def _run_generator_residual(cfg: ExperimentConfig, rng: RngStream, threads: int):
    _require_condition_c(cfg)
    n = cfg.replicates
    r1, se1 = generator_residual(cfg.model, cfg.point, cfg.function, cfg.h, n,
                                 substream(rng, 0, 0), cfg.variance_scheme)
    r2, se2 = generator_residual(cfg.model, cfg.point, cfg.function, cfg.h / 2.0,
                                 n, substream(rng, 1, 0), cfg.variance_scheme)
    trend_gap = abs(r1 - 2.0 * r2)
    trend_se = math.sqrt(se1 * se1 + 4.0 * se2 * se2)
    ratio = abs(r1 / r2) if r2 != 0.0 else math.inf
    stats = {"h": cfg.h, "residual_h": r1, "se_h": se1,
             "residual_half_h": r2, "se_half_h": se2,
             "richardson_gap": trend_gap, "richardson_se": trend_se,
             "ratio": ratio}
    gates = [
        Gate.check("richardson_trend_within_4se", trend_gap, MEAN_SE_MULT * trend_se),
        Gate.check("halving_ratio_lower", ratio, 1.5, ">="),
        Gate.check("halving_ratio_upper", ratio, 3.0),
    ]
    header = ["h", "n_paths", "residual", "se"]
    cols = [np.array([cfg.h, cfg.h / 2.0]), np.array([n, n], dtype=np.int64),
            np.array([r1, r2]), np.array([se1, se2])]
    return header, cols, stats, gates


def _run_simulate(cfg: ExperimentConfig, rng: RngStream, out_dir: Path | None):
    cfg.model.require_simulatable()
    steps = _integer_steps(cfg.t_eval, cfg.steps_per_unit)
    grid = TimeGrid(0.0, cfg.t_eval, steps)
    n = cfg.replicates
    y_t = np.empty(n)
    x_t = np.empty(n)
    for r in range(n):
        path = simulate_joint_path(cfg.model, cfg.init, grid,
                                   substream(rng, 0, r), cfg.variance_scheme)
        y_t[r] = path.y[-1]
        x_t[r] = path.x[-1]
        if out_dir is not None:
            with open(out_dir / f"path_{r:04d}.csv", "w") as fh:
                path.write_csv(fh)
    stats = {**_summary_stats("y_t", y_t), **_summary_stats("x_t", x_t)} \
        if n >= 2 else {"y_t": float(y_t[0]), "x_t": float(x_t[0])}
    header = ["replicate", "Y_t", "X_t"]
    cols = [np.arange(n), y_t, x_t]
    return header, cols, stats, []


def _run_estimate(cfg: ExperimentConfig):
    if not cfg.input_path:
        raise ConfigError("[experiment] input (observation CSV) required "
                          "for estimate")
    series = read_observation_csv(cfg.input_path)
    result = estimate_from_series(series, cfg.estimator_kind,
                                  cfg.m_known if cfg.m_known is not None
                                  else cfg.model.m)
    return [], [], result, []


def read_observation_csv(path: str | Path) -> ObservationSeries:
    """Observation CSV with header ``i,X``."""
    with open(path) as fh:
        header = fh.readline().strip()
        if [c.strip() for c in header.split(",")] != ["i", "X"]:
            raise ValueError(f"expected observation CSV header 'i,X', got {header!r}")
        values = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            cells = line.split(",")
            values.append(float(cells[1]))
    return ObservationSeries(np.asarray(values))


def estimate_from_series(series: ObservationSeries, kind: str,
                         m_known: float = 0.0) -> dict:
    """JSON-ready estimate record: {kind, theta, m, gamma, delta,
    denominator, flags}."""
    from .estimators import clse_theta_m
    if kind == "lse-theta":
        out = lse_theta_known_m(series, m_known)
    elif kind == "lse-theta-m":
        out = lse_theta_m(series)
    elif kind == "clse-gamma-delta":
        out = clse_gamma_delta(series)
    elif kind == "clse-theta-m":
        out = clse_theta_m(series)
    else:
        raise ValueError(f"unknown estimator kind {kind!r}")
    return {
        "kind": kind,
        "n": series.n,
        "theta": out.values.get("theta"),
        "m": out.values.get("m", m_known if kind == "lse-theta" else None),
        "gamma": out.values.get("gamma"),
        "delta": out.values.get("delta"),
        "denominator": out.diagnostics["denominator"],
        "flags": {"degenerate": out.degenerate,
                  "gamma_nonpositive": out.gamma_nonpositive},
    }


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def run_experiment(cfg: ExperimentConfig, out_dir: str | Path | None = None,
                   threads: int | None = None,
                   seed: int | None = None) -> RunReport:
    """Run one experiment; optionally write samples.csv / report.json."""
    t_start = time.perf_counter()
    threads = cfg.threads if threads is None else max(1, int(threads))
    seed = cfg.master_seed if seed is None else int(seed)
    rng = RngStream(seed, 0)
    out_path = Path(out_dir) if out_dir is not None else None
    if out_path is not None:
        out_path.mkdir(parents=True, exist_ok=True)

    kind = cfg.kind
    if kind == "moments-check":
        header, cols, stats, gates = _run_moments_check(cfg, rng, threads)
    elif kind == "appendix-b":
        header, cols, stats, gates = _run_appendix_b(cfg, rng, threads)
    elif kind == "limit-law":
        header, cols, stats, gates = _run_limit_law(cfg, rng, threads)
    elif kind in ("thm-check-2", "thm-check-3", "thm-check-4"):
        header, cols, stats, gates = _run_thm_check(cfg, rng, threads,
                                                    int(kind[-1]))
    elif kind == "scaling-check":
        header, cols, stats, gates = _run_scaling_check(cfg, rng, threads)
    elif kind == "self-similarity":
        header, cols, stats, gates = _run_self_similarity(cfg, rng, threads)
    elif kind == "generator-residual":
        header, cols, stats, gates = _run_generator_residual(cfg, rng, threads)
    elif kind == "simulate":
        header, cols, stats, gates = _run_simulate(cfg, rng, out_path)
    elif kind == "estimate":
        header, cols, stats, gates = _run_estimate(cfg)
    else:  # pragma: no cover - guarded by ExperimentConfig
        raise ConfigError(f"unknown experiment kind {kind!r}")

    report = RunReport(
        experiment=kind, seed=seed, threads=threads, backend=BACKEND_NAME,
        config=cfg.echo(), stats=stats, gates=list(gates),
        wall_time_s=time.perf_counter() - t_start,
        samples_header=list(header), samples_columns=list(cols),
    )
    if out_path is not None:
        report.write(out_path)
    return report


__all__ = ["Gate", "RunReport", "run_experiment", "write_samples_csv",
           "read_observation_csv", "estimate_from_series",
           "DEFAULT_KS_TOL", "CROSS_ESTIMATOR_KS_TOL"]
