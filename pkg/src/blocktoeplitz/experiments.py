"""Monte Carlo runs and convergence sweeps for the TBI / TBT ensembles."""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .counting import DEFAULT_P_GRID, BudgetExceeded
from .inputs import InputSpec
from .links import Model
from .matrices import MAX_DIM, BlockSpec, build_block_matrix
from .spectral import EigenSolverError, EmpiricalMoments, Spectrum, aggregate_moments, eigenvalues_symmetric, esd_moments, histogram
from .theory import Regime, even_moment

SIM_SCHEMA = "blocktoeplitz.sim/1"
CONVERGENCE_SCHEMA = "blocktoeplitz.convergence/1"
# the joint rate for "n and k both large" is not pinned down; we run n = k
JOINT_RATE = "n = k"


@dataclass(frozen=True)
class RunConfig:
    model: Model
    regime: str = "both_large"
    n: int = 32
    k: int = 32
    replicates: int = 50
    input: InputSpec = field(default_factory=InputSpec)
    h_max: int = 6
    bins: int | str = 60
    jobs: int = 1
    output_path: str | None = None

    def __post_init__(self):
        if isinstance(self.model, str):
            object.__setattr__(self, "model", Model(self.model.upper()))
        Regime(self.regime, None if self.regime == "both_large" else 1)
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        if self.n * self.k > MAX_DIM:
            raise ValueError(f"nk = {self.n * self.k} exceeds the cap {MAX_DIM}")
        if self.replicates < 1:
            raise ValueError("replicates must be at least 1")
        if self.h_max < 2 or self.h_max > 10 or self.h_max % 2:
            raise ValueError("h_max must be even and in 2..10")

    @property
    def scale(self) -> float:
        return math.sqrt(self.n * self.k)

    @property
    def theory_regime(self) -> Regime:
        if self.regime == "fixed_k":
            return Regime.fixed_k(self.k)
        if self.regime == "fixed_n":
            return Regime.fixed_n(self.n)
        return Regime.both_large()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["model"] = self.model.value
        d["input"] = asdict(self.input)
        d.pop("jobs")
        d.pop("output_path")
        return d


def theoretical_or_none(model: Model, regime: Regime, h_max: int, p_grid=DEFAULT_P_GRID) -> dict[int, float | None]:
    """Theoretical moments up to ``h_max``; ``None`` where counting exceeds its budget."""
    out: dict[int, float | None] = {}
    for t in range(1, h_max // 2 + 1):
        out[2 * t - 1] = 0.0
        try:
            out[2 * t] = even_moment(model, regime, t, p_grid)
        except BudgetExceeded:
            out[2 * t] = None
    return out


def _replicate(args):
    spec, r, h_max = args
    t0 = time.perf_counter()
    m = build_block_matrix(spec, replicate=r)
    t1 = time.perf_counter()
    try:
        spectrum = eigenvalues_symmetric(m)
    except EigenSolverError as exc:
        raise EigenSolverError(f"replicate {r}: {exc}") from exc
    t2 = time.perf_counter()
    return spectrum, esd_moments(spectrum, math.sqrt(spec.dim), h_max), t1 - t0, t2 - t1


@dataclass
class SimReport:
    config: RunConfig
    moments: EmpiricalMoments
    theoretical: dict[int, float | None]
    histogram: list
    timing: dict
    eigenvalues: list = field(default_factory=list, repr=False)

    def z_scores(self) -> dict[int, float | None]:
        z = {}
        for h, beta in self.theoretical.items():
            se = self.moments.stderr[h - 1]
            if beta is None or not np.isfinite(se) or se == 0:
                z[h] = None
            else:
                z[h] = float((self.moments.beta_hat[h - 1] - beta) / se)
        return z

    def to_dict(self) -> dict:
        z = self.z_scores()
        return {
            "schema": SIM_SCHEMA,
            "version": f"v{__version__}",
            "config": self.config.to_dict(),
            "empirical": {
                "replicates": self.moments.replicates,
                "moments": [
                    {"h": h, "beta_hat": float(self.moments.beta_hat[h - 1]),
                     "stderr": float(self.moments.stderr[h - 1]), "z": z.get(h)}
                    for h in range(1, self.moments.h_max + 1)
                ],
            },
            "theoretical": {
                "regime": self.config.theory_regime.label(),
                "joint_rate": JOINT_RATE if self.config.regime == "both_large" else None,
                "p_grid": list(DEFAULT_P_GRID),
                "moments": {str(h): v for h, v in self.theoretical.items()},
            },
            "histogram": [{"bin_left": a, "bin_right": b, "density": d} for a, b, d in self.histogram],
            "timing": self.timing,
        }


def run_simulation(cfg: RunConfig, keep_eigenvalues: bool = False) -> SimReport:
    """Sample ``cfg.replicates`` matrices, scale by ``sqrt(nk)`` and aggregate moments."""
    t_start = time.perf_counter()
    spec = BlockSpec(cfg.model, cfg.k, cfg.n, cfg.input)
    jobs = [(spec, r, cfg.h_max) for r in range(cfg.replicates)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_replicate, jobs))
    else:
        results = [_replicate(j) for j in jobs]
    t_sim = time.perf_counter()

    moments = aggregate_moments([r[1] for r in results])
    pooled = np.concatenate([r[0].eigenvalues for r in results])
    hist = histogram(Spectrum(pooled), cfg.scale, bins=cfg.bins)
    theo = theoretical_or_none(cfg.model, cfg.theory_regime, cfg.h_max)
    t_end = time.perf_counter()
    timing = {
        "build_s": sum(r[2] for r in results),
        "eigen_s": sum(r[3] for r in results),
        "simulate_wall_s": t_sim - t_start,
        "theory_s": t_end - t_sim,
        "total_s": t_end - t_start,
    }
    spectra = [r[0] for r in results] if keep_eigenvalues else []
    return SimReport(cfg, moments, theo, hist, timing, spectra)


@dataclass
class ConvergenceReport:
    model: Model
    regime: str
    sizes: list[int]
    theoretical: list[dict[int, float | None]]
    limit: dict[int, float | None]
    empirical: list[SimReport]
    timing: dict

    def gaps(self, h: int) -> list[float | None]:
        lim = self.limit.get(h)
        return [None if (lim is None or th.get(h) is None) else abs(th[h] - lim) for th in self.theoretical]

    def to_dict(self) -> dict:
        hs = sorted(self.limit)
        return {
            "schema": CONVERGENCE_SCHEMA,
            "version": f"v{__version__}",
            "model": self.model.value,
            "regime": self.regime,
            "sizes": self.sizes,
            "limit": {str(h): self.limit[h] for h in hs},
            "points": [
                {
                    "size": s,
                    "theoretical": {str(h): th[h] for h in hs},
                    "gap": {str(h): self.gaps(h)[i] for h in hs},
                    "empirical": None if not self.empirical else [
                        {"h": h, "beta_hat": float(self.empirical[i].moments.beta_hat[h - 1]),
                         "stderr": float(self.empirical[i].moments.stderr[h - 1])}
                        for h in range(1, self.empirical[i].moments.h_max + 1)
                    ],
                }
                for i, (s, th) in enumerate(zip(self.sizes, self.theoretical))
            ],
            "timing": self.timing,
        }


def run_convergence(grid: list[RunConfig], empirical: bool = True) -> ConvergenceReport:
    """Theoretical moments along a size grid and their gap to the both-large limit."""
    if len(grid) < 3:
        raise ValueError("a convergence sweep needs at least three grid points")
    models = {c.model for c in grid}
    regimes = {c.regime for c in grid}
    if len(models) != 1 or len(regimes) != 1:
        raise ValueError("all grid points must share model and regime")
    model, regime = models.pop(), regimes.pop()
    t0 = time.perf_counter()
    if regime == "fixed_k":
        sizes = [c.k for c in grid]
    elif regime == "fixed_n":
        sizes = [c.n for c in grid]
    else:
        sizes = [c.n * c.k for c in grid]
    h_max = max(c.h_max for c in grid)
    theo = [theoretical_or_none(model, c.theory_regime, h_max) for c in grid]
    limit = theoretical_or_none(model, Regime.both_large(), h_max)
    t1 = time.perf_counter()
    sims = [run_simulation(c) for c in grid] if empirical else []
    t2 = time.perf_counter()
    return ConvergenceReport(model, regime, sizes, theo, limit, sims,
                             {"theory_s": t1 - t0, "simulate_s": t2 - t1})
