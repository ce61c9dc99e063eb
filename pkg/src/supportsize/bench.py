"""Monte Carlo MSE harness, sweep configuration, and empirical-data paths.

Every trial derives its randomness solely from (master_seed, trial_index),
so results are byte-identical regardless of how trials are distributed
across workers. Undefined Chao trials (phi_2 = 0) are excluded from the
mean and reported in undefined_count, never imputed.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .distributions import DiscreteDistribution, make_distribution, support_size
from .estimators import (
    DEFAULT_C0,
    DEFAULT_C1,
    ESTIMATOR_IDS,
    EstimatorOutput,
    UndefinedEstimateError,
    chebyshev_coefficients,
    chebyshev_support,
    plugin_support,
    support_estimate,
)
from .poisson_model import Fingerprint

DEFAULT_FAMILIES = ("uniform", "zipf", "geometric", "two_mixture")
DEFAULT_ESTIMATORS = ("plugin", "modified_chao", "chebyshev")


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[str, ...] = DEFAULT_FAMILIES
    k: int = 1000
    n_grid: tuple[float, ...] = field(
        default_factory=lambda: tuple(
            float(round(v)) for v in np.geomspace(250, 8000, 8)
        )
    )
    estimators: tuple[str, ...] = DEFAULT_ESTIMATORS
    trials: int = 2000
    master_seed: int = 0
    output_path: str = "sweep.csv"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.n_grid:
            raise ValueError("n_grid must be nonempty")
        if self.k < 2:
            raise ValueError("k must be >= 2")
        unknown = set(self.estimators) - set(ESTIMATOR_IDS)
        if unknown:
            raise ValueError(f"unknown estimators: {sorted(unknown)}")


@dataclass(frozen=True)
class MseRow:
    family: str
    k: int
    n: float
    estimator_id: str
    mse: float
    stderr: float
    trials: int
    undefined_count: int


CSV_HEADER = ("family", "k", "n", "estimator", "mse", "stderr", "trials",
              "undefined_count")


def _trial_squared_errors(
    P: DiscreteDistribution,
    n: float,
    estimator_id: str,
    indices,
    master_seed: int,
    errors: np.ndarray,
    c0: float,
    c1: float,
) -> None:
    """Fill errors[i] for each trial index; NaN marks an undefined trial.

    The per-trial squared error is measured against the latent phi_0, which
    equals the support-estimation error for plug-in style estimators.
    """
    probs = P.probs
    means = n * probs
    k = P.k
    if estimator_id == "chebyshev":
        g = chebyshev_coefficients(k, float(n), c0, c1)
    for idx in indices:
        rng = np.random.default_rng([master_seed, idx])
        counts = rng.poisson(means)
        occupancy = np.bincount(counts)
        phi0 = int(occupancy[0])
        if estimator_id == "plugin":
            unseen_est = 0.0
        elif estimator_id == "chao":
            phi2 = int(occupancy[2]) if len(occupancy) > 2 else 0
            if phi2 == 0:
                errors[idx] = np.nan
                continue
            phi1 = int(occupancy[1]) if len(occupancy) > 1 else 0
            unseen_est = phi1 * phi1 / (2.0 * phi2)
        elif estimator_id == "modified_chao":
            phi1 = int(occupancy[1]) if len(occupancy) > 1 else 0
            phi2 = int(occupancy[2]) if len(occupancy) > 2 else 0
            unseen_est = phi1 * phi1 / (2.0 * (phi2 + 1))
        elif estimator_id == "chebyshev":
            L = len(g)
            seen = float(occupancy[1:].sum())
            correction = math.fsum(
                (g[i - 1] - 1.0) * occupancy[i]
                for i in range(1, min(L, len(occupancy) - 1) + 1)
            )
            # clamp mirrors chebyshev_support: estimate >= 0
            unseen_est = max(seen + correction, 0.0) - seen
        else:
            raise ValueError(f"unknown estimator {estimator_id!r}")
        err = phi0 - unseen_est
        errors[idx] = err * err


def monte_carlo_mse(
    P: DiscreteDistribution,
    n: float,
    estimator_id: str,
    trials: int,
    master_seed: int,
    family: str | None = None,
    workers: int = 1,
    c0: float = DEFAULT_C0,
    c1: float = DEFAULT_C1,
) -> MseRow:
    """Monte Carlo estimate of the MSE of a support estimator under P."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    errors = np.empty(trials)
    indices = np.arange(trials)
    if workers <= 1:
        _trial_squared_errors(P, n, estimator_id, indices, master_seed,
                              errors, c0, c1)
    else:
        chunks = np.array_split(indices, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_trial_squared_errors, P, n, estimator_id, chunk,
                            master_seed, errors, c0, c1)
                for chunk in chunks if len(chunk)
            ]
            for fut in futures:
                fut.result()
    defined = errors[~np.isnan(errors)]
    undefined_count = trials - len(defined)
    if len(defined) == 0:
        raise UndefinedEstimateError("estimator undefined on every trial")
    mse = float(np.mean(defined))
    stderr = (
        float(np.std(defined, ddof=1) / math.sqrt(len(defined)))
        if len(defined) > 1
        else 0.0
    )
    return MseRow(
        family=family or (P.family or "custom"),
        k=P.k,
        n=n,
        estimator_id=estimator_id,
        mse=mse,
        stderr=stderr,
        trials=trials,
        undefined_count=undefined_count,
    )


def run_sweep(cfg: SweepConfig, workers: int = 1) -> list[MseRow]:
    """Cartesian product of families x n_grid x estimators; writes CSV.

    Output is deterministic (byte-identical) for a given config regardless
    of worker count.
    """
    rows = []
    for family in cfg.families:
        P = make_distribution(family, cfg.k)
        for n in cfg.n_grid:
            for estimator_id in cfg.estimators:
                rows.append(
                    monte_carlo_mse(
                        P, n, estimator_id, cfg.trials, cfg.master_seed,
                        family=family, workers=workers,
                    )
                )
    write_rows(rows, cfg.output_path)
    return rows


def write_rows(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow([
                r.family, r.k, f"{r.n:.17g}", r.estimator_id,
                f"{r.mse:.17g}", f"{r.stderr:.17g}", r.trials,
                r.undefined_count,
            ])


def load_config(path) -> SweepConfig:
    """Parse a flat key=value config file with SweepConfig field names."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key = value")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key == "families":
            values[key] = tuple(v.strip() for v in val.split(",") if v.strip())
        elif key == "estimators":
            values[key] = tuple(v.strip() for v in val.split(",") if v.strip())
        elif key == "n_grid":
            values[key] = tuple(float(v) for v in val.split(",") if v.strip())
        elif key in ("k", "trials", "master_seed"):
            values[key] = int(val)
        elif key == "output_path":
            values[key] = val
        else:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    return SweepConfig(**values)


def ingest_counts(path) -> Fingerprint:
    """Read a symbol,count CSV into a fingerprint (phi0 unknown)."""
    phi: dict[int, int] = {}
    seen: set[str] = set()
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["symbol", "count"]:
            raise ValueError(f"{path}: expected header 'symbol,count'")
        for lineno, row in enumerate(reader, 2):
            if not row:
                continue
            if len(row) != 2:
                raise ValueError(f"{path}:{lineno}: malformed row {row!r}")
            symbol, count_text = row[0].strip(), row[1].strip()
            if symbol in seen:
                raise ValueError(
                    f"{path}:{lineno}: duplicate symbol {symbol!r} "
                    "(multiplicity is ambiguous)"
                )
            seen.add(symbol)
            try:
                count = int(count_text)
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: count {count_text!r} is not an integer"
                ) from None
            if count < 0:
                raise ValueError(f"{path}:{lineno}: negative count {count}")
            if count >= 1:
                phi[count] = phi.get(count, 0) + 1
    return Fingerprint(phi=phi)


def estimate_from_counts(
    path,
    estimators=("plugin", "chao", "modified_chao"),
    k: int | None = None,
    n: float | None = None,
) -> dict[str, EstimatorOutput | None]:
    """Estimate support size from an empirical counts CSV.

    Returns one entry per requested estimator; the Chao entry is None when
    phi_2 = 0 (undefined). The chebyshev estimator needs k and n.
    """
    fp = ingest_counts(path)
    report: dict[str, EstimatorOutput | None] = {}
    for estimator_id in estimators:
        if estimator_id == "plugin":
            report[estimator_id] = EstimatorOutput(
                value=plugin_support(fp), estimator_id="plugin"
            )
        elif estimator_id == "chebyshev":
            if k is None or n is None:
                raise ValueError("chebyshev estimator requires --k and --n")
            report[estimator_id] = chebyshev_support(fp, k, n)
        else:
            try:
                report[estimator_id] = support_estimate(fp, estimator_id)
            except UndefinedEstimateError:
                report[estimator_id] = None
    return report
