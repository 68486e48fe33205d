"""
Cell-size resolution sweep

Runs random balanced oracles at several modulation-cell sizes and tabulates
the measured statistic per trial. Per-trial seeds come from
derive_seed(master, cell_size, trial), so the table is reproducible at any
worker count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from ..config.simulation_config_manager import resolve_thread_count
from ..data_models.domain_models_core import CellSpec, IntensityProfile
from ..data_models.domain_models_measurement import MeasurementConfig, Verdict
from ..dqc1_core.analytic import DephasingLike, as_dephasing
from ..measurement_sim.simulator import derive_seed
from ..phase_mask.masks import make_random_balanced
from .oracle import default_threshold, run_dj

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["cell_size", "trial", "seed", "statistic", "stderr", "verdict"]
SUMMARY_COLUMNS = ["cell_size", "trials", "mean", "std", "misclassified"]


def resolution_sweep(
    cell_sizes: Sequence[int],
    trials: int,
    profile: IntensityProfile,
    p: DephasingLike,
    config: MeasurementConfig,
    threshold: Optional[float] = None,
    analytic: bool = False,
    threads: Optional[int] = None,
) -> pd.DataFrame:
    """
    Random balanced oracles per cell size

    Args:
        cell_sizes: Square cell edges in pixels
        trials: Oracles per cell size (0 gives an empty table)
        profile: Beam weights; its panel is the oracle panel
        p: Dephasing parameter
        config: Photon budget and master seed
        threshold: Decision threshold (None -> default_threshold(p))
        analytic: Exact statistic instead of simulated photons
        threads: Trials run in parallel on this many workers

    Returns:
        DataFrame with columns cell_size, trial, seed, statistic, stderr, verdict
    """
    dephasing = as_dephasing(p)
    if threshold is None:
        threshold = default_threshold(dephasing)

    tasks: List[Tuple[int, int, int]] = [
        (int(size), trial, derive_seed(config.seed, int(size), trial))
        for size in cell_sizes
        for trial in range(int(trials))
    ]

    def run_trial(task: Tuple[int, int, int]) -> Dict[str, object]:
        size, trial, seed = task
        mask = make_random_balanced(profile.dims, CellSpec.square(size), seed)
        verdict = run_dj(
            mask, profile, dephasing, replace(config, seed=seed), threshold=threshold, analytic=analytic, threads=1
        )
        return {
            "cell_size": size,
            "trial": trial,
            "seed": seed,
            "statistic": verdict.statistic,
            "stderr": verdict.stderr,
            "verdict": verdict.verdict.value,
        }

    workers = min(resolve_thread_count(threads), max(1, len(tasks)))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run_trial, tasks))
    else:
        rows = [run_trial(task) for task in tasks]

    logger.info(f"Sweep finished: {len(rows)} trials over cell sizes {list(cell_sizes)}")
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def summarize_sweep(frame: pd.DataFrame) -> pd.DataFrame:
    """Per cell size: trial count, mean and std of the statistic, misclassified balanced oracles"""
    if frame.empty:
        return pd.DataFrame(columns=SUMMARY_COLUMNS)

    misclassified = frame["verdict"] != Verdict.BALANCED.value
    summary = (
        frame.assign(misclassified=misclassified)
        .groupby("cell_size", sort=False)
        .agg(
            trials=("trial", "count"),
            mean=("statistic", "mean"),
            std=("statistic", "std"),
            misclassified=("misclassified", "sum"),
        )
        .reset_index()
    )
    return summary[SUMMARY_COLUMNS]
