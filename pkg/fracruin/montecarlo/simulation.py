##    _____  _____
##   |  __ \|  __ \    AUTHOR: Pedro Rivero
##   | |__) | |__) |   ---------------------------------
##   |  ___/|  _  /    DATE: October 4, 2021
##   | |    | | \ \    ---------------------------------
##   |_|    |_|  \_\   https://github.com/pedrorrivero
##

## Copyright 2021 Pedro Rivero
##
## Licensed under the Apache License, Version 2.0 (the "License");
## you may not use this file except in compliance with the License.
## You may obtain a copy of the License at
##
## http://www.apache.org/licenses/LICENSE-2.0
##
## Unless required by applicable law or agreed to in writing, software
## distributed under the License is distributed on an "AS IS" BASIS,
## WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
## See the License for the specific language governing permissions and
## limitations under the License.

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import inf
from typing import List, Optional, Tuple

import numpy as np

from ..errors import raise_truncation_warning
from ..helpers import validate_finite
from ..models import ModelSpec, sample_claim, sample_interarrival
from ..random import StreamFactory
from ..solver import RuinSolution, u5
from .config import SimConfig, TruncationMode
from .estimate import McEstimate

logger = logging.getLogger(__name__)

NEGLIGIBLE_RUIN: float = 1e-12
TRUNCATION_WARNING: float = 0.1

BlockTask = Tuple[ModelSpec, float, float, SimConfig, int]


###############################################################################
## PATH OUTCOMES
###############################################################################
@dataclass(frozen=True)
class PathOutcomes:
    """
    Per-path results of a simulation, in path order.

    Attributes
    ----------
    ruined: numpy.ndarray
        Whether the surplus went negative.
    truncated: numpy.ndarray
        Whether the truncation policy stopped the path first.
    """

    ruined: np.ndarray
    truncated: np.ndarray


###############################################################################
## SURVIVAL LEVEL
###############################################################################
def negligible_ruin_level(solution: RuinSolution) -> float:
    """
    Smallest capital v with psi(v) below 1e-12; paths reaching it are
    counted as survivals.
    """
    return u5(solution, level=NEGLIGIBLE_RUIN)


###############################################################################
## SIMULATE PATHS
###############################################################################
def simulate_paths(
    spec: ModelSpec,
    u: float,
    config: SimConfig,
    solution: Optional[RuinSolution] = None,
    survival_level: Optional[float] = None,
    workers: Optional[int] = None,
) -> PathOutcomes:
    """
    Simulates the surplus u + c sum_{i<=k} T_i - sum_{i<=k} X_i just after
    every claim until ruin, survival or truncation.

    Path p owns column p mod block_size of the stream of block
    p // block_size; every iteration draws the full matrices of T and then
    X, so the draws of a path do not depend on `u`, the other paths or the
    number of workers.

    Parameters
    ----------
    spec: ModelSpec
        The model.
    u: float
        Initial capital, u >= 0.
    config: SimConfig
        Path count, truncation policy and seed.
    solution: RuinSolution, optional
        Analytic solution; fixes the survival level where psi < 1e-12.
    survival_level: float, optional
        Absolute survival level; overrides `solution`.
    workers: int, optional
        Number of processes; blocks run in the calling process by default.
    """
    validate_finite(u, "u")
    if u < 0:
        raise ValueError("Initial capital must be nonnegative.")
    if survival_level is None and solution is not None:
        survival_level = negligible_ruin_level(solution)
    level: float = (
        survival_level
        if survival_level is not None
        else u + config.survival_multiple * spec.mean_claim
    )
    tasks: List[BlockTask] = [
        (spec, u, level, config, block) for block in range(config.blocks)
    ]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_simulate_block, tasks))
    else:
        results = [_simulate_block(task) for task in tasks]
    ruined = np.concatenate([r for r, _ in results])[: config.paths]
    truncated = np.concatenate([t for _, t in results])[: config.paths]
    return PathOutcomes(ruined, truncated)


###############################################################################
## ESTIMATE RUIN
###############################################################################
def estimate_ruin(
    spec: ModelSpec,
    u: float,
    config: SimConfig,
    solution: Optional[RuinSolution] = None,
    survival_level: Optional[float] = None,
    workers: Optional[int] = None,
) -> McEstimate:
    """
    Monte Carlo estimate of psi(u) with a binomial confidence interval.

    Warns
    -----
    TruncationWarning
        If more than 10% of the paths were truncated.
    """
    start: float = time.perf_counter()
    outcomes = simulate_paths(
        spec, u, config, solution, survival_level, workers
    )
    ruined: int = int(outcomes.ruined.sum())
    truncated: int = int(outcomes.truncated.sum())
    estimate = McEstimate.from_counts(
        ruined, truncated, config.paths, u, config.seed, spec
    )
    if truncated > TRUNCATION_WARNING * config.paths:
        raise_truncation_warning(
            truncated, config.paths, config.limit_description
        )
    logger.info(
        "psi(%g) ~ %.6f +- %.6f over %d paths (%d truncated) in %.2fs",
        u,
        estimate.p_hat,
        estimate.ci_half_width,
        config.paths,
        truncated,
        time.perf_counter() - start,
    )
    return estimate


###############################################################################
## PRIVATE API
###############################################################################
def _simulate_block(task: BlockTask) -> Tuple[np.ndarray, np.ndarray]:
    spec, u, level, config, block = task
    generator = StreamFactory(config.seed).stream(block)
    width: int = config.block_size
    by_time: bool = config.truncation_mode is TruncationMode.TIME_HORIZON
    horizon: float = config.horizon if by_time else inf
    surplus = np.full(width, float(u))
    clock = np.zeros(width)
    active = np.ones(width, dtype=bool)
    ruined = np.zeros(width, dtype=bool)
    truncated = np.zeros(width, dtype=bool)
    claims: int = 0
    while active.any():
        steps: int = config.chunk_size
        if not by_time:
            steps = min(steps, config.max_claims_per_path - claims)
        times = sample_interarrival(spec, generator, (steps, width))
        sizes = sample_claim(spec, generator, (steps, width))
        path = surplus + np.cumsum(spec.premium_rate * times - sizes, axis=0)
        arrival = clock + np.cumsum(times, axis=0)
        in_time = arrival <= horizon
        ruin_at = _first(path < 0, in_time, steps)
        safe_at = _first(path >= level, in_time, steps)
        late_at = _first(~in_time, True, steps)
        newly_ruined = active & (ruin_at < safe_at) & (ruin_at < late_at)
        newly_late = active & (late_at < ruin_at) & (late_at < safe_at)
        ruined |= newly_ruined
        truncated |= newly_late
        active &= (ruin_at == steps) & (safe_at == steps) & (late_at == steps)
        surplus = path[-1]
        clock = arrival[-1]
        claims += steps
        if not by_time and claims >= config.max_claims_per_path:
            truncated |= active
            active[:] = False
    logger.debug(
        "Block %d: %d ruined, %d truncated after %d claims",
        block,
        int(ruined.sum()),
        int(truncated.sum()),
        claims,
    )
    return ruined, truncated


def _first(hits: np.ndarray, valid, steps: int) -> np.ndarray:
    """
    Index of the first valid hit per column, `steps` when there is none.
    """
    events = hits & valid
    return np.where(events.any(axis=0), events.argmax(axis=0), steps)
