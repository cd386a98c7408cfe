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
from dataclasses import dataclass
from math import sqrt

import numpy as np
from scipy.stats import norm

from ..helpers import validate_natural, validate_positive
from ..models import MlComponent
from ..random import StreamFactory
from ..specialfn import fractional_poisson_mean, fractional_poisson_variance
from ..validation import MomentValidation

logger = logging.getLogger(__name__)

CHUNK: int = 64
Z_95: float = float(norm.ppf(0.975))


###############################################################################
## COUNTING MOMENTS
###############################################################################
@dataclass(frozen=True)
class CountingMoments:
    """
    Empirical and analytic moments of the fractional Poisson count N(t).

    Attributes
    ----------
    mean: float
        Sample mean of N(t).
    variance: float
        Sample variance of N(t).
    mean_ci: float
        95% half width of the mean.
    variance_ci: float
        95% half width of the variance.
    target_mean: float
        rate t^mu / Gamma(mu + 1).
    target_variance: float
        Analytic variance.
    paths: int
        Number of simulated counts.
    consistent: bool
        Whether both moments lie within three standard errors of their
        targets.
    """

    mean: float
    variance: float
    mean_ci: float
    variance_ci: float
    target_mean: float
    target_variance: float
    paths: int
    consistent: bool


###############################################################################
## FRACTIONAL POISSON MOMENTS
###############################################################################
def fractional_poisson_moments(
    mu: float, rate: float, t: float, paths: int, seed: int = 0
) -> CountingMoments:
    """
    Simulates N(t) by summing ML(mu, rate) waiting times until they exceed
    t, and compares its mean and variance with the analytic ones.
    """
    validate_positive(t, "t")
    validate_natural(paths)
    component = MlComponent(mu, rate)
    counts = simulate_counts(component, t, paths, seed)
    n: int = counts.size
    mean: float = float(np.mean(counts))
    variance: float = float(np.var(counts, ddof=1))
    m4: float = float(np.mean((counts - mean) ** 4))
    target_mean: float = fractional_poisson_mean(mu, rate, t)
    target_variance: float = fractional_poisson_variance(mu, rate, t)
    validation = MomentValidation(target_mean, target_variance)
    moments = CountingMoments(
        mean,
        variance,
        Z_95 * sqrt(variance / n),
        Z_95 * sqrt(max(m4 - variance ** 2, 0.0) / n),
        target_mean,
        target_variance,
        n,
        validation.validate(counts),
    )
    logger.info(
        "N(%g): mean %.4f (target %.4f), variance %.4f (target %.4f)",
        t,
        mean,
        target_mean,
        variance,
        target_variance,
    )
    return moments


def simulate_counts(
    component: MlComponent, t: float, paths: int, seed: int = 0
) -> np.ndarray:
    """
    Number of arrivals in [0, t] per path.
    """
    generator = StreamFactory(seed).stream(0)
    clock = np.zeros(paths)
    counts = np.zeros(paths, dtype=np.int64)
    active = np.ones(paths, dtype=bool)
    while active.any():
        arrivals = clock + np.cumsum(
            component.sample(generator, (CHUNK, paths)), axis=0
        )
        within = arrivals <= t
        counts += (within & active).sum(axis=0)
        active &= within[-1]
        clock = arrivals[-1]
    return counts
