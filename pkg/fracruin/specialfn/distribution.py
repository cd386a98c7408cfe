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

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import gamma

from ..errors import DomainError
from ..helpers import validate_interval, validate_positive
from .mittag_leffler import MlParams, RealOrArray, ml_eval


###############################################################################
## MITTAG-LEFFLER DISTRIBUTION PARAMETERS
###############################################################################
@dataclass(frozen=True)
class MlDistParams:
    """
    Parameters of the Mittag-Leffler law ML(mu, rate), the waiting time
    distribution of the fractional Poisson process.

    Attributes
    ----------
    mu: float
        Fractional order in (0, 1]; mu = 1 is the exponential law.
    rate: float
        Strictly positive rate.
    """

    mu: float
    rate: float

    def __post_init__(self) -> None:
        validate_interval(self.mu, 0.0, 1.0, "mu", closed=(False, True))
        validate_positive(self.rate, "rate")


###############################################################################
## DENSITY AND DISTRIBUTION FUNCTION
###############################################################################
def ml_density(params: MlDistParams, t: ArrayLike) -> RealOrArray:
    """
    Mittag-Leffler density rate * t^(mu-1) * E_{mu,mu}(-rate * t^mu).

    Parameters
    ----------
    params: MlDistParams
        The law.
    t: ArrayLike
        Strictly positive time(s).

    Returns
    -------
    out: float or numpy.ndarray
        Density value(s), nonnegative.

    Raises
    ------
    DomainError
        If any `t` <= 0.
    """
    times: np.ndarray = np.asarray(t, dtype=float)
    if np.any(~(times > 0)):
        raise DomainError("Mittag-Leffler density requires t > 0.")
    mu, rate = params.mu, params.rate
    kernel = ml_eval(MlParams(mu, mu), -rate * times ** mu)
    density = rate * times ** (mu - 1.0) * kernel
    return np.maximum(density, 0.0) if np.ndim(t) else max(density, 0.0)


def ml_cdf(params: MlDistParams, t: ArrayLike) -> RealOrArray:
    """
    Mittag-Leffler distribution function 1 - E_{mu,1}(-rate * t^mu).
    """
    times: np.ndarray = np.asarray(t, dtype=float)
    if np.any(~(times >= 0)):
        raise DomainError("Mittag-Leffler distribution requires t >= 0.")
    mu, rate = params.mu, params.rate
    survival = ml_eval(MlParams(mu, 1.0), -rate * times ** mu)
    cdf = np.clip(1.0 - np.asarray(survival), 0.0, 1.0)
    return cdf if np.ndim(t) else float(cdf)


###############################################################################
## FRACTIONAL POISSON COUNTING MOMENTS
###############################################################################
def fractional_poisson_mean(mu: float, rate: float, t: float) -> float:
    """
    Mean number of renewals of the fractional Poisson process up to time t.
    """
    MlDistParams(mu, rate)
    return rate * t ** mu / float(gamma(mu + 1.0))


def fractional_poisson_variance(mu: float, rate: float, t: float) -> float:
    """
    Variance of the fractional Poisson count at time t,

        2 (rate t^mu)^2 / Gamma(2 mu + 1) - (rate t^mu)^2 / Gamma(mu + 1)^2
            + rate t^mu / Gamma(mu + 1).
    """
    MlDistParams(mu, rate)
    scale: float = rate * t ** mu
    return (
        2.0 * scale ** 2 / float(gamma(2.0 * mu + 1.0))
        - scale ** 2 / float(gamma(mu + 1.0)) ** 2
        + scale / float(gamma(mu + 1.0))
    )
