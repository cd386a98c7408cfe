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
from functools import partial
from math import cos, gamma, inf, pi, sin
from typing import Optional, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import gammainc, gammaln, xlogy

from ..errors import ModelValidationError
from ..helpers import validate_interval, validate_positive
from ..specialfn import MlDistParams, ml_cdf, ml_density

RealOrArray = Union[float, np.ndarray]
Size = Optional[Union[int, Tuple[int, ...]]]


###############################################################################
## GAMMA COMPONENT
###############################################################################
@dataclass(frozen=True)
class GammaComponent:
    """
    Gamma distributed summand Gamma(shape, rate), with density

        rate^shape x^(shape - 1) e^(-rate x) / Gamma(shape).

    Attributes
    ----------
    shape: float
        Strictly positive shape r (s for claims).
    rate: float
        Strictly positive rate lambda (alpha for claims).
    """

    shape: float
    rate: float

    def __post_init__(self) -> None:
        _check_positive(self.shape, "shape")
        _check_positive(self.rate, "rate")

    ############################### PUBLIC API ###############################
    @property
    def mean(self) -> float:
        return self.shape / self.rate

    @property
    def variance(self) -> float:
        return self.shape / self.rate ** 2

    @property
    def has_integer_shape(self) -> bool:
        return float(self.shape).is_integer()

    @property
    def origin(self) -> Tuple[float, float]:
        """
        Leading behaviour (exponent, coefficient) of the density at 0+.
        """
        return self.shape - 1.0, self.rate ** self.shape / gamma(self.shape)

    def density(self, x: ArrayLike) -> RealOrArray:
        points = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            logs = (
                xlogy(self.shape - 1.0, points)
                + self.shape * np.log(self.rate)
                - self.rate * points
                - gammaln(self.shape)
            )
        values = np.where(points > 0, np.exp(logs), 0.0)
        return values if np.ndim(x) else float(values)

    def cdf(self, x: ArrayLike) -> RealOrArray:
        points = np.maximum(np.asarray(x, dtype=float), 0.0)
        values = gammainc(self.shape, self.rate * points)
        return values if np.ndim(x) else float(values)

    def laplace(self, s: complex) -> complex:
        """
        Laplace transform E[exp(-s Y)] for Re(s) > -rate.
        """
        return (self.rate / (self.rate + s)) ** self.shape

    def sample(
        self, generator: np.random.Generator, size: Size = None
    ) -> RealOrArray:
        return generator.standard_gamma(self.shape, size) / self.rate


###############################################################################
## MITTAG-LEFFLER COMPONENT
###############################################################################
@dataclass(frozen=True)
class MlComponent:
    """
    Mittag-Leffler distributed summand ML(mu, rate), the waiting time of a
    fractional Poisson process.

    Attributes
    ----------
    mu: float
        Order in (0, 1]; mu = 1 is Exp(rate).
    rate: float
        Strictly positive rate.
    """

    mu: float
    rate: float

    def __post_init__(self) -> None:
        validate_interval(
            self.mu,
            0.0,
            1.0,
            "mu",
            closed=(False, True),
            error=partial(ModelValidationError, field="mu"),
        )
        _check_positive(self.rate, "rate")

    ############################### PUBLIC API ###############################
    @property
    def params(self) -> MlDistParams:
        return MlDistParams(self.mu, self.rate)

    @property
    def mean(self) -> float:
        return 1.0 / self.rate if self.mu == 1.0 else inf

    @property
    def origin(self) -> Tuple[float, float]:
        return self.mu - 1.0, self.rate / gamma(self.mu)

    def density(self, x: ArrayLike) -> RealOrArray:
        points = np.asarray(x, dtype=float)
        if np.ndim(x) == 0:
            return ml_density(self.params, float(x)) if x > 0 else 0.0
        values = np.zeros(points.shape)
        positive = points > 0
        values[positive] = ml_density(self.params, points[positive])
        return values

    def cdf(self, x: ArrayLike) -> RealOrArray:
        points = np.maximum(np.asarray(x, dtype=float), 0.0)
        return ml_cdf(self.params, points if np.ndim(x) else float(points))

    def laplace(self, s: complex) -> complex:
        return self.rate / (self.rate + s ** self.mu)

    def sample(
        self, generator: np.random.Generator, size: Size = None
    ) -> RealOrArray:
        """
        Draws by the uniform-pair representation

            T = -(1/rate)^(1/mu) ln(U) [sin(mu pi) / tan(mu pi V)
                - cos(mu pi)]^(1/mu),

        which reduces to an exponential draw for mu = 1.
        """
        u = 1.0 - generator.random(size)
        if self.mu == 1.0:
            return -np.log(u) / self.rate
        v = 1.0 - generator.random(size)
        mu_pi: float = self.mu * pi
        bracket = sin(mu_pi) / np.tan(mu_pi * v) - cos(mu_pi)
        return (
            -((1.0 / self.rate) ** (1.0 / self.mu))
            * np.log(u)
            * bracket ** (1.0 / self.mu)
        )


Component = Union[GammaComponent, MlComponent]


###############################################################################
## PRIVATE API
###############################################################################
def _check_positive(number: float, name: str) -> None:
    validate_positive(
        number, name, error=partial(ModelValidationError, field=name)
    )
