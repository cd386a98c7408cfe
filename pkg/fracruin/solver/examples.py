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
from typing import List, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import brentq

from ..errors import raise_bracketing_warning
from ..models import GammaComponent, MlComponent, ModelSpec

RealOrArray = Union[float, np.ndarray]


###############################################################################
## EXPONENTIAL MIXTURE
###############################################################################
@dataclass(frozen=True)
class ExponentialMixture:
    """
    psi(u) = sum_i weights_i e^{-rates_i u}, the closed-form ruin
    probabilities of the worked examples.
    """

    weights: Tuple[float, ...]
    rates: Tuple[float, ...]

    def __call__(self, u: ArrayLike) -> RealOrArray:
        points = np.asarray(u, dtype=float)
        values = sum(
            w * np.exp(-rate * points)
            for w, rate in zip(self.weights, self.rates)
        )
        return values if np.ndim(u) else float(values)


###############################################################################
## GAMMA INTER-ARRIVALS, EXPONENTIAL CLAIMS
###############################################################################
def gamma_exponential_root(
    r: float, lambda1: float, alpha: float, c: float
) -> float:
    """
    The root x_2 > lambda1 / c of

        (alpha + lambda1 / c - x) (c x)^r = lambda1^r alpha,

    i.e. the characteristic root shifted by lambda1 / c.
    """
    gamma_model(r, lambda1, (GammaComponent(1.0, alpha),), c)
    top: float = alpha + lambda1 / c
    peak: float = r * top / (r + 1.0)

    def equation(x: float) -> float:
        return (top - x) * (c * x) ** r - lambda1 ** r * alpha

    return brentq(equation, peak, top, xtol=1e-15, rtol=1e-15)


def gamma_exponential_ruin(
    r: float, lambda1: float, alpha: float, c: float
) -> ExponentialMixture:
    """
    psi(u) = (lambda1 / (c x_2))^r e^{-(x_2 - lambda1 / c) u} for
    Gamma(r, lambda1) inter-arrivals and Exp(alpha) claims.
    """
    x2: float = gamma_exponential_root(r, lambda1, alpha, c)
    return ExponentialMixture(
        ((lambda1 / (c * x2)) ** r,), (x2 - lambda1 / c,)
    )


###############################################################################
## GAMMA INTER-ARRIVALS, ERLANG(2) CLAIMS
###############################################################################
def gamma_erlang2_roots(
    r: float, lambda1: float, alpha: float, c: float
) -> Tuple[float, float]:
    """
    The two roots z_2 < z_3 above lambda1 / c of

        (alpha + lambda1 / c - x)^2 (c x)^r = lambda1^r alpha^2.

    Warns
    -----
    BracketingWarning
        Unless z_3 > lambda1 / c + alpha > z_2 > lambda1 / c.
    """
    gamma_model(r, lambda1, (GammaComponent(2.0, alpha),), c)
    low: float = lambda1 / c
    top: float = alpha + low
    peak: float = r * top / (r + 2.0)

    def equation(x: float) -> float:
        return (top - x) ** 2 * (c * x) ** r - lambda1 ** r * alpha ** 2

    z2: float = brentq(equation, peak, top, xtol=1e-15, rtol=1e-15)
    high: float = 2.0 * top
    while equation(high) < 0:
        high *= 2.0
    z3: float = brentq(equation, top, high, xtol=1e-15, rtol=1e-15)
    violations: List[str] = []
    if not z3 > top:
        violations.append(f"z3={z3!r} <= lambda1/c + alpha={top!r}")
    if not top > z2:
        violations.append(f"z2={z2!r} >= lambda1/c + alpha={top!r}")
    if not z2 > low:
        violations.append(f"z2={z2!r} <= lambda1/c={low!r}")
    if violations:
        raise_bracketing_warning("; ".join(violations))
    return z2, z3


def gamma_erlang2_ruin(
    r: float, lambda1: float, alpha: float, c: float
) -> ExponentialMixture:
    """
    Ruin probability for Gamma(r, lambda1) inter-arrivals and Erlang(2)
    claims of rate alpha,

        psi(u) = (l - z_3) / (z_2 - z_3) (lambda1 / (c z_2))^r e^{(l - z_2) u}
            + (l - z_2) / (z_3 - z_2) (lambda1 / (c z_3))^r e^{(l - z_3) u},

    with l = lambda1 / c.
    """
    z2, z3 = gamma_erlang2_roots(r, lambda1, alpha, c)
    low: float = lambda1 / c
    return ExponentialMixture(
        (
            (low - z3) / (z2 - z3) * (lambda1 / (c * z2)) ** r,
            (low - z2) / (z3 - z2) * (lambda1 / (c * z3)) ** r,
        ),
        (z2 - low, z3 - low),
    )


###############################################################################
## FRACTIONAL POISSON INTER-ARRIVALS, EXPONENTIAL CLAIMS
###############################################################################
def fractional_exponential_root(
    mu: float, lambda2: float, alpha: float, c: float
) -> float:
    """
    The unique positive solution of c^mu x - alpha c^mu + lambda2 x^{1-mu}
    = 0, which lies in (0, alpha).
    """
    fractional_model(mu, lambda2, (GammaComponent(1.0, alpha),), c)

    def equation(x: float) -> float:
        return c ** mu * (x - alpha) + lambda2 * x ** (1.0 - mu)

    return brentq(equation, 0.0, alpha, xtol=1e-15, rtol=1e-15)


def fractional_exponential_ruin(
    mu: float, lambda2: float, alpha: float, c: float
) -> ExponentialMixture:
    """
    psi(u) = (1 - x / alpha) e^{-x u} for ML(mu, lambda2) inter-arrivals and
    Exp(alpha) claims.
    """
    x: float = fractional_exponential_root(mu, lambda2, alpha, c)
    return ExponentialMixture((1.0 - x / alpha,), (x,))


###############################################################################
## EXAMPLE MODELS
###############################################################################
def gamma_model(
    r: float, lambda1: float, claims: Tuple[GammaComponent, ...], c: float
) -> ModelSpec:
    return ModelSpec((GammaComponent(r, lambda1),), (), claims, c)


def fractional_model(
    mu: float, lambda2: float, claims: Tuple[GammaComponent, ...], c: float
) -> ModelSpec:
    return ModelSpec((), (MlComponent(mu, lambda2),), claims, c)

