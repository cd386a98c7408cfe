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
from math import gamma
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DomainError, UnsupportedSpecError
from ..fraccalc import GridFn
from ..helpers import validate_natural, validate_positive
from ..models import GammaComponent, sum_cdf, sum_density
from .examples import RealOrArray


###############################################################################
## LIMIT AS MU -> 0
###############################################################################
logger = logging.getLogger(__name__)


class PsiZeroLimit:
    """
    Limit psi_0 of the ruin probability of fractional Poisson models as the
    order mu tends to 0. It solves

        psi_0(u) = p [int_0^u psi_0(u - y) dF_X(y) + 1 - F_X(u)],

    with p = lambda2 / (lambda2 + 1), so that psi_0(0) = p for any claims and

        psi_0(u) = p e^{-alpha u / (lambda2 + 1)}

    for Exp(alpha) claims.

    Parameters
    ----------
    claims: Sequence[GammaComponent]
        Claim components.
    lambda2: float
        Rate of the Mittag-Leffler inter-arrival law.

    Attributes
    ----------
    at_zero: float
        psi_0(0).
    """

    def __init__(
        self, claims: Sequence[GammaComponent], lambda2: float
    ) -> None:
        validate_positive(lambda2, "lambda2")
        if not claims:
            raise DomainError("At least one claim component is required.")
        self.claims = tuple(claims)
        self.lambda2: float = lambda2

    ############################### PUBLIC API ###############################
    @property
    def at_zero(self) -> float:
        return self.lambda2 / (self.lambda2 + 1.0)

    @property
    def is_exponential(self) -> bool:
        return len(self.claims) == 1 and self.claims[0].shape == 1.0

    def __call__(self, u: ArrayLike) -> RealOrArray:
        """
        Closed form psi_0(u) for exponential claims.

        Raises
        ------
        UnsupportedSpecError
            If the claims are not exponential.
        """
        if not self.is_exponential:
            raise UnsupportedSpecError(
                "psi_0 has a closed form for exponential claims only; use "
                "solve_limit_equation."
            )
        alpha: float = self.claims[0].rate
        points = np.asarray(u, dtype=float)
        values = self.at_zero * np.exp(-alpha * points / (self.lambda2 + 1.0))
        return values if np.ndim(u) else float(values)


def psi_zero_limit(
    claims: Sequence[GammaComponent], lambda2: float
) -> PsiZeroLimit:
    return PsiZeroLimit(claims, lambda2)


###############################################################################
## LIMIT EQUATION
###############################################################################
def solve_limit_equation(
    claims: Sequence[GammaComponent],
    lambda2: float,
    u_max: float,
    steps: int,
) -> GridFn:
    """
    Solves the limit equation of `PsiZeroLimit` for any gamma claims by
    trapezoidal marching on `steps` intervals of [0, u_max].

    Raises
    ------
    DomainError
        If the claim density is unbounded at 0 (total shape below 1).
    """
    validate_positive(u_max, "u_max")
    validate_natural(steps)
    limit = PsiZeroLimit(claims, lambda2)
    p: float = limit.at_zero
    h: float = u_max / steps
    nodes = h * np.arange(steps + 1)
    density = np.asarray(sum_density(claims, nodes), dtype=float)
    density[0] = _density_at_zero(claims)
    tail = 1.0 - np.asarray(sum_cdf(claims, nodes), dtype=float)
    psi = np.empty(steps + 1)
    psi[0] = p * tail[0]
    diagonal: float = 1.0 - 0.5 * p * h * density[0]
    for n in range(1, steps + 1):
        history: float = np.dot(psi[n - 1 : 0 : -1], density[1:n])
        known: float = history + 0.5 * psi[0] * density[n]
        psi[n] = p * (h * known + tail[n]) / diagonal
    logger.debug("Marched limit equation over %d steps", steps)
    return GridFn(h, psi)


###############################################################################
## PRIVATE API
###############################################################################
def _density_at_zero(claims: Sequence[GammaComponent]) -> float:
    total: float = sum(g.shape for g in claims)
    if total < 1.0:
        raise DomainError("Claim density is unbounded at 0.")
    if total > 1.0:
        return 0.0
    return float(np.prod([g.rate ** g.shape for g in claims])) / gamma(total)
