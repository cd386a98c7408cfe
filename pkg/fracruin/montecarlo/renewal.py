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
from typing import Callable, Sequence

from scipy.integrate import quad

from ..errors import QuadratureError
from ..models import ModelSpec, claim_cdf, claim_density, interarrival_density
from ..solver import RuinSolution, eval_ruin

logger = logging.getLogger(__name__)

QUAD_LIMIT: int = 200
QUAD_ABSOLUTE: float = 1e-10
QUAD_RELATIVE: float = 1e-9
QUAD_ERROR_LIMIT: float = 1e-6


###############################################################################
## RENEWAL EQUATION RESIDUAL
###############################################################################
def renewal_equation_residual(
    spec: ModelSpec, solution: RuinSolution, u_grid: Sequence[float]
) -> float:
    """
    max |psi(u) - R(u)| over `u_grid`, where

        R(u) = int_0^inf f_T(t) [int_0^{u+ct} psi(u + ct - y) dF_X(y)
                                 + 1 - F_X(u + ct)] dt

    is evaluated by nested adaptive quadrature. The half line is split at
    t = 1 and the tail mapped to (0, 1] by t = 1/s.

    Raises
    ------
    QuadratureError
        If a quadrature does not converge, naming the capital u.
    """
    c: float = spec.premium_rate
    worst: float = 0.0
    for u in u_grid:

        def outer(t: float, u: float = u) -> float:
            density: float = float(interarrival_density(spec, t))
            if density == 0.0:
                return 0.0
            return density * _after_claim(spec, solution, u + c * t, u)

        def tail(s: float) -> float:
            return outer(1.0 / s) / s ** 2 if s > 0 else 0.0

        rhs: float = _integrate(outer, 0.0, 1.0, u) + _integrate(
            tail, 0.0, 1.0, u
        )
        residual: float = abs(float(eval_ruin(solution, u)) - rhs)
        logger.debug("Renewal residual at u=%g: %.3e", u, residual)
        worst = max(worst, residual)
    logger.info("Renewal equation residual %.3e", worst)
    return worst


###############################################################################
## PRIVATE API
###############################################################################
def _after_claim(
    spec: ModelSpec, solution: RuinSolution, w: float, u: float
) -> float:
    """
    Ruin probability seen from surplus w just before a claim.
    """

    def integrand(y: float) -> float:
        remaining: float = max(w - y, 0.0)
        return float(eval_ruin(solution, remaining)) * float(
            claim_density(spec, y)
        )

    survived: float = _integrate(integrand, 0.0, w, u)
    return survived + 1.0 - float(claim_cdf(spec, w))


def _integrate(
    integrand: Callable[[float], float], a: float, b: float, u: float
) -> float:
    if b <= a:
        return 0.0
    result = quad(
        integrand,
        a,
        b,
        epsabs=QUAD_ABSOLUTE,
        epsrel=QUAD_RELATIVE,
        limit=QUAD_LIMIT,
        full_output=1,
    )
    if len(result) > 3 and result[1] > QUAD_ERROR_LIMIT:
        raise QuadratureError(
            f"Quadrature on [{a:g}, {b:g}] failed ({result[3]})", u
        )
    return result[0]
