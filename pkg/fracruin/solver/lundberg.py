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

from ..errors import UnsupportedSpecError
from ..models import ModelSpec
from .solution import RuinSolution

logger = logging.getLogger(__name__)

LUNDBERG_TOLERANCE: float = 1e-8


###############################################################################
## LUNDBERG REPORT
###############################################################################
@dataclass(frozen=True)
class LundbergReport:
    """
    Value of M_X(s) M_T(-c s) - 1 at the adjustment coefficient s.

    Attributes
    ----------
    s: float
        The adjustment coefficient taken from the solution.
    value: float
        M_X(s) M_T(-c s) - 1.
    tol: float
        Accepted absolute value.
    """

    s: float
    value: float
    tol: float = LUNDBERG_TOLERANCE

    @property
    def passed(self) -> bool:
        return abs(self.value) < self.tol


###############################################################################
## LUNDBERG CHECK
###############################################################################
def lundberg_check(
    spec: ModelSpec,
    solution: RuinSolution,
    tol: float = LUNDBERG_TOLERANCE,
) -> LundbergReport:
    """
    Checks that the decay rate of psi solves Lundberg's fundamental equation

        M_X(s) M_T(-c s) = 1,

    with M_X(s) = alpha / (alpha - s) and M_T(-c s) = (lambda1 /
    (lambda1 + c s))^r.

    Raises
    ------
    UnsupportedSpecError
        Unless the model has a single Gamma(r, lambda1) inter-arrival
        component and Exp(alpha) claims.
    """
    if (
        len(spec.interarrival_gammas) != 1
        or spec.interarrival_mls
        or len(spec.claim_gammas) != 1
        or spec.claim_gammas[0].shape != 1.0
    ):
        raise UnsupportedSpecError(
            "Lundberg check needs one gamma inter-arrival component and "
            "exponential claims."
        )
    interarrival = spec.interarrival_gammas[0]
    alpha: float = spec.claim_gammas[0].rate
    s: float = solution.adjustment_coefficient
    c: float = spec.premium_rate
    claim_mgf: float = alpha / (alpha - s)
    time_mgf: float = (interarrival.rate / (interarrival.rate + c * s)) ** (
        interarrival.shape
    )
    report = LundbergReport(s, claim_mgf * time_mgf - 1.0, tol)
    logger.debug("Lundberg equation at s=%.15g: %.3e", s, report.value)
    return report
