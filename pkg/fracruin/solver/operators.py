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
from typing import List

from ..fraccalc import (
    ExpPolynomial,
    FracOp,
    OperatorChain,
    OperatorKind,
    apply_chain_exact,
)
from ..models import ModelSpec

logger = logging.getLogger(__name__)


###############################################################################
## ADJOINT OPERATOR
###############################################################################
def adjoint_operator(spec: ModelSpec) -> OperatorChain:
    """
    Adjoint of the inter-arrival density operator evaluated at c d/du,

        prod_i RFDO(r_i, lambda_1i / c) prod_j (cD^{mu_j}_- + lambda_2j),

    with every operator of order r multiplied by c^r. It is the operator
    acting on the non-ruin probability in the integro-differential form of
    the renewal equation.
    """
    c: float = spec.premium_rate
    ops: List[FracOp] = [
        FracOp(OperatorKind.RFDO, g.shape, shift=g.rate / c)
        for g in spec.interarrival_gammas
    ]
    ops += [
        FracOp(OperatorKind.RIGHT_CAPUTO_DERIVATIVE, m.mu, addend=m.rate)
        for m in spec.interarrival_mls
    ]
    return OperatorChain.premium_scaled(ops, c)


def adjoint_symbol(spec: ModelSpec, z: complex) -> complex:
    """
    Eigenvalue of `adjoint_operator` on e^{-z u}, Re(z) > 0. It equals
    Delta(z).
    """
    image = apply_chain_exact(
        adjoint_operator(spec), ExpPolynomial.exponential(z)
    )
    symbol = complex(image(0.0))
    logger.debug("Adjoint symbol at z=%s: %s", z, symbol)
    return symbol
