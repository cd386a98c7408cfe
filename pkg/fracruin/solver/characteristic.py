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
from typing import List, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from ..errors import DomainError, UnsupportedSpecError
from ..models import ModelSpec

logger = logging.getLogger(__name__)

Factor = Tuple[complex, complex]


###############################################################################
## CHARACTERISTIC FUNCTION
###############################################################################
def characteristic_fn(spec: ModelSpec, z: complex) -> complex:
    """
    Characteristic function of the renewal model,

        F(z) = prod_k (alpha_k - z)^{s_k} Delta(z)
               - Lambda prod_k alpha_k^{s_k},

        Delta(z) = prod_j (c^{mu_j} z^{mu_j} + lambda_2j)
                   prod_i (c z + lambda_1i)^{r_i},

    with principal-branch complex powers. F(0) = 0 for every model.

    Parameters
    ----------
    spec: ModelSpec
        The model.
    z: complex
        Point with Re(z) >= 0.

    Returns
    -------
    out: complex
        The value F(z).

    Raises
    ------
    DomainError
        If Re(z) < 0, where the principal branches are cut.
    """
    values, _ = _factors(spec, _check_point(z))
    origin, _ = _factors(spec, 0j)
    return complex(np.prod(values) - np.prod(origin))


def characteristic_derivative(spec: ModelSpec, z: complex) -> complex:
    """
    Analytic derivative F'(z) by the product rule; requires z != 0 when the
    model has Mittag-Leffler components.
    """
    z = _check_point(z)
    values, derivatives = _factors(spec, z)
    total: complex = 0j
    for i, derivative in enumerate(derivatives):
        rest = np.prod([v for j, v in enumerate(values) if j != i])
        total += derivative * rest
    return complex(total)


def delta(spec: ModelSpec, z: complex) -> complex:
    """
    Delta(z) = prod_j (c^{mu_j} z^{mu_j} + lambda_2j)
               prod_i (c z + lambda_1i)^{r_i}.
    """
    z = _check_point(z)
    c: float = spec.premium_rate
    value: complex = 1.0 + 0j
    for m in spec.interarrival_mls:
        value *= c ** m.mu * z ** m.mu + m.rate
    for g in spec.interarrival_gammas:
        value *= (c * z + g.rate) ** g.shape
    return value


###############################################################################
## POLYNOMIAL FORM
###############################################################################
def characteristic_polynomial(spec: ModelSpec) -> Polynomial:
    """
    F(z) / z as a polynomial, for models with integer shapes only.

    Raises
    ------
    UnsupportedSpecError
        If the characteristic function is not polynomial.
    """
    if not spec.is_polynomial:
        raise UnsupportedSpecError(
            "The characteristic function is polynomial only for integer "
            "shapes without Mittag-Leffler components."
        )
    c: float = spec.premium_rate
    product = Polynomial([1.0])
    for g in spec.claim_gammas:
        product *= Polynomial([g.rate, -1.0]) ** int(g.shape)
    for g in spec.interarrival_gammas:
        product *= Polynomial([g.rate, c]) ** int(g.shape)
    coefficients: np.ndarray = product.coef.copy()
    logger.debug("Polynomial of degree %d", coefficients.size - 1)
    return Polynomial(coefficients[1:])


###############################################################################
## PRIVATE API
###############################################################################
def _check_point(z: complex) -> complex:
    z = complex(z)
    if not np.isfinite(z):
        raise DomainError(f"Non-finite point z={z}.")
    if z.real < 0:
        raise DomainError(
            f"Characteristic function needs Re(z) >= 0, got z={z}."
        )
    return z


def _factors(spec: ModelSpec, z: complex) -> Tuple[List[complex], List]:
    """
    Factors of prod_k (alpha_k - z)^{s_k} Delta(z) and their derivatives.
    """
    c: float = spec.premium_rate
    values: List[complex] = []
    derivatives: List[complex] = []
    for g in spec.claim_gammas:
        values.append((g.rate - z) ** g.shape)
        derivatives.append(-g.shape * (g.rate - z) ** (g.shape - 1.0))
    for m in spec.interarrival_mls:
        values.append(c ** m.mu * z ** m.mu + m.rate)
        derivatives.append(
            m.mu * c ** m.mu * z ** (m.mu - 1.0) if z != 0 else np.inf
        )
    for g in spec.interarrival_gammas:
        values.append((c * z + g.rate) ** g.shape)
        derivatives.append(g.shape * c * (c * z + g.rate) ** (g.shape - 1.0))
    return values, derivatives
