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

import numpy as np

from ..errors import DomainError
from .grid import GridFn

logger = logging.getLogger(__name__)


###############################################################################
## GRUNWALD-LETNIKOV WEIGHTS
###############################################################################
def gl_weights(order: float, size: int) -> np.ndarray:
    """
    Grunwald-Letnikov weights w_k = (-1)^k binom(order, k), k < size.

    A negative `order` gives the weights of the fractional integral.
    """
    k: np.ndarray = np.arange(1, size)
    return np.concatenate(([1.0], np.cumprod((k - order - 1.0) / k)))


###############################################################################
## POINTWISE OPERATORS
###############################################################################
def gl_left_deriv(f: GridFn, r: float, x: float) -> float:
    """
    Left Riemann-Liouville derivative of order `r` at the grid node `x`,

        D^r f(x_n) ~ h^{-r} sum_{k=0}^{n} w_k f(x_{n-k}),

    with first order accuracy in h. f is extended by zero for x < 0.

    Parameters
    ----------
    f: GridFn
        Function sampled on a uniform grid starting at 0.
    r: float
        Order of the derivative, r > 0.
    x: float
        Grid node at which the derivative is evaluated.

    Returns
    -------
    out: float
        The approximate derivative.

    Raises
    ------
    DomainError
        If `x` is not a grid node.
    """
    if not r > 0:
        raise DomainError(f"Derivative order must be positive, got {r}.")
    return _gl_point(f, r, x)


def gl_left_integral(f: GridFn, r: float, x: float) -> float:
    """
    Left Riemann-Liouville integral of order `r` at the grid node `x`.
    """
    if not r > 0:
        raise DomainError(f"Integral order must be positive, got {r}.")
    return _gl_point(f, -r, x)


###############################################################################
## GRID OPERATOR
###############################################################################
def gl_apply(f: GridFn, order: float) -> GridFn:
    """
    Applies the Grunwald-Letnikov operator of signed `order` (negative for
    integrals) on the whole grid at once by FFT convolution.
    """
    size: int = f.values.size
    weights: np.ndarray = gl_weights(order, size)
    length: int = int(2 ** np.ceil(np.log2(2 * size - 1)))
    spectrum = np.fft.rfft(weights, length) * np.fft.rfft(f.values, length)
    values: np.ndarray = np.fft.irfft(spectrum, length)[:size]
    values *= f.step ** (-order)
    logger.debug("GL operator of order %g applied on %d nodes", order, size)
    return f.with_values(values)


###############################################################################
## PRIVATE API
###############################################################################
def _gl_point(f: GridFn, order: float, x: float) -> float:
    n: int = f.index_of(x)
    weights: np.ndarray = gl_weights(order, n + 1)
    history: np.ndarray = f.values[n::-1]
    return float(f.step ** (-order) * np.dot(weights, history))
