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
from functools import lru_cache
from math import ceil, comb, factorial, log, pi
from typing import Callable, Union

import mpmath
import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import quad
from scipy.special import gammaln, hyp1f1, rgamma

from ..errors import DomainError, EvaluationError
from ..helpers import validate_natural, validate_positive

logger = logging.getLogger(__name__)

SERIES_TOLERANCE: float = 1e-16
MAX_SERIES_TERMS: int = 10_000
MAX_DERIVATIVE_ORDER: int = 4
FLOAT_SERIES_GROWTH: float = 1e2
KUMMER_ASYMPTOTIC_LIMIT: float = 700.0
GUARD_DIGITS: int = 20

RealOrArray = Union[float, np.ndarray]


###############################################################################
## MITTAG-LEFFLER PARAMETERS
###############################################################################
@dataclass(frozen=True)
class MlParams:
    """
    Orders of the two-parameter Mittag-Leffler function

        E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha*k + beta).

    Attributes
    ----------
    alpha: float
        First order, strictly positive.
    beta: float, default: 1.0
        Second order, strictly positive.
    """

    alpha: float
    beta: float = 1.0

    def __post_init__(self) -> None:
        validate_positive(self.alpha, "alpha")
        validate_positive(self.beta, "beta")

    @property
    def switch_radius(self) -> float:
        """
        Radius beyond which negative arguments leave the power series.
        """
        return switch_radius(self.alpha)


###############################################################################
## PUBLIC API
###############################################################################
def switch_radius(alpha: float) -> float:
    return min(5.0 / alpha, (200.0 * alpha) ** alpha)


def ml_eval(params: MlParams, z: ArrayLike) -> RealOrArray:
    """
    Evaluates the two-parameter Mittag-Leffler function on the real line.

    Parameters
    ----------
    params: MlParams
        The orders alpha and beta.
    z: ArrayLike
        Real argument(s).

    Returns
    -------
    out: float or numpy.ndarray
        E_{alpha,beta}(z), with the shape of `z`.

    Raises
    ------
    DomainError
        If any argument is not finite.
    EvaluationError
        If the selected method does not converge.

    Notes
    -----
    Inside the switch radius R(alpha) = min(5/alpha, (200 alpha)^alpha) and
    on the positive axis the power series is summed, in double precision
    when the largest term is moderate and with mpmath otherwise. Left of -R
    the function is evaluated from its integral representation when
    alpha < 1, from Kummer's transformation when alpha = 1, and from the
    high-precision series when alpha > 1.
    """
    values: np.ndarray = _as_real_array(z)
    out: np.ndarray = np.empty_like(values)
    radius: float = params.switch_radius
    alpha, beta = params.alpha, params.beta

    tail: np.ndarray = values < -radius
    inner: np.ndarray = ~tail
    cutoff: float = _float_series_cutoff(alpha, beta)
    float_mask: np.ndarray = inner & ((values >= 0) | (-values <= cutoff))
    precise_mask: np.ndarray = inner & ~float_mask

    if float_mask.any():
        out[float_mask] = _series_float(alpha, beta, values[float_mask])
    if precise_mask.any():
        out[precise_mask] = _map(
            lambda x: _series_precise(alpha, beta, x), values[precise_mask]
        )
    if tail.any():
        out[tail] = _map(lambda x: _tail(alpha, beta, x), values[tail])

    if not np.all(np.isfinite(out)):
        raise EvaluationError(
            f"Non-finite value of E_{{{alpha},{beta}}}", method="overflow"
        )
    return _unwrap(out, z)


def ml_deriv(params: MlParams, z: ArrayLike, k: int) -> RealOrArray:
    """
    Evaluates the k-th derivative of the Mittag-Leffler function.

    Parameters
    ----------
    params: MlParams
        The orders alpha and beta.
    z: ArrayLike
        Real argument(s).
    k: int
        Derivative order, 0 <= k <= 4.

    Returns
    -------
    out: float or numpy.ndarray
        The k-th derivative at `z`.

    Notes
    -----
    Inside the switch radius and on the positive axis the term-wise
    differentiated series is summed in high precision. Left of -R(alpha)
    the method of `ml_eval` is differentiated in z: the integral
    representation kernel for alpha < 1, Kummer's form
    k! e^z M(beta - 1, beta + k, -z) / Gamma(beta + k) for alpha = 1.
    """
    validate_natural(k, zero=True)
    if k > MAX_DERIVATIVE_ORDER:
        raise DomainError(
            f"Derivative order {k} > {MAX_DERIVATIVE_ORDER} not supported."
        )
    if k == 0:
        return ml_eval(params, z)
    values: np.ndarray = _as_real_array(z)
    alpha, beta = params.alpha, params.beta
    tail: np.ndarray = values < -params.switch_radius
    out: np.ndarray = np.empty_like(values)
    if (~tail).any():
        out[~tail] = _map(
            lambda x: _series_precise(alpha, beta, x, k), values[~tail]
        )
    if tail.any():
        out[tail] = _map(lambda x: _tail(alpha, beta, x, k), values[tail])
    return _unwrap(out, z)


def ml_laplace_transform(
    params: MlParams, s: float, a: float, k: int = 0
) -> float:
    """
    Closed form of the Laplace transform

        int_0^inf e^{-st} t^{alpha k + beta - 1} E^{(k)}(-a t^alpha) dt
            = k! s^{alpha - beta} / (s^alpha + a)^{k+1},

    valid for s > |a|^{1/alpha}.
    """
    validate_natural(k, zero=True)
    if s <= abs(a) ** (1.0 / params.alpha):
        raise DomainError(f"Transform requires s > |a|^(1/alpha), got {s}.")
    alpha, beta = params.alpha, params.beta
    return factorial(k) * s ** (alpha - beta) / (s ** alpha + a) ** (k + 1)


###############################################################################
## PRIVATE API
###############################################################################
def _as_real_array(z: ArrayLike) -> np.ndarray:
    values: np.ndarray = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(values)):
        raise DomainError("Mittag-Leffler arguments must be finite.")
    return np.atleast_1d(values).astype(float, copy=True)


def _unwrap(out: np.ndarray, z: ArrayLike) -> RealOrArray:
    if np.ndim(z) == 0:
        return float(out[0])
    return out.reshape(np.shape(z))


def _map(method: Callable[[float], float], values: np.ndarray) -> np.ndarray:
    return np.fromiter((method(float(x)) for x in values), float, len(values))


def _log_max_term(alpha: float, beta: float, x: float, k: int = 0) -> float:
    """
    Natural logarithm of the largest term of the (k times differentiated)
    series at |z| = x.
    """
    if x == 0:
        return float(gammaln(k + 1) - gammaln(alpha * k + beta))
    span: int = int(min(MAX_SERIES_TERMS, ceil(max(x, 1.0) ** (1 / alpha))))
    j: np.ndarray = np.arange(k, k + span + 64, dtype=float)
    falling: np.ndarray = gammaln(j + 1) - gammaln(j - k + 1)
    logs: np.ndarray = falling + (j - k) * log(x) - gammaln(alpha * j + beta)
    return float(np.max(logs))


@lru_cache(maxsize=256)
def _float_series_cutoff(alpha: float, beta: float) -> float:
    """
    Largest |z| on the negative axis for which double precision summation
    keeps the largest term below FLOAT_SERIES_GROWTH.
    """
    limit: float = log(FLOAT_SERIES_GROWTH)
    radius: float = switch_radius(alpha)
    if _log_max_term(alpha, beta, radius) <= limit:
        return radius
    low, high = 0.0, radius
    for _ in range(60):
        middle: float = 0.5 * (low + high)
        if _log_max_term(alpha, beta, middle) <= limit:
            low = middle
        else:
            high = middle
    return low


def _series_float(alpha: float, beta: float, z: np.ndarray) -> np.ndarray:
    total: np.ndarray = np.full_like(z, float(rgamma(beta)))
    sign: np.ndarray = np.sign(z)
    with np.errstate(divide="ignore"):
        log_abs: np.ndarray = np.log(np.abs(z))
    done: np.ndarray = np.zeros(z.shape, dtype=bool)
    previous_small: np.ndarray = np.zeros(z.shape, dtype=bool)
    for k in range(1, MAX_SERIES_TERMS):
        with np.errstate(invalid="ignore"):
            term: np.ndarray = sign ** k * np.exp(
                k * log_abs - gammaln(alpha * k + beta)
            )
        term = np.where(done, 0.0, term)
        total += term
        small: np.ndarray = np.abs(term) <= SERIES_TOLERANCE * np.abs(total)
        done |= small & previous_small
        previous_small = small
        if done.all():
            logger.debug("Float ML series converged after %d terms", k)
            return total
    raise EvaluationError(
        f"Series did not converge in {MAX_SERIES_TERMS} terms",
        method="power series",
    )


def _series_precise(alpha: float, beta: float, z: float, k: int = 0) -> float:
    growth: float = _log_max_term(alpha, beta, abs(z), k) / log(10)
    digits: int = GUARD_DIGITS + max(0, ceil(growth))
    with mpmath.workdps(digits):
        x = mpmath.mpf(z)
        a = mpmath.mpf(alpha)
        b = mpmath.mpf(beta)
        tolerance = mpmath.mpf(10) ** (-GUARD_DIGITS)
        total = mpmath.mpf(0)
        previous_small: bool = False
        for j in range(k, k + MAX_SERIES_TERMS):
            term = mpmath.ff(j, k) * x ** (j - k) * mpmath.rgamma(a * j + b)
            total += term
            small: bool = abs(term) <= tolerance * abs(total)
            if small and previous_small:
                return float(total)
            previous_small = small
    raise EvaluationError(
        f"High-precision series did not converge at z={z}",
        method="mpmath power series",
    )


def _tail(alpha: float, beta: float, z: float, k: int = 0) -> float:
    """
    k-th derivative of E_{alpha,beta} left of the switch radius.
    """
    if alpha < 1:
        return _integral_tail(alpha, beta, z, k)
    if alpha == 1:
        return _kummer_tail(beta, z, k)
    return _series_precise(alpha, beta, z, k)


def _integral_tail(alpha: float, beta: float, z: float, k: int = 0) -> float:
    """
    E^{(k)}_{alpha,beta}(z) for z < 0 and 0 < alpha < 1 from the integral
    representation, after the substitution chi = t^alpha. Its kernel is

        e^{-t} t^{alpha-beta} Im[e^{i pi (1-beta)} / (t^alpha - z w)] / pi,
        w = e^{-i pi alpha},

    whose z-derivatives are taken in closed form.
    """
    if beta >= 1 + alpha:
        # E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z, by Leibniz
        total: float = 0.0
        for j in range(k + 1):
            inner: float = _integral_tail(alpha, beta - alpha, z, j)
            if j == 0:
                inner -= float(rgamma(beta - alpha))
            m: int = k - j
            weight: float = comb(k, j) * (-1) ** m * factorial(m)
            total += weight * inner / z ** (m + 1)
        return total

    w: complex = np.exp(-1j * pi * alpha)
    phase: complex = factorial(k) * np.exp(1j * pi * (1 - beta - k * alpha))
    power: float = alpha - beta

    def kernel(t: float) -> float:
        fraction: complex = phase / (t ** alpha - z * w) ** (k + 1)
        return np.exp(-t) * fraction.imag / pi

    # t^(alpha - beta) is integrable at the origin since beta < 1 + alpha
    head = quad(
        kernel,
        0.0,
        1.0,
        weight="alg",
        wvar=(power, 0.0),
        epsabs=0.0,
        epsrel=1e-13,
        limit=200,
        full_output=1,
    )
    body = quad(
        lambda t: t ** power * kernel(t),
        1.0,
        np.inf,
        epsabs=0.0,
        epsrel=1e-13,
        limit=200,
        full_output=1,
    )
    if len(head) > 3 or len(body) > 3:
        raise EvaluationError(
            f"Quadrature failed at z={z}", method="integral representation"
        )
    return head[0] + body[0]


def _kummer_tail(beta: float, z: float, k: int = 0) -> float:
    """
    E^{(k)}_{1,beta}(z) = k! e^z M(beta - 1, beta + k, -z) / Gamma(beta + k),
    or its asymptotic series once e^z underflows.
    """
    if -z > KUMMER_ASYMPTOTIC_LIMIT:
        terms = [
            -float(rgamma(beta - m))
            * (-1) ** k
            * factorial(m + k - 1)
            / factorial(m - 1)
            * z ** (-m - k)
            for m in range(1, 21)
        ]
        return float(sum(terms))
    return float(
        factorial(k)
        * rgamma(beta + k)
        * np.exp(z)
        * hyp1f1(beta - 1.0, beta + k, -z)
    )
