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
from math import ceil, comb, isclose
from typing import Callable, Union

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma

from ..errors import ContractViolationError, DomainError, EvaluationError
from .expoly import ExpPolynomial

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]
Operand = Union[ExpPolynomial, RealFunction]

QUAD_RELATIVE_TOLERANCE: float = 1e-12
QUAD_LIMIT: int = 200
FINITE_DIFFERENCE_STEP: float = 1e-3


###############################################################################
## RIGHT CAPUTO DERIVATIVE
###############################################################################
def right_caputo_deriv(
    f: ExpPolynomial, r: float, x: float, tail_tol: float = 1e-12
) -> float:
    """
    Right Caputo derivative on [x, inf),

        cD^r_- f(x) = (-1)^n / Gamma(n - r) int_x^inf (y - x)^{n-r-1}
                      f^{(n)}(y) dy,   n = ceil(r),

    reducing to (-1)^n f^{(n)}(x) for integer r. With this sign convention
    e^{-lambda x} is an eigenfunction with eigenvalue lambda^r.

    Parameters
    ----------
    f: ExpPolynomial
        Analytic operand with exact derivatives.
    r: float
        Order, r > 0.
    x: float
        Evaluation point.
    tail_tol: float, default: 1e-12
        Bound for the neglected part of the integral beyond the cut-off.

    Returns
    -------
    out: float
        The derivative (real part for real operands).

    Raises
    ------
    ContractViolationError
        If the operand does not decay exponentially.
    """
    if not r > 0:
        raise DomainError(f"Derivative order must be positive, got {r}.")
    if not f.decay_rate > 0:
        raise ContractViolationError(
            "Right derivatives on [x, inf) need an exponentially decaying "
            f"operand; smallest decay rate is {f.decay_rate}."
        )
    if isclose(r, round(r), abs_tol=1e-14):
        n: int = int(round(r))
        return _real((-1) ** n * f.derivative(n)(x), f)

    n = ceil(r)
    exponent: float = n - r - 1.0
    integrand: ExpPolynomial = f.derivative(n)
    cutoff: float = _cutoff(integrand, exponent, x, tail_tol)

    def part(component: Callable[[complex], float]) -> float:
        result = quad(
            lambda y: component(integrand(y)),
            x,
            cutoff,
            weight="alg",
            wvar=(exponent, 0.0),
            epsabs=tail_tol,
            epsrel=QUAD_RELATIVE_TOLERANCE,
            limit=QUAD_LIMIT,
            full_output=1,
        )
        if len(result) > 3:
            raise EvaluationError(
                f"Right Caputo quadrature failed at x={x}",
                method="algebraic-weight quadrature",
            )
        return result[0]

    total: complex = part(np.real)
    if not f.is_real:
        total += 1j * part(np.imag)
    return _real((-1) ** n * total / gamma(n - r), f)


def rfdo(
    f: ExpPolynomial,
    r: float,
    shift: float,
    x: float,
    tail_tol: float = 1e-12,
) -> float:
    """
    Right fractional differential operator

        e^{shift x} cD^r_-[e^{-shift x} f](x).
    """
    tilted: ExpPolynomial = f.tilt(-shift)
    return np.exp(shift * x) * right_caputo_deriv(tilted, r, x, tail_tol)


###############################################################################
## LEFT RIEMANN-LIOUVILLE OPERATORS ON CALLABLES
###############################################################################
def left_rl_integral(f: RealFunction, r: float, x: float) -> float:
    """
    Left Riemann-Liouville integral from 0 of order `r` at `x` by
    algebraic-weight quadrature of the kernel (x - y)^{r-1}.
    """
    if not r > 0:
        raise DomainError(f"Integral order must be positive, got {r}.")
    if x <= 0:
        return 0.0
    result = quad(
        f,
        0.0,
        x,
        weight="alg",
        wvar=(0.0, r - 1.0),
        epsabs=0.0,
        epsrel=QUAD_RELATIVE_TOLERANCE,
        limit=QUAD_LIMIT,
        full_output=1,
    )
    if len(result) > 3:
        raise EvaluationError(
            f"Fractional integral quadrature failed at x={x}",
            method="algebraic-weight quadrature",
        )
    return result[0] / float(gamma(r))


def left_rl_deriv(f: Operand, r: float, x: float) -> float:
    """
    Left Riemann-Liouville derivative from 0 of order `r` at `x > 0`.

    Integer orders of an ExpPolynomial are exact. Otherwise the derivative
    is d^n/dx^n of the fractional integral of order n - r, with the outer
    derivative taken by central differences.
    """
    if not r > 0:
        raise DomainError(f"Derivative order must be positive, got {r}.")
    if not x > 0:
        raise DomainError(f"Left derivative needs x > 0, got {x}.")
    integer: bool = isclose(r, round(r), abs_tol=1e-14)
    if integer and isinstance(f, ExpPolynomial):
        return _real(f.derivative(int(round(r)))(x), f)

    n: int = int(round(r)) if integer else ceil(r)
    nu: float = n - r
    if integer:
        primitive: RealFunction = f
    else:
        primitive = lambda y: left_rl_integral(f, nu, y)
    step: float = min(FINITE_DIFFERENCE_STEP * max(1.0, x), x / (n + 1))
    total: float = 0.0
    for j in range(n + 1):
        offset: float = (n / 2.0 - j) * step
        total += (-1) ** j * comb(n, j) * primitive(x + offset)
    return total / step ** n


###############################################################################
## PRIVATE API
###############################################################################
def _cutoff(
    integrand: ExpPolynomial, exponent: float, x: float, tail_tol: float
) -> float:
    """
    Smallest tried Y = x + 2^k with (Y - x)^{exponent} * tail mass < tol.
    """
    length: float = 1.0
    for _ in range(200):
        bound: float = length ** exponent * integrand.tail_mass(x + length)
        if bound < tail_tol:
            logger.debug("Right Caputo cut-off at x + %g", length)
            return x + length
        length *= 2.0
    raise EvaluationError(
        "No cut-off satisfies the tail tolerance", method="tail bound"
    )


def _real(value: complex, f: Operand) -> float:
    if isinstance(f, ExpPolynomial) and not f.is_real:
        return value
    return float(np.real(value))
