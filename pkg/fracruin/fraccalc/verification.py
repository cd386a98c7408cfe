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
from math import factorial, gamma, isclose, prod
from typing import Callable, List, Sequence, Union

import mpmath
import numpy as np
from scipy.integrate import quad

from ..errors import ContractViolationError, DomainError, EvaluationError
from ..models import Component, GammaComponent
from .chain import apply_chain
from .expoly import ExpPolynomial
from .grid import GridFn, Origin
from .operator import FracOp, OperatorChain, OperatorKind
from .quadrature import (
    QUAD_LIMIT,
    left_rl_deriv,
    left_rl_integral,
    rfdo,
)

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]
Operand = Union[ExpPolynomial, RealFunction]

BOUNDARY_POINT: float = 1e-8
ADJOINT_TAIL: float = 1e-12


###############################################################################
## IDENTITY REPORT
###############################################################################
@dataclass(frozen=True)
class IdentityReport:
    """
    Both sides of a numerically checked identity.

    Attributes
    ----------
    lhs: float or numpy.ndarray
        Left side value(s).
    rhs: float or numpy.ndarray
        Right side value(s).
    tol: float
        Accepted relative discrepancy.
    """

    lhs: Union[float, np.ndarray]
    rhs: Union[float, np.ndarray]
    tol: float

    @property
    def discrepancy(self) -> float:
        """
        max |lhs - rhs| / max(|rhs|), with the denominator floored at 1e-12.
        """
        gap = np.max(np.abs(np.asarray(self.lhs) - np.asarray(self.rhs)))
        scale = max(float(np.max(np.abs(self.rhs))), 1e-12)
        return float(gap) / scale

    @property
    def passed(self) -> bool:
        return self.discrepancy < self.tol


###############################################################################
## ADJOINT IDENTITY
###############################################################################
def check_adjoint(
    r: float,
    alpha: float,
    f: Operand,
    g: ExpPolynomial,
    tol: float = 1e-4,
) -> IdentityReport:
    """
    Checks the fractional integration by parts formula

        int_0^inf LFDO[f](x) g(x) dx = int_0^inf f(x) RFDO[g](x) dx,

    where LFDO = e^{-alpha x} D^r e^{alpha x} (left Riemann-Liouville from 0)
    and RFDO = e^{alpha x} cD^r_- e^{-alpha x} (right Caputo to infinity).

    Parameters
    ----------
    r: float
        Order of both operators.
    alpha: float
        Exponential tilt.
    f: ExpPolynomial or callable
        Left operand, supported on [0, inf) and vanishing at 0 together with
        its fractional integrals.
    g: ExpPolynomial
        Right operand; g e^{-alpha x} must decay exponentially.
    tol: float, default: 1e-4
        Accepted relative discrepancy.

    Returns
    -------
    out: IdentityReport
        Both sides and the verdict.

    Raises
    ------
    ContractViolationError
        If `g` does not decay exponentially.
    EvaluationError
        If a quadrature fails.

    Notes
    -----
    Both integrals stop at the first Y = 2^k for which max(1, |f(Y)|) times
    the tail mass of g beyond Y is below 1e-12.
    """
    lfdo = _lfdo(f, r, alpha)
    cutoff: float = _adjoint_cutoff(f, g)
    lhs: float = _truncated_integral(
        lambda x: lfdo(x) * float(np.real(g(x))), cutoff, tol
    )
    rhs: float = _truncated_integral(
        lambda x: float(np.real(f(x))) * float(rfdo(g, r, alpha, x)),
        cutoff,
        tol,
    )
    report = IdentityReport(lhs, rhs, tol)
    logger.info(
        "Adjoint check r=%g alpha=%g: lhs=%.12g rhs=%.12g",
        r,
        alpha,
        lhs,
        rhs,
    )
    return report


###############################################################################
## DENSITY EQUATION RESIDUAL
###############################################################################
def density_operator(components: Sequence[Component]) -> OperatorChain:
    """
    Operator annihilating the density of a sum of independent components:
    an LFDO of order r and shift lambda per gamma component, and
    D^mu + lambda per Mittag-Leffler component.
    """
    ops: List[FracOp] = []
    for component in components:
        if isinstance(component, GammaComponent):
            ops.append(
                FracOp(
                    OperatorKind.LFDO,
                    component.shape,
                    shift=component.rate,
                )
            )
        else:
            ops.append(
                FracOp(
                    OperatorKind.LEFT_RL_DERIVATIVE,
                    component.mu,
                    addend=component.rate,
                )
            )
    return OperatorChain(tuple(ops))


def residual_density_fde(
    components: Sequence[Component], step: float, t_max: float
) -> GridFn:
    """
    Residual of the density equation of T = sum of `components` on the grid
    0, step, ..., t_max.

    Sums of integer-shape gamma components use the closed-form
    hypoexponential density and exact derivatives. Otherwise the density
    is sampled with its known origin behaviour, sums are convolved on the
    grid, and the operators are applied by Grunwald-Letnikov sums. Only the
    interior away from t = 0 is meaningful, e.g. `residual.max_abs(0.1, 5)`.

    Raises
    ------
    EvaluationError
        If the convolution of component densities underflows.
    """
    if not components:
        raise DomainError("At least one component is required.")
    chain: OperatorChain = density_operator(components)
    if all(
        isinstance(c, GammaComponent) and c.has_integer_shape
        for c in components
    ):
        density = hypoexponential_density(components)
        logger.debug("Closed-form density with %d terms", len(density.terms))
        return apply_chain(chain, density, step=step, t_max=t_max)

    grids = [
        GridFn.from_callable(c.density, step, t_max, c.origin)
        for c in components
    ]
    density_grid: GridFn = grids[0]
    for grid in grids[1:]:
        density_grid = density_grid.convolve(grid)
    return apply_chain(chain, density_grid)


def hypoexponential_density(
    gammas: Sequence[GammaComponent],
) -> ExpPolynomial:
    """
    Density of a sum of independent Gamma(n_i, lambda_i), n_i integer and
    lambda_i distinct, by partial fractions of its Laplace transform

        prod_i (lambda_i / (lambda_i + s))^{n_i}.
    """
    if len({g.rate for g in gammas}) != len(gammas):
        raise DomainError("Rates must be pairwise distinct.")
    scale = prod(g.rate ** g.shape for g in gammas)
    terms = []
    for i, gi in enumerate(gammas):
        n = int(gi.shape)
        others = [g for j, g in enumerate(gammas) if j != i]

        def rest(s, others=others):
            return scale * mpmath.fprod(
                (g.rate + s) ** (-int(g.shape)) for g in others
            )

        coefficients = mpmath.taylor(rest, -gi.rate, n - 1)
        for k in range(1, n + 1):
            a = float(coefficients[n - k]) / factorial(k - 1)
            terms.append((a, k - 1, gi.rate))
    return ExpPolynomial(tuple(terms))


###############################################################################
## CONVOLUTION RULE
###############################################################################
def check_convolution_rule(
    r: float,
    kernel: RealFunction,
    kernel_origin: Origin,
    f: RealFunction,
    points: Sequence[float],
    tol: float = 1e-4,
) -> IdentityReport:
    """
    Checks D^r[K * f] = [D^r K] * f + (I^{1-r} K)(0+) f for 0 < r < 1.

    Parameters
    ----------
    r: float
        Order in (0, 1).
    kernel: callable
        Kernel K on (0, inf).
    kernel_origin: Tuple[float, float]
        Behaviour K(x) ~ c x^q at 0+, which fixes the limit term.
    f: callable
        Smooth operand.
    points: Sequence[float]
        Evaluation points x > 0.
    tol: float, default: 1e-4
        Accepted relative discrepancy.
    """
    if not 0 < r < 1:
        raise DomainError(f"Convolution rule needs 0 < r < 1, got {r}.")
    limit: float = _limit_term(r, kernel_origin)

    def convolution(x: float) -> float:
        return _finite_integral(lambda s: kernel(s) * f(x - s), 0.0, x)

    lhs = np.array([left_rl_deriv(convolution, r, x) for x in points])
    rhs = np.array(
        [
            _finite_integral(
                lambda s: left_rl_deriv(kernel, r, s) * f(x - s), 0.0, x
            )
            + limit * f(x)
            for x in points
        ]
    )
    return IdentityReport(lhs, rhs, tol)


###############################################################################
## BOUNDARY VALUES
###############################################################################
def boundary_values(component: Component) -> float:
    """
    Boundary value of the single-component density equation: lambda^r for
    Gamma(r, lambda), lambda for ML(mu, lambda).
    """
    if isinstance(component, GammaComponent):
        return component.rate ** component.shape
    return component.rate


def check_boundary_value(
    component: Component,
    point: float = BOUNDARY_POINT,
    tol: float = 1e-4,
) -> IdentityReport:
    """
    Spot-checks the boundary condition of a single component of order below
    one: the tilted fractional integral of order 1 - r (1 - mu) of the
    density, evaluated at the small `point`, against `boundary_values`.
    """
    if isinstance(component, GammaComponent):
        order, shift = component.shape, component.rate
    else:
        order, shift = component.mu, 0.0
    if not order < 1:
        raise DomainError("Boundary spot-checks need an order below one.")

    def tilted(y: float) -> float:
        return np.exp(shift * y) * float(component.density(y))

    integral = left_rl_integral(tilted, 1.0 - order, point)
    lhs: float = float(np.exp(-shift * point) * integral)
    return IdentityReport(lhs, boundary_values(component), tol)


###############################################################################
## PRIVATE API
###############################################################################
def _lfdo(f: Operand, r: float, alpha: float) -> RealFunction:
    integer: bool = isclose(r, round(r), abs_tol=1e-14)
    if isinstance(f, ExpPolynomial) and integer:
        image = f.tilt(alpha).derivative(int(round(r))).tilt(-alpha)
        return lambda x: float(np.real(image(x)))

    def tilted(y: float) -> float:
        return float(np.exp(alpha * y) * np.real(f(y)))

    return lambda x: float(np.exp(-alpha * x) * left_rl_deriv(tilted, r, x))


def _adjoint_cutoff(f: Operand, g: ExpPolynomial) -> float:
    """
    Smallest tried Y = 2^k with max(1, |f(Y)|) * int_Y^inf |g| below
    ADJOINT_TAIL.
    """
    if not g.decay_rate > 0:
        raise ContractViolationError(
            "The adjoint check needs an exponentially decaying g; smallest "
            f"decay rate is {g.decay_rate}."
        )
    length: float = 1.0
    for _ in range(60):
        scale: float = max(1.0, abs(complex(f(length))))
        if scale * g.tail_mass(length) < ADJOINT_TAIL:
            logger.debug("Adjoint integrals cut off at %g", length)
            return length
        length *= 2.0
    raise EvaluationError(
        "No cut-off satisfies the tail tolerance", method="tail bound"
    )


def _truncated_integral(
    integrand: RealFunction, cutoff: float, tol: float
) -> float:
    total: float = 0.0
    error: float = 0.0
    for a, b in ((0.0, min(1.0, cutoff)), (1.0, cutoff)):
        if b <= a:
            continue
        result = quad(
            integrand,
            a,
            b,
            epsabs=1e-14,
            epsrel=1e-1 * tol,
            limit=QUAD_LIMIT,
            full_output=1,
        )
        total += result[0]
        error += result[1]
    if not np.isfinite(total) or error > 0.5 * tol * max(abs(total), 1e-12):
        raise EvaluationError(
            f"Adjoint quadrature on [0, {cutoff}] failed",
            method="adaptive quadrature",
        )
    return total


def _finite_integral(integrand: RealFunction, a: float, b: float) -> float:
    if b <= a:
        return 0.0
    result = quad(
        integrand,
        a,
        b,
        epsabs=1e-12,
        epsrel=1e-10,
        limit=QUAD_LIMIT,
        full_output=1,
    )
    if len(result) > 3 and result[1] > 1e-8:
        raise EvaluationError(
            f"Quadrature on [{a}, {b}] failed", method="adaptive quadrature"
        )
    return result[0]


def _limit_term(r: float, origin: Origin) -> float:
    exponent, coefficient = origin
    power: float = exponent + 1.0 - r
    if power > 1e-12:
        return 0.0
    if power < -1e-12:
        raise DomainError("Kernel too singular: the limit term diverges.")
    return coefficient * gamma(exponent + 1.0)

