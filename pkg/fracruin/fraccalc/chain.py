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
from typing import Callable, Optional, Union

import numpy as np

from ..errors import ContractViolationError, DomainError
from .expoly import ExpPolynomial
from .grid import GridFn, Origin
from .grunwald import gl_apply
from .operator import FracOp, OperatorChain, OperatorKind
from .quadrature import right_caputo_deriv

logger = logging.getLogger(__name__)

Operand = Union[GridFn, ExpPolynomial, Callable[[np.ndarray], np.ndarray]]

_TILTED = (OperatorKind.LFDO, OperatorKind.RFDO)


###############################################################################
## APPLY CHAIN
###############################################################################
def apply_chain(
    chain: OperatorChain,
    f: Operand,
    step: Optional[float] = None,
    t_max: Optional[float] = None,
    origin: Optional[Origin] = None,
) -> GridFn:
    """
    Applies an operator chain by left composition (last operator first).

    Parameters
    ----------
    chain: OperatorChain
        The operators, their scales and addends.
    f: GridFn, ExpPolynomial or callable
        Operand. Grid functions admit left operators only. Exponential
        polynomials admit integer-order operators of any side, and right
        operators on pure exponential terms, for which the numerically
        computed eigenvalue is used. Other callables are sampled first.
    step: float, optional
        Grid spacing, required unless `f` is a GridFn.
    t_max: float, optional
        Grid length, required unless `f` is a GridFn.
    origin: Tuple[float, float], optional
        Leading behaviour at 0 of a sampled callable (see GridFn).

    Returns
    -------
    out: GridFn
        The result on the grid.

    Raises
    ------
    ContractViolationError
        If an operator cannot act on the operand's representation.
    """
    current: Operand = f
    for op, scale in chain.application_order():
        logger.debug("Applying %s of order %g", op.kind.value, op.order)
        if isinstance(current, ExpPolynomial) and _acts_exactly(op, current):
            current = _apply_analytic(op, scale, current)
            continue
        if not isinstance(current, GridFn):
            current = _sample(current, step, t_max, origin)
        current = _apply_on_grid(op, scale, current)
    if not isinstance(current, GridFn):
        current = _sample(current, step, t_max, origin)
    return current


###############################################################################
## APPLY CHAIN EXACTLY
###############################################################################
def apply_chain_exact(chain: OperatorChain, f: ExpPolynomial) -> ExpPolynomial:
    """
    Applies an operator chain to an exponential polynomial without sampling.

    Raises
    ------
    ContractViolationError
        If some operator has no exact action on the running result, such as
        a fractional left operator.
    """
    current: ExpPolynomial = f
    for op, scale in chain.application_order():
        if not _acts_exactly(op, current):
            raise ContractViolationError(
                f"{op.kind.value} of order {op.order} has no exact action."
            )
        current = _apply_analytic(op, scale, current)
    return current


###############################################################################
## PRIVATE API
###############################################################################
def _sample(
    f: Operand,
    step: Optional[float],
    t_max: Optional[float],
    origin: Optional[Origin],
) -> GridFn:
    if step is None or t_max is None:
        raise DomainError("Sampling a callable needs `step` and `t_max`.")
    if isinstance(f, ExpPolynomial):
        return GridFn.from_callable(lambda x: np.real(f(x)), step, t_max)
    return GridFn.from_callable(f, step, t_max, origin)


def _acts_exactly(op: FracOp, f: ExpPolynomial) -> bool:
    if op.kind.is_left:
        return (
            op.is_integer_order
            and op.kind is not OperatorKind.LEFT_RL_INTEGRAL
        )
    if any(degree > 0 for _, degree, _ in f.terms):
        raise ContractViolationError(
            "Right operators act on exponential terms only."
        )
    return True


def _apply_analytic(
    op: FracOp, scale: float, f: ExpPolynomial
) -> ExpPolynomial:
    shift: float = op.shift if op.kind in _TILTED else 0.0
    if op.kind.is_left:
        order: int = int(round(op.order))
        image = f.tilt(shift).derivative(order).tilt(-shift)
    else:
        terms = []
        for a, degree, rate in f.terms:
            unit = ExpPolynomial.exponential(rate + shift)
            eigenvalue = right_caputo_deriv(unit, op.order, 0.0)
            terms.append((a * eigenvalue, degree, rate))
        image = ExpPolynomial(tuple(terms))
    return image.scale(scale) + f.scale(op.addend)


def _apply_on_grid(op: FracOp, scale: float, f: GridFn) -> GridFn:
    if not op.kind.is_left:
        raise ContractViolationError(
            "Right operators need an analytic operand, not grid samples."
        )
    if op.kind is OperatorKind.LFDO:
        image: GridFn = gl_apply(f.tilt(op.shift), op.order).tilt(-op.shift)
    else:
        image = gl_apply(f, op.signed_order)
    return GridFn(f.step, scale * image.values + op.addend * f.values)

