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

from typing import Any, Optional, Sequence


###############################################################################
## BASE ERROR
###############################################################################
class FracRuinError(Exception):
    """
    Base class for every error raised by fracruin.
    """


###############################################################################
## NUMERICAL ERRORS
###############################################################################
class DomainError(FracRuinError, ValueError):
    """
    An argument lies outside the domain where a function is defined.
    """


class EvaluationError(FracRuinError, ArithmeticError):
    """
    A numerical method failed to converge or produced a non-finite value.

    Parameters
    ----------
    message: str
        Description of the failure.
    method: str
        The numerical method that was attempted.
    """

    def __init__(self, message: str, method: str) -> None:
        self.method: str = method
        super().__init__(f"{message} [method: {method}]")


class QuadratureError(EvaluationError):
    """
    Adaptive quadrature failed while evaluating an integral equation.

    Parameters
    ----------
    message: str
        Description of the failure.
    u: float
        The initial capital at which the quadrature failed.
    """

    def __init__(self, message: str, u: float) -> None:
        self.u: float = u
        super().__init__(f"{message} at u={u!r}", method="quad")


class ContractViolationError(FracRuinError, ValueError):
    """
    An operand does not satisfy the analytic contract of an operator.
    """


###############################################################################
## MODEL ERRORS
###############################################################################
class ModelValidationError(FracRuinError, ValueError):
    """
    A model description was rejected.

    Parameters
    ----------
    message: str
        Description of the violated constraint.
    field: str, optional
        Name of the offending field.
    """

    def __init__(self, message: str, field: Optional[str] = None) -> None:
        self.field: Optional[str] = field
        self.detail: str = message
        MESSAGE = f"Invalid `{field}`: {message}" if field else message
        super().__init__(MESSAGE)


class NetProfitError(ModelValidationError):
    """
    The net profit condition c·E[T] > E[X] does not hold.

    Parameters
    ----------
    premium_income: float
        Left side, c·E[T].
    expected_claim: float
        Right side, E[X].
    """

    def __init__(self, premium_income: float, expected_claim: float) -> None:
        self.premium_income: float = premium_income
        self.expected_claim: float = expected_claim
        MESSAGE = (
            "Net profit condition c*E[T] > E[X] violated: "
            f"{premium_income!r} <= {expected_claim!r}."
        )
        super().__init__(MESSAGE, field="premium_rate")


class UnsupportedSpecError(FracRuinError, ValueError):
    """
    The model is valid but outside the scope of the requested operation.
    """


###############################################################################
## SOLVER ERRORS
###############################################################################
class RootCountError(FracRuinError, ArithmeticError):
    """
    The number of characteristic roots found differs from the expected one.

    Parameters
    ----------
    expected: int
        Number of roots required by the boundary conditions.
    found: Sequence[complex]
        The roots that were located.
    """

    def __init__(self, expected: int, found: Sequence[complex]) -> None:
        self.expected: int = expected
        self.found: Sequence[complex] = tuple(found)
        MESSAGE = (
            f"Expected {expected} roots with positive real part, "
            f"found {len(self.found)}: {list(self.found)}."
        )
        super().__init__(MESSAGE)


class MultiplicityError(FracRuinError, ArithmeticError):
    """
    The characteristic equation has a repeated root.
    """


class CoefficientError(FracRuinError, ArithmeticError):
    """
    The linear system for the solution coefficients is singular or yields an
    inconsistent non-ruin probability.
    """


class ConjugatePairingError(FracRuinError, ArithmeticError):
    """
    A quantity that must be real carries a non-negligible imaginary part.

    Parameters
    ----------
    message: str
        Description of the failure.
    residue: Any
        The offending imaginary part.
    """

    def __init__(self, message: str, residue: Any) -> None:
        self.residue: Any = residue
        super().__init__(f"{message} (imaginary residue {residue!r})")
