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

from dataclasses import dataclass, field
from enum import Enum
from math import inf, isclose
from typing import Iterator, Sequence, Tuple

from ..helpers import validate_finite, validate_positive


###############################################################################
## OPERATOR KIND
###############################################################################
class OperatorKind(Enum):
    LEFT_RL_DERIVATIVE = "left-RL-derivative"
    LEFT_RL_INTEGRAL = "left-RL-integral"
    RIGHT_CAPUTO_DERIVATIVE = "right-Caputo-derivative"
    LFDO = "LFDO"
    RFDO = "RFDO"

    @property
    def is_left(self) -> bool:
        return self in (
            OperatorKind.LEFT_RL_DERIVATIVE,
            OperatorKind.LEFT_RL_INTEGRAL,
            OperatorKind.LFDO,
        )


###############################################################################
## FRACTIONAL OPERATOR
###############################################################################
@dataclass(frozen=True)
class FracOp:
    """
    Descriptor of a single fractional operator, optionally shifted by a
    multiple of the identity.

    Attributes
    ----------
    kind: OperatorKind
        The operator family.
    order: float
        Strictly positive order r.
    shift: float, default: 0.0
        Exponential tilt alpha of the LFDO/RFDO,

            LFDO: e^{-alpha x} D^r [e^{alpha x} f],
            RFDO: e^{alpha x} D^r_- [e^{-alpha x} f].

    lower_limit: float, default: 0.0
        Lower terminal of left operators.
    upper_limit: float, default: inf
        Upper terminal of right operators.
    addend: float, default: 0.0
        Constant c such that the operator applied is op + c * identity.

    Notes
    -----
    Left operators act from `lower_limit` = 0 only, where functions
    supported on [0, inf) are extended by zero.
    """

    kind: OperatorKind
    order: float
    shift: float = 0.0
    lower_limit: float = 0.0
    upper_limit: float = inf
    addend: float = 0.0

    def __post_init__(self) -> None:
        validate_positive(self.order, "order")
        validate_finite(self.shift, "shift")
        validate_finite(self.addend, "addend")
        if self.kind.is_left and self.lower_limit != 0.0:
            raise ValueError("Left operators are supported from 0 only.")

    ############################### PUBLIC API ###############################
    @property
    def is_integer_order(self) -> bool:
        return isclose(self.order, round(self.order), abs_tol=1e-14)

    @property
    def signed_order(self) -> float:
        if self.kind is OperatorKind.LEFT_RL_INTEGRAL:
            return -self.order
        return self.order


###############################################################################
## OPERATOR CHAIN
###############################################################################
@dataclass(frozen=True)
class OperatorChain:
    """
    Composition of fractional operators. The last listed operator is
    applied first, so that `ops = (A, B)` represents A(B(f)).

    Attributes
    ----------
    ops: Tuple[FracOp, ...]
        Non-empty sequence of operators.
    scales: Tuple[float, ...]
        Per-operator factors multiplying the operator but not its addend
        (premium rate powers c^r when the chain stands for an operator
        polynomial in c d/du). Defaults to ones.
    """

    ops: Tuple[FracOp, ...]
    scales: Tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.ops:
            raise ValueError("An operator chain needs at least one operator.")
        if not self.scales:
            object.__setattr__(self, "scales", (1.0,) * len(self.ops))
        if len(self.scales) != len(self.ops):
            raise ValueError("One scale per operator is required.")

    ############################### PUBLIC API ###############################
    @classmethod
    def of(cls, *ops: FracOp) -> "OperatorChain":
        return cls(tuple(ops))

    @classmethod
    def premium_scaled(
        cls, ops: Sequence[FracOp], premium_rate: float
    ) -> "OperatorChain":
        """
        Chain for an operator polynomial evaluated at c d/du: every operator
        of order r is multiplied by c^r.
        """
        validate_positive(premium_rate, "premium_rate")
        scales = tuple(premium_rate ** op.order for op in ops)
        return cls(tuple(ops), scales)

    def application_order(self) -> Iterator[Tuple[FracOp, float]]:
        return zip(reversed(self.ops), reversed(self.scales))

    @property
    def is_left(self) -> bool:
        return all(op.kind.is_left for op in self.ops)

    @property
    def is_right(self) -> bool:
        return not any(op.kind.is_left for op in self.ops)
