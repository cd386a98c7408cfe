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

from math import isfinite
from numbers import Real
from typing import Any, Callable, Tuple, Union

from ..errors import DomainError


###############################################################################
## VALIDATE NATURAL NUMBER
###############################################################################
def validate_natural(number: int, zero: bool = False) -> None:
    """
    Raises ValueError with custom message if `number` is not in the naturals.

    Parameters
    ----------
    number: int
        The object to validate.
    zero: bool, default: False
        Count zero as a natural.

    Raises
    ------
    TypeError
        If `number` is not int.
    ValueError
        If `number` is not a natural number.
    """
    validate_type(number, int)
    if number < 0 or not zero and number == 0:
        raise ValueError(
            f"Invalid value {number} <{'=' if not zero else ''} 0."
        )


###############################################################################
## VALIDATE TYPE
###############################################################################
def validate_type(
    object: Any, classinfo: Union[type, Tuple[type, ...]]
) -> None:
    """
    Raises TypeError with custom message if `object` and `classinfo` do not
    match.

    Parameters
    ----------
    object: Any
        The object to validate.
    classinfo: Union[type, Tuple[type, ...]]
        The correct object type(s).

    Raises
    ------
    TypeError
        If `object` does not match `classinfo`.
    """
    MESSAGE = f"Invalid object type {type(object)}"
    MESSAGE += (
        f", expected {classinfo.__name__}."
        if isinstance(classinfo, type)
        else "."
    )
    if not isinstance(object, classinfo):
        raise TypeError(MESSAGE)


###############################################################################
## VALIDATE FINITE
###############################################################################
def validate_finite(
    number: float,
    name: str = "value",
    error: Callable[[str], Exception] = DomainError,
) -> None:
    """
    Raises `error` if `number` is not a finite real.

    Parameters
    ----------
    number: float
        The object to validate.
    name: str, default: "value"
        Name reported in the error message.
    error: Callable[[str], Exception], default: DomainError
        Exception class (or factory) to raise.
    """
    if isinstance(number, bool) or not isinstance(number, Real):
        raise TypeError(f"Invalid object type {type(number)} for `{name}`.")
    if not isfinite(number):
        raise error(f"Non-finite `{name}` = {number!r}.")


###############################################################################
## VALIDATE POSITIVE
###############################################################################
def validate_positive(
    number: float,
    name: str = "value",
    error: Callable[[str], Exception] = DomainError,
) -> None:
    """
    Raises `error` if `number` is not a finite strictly positive real.

    Parameters
    ----------
    number: float
        The object to validate.
    name: str, default: "value"
        Name reported in the error message.
    error: Callable[[str], Exception], default: DomainError
        Exception class (or factory) to raise.
    """
    validate_finite(number, name, error)
    if number <= 0:
        raise error(f"Invalid `{name}` = {number!r} <= 0.")


###############################################################################
## VALIDATE INTERVAL
###############################################################################
def validate_interval(
    number: float,
    low: float,
    high: float,
    name: str = "value",
    closed: Tuple[bool, bool] = (True, True),
    error: Callable[[str], Exception] = DomainError,
) -> None:
    """
    Raises `error` if `number` lies outside the interval between `low` and
    `high`.

    Parameters
    ----------
    number: float
        The object to validate.
    low: float
        Lower end of the interval.
    high: float
        Upper end of the interval.
    name: str, default: "value"
        Name reported in the error message.
    closed: Tuple[bool, bool], default: (True, True)
        Whether each end belongs to the interval.
    error: Callable[[str], Exception], default: DomainError
        Exception class (or factory) to raise.
    """
    validate_finite(number, name, error)
    above: bool = number >= low if closed[0] else number > low
    below: bool = number <= high if closed[1] else number < high
    if not (above and below):
        left: str = "[" if closed[0] else "("
        right: str = "]" if closed[1] else ")"
        raise error(
            f"Invalid `{name}` = {number!r} outside "
            f"{left}{low}, {high}{right}."
        )
