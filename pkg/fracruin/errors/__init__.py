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

from .advisories import (
    BracketingWarning,
    IllConditionedWarning,
    TruncationWarning,
    raise_bracketing_warning,
    raise_ill_conditioned_warning,
    raise_truncation_warning,
)
from .exceptions import (
    CoefficientError,
    ConjugatePairingError,
    ContractViolationError,
    DomainError,
    EvaluationError,
    FracRuinError,
    ModelValidationError,
    MultiplicityError,
    NetProfitError,
    QuadratureError,
    RootCountError,
    UnsupportedSpecError,
)

__all__ = [
    "BracketingWarning",
    "CoefficientError",
    "ConjugatePairingError",
    "ContractViolationError",
    "DomainError",
    "EvaluationError",
    "FracRuinError",
    "IllConditionedWarning",
    "ModelValidationError",
    "MultiplicityError",
    "NetProfitError",
    "QuadratureError",
    "RootCountError",
    "TruncationWarning",
    "UnsupportedSpecError",
    "raise_bracketing_warning",
    "raise_ill_conditioned_warning",
    "raise_truncation_warning",
]
