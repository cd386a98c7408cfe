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
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike
from scipy.stats import kstest

from ..helpers import validate_interval
from .validation import ValidationStrategy

logger = logging.getLogger(__name__)


class KolmogorovSmirnovValidation(ValidationStrategy):
    """
    One-sample Kolmogorov-Smirnov goodness-of-fit test.

    The sample passes when the p-value of the two-sided test against `cdf`
    is at least `significance`.

    Parameters
    ----------
    cdf: Callable[[numpy.ndarray], numpy.ndarray]
        Vectorized target distribution function.
    significance: float, default: 0.01
        Level of the test.

    Methods
    -------
    validate(samples: ArrayLike) -> bool
        Validates a sample against the target distribution.
    """

    def __init__(
        self,
        cdf: Callable[[np.ndarray], np.ndarray],
        significance: float = 0.01,
    ) -> None:
        validate_interval(
            significance, 0.0, 1.0, "significance", closed=(False, False)
        )
        self.cdf: Callable[[np.ndarray], np.ndarray] = cdf
        self.significance: float = significance

    def validate(self, samples: ArrayLike) -> bool:
        draws: np.ndarray = np.asarray(samples, dtype=float)
        if draws.ndim != 1 or draws.size == 0:
            return False
        result = kstest(draws, self.cdf)
        logger.debug(
            "KS statistic %.3e, p-value %.3e on %d draws",
            result.statistic,
            result.pvalue,
            draws.size,
        )
        return bool(result.pvalue >= self.significance)
