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
from math import sqrt
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from ..helpers import validate_finite, validate_positive
from .validation import ValidationStrategy

logger = logging.getLogger(__name__)


class MomentValidation(ValidationStrategy):
    """
    Checks the sample mean and variance against target values within a
    number of standard errors.

    The standard error of the mean uses the sample variance; that of the
    variance uses the fourth central moment, sqrt((m4 - s^4) / n).

    Parameters
    ----------
    mean: float, optional
        Target mean; not checked when omitted.
    variance: float, optional
        Target variance; not checked when omitted.
    sigmas: float, default: 3.0
        Accepted deviation in standard errors.

    Methods
    -------
    validate(samples: ArrayLike) -> bool
        Validates a sample against the target moments.
    """

    def __init__(
        self,
        mean: Optional[float] = None,
        variance: Optional[float] = None,
        sigmas: float = 3.0,
    ) -> None:
        if mean is not None:
            validate_finite(mean, "mean")
        if variance is not None:
            validate_positive(variance, "variance")
        validate_positive(sigmas, "sigmas")
        self.mean: Optional[float] = mean
        self.variance: Optional[float] = variance
        self.sigmas: float = sigmas

    def validate(self, samples: ArrayLike) -> bool:
        draws: np.ndarray = np.asarray(samples, dtype=float)
        n: int = draws.size
        if draws.ndim != 1 or n < 2:
            return False
        sample_mean: float = float(np.mean(draws))
        sample_variance: float = float(np.var(draws, ddof=1))
        passed: bool = True
        if self.mean is not None:
            error: float = sqrt(sample_variance / n)
            deviation: float = abs(sample_mean - self.mean)
            logger.debug("Mean deviation %.3e (se %.3e)", deviation, error)
            passed &= deviation <= self.sigmas * error
        if self.variance is not None:
            m4: float = float(np.mean((draws - sample_mean) ** 4))
            error = sqrt(max(m4 - sample_variance ** 2, 0.0) / n)
            deviation = abs(sample_variance - self.variance)
            logger.debug("Variance deviation %.3e (se %.3e)", deviation, error)
            passed &= deviation <= self.sigmas * error
        return passed
