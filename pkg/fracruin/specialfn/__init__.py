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

from .distribution import (
    MlDistParams,
    fractional_poisson_mean,
    fractional_poisson_variance,
    ml_cdf,
    ml_density,
)
from .mittag_leffler import (
    MlParams,
    ml_deriv,
    ml_eval,
    ml_laplace_transform,
    switch_radius,
)

__all__ = [
    "MlDistParams",
    "MlParams",
    "fractional_poisson_mean",
    "fractional_poisson_variance",
    "ml_cdf",
    "ml_density",
    "ml_deriv",
    "ml_eval",
    "ml_laplace_transform",
    "switch_radius",
]
