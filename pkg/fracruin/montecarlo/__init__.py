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

from .config import SimConfig, TruncationMode
from .counting import (
    CountingMoments,
    fractional_poisson_moments,
    simulate_counts,
)
from .estimate import McEstimate, binomial_interval
from .renewal import renewal_equation_residual
from .simulation import (
    PathOutcomes,
    estimate_ruin,
    negligible_ruin_level,
    simulate_paths,
)

__all__ = [
    "CountingMoments",
    "McEstimate",
    "PathOutcomes",
    "SimConfig",
    "TruncationMode",
    "binomial_interval",
    "estimate_ruin",
    "fractional_poisson_moments",
    "negligible_ruin_level",
    "renewal_equation_residual",
    "simulate_counts",
    "simulate_paths",
]
