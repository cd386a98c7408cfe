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

from .components import Component, GammaComponent, MlComponent
from .distributions import (
    claim_cdf,
    claim_density,
    interarrival_cdf,
    interarrival_density,
    sample_claim,
    sample_interarrival,
    sum_cdf,
    sum_density,
)
from .io import apply_overrides, dump_spec, load_spec
from .spec import LambdaProduct, ModelSpec, merge_equal_rates, validate

__all__ = [
    "Component",
    "GammaComponent",
    "LambdaProduct",
    "MlComponent",
    "ModelSpec",
    "apply_overrides",
    "claim_cdf",
    "claim_density",
    "dump_spec",
    "interarrival_cdf",
    "interarrival_density",
    "load_spec",
    "merge_equal_rates",
    "sample_claim",
    "sample_interarrival",
    "sum_cdf",
    "sum_density",
    "validate",
]
