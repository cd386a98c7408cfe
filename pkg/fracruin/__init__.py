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

__author__ = "Pedro Rivero"
__copyright__ = "Copyright (c) 2021 Pedro Rivero"
__license__ = "Apache-2.0"
__version__ = "0.1.0"

from .models import ModelSpec, load_spec, validate
from .montecarlo import SimConfig, estimate_ruin
from .solver import RuinSolution, eval_ruin, find_roots, solve, u5

__all__ = [
    "ModelSpec",
    "RuinSolution",
    "SimConfig",
    "estimate_ruin",
    "eval_ruin",
    "find_roots",
    "load_spec",
    "solve",
    "u5",
    "validate",
]
