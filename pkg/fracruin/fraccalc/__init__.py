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

from .chain import apply_chain, apply_chain_exact
from .expoly import ExpPolynomial
from .grid import GridFn, endpoint_weight
from .grunwald import gl_apply, gl_left_deriv, gl_left_integral, gl_weights
from .operator import FracOp, OperatorChain, OperatorKind
from .quadrature import (
    left_rl_deriv,
    left_rl_integral,
    rfdo,
    right_caputo_deriv,
)
from .verification import (
    IdentityReport,
    boundary_values,
    check_adjoint,
    check_boundary_value,
    check_convolution_rule,
    density_operator,
    hypoexponential_density,
    residual_density_fde,
)

__all__ = [
    "ExpPolynomial",
    "FracOp",
    "GridFn",
    "IdentityReport",
    "OperatorChain",
    "OperatorKind",
    "apply_chain",
    "apply_chain_exact",
    "boundary_values",
    "check_adjoint",
    "check_boundary_value",
    "check_convolution_rule",
    "density_operator",
    "endpoint_weight",
    "gl_apply",
    "gl_left_deriv",
    "gl_left_integral",
    "gl_weights",
    "hypoexponential_density",
    "left_rl_deriv",
    "left_rl_integral",
    "residual_density_fde",
    "rfdo",
    "right_caputo_deriv",
]
