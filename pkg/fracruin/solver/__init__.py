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

from .capital import GridAxis, U5Grid, u5, u5_grid
from .characteristic import (
    characteristic_derivative,
    characteristic_fn,
    characteristic_polynomial,
    delta,
)
from .examples import (
    ExponentialMixture,
    fractional_exponential_root,
    fractional_exponential_ruin,
    fractional_model,
    gamma_erlang2_roots,
    gamma_erlang2_ruin,
    gamma_exponential_root,
    gamma_exponential_ruin,
    gamma_model,
)
from .limits import PsiZeroLimit, psi_zero_limit, solve_limit_equation
from .lundberg import LundbergReport, lundberg_check
from .operators import adjoint_operator, adjoint_symbol
from .roots import (
    ArgumentPrincipleDecorator,
    BareRootFinder,
    CharRoot,
    GridNewtonRootFinder,
    PolynomialRootFinder,
    RootFinder,
    count_roots,
    enclosing_rectangle,
    find_roots,
    search_radius,
)
from .solution import (
    RuinSolution,
    eval_ruin,
    ladder_exponents,
    ruin_curve,
    solve,
    solve_coefficients,
)

__all__ = [
    "ArgumentPrincipleDecorator",
    "BareRootFinder",
    "CharRoot",
    "ExponentialMixture",
    "GridAxis",
    "GridNewtonRootFinder",
    "LundbergReport",
    "PolynomialRootFinder",
    "PsiZeroLimit",
    "RootFinder",
    "RuinSolution",
    "U5Grid",
    "adjoint_operator",
    "adjoint_symbol",
    "characteristic_derivative",
    "characteristic_fn",
    "characteristic_polynomial",
    "count_roots",
    "delta",
    "enclosing_rectangle",
    "eval_ruin",
    "find_roots",
    "fractional_exponential_root",
    "fractional_exponential_ruin",
    "fractional_model",
    "gamma_erlang2_roots",
    "gamma_erlang2_ruin",
    "gamma_exponential_root",
    "gamma_exponential_ruin",
    "gamma_model",
    "ladder_exponents",
    "lundberg_check",
    "psi_zero_limit",
    "ruin_curve",
    "solve",
    "solve_coefficients",
    "solve_limit_equation",
    "u5",
    "u5_grid",
]
