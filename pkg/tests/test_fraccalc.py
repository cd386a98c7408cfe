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

from math import exp, gamma, log10

import numpy as np
import pytest

from fracruin.errors import ContractViolationError, DomainError
from fracruin.fraccalc import (
    ExpPolynomial,
    FracOp,
    GridFn,
    OperatorChain,
    OperatorKind,
    apply_chain,
    apply_chain_exact,
    boundary_values,
    check_adjoint,
    check_boundary_value,
    check_convolution_rule,
    density_operator,
    gl_left_deriv,
    gl_left_integral,
    hypoexponential_density,
    residual_density_fde,
    right_caputo_deriv,
    rfdo,
)
from fracruin.models import GammaComponent, MlComponent


def power_derivative(p, r, x):
    return gamma(p + 1.0) / gamma(p + 1.0 - r) * x ** (p - r)


###############################################################################
## GRUNWALD-LETNIKOV
###############################################################################
class TestGrunwaldLetnikov:
    def test_power_function(self):
        grid = GridFn.from_callable(lambda x: x ** 2, 1e-4, 1.0)
        value = gl_left_deriv(grid, 0.5, 1.0)
        assert abs(value - power_derivative(2.0, 0.5, 1.0)) < 2e-3

    def test_convergence_order(self):
        errors = []
        for step in (1e-2, 1e-3):
            grid = GridFn.from_callable(lambda x: x ** 2, step, 1.0)
            value = gl_left_deriv(grid, 0.5, 1.0)
            errors.append(abs(value - power_derivative(2.0, 0.5, 1.0)))
        assert log10(errors[0] / errors[1]) >= 0.9

    def test_left_inverse(self):
        grid = GridFn.from_callable(lambda x: x ** 2, 1e-3, 1.0)
        integral = gl_left_integral(grid, 0.5, 1.0)
        expected = gamma(3.0) / gamma(3.5)
        assert abs(integral - expected) < 5e-3

    def test_singular_origin(self):
        q = -0.5
        grid = GridFn.from_callable(
            lambda x: x ** q, 1e-3, 1.0, origin=(q, 1.0)
        )
        value = gl_left_integral(grid, 0.5, 1.0)
        assert abs(value - gamma(0.5) / gamma(1.0)) < 1e-2

    def test_not_a_node(self):
        grid = GridFn.from_callable(lambda x: x, 0.1, 1.0)
        with pytest.raises(DomainError):
            gl_left_deriv(grid, 0.5, 0.55)


###############################################################################
## RIGHT OPERATORS
###############################################################################
class TestRightOperators:
    @pytest.mark.parametrize("r", [0.3, 0.5, 1.0, 1.7, 2.0])
    def test_caputo_eigenvalue(self, r):
        f = ExpPolynomial.exponential(2.0)
        value = right_caputo_deriv(f, r, 0.3)
        expected = 2.0 ** r * exp(-0.6)
        assert abs(value - expected) < 1e-6 * expected

    def test_rfdo_eigenvalue(self):
        f = ExpPolynomial.exponential(1.5)
        value = rfdo(f, 0.5, 1.0, 0.2)
        expected = 2.5 ** 0.5 * exp(-0.3)
        assert abs(value - expected) < 1e-6 * expected

    def test_growing_operand(self):
        with pytest.raises(ContractViolationError):
            right_caputo_deriv(ExpPolynomial.exponential(-1.0), 0.5, 0.0)


###############################################################################
## ADJOINT IDENTITY
###############################################################################
class TestAdjoint:
    def test_classical_integration_by_parts(self):
        f = ExpPolynomial(((1.0, 1, 1.0),))
        g = ExpPolynomial.exponential(2.0)
        report = check_adjoint(1.0, 0.0, f, g, tol=1e-8)
        assert report.passed, report.discrepancy
        assert report.lhs == pytest.approx(2.0 / 9.0, rel=1e-8)

    @pytest.mark.parametrize(
        "r, alpha, component, g_rate, expected",
        [
            (0.5, 1.0, GammaComponent(1.5, 1.0), 3.0, 0.25),
            (1.5, 0.5, GammaComponent(2.5, 0.5), 1.0, 0.5 ** 2.5 / 1.5),
        ],
    )
    def test_gamma_density_operand(
        self, r, alpha, component, g_rate, expected
    ):
        g = ExpPolynomial.exponential(g_rate)
        report = check_adjoint(r, alpha, component.density, g)
        assert report.passed, report.discrepancy
        assert report.rhs == pytest.approx(expected, rel=1e-4)

    def test_analytic_operand(self):
        f = ExpPolynomial(((1.0, 2, 1.0),))
        g = ExpPolynomial.exponential(1.0)
        assert check_adjoint(2.0, 1.0, f, g).passed

    def test_growing_operand(self):
        f = ExpPolynomial(((1.0, 1, 1.0),))
        with pytest.raises(ContractViolationError):
            check_adjoint(0.5, 0.0, f, ExpPolynomial.exponential(-1.0))


###############################################################################
## OPERATOR CHAINS
###############################################################################
class TestOperatorChain:
    def test_premium_scaled(self):
        ops = [
            FracOp(OperatorKind.RFDO, 2.0, shift=1.0),
            FracOp(OperatorKind.RIGHT_CAPUTO_DERIVATIVE, 0.5, addend=1.0),
        ]
        chain = OperatorChain.premium_scaled(ops, 4.0)
        assert chain.scales == (16.0, 2.0)
        assert chain.is_right

    def test_exact_application(self):
        chain = OperatorChain.of(
            FracOp(OperatorKind.LFDO, 1.0, shift=2.0, addend=1.0)
        )
        f = ExpPolynomial.exponential(3.0)
        image = apply_chain_exact(chain, f)
        # (d/dx + 2) e^{-3x} + e^{-3x} = 0
        assert abs(image(0.7)) < 1e-14

    def test_no_exact_action(self):
        chain = OperatorChain.of(FracOp(OperatorKind.LEFT_RL_DERIVATIVE, 0.5))
        with pytest.raises(ContractViolationError):
            apply_chain_exact(chain, ExpPolynomial.exponential(1.0))

    def test_grid_needs_left_operators(self):
        chain = OperatorChain.of(FracOp(OperatorKind.RFDO, 0.5))
        grid = GridFn.from_callable(lambda x: np.exp(-x), 0.01, 1.0)
        with pytest.raises(ContractViolationError):
            apply_chain(chain, grid)

    def test_invalid_order(self):
        with pytest.raises(DomainError):
            FracOp(OperatorKind.LFDO, -1.0)


###############################################################################
## DENSITY EQUATIONS
###############################################################################
class TestDensityEquations:
    def test_hypoexponential_density(self):
        density = hypoexponential_density(
            [GammaComponent(1.0, 1.0), GammaComponent(1.0, 2.0)]
        )
        x = np.linspace(0.0, 5.0, 11)
        expected = 2.0 * (np.exp(-x) - np.exp(-2.0 * x))
        np.testing.assert_allclose(density(x), expected, atol=1e-12)

    def test_erlang_density(self):
        density = hypoexponential_density([GammaComponent(3.0, 2.0)])
        x = np.linspace(0.0, 4.0, 9)
        expected = 8.0 * x ** 2 * np.exp(-2.0 * x) / 2.0
        np.testing.assert_allclose(density(x), expected, atol=1e-12)

    def test_operator(self):
        chain = density_operator(
            [GammaComponent(2.0, 1.0), MlComponent(0.5, 3.0)]
        )
        kinds = [op.kind for op in chain.ops]
        assert kinds == [
            OperatorKind.LFDO,
            OperatorKind.LEFT_RL_DERIVATIVE,
        ]
        assert chain.ops[1].addend == 3.0

    def test_gamma_residual(self):
        residual = residual_density_fde([GammaComponent(2.0, 1.0)], 1e-3, 5)
        assert residual.max_abs(0.1, 5.0) < 5e-3

    def test_hypoexponential_residual(self):
        components = [GammaComponent(1.0, 1.0), GammaComponent(2.0, 3.0)]
        residual = residual_density_fde(components, 1e-3, 5)
        assert residual.max_abs(0.1, 5.0) < 5e-3

    def test_mittag_leffler_residual_decreases(self):
        component = [MlComponent(0.5, 1.0)]
        coarse = residual_density_fde(component, 4e-3, 5).max_abs(0.1, 5.0)
        fine = residual_density_fde(component, 1e-3, 5).max_abs(0.1, 5.0)
        assert fine < coarse

    def test_fractional_gamma_residual_decreases(self):
        component = [GammaComponent(0.6, 1.5)]
        coarse = residual_density_fde(component, 4e-3, 5).max_abs(0.1, 5.0)
        fine = residual_density_fde(component, 1e-3, 5).max_abs(0.1, 5.0)
        assert fine < coarse

    @pytest.mark.slow
    def test_residuals_full_resolution(self):
        for components in (
            [MlComponent(0.5, 1.0)],
            [GammaComponent(0.6, 1.5)],
            [GammaComponent(1.5, 1.0), MlComponent(0.7, 2.0)],
        ):
            residual = residual_density_fde(components, 1e-4, 5)
            assert residual.max_abs(0.1, 5.0) < 5e-3


###############################################################################
## BOUNDARY VALUES AND CONVOLUTION RULE
###############################################################################
class TestBoundaryValues:
    def test_values(self):
        assert boundary_values(GammaComponent(0.5, 4.0)) == 2.0
        assert boundary_values(MlComponent(0.5, 3.0)) == 3.0

    @pytest.mark.parametrize(
        "component", [GammaComponent(0.5, 2.0), MlComponent(0.6, 1.5)]
    )
    def test_spot_check(self, component):
        assert check_boundary_value(component).passed

    def test_order_above_one(self):
        with pytest.raises(DomainError):
            check_boundary_value(GammaComponent(2.0, 1.0))

    def test_convolution_rule(self):
        kernel = GammaComponent(0.5, 1.0)
        report = check_convolution_rule(
            0.5,
            kernel.density,
            kernel.origin,
            lambda x: np.exp(-x),
            [0.5, 1.0, 2.0],
            tol=1e-3,
        )
        assert report.passed, report.discrepancy
