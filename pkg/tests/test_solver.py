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

from math import exp, log

import numpy as np
import pytest
from numpy.linalg import LinAlgError
from scipy.optimize import brentq

from fracruin.errors import (
    DomainError,
    ModelValidationError,
    UnsupportedSpecError,
)
from fracruin.models import GammaComponent, MlComponent, ModelSpec
from fracruin.solver import (
    ArgumentPrincipleDecorator,
    GridAxis,
    GridNewtonRootFinder,
    PolynomialRootFinder,
    RuinSolution,
    adjoint_symbol,
    characteristic_derivative,
    characteristic_fn,
    characteristic_polynomial,
    count_roots,
    delta,
    enclosing_rectangle,
    eval_ruin,
    find_roots,
    fractional_exponential_root,
    fractional_exponential_ruin,
    fractional_model,
    gamma_erlang2_ruin,
    gamma_exponential_ruin,
    gamma_model,
    ladder_exponents,
    lundberg_check,
    psi_zero_limit,
    ruin_curve,
    solve,
    solve_limit_equation,
    u5,
    u5_grid,
)

EXP1 = (GammaComponent(1.0, 1.0),)
U = np.array([0.0, 0.5, 1.0, 2.0, 5.0, 10.0])


@pytest.fixture
def classical():
    return gamma_model(1.0, 1.0, EXP1, 1.2)


@pytest.fixture
def example3():
    return fractional_model(0.5, 1.0, EXP1, 1.2)


###############################################################################
## CHARACTERISTIC FUNCTION
###############################################################################
class TestCharacteristic:
    def test_classical_values(self, classical):
        assert characteristic_fn(classical, 0.0) == 0.0
        assert characteristic_fn(classical, 1.0) == pytest.approx(-1.0)
        assert abs(characteristic_fn(classical, 1.0 / 6.0)) < 1e-14

    def test_polynomial(self, classical):
        np.testing.assert_allclose(
            characteristic_polynomial(classical).coef, [0.2, -1.2]
        )

    def test_not_polynomial(self, example3):
        with pytest.raises(UnsupportedSpecError):
            characteristic_polynomial(example3)

    def test_left_half_plane(self, classical):
        with pytest.raises(DomainError):
            characteristic_fn(classical, -0.1 + 1j)

    def test_derivative(self, example3):
        z = 0.4 + 0.2j
        h = 1e-6
        numeric = (
            characteristic_fn(example3, z + h)
            - characteristic_fn(example3, z - h)
        ) / (2 * h)
        assert abs(characteristic_derivative(example3, z) - numeric) < 1e-7

    def test_delta(self, example3):
        z = 0.3
        assert delta(example3, z) == pytest.approx(1.2 ** 0.5 * 0.3 ** 0.5 + 1)

    def test_adjoint_symbol(self):
        spec = ModelSpec(
            (GammaComponent(1.5, 2.0),),
            (MlComponent(0.5, 1.0),),
            EXP1,
            1.2,
        )
        for z in (0.7, 0.7 + 0.3j, 2.0 - 1.0j):
            expected = delta(spec, z)
            assert abs(adjoint_symbol(spec, z) - expected) < 1e-6 * abs(
                expected
            )


###############################################################################
## ROOTS
###############################################################################
class TestRoots:
    def test_classical_root(self, classical):
        roots = find_roots(classical)
        assert len(roots) == 1
        assert roots[0].z == pytest.approx(1.0 / 6.0, abs=1e-12)
        assert not roots[0].is_conjugate_pair_member

    def test_erlang_interarrivals(self):
        spec = gamma_model(2.0, 1.0, EXP1, 1.2)

        def equation(z):
            return (1.0 - z) * (1.2 * z + 1.0) ** 2 - 1.0

        expected = brentq(equation, 1e-3, 1.0)
        roots = find_roots(spec)
        assert roots[0].z.real == pytest.approx(expected, abs=1e-10)

    def test_finders_agree(self):
        spec = gamma_model(2.0, 3.0, (GammaComponent(2.0, 2.0),), 2.0)
        polynomial = find_roots(spec, finder=PolynomialRootFinder())
        grid = find_roots(spec, finder=GridNewtonRootFinder())
        np.testing.assert_allclose(
            [r.z for r in polynomial], [r.z for r in grid], atol=1e-10
        )

    def test_conjugate_closure(self):
        spec = gamma_model(1.0, 1.0, (GammaComponent(3.0, 3.0),), 1.2)
        zs = [root.z for root in find_roots(spec)]
        assert len(zs) == 3
        for z in zs:
            assert z.real > 0
            assert any(abs(z.conjugate() - w) < 1e-12 for w in zs)
        assert any(z.imag != 0 for z in zs)

    def test_argument_principle(self):
        spec = gamma_model(1.0, 1.0, (GammaComponent(3.0, 3.0),), 1.2)
        finder = ArgumentPrincipleDecorator(PolynomialRootFinder())
        roots = finder.find(spec, 1e-10)
        assert finder.base_finder.base_finder is None
        assert count_roots(spec, enclosing_rectangle(spec, roots)) == 3

    def test_fractional_root(self, example3):
        roots = find_roots(example3)
        assert len(roots) == 1
        expected = fractional_exponential_root(0.5, 1.0, 1.0, 1.2)
        assert roots[0].z.real == pytest.approx(expected, abs=1e-10)
        assert expected == pytest.approx(0.413, abs=1e-3)


###############################################################################
## SOLUTION
###############################################################################
class TestSolution:
    def test_classical(self, classical):
        solution = solve(classical)
        expected = np.exp(-U / 6.0) / 1.2
        np.testing.assert_allclose(
            eval_ruin(solution, U), expected, atol=1e-12
        )
        assert solution.phi(0.0) == pytest.approx(0.2 / 1.2)

    def test_gamma_interarrivals(self):
        spec = gamma_model(2.0, 2.0, EXP1, 1.2)
        expected = gamma_exponential_ruin(2.0, 2.0, 1.0, 1.2)(U)
        np.testing.assert_allclose(solve(spec).psi(U), expected, atol=1e-9)

    @pytest.mark.parametrize(
        "r, lambda1, alpha", [(2.0, 2.0, 3.0), (1.5, 1.0, 2.5)]
    )
    def test_erlang_claims(self, r, lambda1, alpha):
        spec = gamma_model(r, lambda1, (GammaComponent(2.0, alpha),), 1.2)
        expected = gamma_erlang2_ruin(r, lambda1, alpha, 1.2)(U)
        np.testing.assert_allclose(solve(spec).psi(U), expected, atol=1e-9)

    def test_fractional(self, example3):
        solution = solve(example3)
        expected = fractional_exponential_ruin(0.5, 1.0, 1.0, 1.2)(U)
        np.testing.assert_allclose(solution.psi(U), expected, atol=1e-9)
        assert solution.psi(1.0) == pytest.approx(0.388, abs=1e-3)

    def test_exponential_order_one(self, classical):
        fractional = solve(fractional_model(1.0, 1.0, EXP1, 1.2))
        np.testing.assert_allclose(
            fractional.psi(U), solve(classical).psi(U), atol=1e-10
        )

    def test_complex_roots_give_real_psi(self):
        spec = gamma_model(1.0, 1.0, (GammaComponent(3.0, 3.0),), 1.2)
        psi = solve(spec).psi(U)
        assert np.all(np.diff(psi) <= 0)
        assert 0 < psi[0] < 1

    def test_decreasing_and_bounded(self):
        spec = ModelSpec(
            (GammaComponent(0.7, 1.0),),
            (MlComponent(0.6, 2.0),),
            (GammaComponent(1.0, 2.0), GammaComponent(2.0, 5.0)),
            1.5,
        )
        psi = solve(spec).psi(np.linspace(0.0, 20.0, 41))
        assert np.all(np.diff(psi) <= 1e-12)
        assert np.all((psi >= 0) & (psi <= 1))

    def test_negative_capital(self, classical):
        with pytest.raises(DomainError):
            eval_ruin(solve(classical), -1.0)

    def test_ladder_exponents(self):
        spec = gamma_model(
            1.0,
            1.0,
            (GammaComponent(2.0, 4.0), GammaComponent(1.0, 5.0)),
            1.2,
        )
        assert [ladder_exponents(spec, q) for q in range(3)] == [
            [0, 0],
            [1, 0],
            [2, 0],
        ]
        assert ladder_exponents(spec, 3) == [2, 1]

    def test_json_round_trip(self, example3):
        solution = solve(example3)
        copy = RuinSolution.from_json(solution.to_json())
        assert copy.model == solution.model
        np.testing.assert_array_equal(copy.psi(U), solution.psi(U))

    def test_ruin_curve(self, classical):
        capitals, psi = ruin_curve(solve(classical), 30.0, 300)
        assert capitals.size == psi.size == 301
        assert capitals[-1] == 30.0

    def test_figure_ordering(self):
        psi = [
            solve(gamma_model(r, r, EXP1, 1.2)).psi(5.0)
            for r in (0.5, 1.0, 1.5, 2.0, 2.5)
        ]
        assert all(a > b for a, b in zip(psi, psi[1:]))


###############################################################################
## LUNDBERG
###############################################################################
class TestLundberg:
    @pytest.mark.parametrize(
        "r, lambda1, alpha",
        [(1.0, 1.0, 1.0), (2.0, 2.0, 1.0), (0.5, 0.3, 2.0)],
    )
    def test_adjustment_coefficient(self, r, lambda1, alpha):
        spec = gamma_model(r, lambda1, (GammaComponent(1.0, alpha),), 1.2)
        report = lundberg_check(spec, solve(spec))
        assert report.passed, report.value

    def test_unsupported(self, example3):
        with pytest.raises(UnsupportedSpecError):
            lundberg_check(example3, solve(example3))


###############################################################################
## MU -> 0 LIMIT
###############################################################################
class TestPsiZeroLimit:
    def test_closed_form(self):
        limit = psi_zero_limit(EXP1, 1.0)
        assert limit.at_zero == 0.5
        assert limit(2.0) == pytest.approx(0.5 * exp(-1.0), abs=1e-15)

    def test_marching(self):
        grid = solve_limit_equation(EXP1, 1.0, 5.0, 20000)
        expected = psi_zero_limit(EXP1, 1.0)(grid.nodes)
        np.testing.assert_allclose(grid.values, expected, atol=1e-6)

    def test_marching_gamma_claims(self):
        claims = (GammaComponent(2.0, 2.0),)
        grid = solve_limit_equation(claims, 1.0, 5.0, 2000)
        assert grid.values[0] == pytest.approx(0.5)
        assert np.all(np.diff(grid.values) < 0)

    def test_not_exponential(self):
        limit = psi_zero_limit((GammaComponent(2.0, 2.0),), 1.0)
        with pytest.raises(UnsupportedSpecError):
            limit(1.0)

    def test_unbounded_claim_density(self):
        with pytest.raises(DomainError):
            solve_limit_equation((GammaComponent(0.5, 1.0),), 1.0, 5.0, 100)

    def test_approach(self):
        target = psi_zero_limit(EXP1, 1.0)(U)
        gaps = []
        for mu in (0.2, 0.1, 0.05):
            psi = fractional_exponential_ruin(mu, 1.0, 1.0, 1.2)(U)
            gaps.append(np.max(np.abs(psi - target)))
        assert gaps[0] > gaps[1] > gaps[2]

    def test_solver_near_limit(self):
        solution = solve(fractional_model(0.2, 1.0, EXP1, 1.2))
        expected = fractional_exponential_ruin(0.2, 1.0, 1.0, 1.2)(U)
        np.testing.assert_allclose(solution.psi(U), expected, atol=1e-9)


###############################################################################
## U5
###############################################################################
class TestU5:
    def test_classical(self, classical):
        assert u5(solve(classical)) == pytest.approx(
            6.0 * log((1.0 / 1.2) / 0.05), abs=1e-9
        )

    def test_fractional(self, example3):
        x = fractional_exponential_root(0.5, 1.0, 1.0, 1.2)
        assert u5(solve(example3)) == pytest.approx(
            log((1.0 - x) / 0.05) / x, abs=1e-9
        )

    def test_zero_capital(self, classical):
        assert u5(solve(classical), level=0.9) == 0.0

    def test_axis_parse(self):
        axis = GridAxis.parse("r:0.5:2.5:5")
        assert axis == GridAxis("r", 0.5, 2.5, 5)
        np.testing.assert_allclose(axis.values, [0.5, 1.0, 1.5, 2.0, 2.5])

    @pytest.mark.parametrize("text", ["r:1:2", "r:a:2:3", "r:1:2:0"])
    def test_axis_invalid(self, text):
        with pytest.raises(ModelValidationError):
            GridAxis.parse(text)

    def test_single_cell(self, classical):
        axes = [GridAxis("r", 1.0, 1.0, 1), GridAxis("lambda1", 1.0, 1.0, 1)]
        grid = u5_grid(classical, axes)
        assert grid.log_u5[0, 0] == pytest.approx(2.8261570, abs=1e-6)
        assert grid.rows()[0] == ["lambda1\\r", "1"]

    def test_net_profit_cells(self, classical):
        axes = [GridAxis("r", 0.5, 2.5, 5), GridAxis("lambda1", 1.0, 2.5, 2)]
        grid = u5_grid(classical, axes)
        missing = np.isnan(grid.log_u5)
        expected = 1.2 * axes[0].values[None, :] <= axes[1].values[:, None]
        np.testing.assert_array_equal(missing, expected)
        assert not grid.failures
        lines = grid.to_csv().splitlines()
        assert lines[0] == "lambda1\\r,0.5,1,1.5,2,2.5"
        assert lines[1].startswith("1,,")

    @pytest.mark.parametrize(
        "error",
        [LinAlgError("Singular matrix"), ValueError("no sign change")],
    )
    def test_cell_failures_recorded(self, classical, monkeypatch, error):
        def fragile_solve(spec):
            if spec.premium_rate > 1.5:
                raise error
            return solve(spec)

        monkeypatch.setattr("fracruin.solver.capital.solve", fragile_solve)
        axes = [GridAxis("c", 1.2, 2.0, 2), GridAxis("lambda1", 1.0, 1.0, 1)]
        grid = u5_grid(classical, axes)
        assert grid.failures == {(0, 1): type(error).__name__}
        assert grid.log_u5[0, 0] == pytest.approx(2.8261570, abs=1e-6)
        assert grid.rows()[1][2] == f"error:{type(error).__name__}"

    def test_fractional_grid(self, example3):
        axes = [GridAxis("mu", 0.2, 1.0, 3), GridAxis("c", 1.2, 2.0, 2)]
        grid = u5_grid(example3, axes)
        assert np.all(np.isfinite(grid.log_u5))
        # more premium, less capital
        assert np.all(grid.log_u5[1] < grid.log_u5[0])

    def test_two_axes_required(self, classical):
        with pytest.raises(ModelValidationError):
            u5_grid(classical, [GridAxis("r", 1.0, 2.0, 2)])
