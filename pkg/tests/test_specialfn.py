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

from math import gamma, pi, sqrt

import mpmath
import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import erfcx

from fracruin.errors import DomainError
from fracruin.models import MlComponent
from fracruin.random import StreamFactory
from fracruin.specialfn import (
    MlDistParams,
    MlParams,
    fractional_poisson_mean,
    fractional_poisson_variance,
    ml_cdf,
    ml_density,
    ml_deriv,
    ml_eval,
    ml_laplace_transform,
)
from fracruin.validation import KolmogorovSmirnovValidation


###############################################################################
## MITTAG-LEFFLER FUNCTION
###############################################################################
class TestMlEval:
    def test_exponential(self):
        z = np.linspace(-30.0, 30.0, 241)
        values = ml_eval(MlParams(1.0, 1.0), z)
        np.testing.assert_allclose(values, np.exp(z), rtol=1e-12, atol=1e-12)

    def test_cosine(self):
        x = np.linspace(0.0, 6.0, 25)
        values = ml_eval(MlParams(2.0, 1.0), -(x ** 2))
        np.testing.assert_allclose(values, np.cos(x), atol=1e-10)

    def test_half_order(self):
        x = np.array([0.0, 0.5, 2.0, 8.0, 25.0])
        values = ml_eval(MlParams(0.5, 1.0), -x)
        np.testing.assert_allclose(values, erfcx(x), rtol=1e-9, atol=1e-12)

    def test_scalar_in_scalar_out(self):
        value = ml_eval(MlParams(0.7, 1.2), -1.5)
        assert isinstance(value, float)

    def test_derivative(self):
        z = np.array([-3.0, -0.5, 0.0, 1.0])
        values = ml_deriv(MlParams(1.0, 1.0), z, 1)
        np.testing.assert_allclose(values, np.exp(z), rtol=1e-10)

    def test_derivative_half_order(self):
        with mpmath.workdps(40):
            z = mpmath.mpf(-0.5)
            expected = mpmath.fsum(
                j * z ** (j - 1) * mpmath.rgamma(0.5 * j + 0.5)
                for j in range(1, 200)
            )
        value = ml_deriv(MlParams(0.5, 0.5), -0.5, 1)
        assert value == pytest.approx(float(expected), rel=1e-10)

    @pytest.mark.parametrize("alpha, beta", [(0.3, 0.3), (0.5, 1.0)])
    def test_derivative_far_left(self, alpha, beta):
        params = MlParams(alpha, beta)
        z, h = -12.0, 1e-3
        slope = (ml_eval(params, z + h) - ml_eval(params, z - h)) / (2 * h)
        first = ml_deriv(params, z, 1)
        assert first == pytest.approx(slope, rel=1e-5)
        curvature = (
            ml_deriv(params, z + h, 1) - ml_deriv(params, z - h, 1)
        ) / (2 * h)
        assert ml_deriv(params, z, 2) == pytest.approx(curvature, rel=1e-5)

    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7, 0.9, 1.0])
    @pytest.mark.parametrize("beta", [0.5, 1.0, 1.5])
    def test_method_switch_continuity(self, alpha, beta):
        params = MlParams(alpha, beta)
        radius = params.switch_radius
        z = -radius * np.array([1.0 - 1e-10, 1.0 + 1e-10])
        inner, outer = ml_eval(params, z)
        assert abs(inner - outer) < 1e-8
        inner, outer = ml_deriv(params, z, 1)
        assert abs(inner - outer) < 1e-8

    def test_invalid_params(self):
        with pytest.raises(DomainError):
            MlParams(-0.5)
        with pytest.raises(DomainError):
            ml_deriv(MlParams(0.5), 0.0, 9)


###############################################################################
## LAPLACE TRANSFORM
###############################################################################
class TestLaplaceTransform:
    @pytest.mark.parametrize(
        "alpha, beta, a, s",
        [
            (0.5, 1.0, 1.0, 2.0),
            (0.8, 1.0, 0.5, 1.5),
            (1.0, 1.0, 1.0, 2.0),
            (0.7, 1.3, 1.0, 2.0),
            (0.9, 2.0, 2.0, 3.0),
        ],
    )
    def test_identity(self, alpha, beta, a, s):
        params = MlParams(alpha, beta)

        def integrand(t):
            kernel = ml_eval(params, -a * t ** alpha)
            return np.exp(-s * t) * t ** (beta - 1.0) * kernel

        head = quad(integrand, 0.0, 1.0, limit=200)[0]
        tail = quad(integrand, 1.0, np.inf, limit=200)[0]
        closed = ml_laplace_transform(params, s, a)
        assert abs(head + tail - closed) < 1e-6 * abs(closed)

    def test_region(self):
        with pytest.raises(DomainError):
            ml_laplace_transform(MlParams(0.5), 0.5, 1.0)


###############################################################################
## MITTAG-LEFFLER DISTRIBUTION
###############################################################################
class TestMlDistribution:
    def test_exponential_case(self):
        t = np.linspace(0.1, 5.0, 50)
        params = MlDistParams(1.0, 2.0)
        np.testing.assert_allclose(
            ml_density(params, t), 2.0 * np.exp(-2.0 * t), rtol=1e-10
        )
        np.testing.assert_allclose(
            ml_cdf(params, t), 1.0 - np.exp(-2.0 * t), atol=1e-12
        )

    def test_density_integrates_cdf(self):
        params = MlDistParams(0.6, 1.0)
        mass = quad(
            lambda t: ml_density(params, t), 0.0, 2.0, limit=200
        )[0]
        assert abs(mass - ml_cdf(params, 2.0)) < 1e-7

    def test_density_normalized(self):
        params = MlDistParams(0.7, 1.0)
        head = quad(
            lambda t: ml_density(params, t),
            0.0,
            1.0,
            epsabs=1e-12,
            limit=200,
        )[0]
        tail = quad(
            lambda t: ml_density(params, t),
            1.0,
            np.inf,
            epsabs=1e-12,
            limit=200,
        )[0]
        assert abs(head + tail - 1.0) < 1e-8

    def test_density_near_origin(self):
        t = 1e-10
        leading = t ** -0.1 / gamma(0.9)
        value = ml_density(MlDistParams(0.9, 1.0), t)
        assert value / leading == pytest.approx(1.0, abs=1e-6)

    def test_cdf_monotone(self):
        rng = np.random.default_rng(17)
        pairs = np.sort(rng.uniform(0.0, 50.0, size=(200, 2)), axis=1)
        params = MlDistParams(0.6, 1.3)
        lower = ml_cdf(params, pairs[:, 0])
        upper = ml_cdf(params, pairs[:, 1])
        assert np.all(upper - lower >= 0.0)
        assert ml_cdf(params, 0.0) == 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            ml_density(MlDistParams(0.5, 1.0), 0.0)
        with pytest.raises(DomainError):
            MlDistParams(1.5, 1.0)

    def test_sampler(self):
        component = MlComponent(0.7, 1.5)
        draws = component.sample(StreamFactory(11).stream(0), 5_000)
        ks = KolmogorovSmirnovValidation(
            lambda t: ml_cdf(component.params, t)
        )
        assert ks.validate(draws)

    @pytest.mark.slow
    def test_sampler_full_scale(self):
        component = MlComponent(0.5, 1.0)
        draws = component.sample(StreamFactory(5).stream(0), 100_000)
        ks = KolmogorovSmirnovValidation(
            lambda t: ml_cdf(component.params, t)
        )
        assert ks.validate(draws)


###############################################################################
## FRACTIONAL POISSON MOMENTS
###############################################################################
class TestFractionalPoissonMoments:
    def test_poisson_case(self):
        assert abs(fractional_poisson_mean(1.0, 2.0, 3.0) - 6.0) < 1e-12
        assert abs(fractional_poisson_variance(1.0, 2.0, 3.0) - 6.0) < 1e-12

    def test_half_order(self):
        mean = fractional_poisson_mean(0.5, 1.0, 4.0)
        assert abs(mean - 4.0 / sqrt(pi)) < 1e-12
        variance = fractional_poisson_variance(0.5, 1.0, 4.0)
        expected = 8.0 - 4.0 / gamma(1.5) ** 2 + 2.0 / gamma(1.5)
        assert abs(variance - expected) < 1e-12
        assert abs(variance - 5.1638) < 1e-4
