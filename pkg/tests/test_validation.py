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

import numpy as np
import pytest
from scipy.stats import expon

from fracruin.errors import DomainError
from fracruin.validation import (
    KolmogorovSmirnovValidation,
    MomentValidation,
    ValidationStrategy,
)


@pytest.fixture
def exponential_draws():
    return np.random.default_rng(11).exponential(size=5000)


###############################################################################
## VALIDATION STRATEGY
###############################################################################
class TestValidationStrategy:
    def test_abstract(self):
        with pytest.raises(TypeError):
            ValidationStrategy()

    @pytest.mark.parametrize(
        "strategy",
        [KolmogorovSmirnovValidation(expon.cdf), MomentValidation(1.0, 1.0)],
    )
    def test_interface(self, strategy):
        assert isinstance(strategy, ValidationStrategy)


###############################################################################
## KOLMOGOROV-SMIRNOV
###############################################################################
class TestKolmogorovSmirnov:
    def test_accepts(self, exponential_draws):
        validation = KolmogorovSmirnovValidation(expon.cdf)
        assert validation.validate(exponential_draws)

    def test_rejects(self, exponential_draws):
        validation = KolmogorovSmirnovValidation(expon(scale=2.0).cdf)
        assert not validation.validate(exponential_draws)

    @pytest.mark.parametrize("samples", [[], [[1.0, 2.0]]])
    def test_bad_shape(self, samples):
        validation = KolmogorovSmirnovValidation(expon.cdf)
        assert not validation.validate(samples)

    @pytest.mark.parametrize("significance", [0.0, 1.0, 2.0])
    def test_invalid_significance(self, significance):
        with pytest.raises(DomainError):
            KolmogorovSmirnovValidation(expon.cdf, significance)


###############################################################################
## MOMENTS
###############################################################################
class TestMoments:
    def test_accepts(self, exponential_draws):
        assert MomentValidation(1.0, 1.0).validate(exponential_draws)

    def test_rejects_mean(self, exponential_draws):
        assert not MomentValidation(mean=1.5).validate(exponential_draws)

    def test_rejects_variance(self, exponential_draws):
        assert not MomentValidation(variance=3.0).validate(exponential_draws)

    def test_no_targets(self, exponential_draws):
        assert MomentValidation().validate(exponential_draws)

    def test_too_few(self):
        assert not MomentValidation(1.0).validate([1.0])

    def test_invalid_targets(self):
        with pytest.raises(DomainError):
            MomentValidation(variance=-1.0)
        with pytest.raises(DomainError):
            MomentValidation(sigmas=0.0)
