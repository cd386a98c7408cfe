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

import json
from math import inf

import numpy as np
import pytest
from scipy.stats import gamma as gamma_dist

from fracruin.errors import DomainError, ModelValidationError, NetProfitError
from fracruin.models import (
    GammaComponent,
    LambdaProduct,
    MlComponent,
    ModelSpec,
    apply_overrides,
    claim_cdf,
    claim_density,
    dump_spec,
    interarrival_density,
    load_spec,
    merge_equal_rates,
    sample_claim,
    sum_cdf,
    sum_density,
    validate,
)
from fracruin.random import StreamFactory


def raw_model(**changes):
    raw = {
        "premium_rate": 1.2,
        "interarrival": {
            "gammas": [{"shape": 2.0, "rate": 2.0}],
            "mittag_lefflers": [],
        },
        "claims": {"gammas": [{"shape": 1.0, "rate": 1.0}]},
    }
    raw.update(changes)
    return raw


###############################################################################
## VALIDATE
###############################################################################
class TestValidate:
    def test_round_trip(self):
        spec = validate(raw_model())
        assert validate(spec.to_dict()) == spec

    def test_spec_passthrough(self):
        spec = validate(raw_model())
        assert validate(spec) is spec

    def test_fractional_model(self):
        raw = raw_model(
            interarrival={"mittag_lefflers": [{"mu": 0.5, "rate": 1.0}]}
        )
        spec = validate(raw)
        assert spec.interarrival_mls == (MlComponent(0.5, 1.0),)
        assert spec.mean_interarrival == inf
        assert not spec.is_polynomial

    def test_unknown_top_level_field(self):
        with pytest.raises(ModelValidationError) as info:
            validate(raw_model(premium=1.0))
        assert info.value.field == "premium"

    def test_unknown_component_field(self):
        raw = raw_model(claims={"gammas": [{"shape": 1, "rate": 1, "k": 2}]})
        with pytest.raises(ModelValidationError) as info:
            validate(raw)
        assert info.value.field == "claims.gammas[0].k"

    def test_missing_premium(self):
        raw = raw_model()
        del raw["premium_rate"]
        with pytest.raises(ModelValidationError) as info:
            validate(raw)
        assert info.value.field == "premium_rate"

    def test_negative_rate(self):
        raw = raw_model(claims={"gammas": [{"shape": 1.0, "rate": -1.0}]})
        with pytest.raises(ModelValidationError) as info:
            validate(raw)
        assert info.value.field == "claims.gammas[0].rate"
        assert "rate" in str(info.value)

    def test_mu_out_of_range(self):
        raw = raw_model(
            interarrival={"mittag_lefflers": [{"mu": 1.5, "rate": 1.0}]}
        )
        with pytest.raises(ModelValidationError) as info:
            validate(raw)
        assert info.value.field == "interarrival.mittag_lefflers[0].mu"

    def test_boolean_is_not_a_number(self):
        with pytest.raises(ModelValidationError):
            validate(raw_model(premium_rate=True))

    def test_empty_claims(self):
        with pytest.raises(ModelValidationError) as info:
            validate(raw_model(claims={"gammas": []}))
        assert info.value.field == "claims"

    def test_net_profit(self):
        with pytest.raises(NetProfitError) as info:
            validate(raw_model(premium_rate=1.0))
        assert info.value.premium_income == 1.0
        assert info.value.expected_claim == 1.0

    def test_merge_equal_rates(self):
        raw = raw_model(
            interarrival={
                "gammas": [
                    {"shape": 0.5, "rate": 2.0},
                    {"shape": 1.0, "rate": 3.0},
                    {"shape": 1.5, "rate": 2.0},
                ]
            }
        )
        spec = validate(raw)
        assert spec.interarrival_gammas == (
            GammaComponent(2.0, 2.0),
            GammaComponent(1.0, 3.0),
        )

    def test_merge_keeps_order(self):
        merged = merge_equal_rates(
            [GammaComponent(1.0, 5.0), GammaComponent(1.0, 1.0)]
        )
        assert [g.rate for g in merged] == [5.0, 1.0]

    def test_duplicate_rates_rejected_directly(self):
        with pytest.raises(ModelValidationError):
            ModelSpec(
                (GammaComponent(1.0, 1.0), GammaComponent(1.0, 1.0)),
                (),
                (GammaComponent(1.0, 4.0),),
                1.2,
            )

    def test_claim_shape_total(self):
        raw = raw_model(
            claims={
                "gammas": [
                    {"shape": 2.0, "rate": 3.0},
                    {"shape": 1.0, "rate": 5.0},
                ]
            }
        )
        assert validate(raw).claim_shape_total == 3

    def test_fractional_claim_shape_total(self):
        raw = raw_model(claims={"gammas": [{"shape": 0.5, "rate": 1.0}]})
        with pytest.raises(ModelValidationError):
            validate(raw).claim_shape_total

    def test_lambda_product(self):
        product = LambdaProduct.of(
            [GammaComponent(2.0, 3.0)], [MlComponent(0.5, 2.0)]
        )
        assert product.value == pytest.approx(18.0)


###############################################################################
## MODEL FILES
###############################################################################
class TestModelFiles:
    def test_load_and_dump(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text(json.dumps(raw_model()))
        spec = load_spec(path)
        copy = tmp_path / "copy.json"
        dump_spec(spec, copy)
        assert load_spec(copy) == spec

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text("{not json")
        with pytest.raises(ModelValidationError) as info:
            load_spec(path)
        assert info.value.field == "spec"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ModelValidationError):
            load_spec(tmp_path / "absent.json")

    def test_alias_override(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text(json.dumps(raw_model()))
        spec = load_spec(path, {"c": 1.5, "lambda1": 2.5})
        assert spec.premium_rate == 1.5
        assert spec.interarrival_gammas[0].rate == 2.5

    def test_dotted_override(self):
        raw = raw_model(
            claims={
                "gammas": [
                    {"shape": 1.0, "rate": 3.0},
                    {"shape": 1.0, "rate": 4.0},
                ]
            }
        )
        updated = apply_overrides(raw, {"claims.gammas.1.rate": 2.0})
        assert updated["claims"]["gammas"][1]["rate"] == 2.0
        assert raw["claims"]["gammas"][1]["rate"] == 4.0

    @pytest.mark.parametrize("key", ["mu", "claims.gammas.3.rate", "x.y"])
    def test_missing_override_target(self, key):
        with pytest.raises(ModelValidationError) as info:
            apply_overrides(raw_model(), {key: 1.0})
        assert info.value.field == key


###############################################################################
## DISTRIBUTIONS
###############################################################################
class TestDistributions:
    def test_single_claim_cdf(self):
        spec = validate(
            raw_model(claims={"gammas": [{"shape": 2.5, "rate": 3.0}]})
        )
        y = np.linspace(0.0, 4.0, 9)
        expected = gamma_dist.cdf(y, 2.5, scale=1.0 / 3.0)
        np.testing.assert_allclose(claim_cdf(spec, y), expected, atol=1e-12)

    def test_claim_sum_cdf(self):
        spec = validate(
            raw_model(
                premium_rate=2.0,
                claims={
                    "gammas": [
                        {"shape": 1.0, "rate": 1.0},
                        {"shape": 1.0, "rate": 2.0},
                    ]
                }
            )
        )
        y = np.array([0.5, 1.0, 3.0])
        expected = 1.0 - 2.0 * np.exp(-y) + np.exp(-2.0 * y)
        np.testing.assert_allclose(claim_cdf(spec, y), expected, atol=1e-9)

    def test_claim_cdf_domain(self):
        spec = validate(raw_model())
        with pytest.raises(DomainError):
            claim_cdf(spec, -1.0)

    def test_sum_density(self):
        components = [GammaComponent(1.0, 1.0), GammaComponent(1.0, 2.0)]
        x = np.array([0.1, 1.0, 2.5])
        expected = 2.0 * (np.exp(-x) - np.exp(-2.0 * x))
        np.testing.assert_allclose(
            sum_density(components, x), expected, atol=1e-9
        )
        assert sum_density(components, 0.0) == 0.0

    def test_sum_cdf_mixed(self):
        components = [GammaComponent(1.0, 1.0), MlComponent(1.0, 2.0)]
        expected = 1.0 - 2.0 * np.exp(-1.0) + np.exp(-2.0)
        assert sum_cdf(components, 1.0) == pytest.approx(expected, abs=1e-9)

    def test_scalar_in_scalar_out(self):
        spec = validate(raw_model())
        assert isinstance(interarrival_density(spec, 1.0), float)
        assert isinstance(claim_density(spec, 1.0), float)

    def test_ml_component(self):
        component = MlComponent(0.7, 2.0)
        assert component.mean == inf
        assert component.origin == pytest.approx((-0.3, 2.0 / 1.298055))
        assert component.laplace(1.0) == pytest.approx(2.0 / 3.0)
        assert MlComponent(1.0, 2.0).mean == 0.5

    def test_sampler_mean(self):
        spec = validate(
            raw_model(
                claims={
                    "gammas": [
                        {"shape": 2.0, "rate": 3.0},
                        {"shape": 0.5, "rate": 1.0},
                    ]
                }
            )
        )
        draws = sample_claim(spec, StreamFactory(7).stream(0), 20000)
        assert draws.shape == (20000,)
        assert abs(draws.mean() - spec.mean_claim) < 0.05
        single = sample_claim(spec, StreamFactory(7).stream(0))
        assert isinstance(single, float)


###############################################################################
## RANDOM STREAMS
###############################################################################
class TestStreamFactory:
    def test_reproducible(self):
        first = StreamFactory(42).stream(3).random(5)
        second = StreamFactory(42).stream(3).random(5)
        np.testing.assert_array_equal(first, second)

    def test_disjoint_streams(self):
        factory = StreamFactory(42)
        a = factory.stream(0).random(5)
        b = factory.stream(1).random(5)
        assert not np.array_equal(a, b)

    def test_seed_matters(self):
        a = StreamFactory(1).stream(0).random(5)
        b = StreamFactory(2).stream(0).random(5)
        assert not np.array_equal(a, b)

    @pytest.mark.parametrize("seed", [-1, 2 ** 64])
    def test_invalid_seed(self, seed):
        with pytest.raises(ValueError):
            StreamFactory(seed)

    def test_invalid_seed_type(self):
        with pytest.raises(TypeError):
            StreamFactory(1.5)

    def test_invalid_index(self):
        with pytest.raises(ValueError):
            StreamFactory(0).stream(-1)
