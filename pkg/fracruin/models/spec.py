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

import logging
from dataclasses import dataclass
from functools import partial
from math import inf, isfinite, prod
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

from ..errors import ModelValidationError, NetProfitError
from ..helpers import validate_positive
from .components import Component, GammaComponent, MlComponent

logger = logging.getLogger(__name__)

RawSpec = Mapping[str, Any]

TOP_LEVEL_FIELDS = frozenset({"premium_rate", "interarrival", "claims"})
INTERARRIVAL_FIELDS = frozenset({"gammas", "mittag_lefflers"})
CLAIM_FIELDS = frozenset({"gammas"})
GAMMA_FIELDS = frozenset({"shape", "rate"})
ML_FIELDS = frozenset({"mu", "rate"})


###############################################################################
## LAMBDA PRODUCT
###############################################################################
@dataclass(frozen=True)
class LambdaProduct:
    """
    Normalizing constant prod lambda_1i^r_i * prod lambda_2j of the
    inter-arrival density equation.
    """

    value: float

    def __post_init__(self) -> None:
        validate_positive(self.value, "lambda_product")

    @classmethod
    def of(
        cls,
        gammas: Sequence[GammaComponent],
        mittag_lefflers: Sequence[MlComponent],
    ) -> "LambdaProduct":
        return cls(
            prod(g.rate ** g.shape for g in gammas)
            * prod(m.rate for m in mittag_lefflers)
        )


###############################################################################
## MODEL SPEC
###############################################################################
@dataclass(frozen=True)
class ModelSpec:
    """
    Renewal risk model R(t) = u + c t - sum_{i <= N(t)} X_i with

        T = sum_i Gamma(r_i, lambda_1i) + sum_j ML(mu_j, lambda_2j),
        X = sum_k Gamma(s_k, alpha_k).

    Attributes
    ----------
    interarrival_gammas: Tuple[GammaComponent, ...]
        Gamma inter-arrival summands with pairwise distinct rates.
    interarrival_mls: Tuple[MlComponent, ...]
        Mittag-Leffler inter-arrival summands.
    claim_gammas: Tuple[GammaComponent, ...]
        Gamma claim summands.
    premium_rate: float
        Premium income per unit time c.

    Raises
    ------
    ModelValidationError
        If a component list is empty or gamma inter-arrival rates repeat.
    NetProfitError
        If E[T] is finite and c E[T] <= E[X].

    Notes
    -----
    Use `validate` to build a spec from raw input; it merges gamma
    inter-arrival components of equal rate before construction.
    """

    interarrival_gammas: Tuple[GammaComponent, ...]
    interarrival_mls: Tuple[MlComponent, ...]
    claim_gammas: Tuple[GammaComponent, ...]
    premium_rate: float

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "interarrival_gammas", tuple(self.interarrival_gammas)
        )
        object.__setattr__(
            self, "interarrival_mls", tuple(self.interarrival_mls)
        )
        object.__setattr__(self, "claim_gammas", tuple(self.claim_gammas))
        validate_positive(
            self.premium_rate,
            "premium_rate",
            error=partial(ModelValidationError, field="premium_rate"),
        )
        if not self.interarrival_components:
            raise ModelValidationError(
                "at least one component is required", field="interarrival"
            )
        if not self.claim_gammas:
            raise ModelValidationError(
                "at least one component is required", field="claims"
            )
        rates = [g.rate for g in self.interarrival_gammas]
        if len(set(rates)) != len(rates):
            raise ModelValidationError(
                "gamma inter-arrival rates must be pairwise distinct",
                field="interarrival.gammas",
            )
        income: float = self.premium_rate * self.mean_interarrival
        if isfinite(income) and not income > self.mean_claim:
            raise NetProfitError(income, self.mean_claim)

    ############################### PUBLIC API ###############################
    @property
    def interarrival_components(self) -> Tuple[Component, ...]:
        return self.interarrival_gammas + self.interarrival_mls

    @property
    def mean_interarrival(self) -> float:
        """
        E[T]; infinite as soon as one Mittag-Leffler order is below 1.
        """
        return sum(c.mean for c in self.interarrival_components)

    @property
    def mean_claim(self) -> float:
        return sum(g.mean for g in self.claim_gammas)

    @property
    def lambda_product(self) -> LambdaProduct:
        return LambdaProduct.of(
            self.interarrival_gammas, self.interarrival_mls
        )

    @property
    def claim_shape_total(self) -> int:
        """
        N = sum_k s_k, the number of roots of the characteristic equation.

        Raises
        ------
        ModelValidationError
            If some claim shape is not an integer.
        """
        if not self.has_integer_claims:
            raise ModelValidationError(
                "claim shapes must be integers", field="claims.gammas.shape"
            )
        return sum(int(g.shape) for g in self.claim_gammas)

    @property
    def has_integer_claims(self) -> bool:
        return all(g.has_integer_shape for g in self.claim_gammas)

    @property
    def is_polynomial(self) -> bool:
        """
        Whether the characteristic function is a polynomial in z.
        """
        return (
            not self.interarrival_mls
            and self.has_integer_claims
            and all(g.has_integer_shape for g in self.interarrival_gammas)
        )

    @property
    def has_finite_mean_interarrival(self) -> bool:
        return self.mean_interarrival < inf

    def to_dict(self) -> Dict[str, Any]:
        """
        Model file representation; `validate(spec.to_dict())` returns an
        equal spec.
        """
        return {
            "premium_rate": self.premium_rate,
            "interarrival": {
                "gammas": [_gamma_dict(g) for g in self.interarrival_gammas],
                "mittag_lefflers": [
                    {"mu": m.mu, "rate": m.rate} for m in self.interarrival_mls
                ],
            },
            "claims": {"gammas": [_gamma_dict(g) for g in self.claim_gammas]},
        }


###############################################################################
## VALIDATE
###############################################################################
def validate(raw: Union[RawSpec, ModelSpec]) -> ModelSpec:
    """
    Builds a validated ModelSpec from a model file mapping.

    Gamma inter-arrival components sharing a rate are merged into a single
    component whose shape is the sum of their shapes.

    Parameters
    ----------
    raw: Mapping or ModelSpec
        Mapping with keys `premium_rate`, `interarrival` (`gammas`,
        `mittag_lefflers`) and `claims` (`gammas`). A ModelSpec is
        returned unchanged.

    Returns
    -------
    out: ModelSpec
        The validated model.

    Raises
    ------
    ModelValidationError
        On unknown or missing fields and invalid parameters; the
        offending field is named.
    NetProfitError
        If the net profit condition fails.
    """
    if isinstance(raw, ModelSpec):
        return raw
    _check_fields(raw, TOP_LEVEL_FIELDS, "", required={"premium_rate"})
    interarrival: RawSpec = raw.get("interarrival", {})
    claims: RawSpec = raw.get("claims", {})
    _check_fields(interarrival, INTERARRIVAL_FIELDS, "interarrival.")
    _check_fields(claims, CLAIM_FIELDS, "claims.")
    gammas = _parse_list(
        interarrival.get("gammas", []), "interarrival.gammas", GammaComponent
    )
    mls = _parse_list(
        interarrival.get("mittag_lefflers", []),
        "interarrival.mittag_lefflers",
        MlComponent,
    )
    claim_gammas = _parse_list(
        claims.get("gammas", []), "claims.gammas", GammaComponent
    )
    merged = merge_equal_rates(gammas)
    if len(merged) < len(gammas):
        logger.info(
            "Merged %d gamma inter-arrival components into %d",
            len(gammas),
            len(merged),
        )
    premium_rate = raw["premium_rate"]
    if isinstance(premium_rate, bool) or not isinstance(
        premium_rate, (int, float)
    ):
        raise ModelValidationError("must be a number", field="premium_rate")
    return ModelSpec(merged, mls, claim_gammas, float(premium_rate))


def merge_equal_rates(
    gammas: Sequence[GammaComponent],
) -> Tuple[GammaComponent, ...]:
    """
    Sums the shapes of gamma components sharing a rate, keeping the order
    of first appearance.
    """
    shapes: Dict[float, float] = {}
    for g in gammas:
        shapes[g.rate] = shapes.get(g.rate, 0.0) + g.shape
    return tuple(GammaComponent(shape, rate) for rate, shape in shapes.items())


###############################################################################
## PRIVATE API
###############################################################################
def _gamma_dict(g: GammaComponent) -> Dict[str, float]:
    return {"shape": g.shape, "rate": g.rate}


def _check_fields(
    raw: Any,
    allowed: frozenset,
    prefix: str,
    required: frozenset = frozenset(),
) -> None:
    if not isinstance(raw, Mapping):
        raise ModelValidationError(
            "expected an object", field=prefix.rstrip(".") or "spec"
        )
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise ModelValidationError(
            "unknown field", field=f"{prefix}{unknown[0]}"
        )
    missing = sorted(set(required) - set(raw))
    if missing:
        raise ModelValidationError(
            "missing field", field=f"{prefix}{missing[0]}"
        )


def _parse_list(items: Any, path: str, component: type) -> List[Any]:
    if not isinstance(items, Sequence) or isinstance(items, str):
        raise ModelValidationError("expected a list", field=path)
    fields = GAMMA_FIELDS if component is GammaComponent else ML_FIELDS
    parsed: List[Any] = []
    for index, item in enumerate(items):
        prefix: str = f"{path}[{index}]."
        _check_fields(item, fields, prefix, required=fields)
        for name in sorted(fields):
            value = item[name]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ModelValidationError(
                    "must be a number", field=f"{prefix}{name}"
                )
        try:
            parsed.append(component(**{k: float(item[k]) for k in fields}))
        except ModelValidationError as error:
            raise ModelValidationError(
                error.detail, field=f"{prefix}{error.field}"
            ) from error
    return parsed
