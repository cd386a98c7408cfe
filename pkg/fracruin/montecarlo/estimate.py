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
from dataclasses import dataclass
from math import sqrt
from typing import Any, Dict, Optional, Tuple

from scipy.stats import norm

from ..models import ModelSpec

CONFIDENCE: float = 0.95


###############################################################################
## MONTE CARLO ESTIMATE
###############################################################################
@dataclass(frozen=True)
class McEstimate:
    """
    Simulated ruin probability with a 95% confidence interval.

    Truncated paths count as survivals, so the estimate is a lower bound on
    psi(u) whenever `truncated_paths` > 0.

    With no ruined path the Wilson half width is positive while p_hat is 0,
    so p_hat - ci_half_width is negative there. Use `ci_lower`, which is
    clipped at 0, as the lower end of the interval.

    Attributes
    ----------
    p_hat: float
        Fraction of ruined paths.
    ci_half_width: float
        Half width of the interval.
    ci_lower: float
        Lower end, clipped at 0.
    ci_upper: float
        Upper end, clipped at 1.
    paths_run: int
        Number of simulated paths.
    truncated_paths: int
        Paths stopped by the truncation policy.
    u: float
        Initial capital.
    seed: int
        Seed of the run.
    model: ModelSpec, optional
        The simulated model.
    """

    p_hat: float
    ci_half_width: float
    ci_lower: float
    ci_upper: float
    paths_run: int
    truncated_paths: int
    u: float
    seed: int
    model: Optional[ModelSpec] = None

    @classmethod
    def from_counts(
        cls,
        ruined: int,
        truncated: int,
        paths: int,
        u: float,
        seed: int,
        model: Optional[ModelSpec] = None,
    ) -> "McEstimate":
        """
        Normal approximation interval, or Wilson's when no path or every
        path was ruined.
        """
        p_hat: float = ruined / paths
        lower, upper = binomial_interval(ruined, paths)
        return cls(
            p_hat,
            (upper - lower) / 2.0,
            lower,
            upper,
            paths,
            truncated,
            u,
            seed,
            model,
        )

    @property
    def is_lower_bound(self) -> bool:
        return self.truncated_paths > 0

    @property
    def truncation_fraction(self) -> float:
        return self.truncated_paths / self.paths_run

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "p_hat": self.p_hat,
            "ci": [self.ci_lower, self.ci_upper],
            "ci_half_width": self.ci_half_width,
            "paths": self.paths_run,
            "truncated": self.truncated_paths,
            "truncation_fraction": self.truncation_fraction,
            "lower_bound": self.is_lower_bound,
            "u": self.u,
            "seed": self.seed,
        }
        if self.is_lower_bound:
            data["note"] = (
                "truncated paths counted as survivals; p_hat is a lower "
                "bound on the ruin probability"
            )
        if self.model is not None:
            data["model"] = self.model.to_dict()
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


###############################################################################
## BINOMIAL INTERVAL
###############################################################################
def binomial_interval(
    successes: int, trials: int, confidence: float = CONFIDENCE
) -> Tuple[float, float]:
    z: float = float(norm.ppf(0.5 + confidence / 2.0))
    p: float = successes / trials
    if 0 < successes < trials:
        half: float = z * sqrt(p * (1.0 - p) / trials)
        return max(p - half, 0.0), min(p + half, 1.0)
    denominator: float = 1.0 + z ** 2 / trials
    center: float = (p + z ** 2 / (2.0 * trials)) / denominator
    half = (
        z
        * sqrt(p * (1.0 - p) / trials + z ** 2 / (4.0 * trials ** 2))
        / denominator
    )
    if successes == 0:
        return 0.0, min(center + half, 1.0)
    return max(center - half, 0.0), 1.0
