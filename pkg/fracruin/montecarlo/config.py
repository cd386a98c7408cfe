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

from enum import Enum
from typing import Optional

from ..helpers import validate_natural, validate_positive
from ..random.streams import SEED_BOUND


###############################################################################
## TRUNCATION MODE
###############################################################################
class TruncationMode(Enum):
    CLAIM_COUNT = "claim-count"
    TIME_HORIZON = "time-horizon"


###############################################################################
## SIMULATION CONFIGURATION
###############################################################################
class SimConfig:
    """
    Settings of a Monte Carlo ruin estimate.

    Parameters
    ----------
    paths: int
        Number of simulated surplus paths.
    max_claims_per_path: int, default: 10000
        Claim cap of the claim-count truncation.
    horizon: float, optional
        Time cap of the time-horizon truncation.
    seed: int, default: 0
        Nonnegative 64-bit seed.
    truncation_mode: TruncationMode, default: TruncationMode.CLAIM_COUNT
        Active truncation policy; TIME_HORIZON needs `horizon`.
    block_size: int, default: 4096
        Paths per random stream.
    chunk_size: int, default: 64
        Claims drawn per path and iteration.
    survival_multiple: float, default: 50.0
        Without an analytic solution, paths survive once the surplus exceeds
        u + survival_multiple * E[X].

    Attributes
    ----------
    paths: int
    max_claims_per_path: int
    horizon: Optional[float]
    seed: int
    truncation_mode: TruncationMode
    block_size: int
    chunk_size: int
    survival_multiple: float
    """

    def __init__(
        self,
        paths: int,
        max_claims_per_path: int = 10_000,
        horizon: Optional[float] = None,
        seed: int = 0,
        truncation_mode: TruncationMode = TruncationMode.CLAIM_COUNT,
        block_size: int = 4096,
        chunk_size: int = 64,
        survival_multiple: float = 50.0,
    ) -> None:
        self.paths = paths
        self.max_claims_per_path = max_claims_per_path
        self.horizon = horizon
        self.seed = seed
        self.truncation_mode = truncation_mode
        self.block_size = block_size
        self.chunk_size = chunk_size
        self.survival_multiple = survival_multiple

    ############################### PUBLIC API ###############################
    @property
    def paths(self) -> int:
        return self._paths

    @paths.setter
    def paths(self, paths: int) -> None:
        validate_natural(paths)
        self._paths: int = paths

    @property
    def max_claims_per_path(self) -> int:
        return self._max_claims_per_path

    @max_claims_per_path.setter
    def max_claims_per_path(self, max_claims_per_path: int) -> None:
        validate_natural(max_claims_per_path)
        self._max_claims_per_path: int = max_claims_per_path

    @property
    def horizon(self) -> Optional[float]:
        return self._horizon

    @horizon.setter
    def horizon(self, horizon: Optional[float]) -> None:
        if horizon is not None:
            validate_positive(horizon, "horizon")
        elif self.__dict__.get("_truncation_mode") is (
            TruncationMode.TIME_HORIZON
        ):
            raise ValueError("Time-horizon truncation needs a horizon.")
        self._horizon: Optional[float] = horizon

    @property
    def seed(self) -> int:
        return self._seed

    @seed.setter
    def seed(self, seed: int) -> None:
        validate_natural(seed, zero=True)
        if seed >= SEED_BOUND:
            raise ValueError(f"Invalid seed {seed} >= 2^64.")
        self._seed: int = seed

    @property
    def truncation_mode(self) -> TruncationMode:
        """
        Active truncation policy; exactly one is in force.
        """
        return self._truncation_mode

    @truncation_mode.setter
    def truncation_mode(self, truncation_mode: TruncationMode) -> None:
        truncation_mode = TruncationMode(truncation_mode)
        if (
            truncation_mode is TruncationMode.TIME_HORIZON
            and self.horizon is None
        ):
            raise ValueError("Time-horizon truncation needs a horizon.")
        self._truncation_mode: TruncationMode = truncation_mode

    @property
    def block_size(self) -> int:
        return self._block_size

    @block_size.setter
    def block_size(self, block_size: int) -> None:
        validate_natural(block_size)
        self._block_size: int = block_size

    @property
    def chunk_size(self) -> int:
        return self._chunk_size

    @chunk_size.setter
    def chunk_size(self, chunk_size: int) -> None:
        validate_natural(chunk_size)
        self._chunk_size: int = chunk_size

    @property
    def survival_multiple(self) -> float:
        return self._survival_multiple

    @survival_multiple.setter
    def survival_multiple(self, survival_multiple: float) -> None:
        validate_positive(survival_multiple, "survival_multiple")
        self._survival_multiple: float = survival_multiple

    @property
    def blocks(self) -> int:
        return -(-self.paths // self.block_size)

    @property
    def limit_description(self) -> str:
        if self.truncation_mode is TruncationMode.TIME_HORIZON:
            return f"time horizon {self.horizon:g}"
        return f"{self.max_claims_per_path} claims per path"
