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
from randomgen import Philox

from ..helpers import validate_natural

SEED_BOUND: int = 2 ** 64
INDEX_BOUND: int = 2 ** 64


###############################################################################
## STREAM FACTORY
###############################################################################
class StreamFactory:
    """
    Source of deterministic, mutually disjoint random streams.

    Stream `index` is a Philox-4x64 counter-based generator keyed by the seed
    whose counter starts at index * 2^192, so streams never overlap and can
    be created in any order by any process.

    Parameters
    ----------
    seed: int
        Nonnegative 64-bit seed.

    Attributes
    ----------
    seed: int
        Key of every stream.

    Methods
    -------
    stream(index: int) -> numpy.random.Generator
        Returns the generator of stream `index`.
    """

    def __init__(self, seed: int) -> None:
        self.seed = seed

    ############################### PUBLIC API ###############################
    @property
    def seed(self) -> int:
        """
        Key of every stream.
        """
        return self._seed

    @seed.setter
    def seed(self, seed: int) -> None:
        validate_natural(seed, zero=True)
        if seed >= SEED_BOUND:
            raise ValueError(f"Invalid seed {seed} >= 2^64.")
        self._seed: int = seed

    def stream(self, index: int) -> np.random.Generator:
        """
        Returns the generator of stream `index`.

        Parameters
        ----------
        index: int
            Nonnegative stream index below 2^64.

        Returns
        -------
        out: numpy.random.Generator
            A fresh generator positioned at the start of the stream.
        """
        validate_natural(index, zero=True)
        if index >= INDEX_BOUND:
            raise ValueError(f"Invalid stream index {index} >= 2^64.")
        counter = np.array([0, 0, 0, index], dtype=np.uint64)
        bit_generator = Philox(key=self.seed, counter=counter)
        return np.random.Generator(bit_generator)
