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

from abc import ABC, abstractmethod

from numpy.typing import ArrayLike


###############################################################################
## VALIDATION STRATEGY INTERFACE (STRATEGY)
###############################################################################
class ValidationStrategy(ABC):
    @abstractmethod
    def validate(self, samples: ArrayLike) -> bool:
        """
        Validates a sample against a target distribution.

        Parameters
        ----------
        samples: ArrayLike
            One-dimensional sample of independent draws.

        Returns
        -------
        out: bool
            `True` if succeeds, `False` otherwise.
        """
        pass
