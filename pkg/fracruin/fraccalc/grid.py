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

from dataclasses import dataclass
from math import isclose
from typing import Callable, Optional, Tuple

import mpmath
import numpy as np
from scipy.special import beta as beta_fn

from ..errors import DomainError, EvaluationError
from ..helpers import validate_positive

Origin = Tuple[float, float]


###############################################################################
## GRID FUNCTION
###############################################################################
@dataclass(frozen=True, eq=False)
class GridFn:
    """
    A function supported on [0, inf) sampled on the uniform grid
    x_n = n * step, n = 0, ..., len(values) - 1.

    Attributes
    ----------
    step: float
        Grid spacing h > 0.
    values: numpy.ndarray
        Finite samples. The first entry is an effective value (see Notes).
    origin: Tuple[float, float], optional
        Leading behaviour f(x) ~ coefficient * x^exponent as x -> 0+, with
        exponent > -1.

    Notes
    -----
    When the leading behaviour at the origin is known, the value stored at
    x_0 = 0 is the generalized Euler-Maclaurin endpoint weight
    -zeta(-q) * c * h^q, which turns every rectangle-type sum over the
    grid (Grunwald-Letnikov sums and convolutions) into a rule whose error
    no longer depends on the integrable singularity at the origin. For
    q = 0 this is the trapezoidal half weight.
    """

    step: float
    values: np.ndarray
    origin: Optional[Origin] = None

    def __post_init__(self) -> None:
        validate_positive(self.step, "step")
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size < 2:
            raise DomainError("A grid function needs at least two nodes.")
        if not np.all(np.isfinite(values)):
            raise DomainError("Grid function values must be finite.")
        if self.origin is not None and not self.origin[0] > -1:
            raise DomainError("Origin exponent must be larger than -1.")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    ############################### PUBLIC API ###############################
    @classmethod
    def from_callable(
        cls,
        f: Callable[[np.ndarray], np.ndarray],
        step: float,
        t_max: float,
        origin: Optional[Origin] = None,
    ) -> "GridFn":
        """
        Samples `f` on [0, t_max].

        Parameters
        ----------
        f: Callable
            Vectorized function; it is only evaluated at x > 0 when
            `origin` is given.
        step: float
            Grid spacing.
        t_max: float
            Right end of the grid (rounded to a whole number of steps).
        origin: Tuple[float, float], optional
            Known leading behaviour (exponent, coefficient) at 0+.
        """
        validate_positive(step, "step")
        validate_positive(t_max, "t_max")
        size: int = int(round(t_max / step)) + 1
        nodes: np.ndarray = step * np.arange(size)
        values: np.ndarray = np.empty(size)
        values[1:] = f(nodes[1:])
        if origin is None:
            values[0] = f(nodes[:1])[0]
        else:
            values[0] = endpoint_weight(origin, step)
        return cls(step, values, origin)

    @property
    def nodes(self) -> np.ndarray:
        return self.step * np.arange(self.values.size)

    @property
    def t_max(self) -> float:
        return self.step * (self.values.size - 1)

    def index_of(self, x: float) -> int:
        """
        Index of the grid node at `x`.

        Raises
        ------
        DomainError
            If `x` is not a grid node inside the domain.
        """
        n: int = int(round(x / self.step))
        if n < 0 or n >= self.values.size:
            raise DomainError(f"x={x} outside grid [0, {self.t_max}].")
        if not isclose(n * self.step, x, rel_tol=1e-9, abs_tol=1e-12):
            raise DomainError(f"x={x} is not a grid node.")
        return n

    def at(self, x: float) -> float:
        return float(self.values[self.index_of(x)])

    def window(self, low: float, high: float) -> Tuple[np.ndarray, np.ndarray]:
        """
        Nodes and values with low <= x <= high.
        """
        nodes = self.nodes
        mask = (nodes >= low - 1e-12) & (nodes <= high + 1e-12)
        return nodes[mask], self.values[mask]

    def max_abs(self, low: float, high: float) -> float:
        return float(np.max(np.abs(self.window(low, high)[1])))

    def with_values(
        self, values: np.ndarray, origin: Optional[Origin] = None
    ) -> "GridFn":
        return GridFn(self.step, values, origin)

    def tilt(self, rate: float) -> "GridFn":
        """
        Multiplies by e^{rate x}; the origin behaviour is unchanged.
        """
        factors: np.ndarray = np.exp(rate * self.nodes)
        return GridFn(self.step, self.values * factors, self.origin)

    def convolve(self, other: "GridFn") -> "GridFn":
        """
        Convolution (f * g)(x) = int_0^x f(y) g(x - y) dy on the common grid.

        Raises
        ------
        EvaluationError
            If the result underflows to zero.
        """
        if not isclose(self.step, other.step):
            raise DomainError("Convolution requires identical grid steps.")
        size: int = min(self.values.size, other.values.size)
        length: int = int(2 ** np.ceil(np.log2(2 * size - 1)))
        spectrum = np.fft.rfft(self.values[:size], length) * np.fft.rfft(
            other.values[:size], length
        )
        values: np.ndarray = self.step * np.fft.irfft(spectrum, length)[:size]
        origin: Optional[Origin] = None
        if self.origin is not None and other.origin is not None:
            (p, a), (q, b) = self.origin, other.origin
            origin = (p + q + 1.0, a * b * float(beta_fn(p + 1.0, q + 1.0)))
            values[0] = endpoint_weight(origin, self.step)
        else:
            values[0] = 0.0
        if not np.any(values[1:]):
            raise EvaluationError("Convolution underflow", method="FFT")
        return GridFn(self.step, values, origin)

    ############################### OPERATORS ###############################
    def __add__(self, other: "GridFn") -> "GridFn":
        self._check_compatible(other)
        return GridFn(self.step, self.values + other.values, None)

    def __sub__(self, other: "GridFn") -> "GridFn":
        self._check_compatible(other)
        return GridFn(self.step, self.values - other.values, None)

    def __mul__(self, scalar: float) -> "GridFn":
        origin: Optional[Origin] = None
        if self.origin is not None:
            origin = (self.origin[0], scalar * self.origin[1])
        return GridFn(self.step, scalar * self.values, origin)

    __rmul__ = __mul__

    ############################### PRIVATE API ###############################
    def _check_compatible(self, other: "GridFn") -> None:
        if not isclose(self.step, other.step) or (
            self.values.size != other.values.size
        ):
            raise DomainError("Grid functions live on different grids.")


###############################################################################
## ENDPOINT WEIGHT
###############################################################################
def endpoint_weight(origin: Origin, step: float) -> float:
    """
    Effective value at x = 0 of a function behaving like c * x^q near 0.
    """
    exponent, coefficient = origin
    return -float(mpmath.zeta(-exponent)) * coefficient * step ** exponent
