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
from typing import Iterable, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import gamma, gammaincc

Term = Tuple[complex, int, complex]


###############################################################################
## EXPONENTIAL POLYNOMIAL
###############################################################################
@dataclass(frozen=True)
class ExpPolynomial:
    """
    Analytic function sum_j a_j x^{d_j} e^{-rate_j x} with exact derivatives.

    Attributes
    ----------
    terms: Tuple[Tuple[complex, int, complex], ...]
        Triples (coefficient a_j, degree d_j >= 0, rate_j).
    """

    terms: Tuple[Term, ...]

    def __post_init__(self) -> None:
        cleaned = tuple(
            (complex(a), int(d), complex(rate))
            for a, d, rate in self.terms
            if a != 0
        )
        if any(d < 0 for _, d, _ in cleaned):
            raise ValueError("Degrees must be nonnegative integers.")
        object.__setattr__(self, "terms", cleaned)

    ############################### PUBLIC API ###############################
    @classmethod
    def exponential(
        cls, rate: complex, coefficient: complex = 1.0
    ) -> "ExpPolynomial":
        return cls(((coefficient, 0, rate),))

    @classmethod
    def from_terms(cls, terms: Iterable[Term]) -> "ExpPolynomial":
        return cls(tuple(terms))

    @property
    def is_real(self) -> bool:
        pairs = {(a, d, rate) for a, d, rate in self.terms}
        return all(
            (a.conjugate(), d, rate.conjugate()) in pairs
            or (a.imag == 0 and rate.imag == 0)
            for a, d, rate in self.terms
        )

    @property
    def decay_rate(self) -> float:
        """
        Smallest real part of the rates; the function decays iff positive.
        """
        if not self.terms:
            return np.inf
        return min(rate.real for _, _, rate in self.terms)

    def __call__(self, x: ArrayLike) -> Union[complex, float, np.ndarray]:
        points = np.asarray(x, dtype=float)
        total = np.zeros(points.shape, dtype=complex)
        for a, d, rate in self.terms:
            total += a * points ** d * np.exp(-rate * points)
        if self.is_real:
            total = total.real
        return total if np.ndim(x) else total[()]

    def derivative(self, n: int = 1) -> "ExpPolynomial":
        current: ExpPolynomial = self
        for _ in range(n):
            terms = []
            for a, d, rate in current.terms:
                if d > 0:
                    terms.append((a * d, d - 1, rate))
                terms.append((-a * rate, d, rate))
            current = ExpPolynomial(tuple(terms))
        return current

    def tilt(self, shift: complex) -> "ExpPolynomial":
        """
        Multiplies by e^{shift x}.
        """
        return ExpPolynomial(
            tuple((a, d, rate - shift) for a, d, rate in self.terms)
        )

    def scale(self, factor: complex) -> "ExpPolynomial":
        return ExpPolynomial(
            tuple((factor * a, d, rate) for a, d, rate in self.terms)
        )

    def __add__(self, other: "ExpPolynomial") -> "ExpPolynomial":
        return ExpPolynomial(self.terms + other.terms)

    def tail_mass(self, start: float) -> float:
        """
        Upper bound for int_start^inf |f(y)| dy, exact for each term's
        envelope |a| y^d e^{-Re(rate) y}.
        """
        bound: float = 0.0
        for a, d, rate in self.terms:
            decay: float = rate.real
            if decay <= 0:
                return np.inf
            bound += (
                abs(a)
                * float(gamma(d + 1))
                * float(gammaincc(d + 1, decay * start))
                / decay ** (d + 1)
            )
        return bound
