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
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np

from ..errors import MultiplicityError, RootCountError
from ..models import ModelSpec
from .characteristic import (
    characteristic_derivative,
    characteristic_fn,
    characteristic_polynomial,
)

logger = logging.getLogger(__name__)

Rectangle = Tuple[float, float, float, float]

DEDUPLICATION_RADIUS: float = 1e-8
ORIGIN_RADIUS: float = 1e-6
POSITIVITY_THRESHOLD: float = 1e-10
REALNESS_THRESHOLD: float = 1e-12
NEWTON_ITERATIONS: int = 100
GRID_RESOLUTION: int = 24


###############################################################################
## CHARACTERISTIC ROOT
###############################################################################
@dataclass(frozen=True)
class CharRoot:
    """
    Root of the characteristic function with positive real part.

    Attributes
    ----------
    z: complex
        The root.
    residual: float
        |F(z)|.
    is_conjugate_pair_member: bool
        Whether the conjugate of `z` is a distinct root.
    """

    z: complex
    residual: float
    is_conjugate_pair_member: bool = False

    @classmethod
    def at(cls, spec: ModelSpec, z: complex) -> "CharRoot":
        return cls(
            complex(z),
            abs(characteristic_fn(spec, z)),
            abs(complex(z).imag) > 0,
        )


###############################################################################
## ROOT FINDER INTERFACE (STRATEGY AND DECORATOR)
###############################################################################
class RootFinder(ABC):
    ############################ STRATEGY PATTERN ############################
    @abstractmethod
    def find(self, spec: ModelSpec, tol: float) -> List[CharRoot]:
        """
        Locates the N = sum_k s_k roots of the characteristic function with
        positive real part.

        Parameters
        ----------
        spec: ModelSpec
            Model with integer claim shapes.
        tol: float
            Residual tolerance, relative to Lambda prod_k alpha_k^{s_k}.

        Returns
        -------
        out: List[CharRoot]
            Roots sorted by real part, closed under conjugation.

        Raises
        ------
        RootCountError
            If the number of roots found differs from N.
        MultiplicityError
            If a repeated root is detected.
        """
        pass

    ############################ DECORATOR PATTERN ############################
    @property
    @abstractmethod
    def base_finder(self) -> Optional["RootFinder"]:
        pass


###############################################################################
## BASE ROOT FINDER INTERFACE
###############################################################################
class BareRootFinder(RootFinder):
    ############################ STRATEGY PATTERN ############################
    @abstractmethod
    def find(self, spec: ModelSpec, tol: float) -> List[CharRoot]:
        pass

    ############################ DECORATOR PATTERN ############################
    @property
    def base_finder(self) -> Literal[None]:
        return None

    ############################### PRIVATE API ###############################
    def _finalize(
        self, spec: ModelSpec, candidates: Sequence[complex], tol: float
    ) -> List[CharRoot]:
        """
        Polishes, filters, deduplicates and conjugate-closes candidates, then
        checks count, residuals and simplicity.
        """
        scale: float = _scale(spec)
        roots: List[complex] = []
        for z in candidates:
            if z.real <= POSITIVITY_THRESHOLD or abs(z) < ORIGIN_RADIUS:
                continue
            z = _newton(spec, z, scale, tol)
            if z is None or z.real <= POSITIVITY_THRESHOLD:
                continue
            if abs(z) < ORIGIN_RADIUS:
                continue
            if abs(z.imag) <= REALNESS_THRESHOLD * max(1.0, abs(z)):
                z = complex(z.real, 0.0)
            elif z.imag < 0:
                z = z.conjugate()
            if all(abs(z - w) > DEDUPLICATION_RADIUS for w in roots):
                roots.append(z)
        closed: List[complex] = []
        for z in roots:
            closed.append(z)
            if z.imag != 0:
                closed.append(z.conjugate())
        closed.sort(key=lambda w: (w.real, w.imag))
        expected: int = spec.claim_shape_total
        if len(closed) != expected:
            raise RootCountError(expected, closed)
        for z in closed:
            slope: float = abs(characteristic_derivative(spec, z))
            if slope * max(1.0, abs(z)) < np.sqrt(tol) * scale:
                raise MultiplicityError(
                    f"Root z={z} is repeated: |F'(z)| = {slope:.3e}."
                )
        logger.debug("Located %d roots: %s", len(closed), closed)
        return [CharRoot.at(spec, z) for z in closed]


###############################################################################
## POLYNOMIAL ROOT FINDER
###############################################################################
class PolynomialRootFinder(BareRootFinder):
    """
    Companion-matrix eigenvalues of F(z)/z for models with integer shapes and
    no Mittag-Leffler components, followed by Newton polishing on F.
    """

    def find(self, spec: ModelSpec, tol: float) -> List[CharRoot]:
        candidates = characteristic_polynomial(spec).roots()
        logger.debug("Polynomial roots: %s", candidates)
        return self._finalize(spec, [complex(z) for z in candidates], tol)


###############################################################################
## GRID NEWTON ROOT FINDER
###############################################################################
class GridNewtonRootFinder(BareRootFinder):
    """
    Damped Newton iterations seeded at every node of a rectangular grid over
    0 < Re(z) <= Z_max, 0 <= Im(z) <= Z_max, with
    Z_max = 10 (max alpha_k + max lambda_1i / c + 1). Conjugates of the roots
    found in the upper half plane complete the set.

    Parameters
    ----------
    resolution: int, default: 24
        Number of grid nodes per axis.
    """

    def __init__(self, resolution: int = GRID_RESOLUTION) -> None:
        self.resolution: int = resolution

    def find(self, spec: ModelSpec, tol: float) -> List[CharRoot]:
        z_max: float = search_radius(spec)
        axis = np.linspace(0.0, z_max, self.resolution + 1)[1:]
        imag = np.linspace(0.0, z_max, self.resolution)
        seeds = [complex(x, y) for x in axis for y in imag]
        logger.debug("Seeding %d Newton runs, Z_max=%g", len(seeds), z_max)
        return self._finalize(spec, seeds, tol)


###############################################################################
## ARGUMENT PRINCIPLE DECORATOR
###############################################################################
class ArgumentPrincipleDecorator(RootFinder):
    """
    Confirms the root count of a base finder by the winding number of F
    around a rectangle enclosing every root found.

    Parameters
    ----------
    base_finder: RootFinder
        The finder whose result is confirmed.
    samples: int, default: 4096
        Initial number of contour samples per edge.
    """

    def __init__(self, base_finder: RootFinder, samples: int = 4096) -> None:
        self._base_finder: RootFinder = base_finder
        self.samples: int = samples

    ############################ STRATEGY PATTERN ############################
    def find(self, spec: ModelSpec, tol: float) -> List[CharRoot]:
        roots: List[CharRoot] = self.base_finder.find(spec, tol)
        rectangle: Rectangle = enclosing_rectangle(spec, roots)
        count: int = count_roots(spec, rectangle, self.samples)
        if count != len(roots):
            raise RootCountError(count, [root.z for root in roots])
        logger.info("Argument principle confirms %d roots", count)
        return roots

    ############################ DECORATOR PATTERN ############################
    @property
    def base_finder(self) -> RootFinder:
        return self._base_finder


###############################################################################
## FIND ROOTS
###############################################################################
def find_roots(
    spec: ModelSpec, tol: float = 1e-10, finder: Optional[RootFinder] = None
) -> List[CharRoot]:
    """
    Locates the roots with positive real part, by default with the
    polynomial finder when possible and the grid Newton finder otherwise.
    """
    if finder is None:
        finder = (
            PolynomialRootFinder()
            if spec.is_polynomial
            else GridNewtonRootFinder()
        )
    logger.debug("Root finder: %s", type(finder).__name__)
    return finder.find(spec, tol)


###############################################################################
## ARGUMENT PRINCIPLE
###############################################################################
def count_roots(
    spec: ModelSpec, rectangle: Rectangle, samples: int = 4096
) -> int:
    """
    Number of zeros of F inside the rectangle re_lo < Re z < re_hi,
    im_lo < Im z < im_hi (re_lo > 0), from the total change of arg F along
    its boundary. Sampling is refined until no step turns by more than pi/4.
    """
    re_lo, re_hi, im_lo, im_hi = rectangle
    corners = [
        complex(re_lo, im_lo),
        complex(re_hi, im_lo),
        complex(re_hi, im_hi),
        complex(re_lo, im_hi),
        complex(re_lo, im_lo),
    ]
    size: int = samples
    for _ in range(6):
        path = np.concatenate(
            [
                np.linspace(a, b, size, endpoint=False)
                for a, b in zip(corners[:-1], corners[1:])
            ]
            + [np.array([corners[0]])]
        )
        values = np.array([characteristic_fn(spec, z) for z in path])
        turns = np.angle(values[1:] / values[:-1])
        if np.max(np.abs(turns)) < np.pi / 4:
            return int(round(np.sum(turns) / (2 * np.pi)))
        size *= 2
    return int(round(np.sum(turns) / (2 * np.pi)))


def enclosing_rectangle(
    spec: ModelSpec, roots: Sequence[CharRoot]
) -> Rectangle:
    """
    Rectangle containing every root and excluding the root at the origin.
    """
    zs = [root.z for root in roots]
    re_lo: float = 0.5 * min(z.real for z in zs)
    re_hi: float = max(2.0 * max(z.real for z in zs), search_radius(spec))
    im_hi: float = max(2.0 * max(abs(z.imag) for z in zs), 1.0)
    return re_lo, re_hi, -im_hi, im_hi


def search_radius(spec: ModelSpec) -> float:
    alpha: float = max(g.rate for g in spec.claim_gammas)
    shift: float = max(
        (g.rate / spec.premium_rate for g in spec.interarrival_gammas),
        default=0.0,
    )
    return 10.0 * (alpha + shift + 1.0)


###############################################################################
## PRIVATE API
###############################################################################
def _scale(spec: ModelSpec) -> float:
    claims = np.prod([g.rate ** g.shape for g in spec.claim_gammas])
    return max(1.0, float(spec.lambda_product.value * claims))


def _newton(
    spec: ModelSpec, z: complex, scale: float, tol: float
) -> Optional[complex]:
    """
    Damped Newton iteration kept inside Re(z) > 0; None if not converged.
    """
    value: complex = characteristic_fn(spec, z)
    for _ in range(NEWTON_ITERATIONS):
        slope: complex = characteristic_derivative(spec, z)
        if slope == 0 or not np.isfinite(slope):
            return None
        step: complex = value / slope
        damping: float = 1.0
        while damping > 1e-6:
            trial: complex = z - damping * step
            if trial.real > 0:
                trial_value = characteristic_fn(spec, trial)
                if abs(trial_value) < abs(value) or damping < 1e-3:
                    break
            damping /= 2.0
        else:
            return None
        z, value = trial, trial_value
        if abs(value) < tol * scale and abs(damping * step) < 1e-14 * max(
            1.0, abs(z)
        ):
            return z
    return z if abs(value) < tol * scale else None
