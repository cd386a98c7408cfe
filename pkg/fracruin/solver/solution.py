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
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike

from ..errors import (
    CoefficientError,
    ConjugatePairingError,
    DomainError,
    raise_ill_conditioned_warning,
)
from ..models import LambdaProduct, ModelSpec, validate
from .characteristic import delta
from .roots import CharRoot, RootFinder, find_roots

logger = logging.getLogger(__name__)

RealOrArray = Union[float, np.ndarray]

CONDITION_WARNING: float = 1e10
IMAGINARY_RESIDUE: float = 1e-10
SANITY_BAND: float = 1e-8


###############################################################################
## RUIN SOLUTION
###############################################################################
@dataclass(frozen=True)
class RuinSolution:
    """
    Non-ruin probability phi(u) = 1 + sum_p K_p e^{-z_p u} and ruin
    probability psi = 1 - phi of a renewal model.

    Attributes
    ----------
    roots: Tuple[CharRoot, ...]
        The N roots z_p with positive real part.
    coefficients: Tuple[complex, ...]
        The constants K_p.
    lambda_product: LambdaProduct
        Lambda of the inter-arrival density equation.
    delta: Tuple[complex, ...]
        Delta(z_p) per root.
    model: ModelSpec
        The solved model.
    """

    roots: Tuple[CharRoot, ...]
    coefficients: Tuple[complex, ...]
    lambda_product: LambdaProduct
    delta: Tuple[complex, ...]
    model: ModelSpec

    ############################### PUBLIC API ###############################
    def psi(self, u: ArrayLike) -> RealOrArray:
        return eval_ruin(self, u)

    def phi(self, u: ArrayLike) -> RealOrArray:
        return 1.0 - eval_ruin(self, u)

    @property
    def adjustment_coefficient(self) -> float:
        """
        Smallest real part among the roots: the exponential decay rate of
        psi.
        """
        return min(root.z.real for root in self.roots)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "roots": [
                {"re": r.z.real, "im": r.z.imag, "residual": r.residual}
                for r in self.roots
            ],
            "coefficients": [
                {"re": k.real, "im": k.imag} for k in self.coefficients
            ],
            "delta": [{"re": d.real, "im": d.imag} for d in self.delta],
            "lambda_product": self.lambda_product.value,
            "model": self.model.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RuinSolution":
        """
        Rebuilds a solution written by `to_json`; the model is revalidated.
        """
        data = json.loads(text)
        roots = tuple(
            CharRoot(
                complex(r["re"], r["im"]), r["residual"], r["im"] != 0
            )
            for r in data["roots"]
        )
        return cls(
            roots,
            tuple(complex(k["re"], k["im"]) for k in data["coefficients"]),
            LambdaProduct(data["lambda_product"]),
            tuple(complex(d["re"], d["im"]) for d in data["delta"]),
            validate(data["model"]),
        )


###############################################################################
## COEFFICIENTS
###############################################################################
def ladder_exponents(spec: ModelSpec, row: int) -> List[int]:
    """
    Powers of (alpha_k - z) in row `row` of the coefficient system: the
    first `row` powers are spent on s_1, then on s_2, and so on.
    """
    exponents: List[int] = []
    remaining: int = row
    for g in spec.claim_gammas:
        used: int = min(remaining, int(g.shape))
        exponents.append(used)
        remaining -= used
    return exponents


def solve_coefficients(
    spec: ModelSpec, roots: Sequence[CharRoot]
) -> RuinSolution:
    """
    Solves the boundary conditions for the constants K_p,

        sum_p K_p Delta_p prod_k (alpha_k - z_p)^{e_k(q)}
            = -Lambda prod_k alpha_k^{e_k(q)},   q = 0, ..., N - 1,

    with e_k(q) from `ladder_exponents`.

    Raises
    ------
    CoefficientError
        If the system is singular or phi(0) falls outside [0, 1] beyond
        1e-8.

    Warns
    -----
    IllConditionedWarning
        If the condition number exceeds 1e10.
    """
    zs = np.array([root.z for root in roots], dtype=complex)
    size: int = zs.size
    lambda_product: LambdaProduct = spec.lambda_product
    deltas = np.array([delta(spec, z) for z in zs])
    matrix = np.empty((size, size), dtype=complex)
    rhs = np.empty(size, dtype=complex)
    for q in range(size):
        exponents = ladder_exponents(spec, q)
        factors = np.ones(size, dtype=complex)
        scale: float = 1.0
        for g, e in zip(spec.claim_gammas, exponents):
            factors *= (g.rate - zs) ** e
            scale *= g.rate ** e
        matrix[q] = deltas * factors
        rhs[q] = -lambda_product.value * scale
    condition: float = float(np.linalg.cond(matrix))
    logger.debug("Coefficient system of size %d, cond %.3e", size, condition)
    if condition > CONDITION_WARNING:
        raise_ill_conditioned_warning(
            "Coefficient system", condition, CONDITION_WARNING
        )
    try:
        coefficients = np.linalg.solve(matrix, rhs)
    except np.linalg.LinAlgError as error:
        raise CoefficientError(
            f"Singular coefficient system: {error}"
        ) from error
    phi_zero: complex = 1.0 + np.sum(coefficients)
    if not -SANITY_BAND <= phi_zero.real <= 1.0 + SANITY_BAND:
        raise CoefficientError(
            f"phi(0) = {phi_zero.real!r} outside [0, 1]; the root set is "
            "inconsistent."
        )
    return RuinSolution(
        tuple(roots),
        tuple(complex(k) for k in coefficients),
        lambda_product,
        tuple(complex(d) for d in deltas),
        spec,
    )


###############################################################################
## EVALUATION
###############################################################################
def eval_ruin(solution: RuinSolution, u: ArrayLike) -> RealOrArray:
    """
    Ruin probability psi(u) = -sum_p K_p e^{-z_p u}.

    Raises
    ------
    ConjugatePairingError
        If the imaginary residue exceeds 1e-10.
    CoefficientError
        If the real value leaves [0, 1] by more than 1e-8.
    """
    points = np.asarray(u, dtype=float)
    if np.any(points < 0):
        raise DomainError("Initial capital must be nonnegative.")
    zs = np.array([root.z for root in solution.roots])
    ks = np.array(solution.coefficients)
    values = -np.sum(
        ks[:, None] * np.exp(-np.outer(zs, points.ravel())), axis=0
    ).reshape(points.shape)
    residue: float = float(np.max(np.abs(values.imag), initial=0.0))
    if residue > IMAGINARY_RESIDUE:
        raise ConjugatePairingError("Ruin probability is not real", residue)
    real = values.real
    if np.any(real < -SANITY_BAND) or np.any(real > 1.0 + SANITY_BAND):
        raise CoefficientError(
            "Ruin probability leaves [0, 1] beyond the sanity band."
        )
    psi = np.clip(real, 0.0, 1.0)
    return psi if np.ndim(u) else float(psi)


def ruin_curve(
    solution: RuinSolution, u_max: float, steps: int
) -> Tuple[np.ndarray, np.ndarray]:
    """
    psi on `steps` + 1 equally spaced capitals in [0, u_max].
    """
    capitals = np.linspace(0.0, u_max, steps + 1)
    return capitals, eval_ruin(solution, capitals)


###############################################################################
## SOLVE
###############################################################################
def solve(
    spec: ModelSpec, tol: float = 1e-10, finder: Optional[RootFinder] = None
) -> RuinSolution:
    """
    Finds the characteristic roots and solves for the coefficients.
    """
    roots = find_roots(spec, tol, finder)
    solution = solve_coefficients(spec, roots)
    logger.info(
        "Solved model with %d roots, psi(0) = %.12g",
        len(roots),
        eval_ruin(solution, 0.0),
    )
    return solution
