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
from argparse import Namespace
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..errors import ModelValidationError
from ..fraccalc import residual_density_fde
from ..models import GammaComponent, ModelSpec, load_spec
from ..montecarlo import (
    SimConfig,
    TruncationMode,
    estimate_ruin,
    renewal_equation_residual,
)
from ..solver import (
    ArgumentPrincipleDecorator,
    GridAxis,
    GridNewtonRootFinder,
    PolynomialRootFinder,
    RootFinder,
    RuinSolution,
    fractional_model,
    gamma_model,
    psi_zero_limit,
    ruin_curve,
    solve,
    u5_grid,
)
from .output import write_csv, write_json, write_text

logger = logging.getLogger(__name__)

FIGURE_PREMIUM: float = 1.2
FIGURE_CLAIMS = (GammaComponent(1.0, 1.0),)
FIGURE1A_SHAPES = (0.5, 1.0, 1.5, 2.0, 2.5)
FIGURE2A_ORDERS = (0.2, 0.4, 0.6, 0.8, 1.0)
FIGURE2A_RATE: float = 1.0
EXPONENTIAL_RENEWAL_TOL: float = 1e-4
GENERAL_RENEWAL_TOL: float = 1e-3


###############################################################################
## SOLVE
###############################################################################
def run_solve(args: Namespace) -> int:
    """
    Writes solution.json and psi.csv (columns u, psi) into `args.out`.
    """
    spec: ModelSpec = load_model(args)
    finder: Optional[RootFinder] = None
    if args.confirm_roots:
        base: RootFinder = (
            PolynomialRootFinder()
            if spec.is_polynomial
            else GridNewtonRootFinder()
        )
        finder = ArgumentPrincipleDecorator(base)
    solution: RuinSolution = solve(spec, args.tol, finder)
    out = Path(args.out)
    write_text(out / "solution.json", solution.to_json() + "\n")
    capitals, psi = ruin_curve(solution, args.u_max, args.u_steps)
    write_csv(out / "psi.csv", ["u", "psi"], [capitals, psi])
    return 0


###############################################################################
## SIMULATE
###############################################################################
def run_simulate(args: Namespace) -> int:
    """
    Monte Carlo estimate of psi(u), written as JSON to `args.out` or
    printed.
    """
    spec: ModelSpec = load_model(args)
    config = SimConfig(
        paths=args.paths,
        max_claims_per_path=args.max_claims,
        horizon=args.horizon,
        seed=args.seed,
        truncation_mode=(
            TruncationMode.TIME_HORIZON
            if args.horizon is not None
            else TruncationMode.CLAIM_COUNT
        ),
    )
    solution: Optional[RuinSolution] = (
        solve(spec) if args.analytic_level else None
    )
    estimate = estimate_ruin(
        spec, args.u, config, solution=solution, workers=args.workers
    )
    if args.out:
        write_json(args.out, estimate.to_dict())
    else:
        print(estimate.to_json())
    return 0


###############################################################################
## U5 GRID
###############################################################################
def run_u5_grid(args: Namespace) -> int:
    spec: ModelSpec = load_model(args)
    axes: List[GridAxis] = [
        GridAxis.parse(text) for text in args.grid.split(",")
    ]
    grid = u5_grid(spec, axes, workers=args.workers)
    write_text(args.out, grid.to_csv())
    return 0


###############################################################################
## VERIFY DENSITY
###############################################################################
def run_verify_density(args: Namespace) -> int:
    """
    Residuals of the inter-arrival and claim density equations (columns x,
    interarrival, claims); exit 3 when a residual on [low, t_max] exceeds
    the tolerance.
    """
    spec: ModelSpec = load_model(args)
    residuals = {
        "interarrival": residual_density_fde(
            spec.interarrival_components, args.step, args.t_max
        ),
        "claims": residual_density_fde(
            spec.claim_gammas, args.step, args.t_max
        ),
    }
    size: int = min(grid.values.size for grid in residuals.values())
    nodes: np.ndarray = next(iter(residuals.values())).nodes[:size]
    write_csv(
        args.out,
        ["x"] + list(residuals),
        [nodes] + [np.real(g.values[:size]) for g in residuals.values()],
    )
    passed: bool = True
    for name, grid in residuals.items():
        worst: float = grid.max_abs(args.low, args.t_max)
        logger.info("Density residual (%s): %.3e", name, worst)
        passed &= worst < args.tol
    return 0 if passed else 3


###############################################################################
## VERIFY RENEWAL
###############################################################################
def run_verify_renewal(args: Namespace) -> int:
    """
    Residual of the renewal integral equation at the capitals `args.u`;
    exit 3 when it exceeds the tolerance.
    """
    spec: ModelSpec = load_model(args)
    capitals: List[float] = parse_reals(args.u, "u")
    exponential: bool = (
        len(spec.claim_gammas) == 1 and spec.claim_gammas[0].shape == 1.0
    )
    tol: float = args.tol or (
        EXPONENTIAL_RENEWAL_TOL if exponential else GENERAL_RENEWAL_TOL
    )
    residual: float = renewal_equation_residual(spec, solve(spec), capitals)
    passed: bool = residual < tol
    report = {
        "u": capitals,
        "residual": residual,
        "tol": tol,
        "passed": passed,
    }
    if args.out:
        write_json(args.out, report)
    logger.info("Renewal residual %.3e (tol %.1e)", residual, tol)
    return 0 if passed else 3


###############################################################################
## FIGURES
###############################################################################
def run_figure1a(args: Namespace) -> int:
    """
    psi for Gamma(r, r) inter-arrivals, Exp(1) claims and c = 1.2.
    """
    header: List[str] = ["u"]
    columns: List[np.ndarray] = []
    for r in FIGURE1A_SHAPES:
        spec = gamma_model(r, r, FIGURE_CLAIMS, FIGURE_PREMIUM)
        capitals, psi = ruin_curve(solve(spec), args.u_max, args.u_steps)
        header.append(f"psi_r={r:g}")
        columns.append(psi)
    write_csv(args.out, header, [capitals] + columns)
    return 0


def run_figure2a(args: Namespace) -> int:
    """
    psi for ML(mu, 1) inter-arrivals, Exp(1) claims and c = 1.2, with the
    mu -> 0 limit.
    """
    header: List[str] = ["u"]
    columns: List[np.ndarray] = []
    for mu in FIGURE2A_ORDERS:
        spec = fractional_model(
            mu, FIGURE2A_RATE, FIGURE_CLAIMS, FIGURE_PREMIUM
        )
        capitals, psi = ruin_curve(solve(spec), args.u_max, args.u_steps)
        header.append(f"psi_mu={mu:g}")
        columns.append(psi)
    limit = psi_zero_limit(FIGURE_CLAIMS, FIGURE2A_RATE)
    header.append("psi_0")
    columns.append(limit(capitals))
    write_csv(args.out, header, [capitals] + columns)
    return 0


###############################################################################
## ARGUMENT PARSING HELPERS
###############################################################################
def load_model(args: Namespace) -> ModelSpec:
    return load_spec(args.spec, parse_overrides(args.override))


def parse_overrides(items: Sequence[str]) -> Dict[str, float]:
    """
    Reads `key=value` pairs.

    Raises
    ------
    ModelValidationError
        If an item is malformed.
    """
    overrides: Dict[str, float] = {}
    for item in items or ():
        key, sign, value = item.partition("=")
        try:
            if not sign or not key:
                raise ValueError(item)
            overrides[key.strip()] = float(value)
        except ValueError as error:
            raise ModelValidationError(
                f"expected key=value, got {item!r}", field="override"
            ) from error
    return overrides


def parse_reals(text: str, name: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as error:
        raise ModelValidationError(
            f"expected comma separated reals, got {text!r}", field=name
        ) from error
