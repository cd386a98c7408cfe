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
from argparse import ArgumentParser, Namespace
from typing import Callable, Dict, List, Optional

from ..errors import FracRuinError, ModelValidationError, UnsupportedSpecError
from .commands import (
    run_figure1a,
    run_figure2a,
    run_simulate,
    run_solve,
    run_u5_grid,
    run_verify_density,
    run_verify_renewal,
)

logger = logging.getLogger(__name__)

EXIT_OK: int = 0
EXIT_INVALID: int = 2
EXIT_FAILED: int = 3

COMMANDS: Dict[str, Callable[[Namespace], int]] = {
    "solve": run_solve,
    "simulate": run_simulate,
    "u5-grid": run_u5_grid,
    "verify-density": run_verify_density,
    "verify-renewal": run_verify_renewal,
    "figure1a": run_figure1a,
    "figure2a": run_figure2a,
}


###############################################################################
## MAIN
###############################################################################
def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the `fracruin` command.

    Returns
    -------
    out: int
        0 on success, 2 on invalid input, 3 on solver, simulation or
        verification failure.
    """
    args: Namespace = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        return COMMANDS[args.command](args)
    except (ModelValidationError, UnsupportedSpecError) as error:
        logger.error("%s", error)
        return EXIT_INVALID
    except OSError as error:
        logger.error("%s", error)
        return EXIT_INVALID
    except FracRuinError as error:
        logger.error("%s: %s", type(error).__name__, error)
        return EXIT_FAILED


def configure_logging(verbose: bool, quiet: bool) -> None:
    level: int = logging.INFO
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s"
    )


###############################################################################
## PARSER
###############################################################################
def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="fracruin",
        description="Ruin probabilities of renewal risk models.",
    )
    noise = parser.add_mutually_exclusive_group()
    noise.add_argument("-v", "--verbose", action="store_true")
    noise.add_argument("-q", "--quiet", action="store_true")
    commands = parser.add_subparsers(dest="command", required=True)

    model = ArgumentParser(add_help=False)
    model.add_argument("--spec", required=True, help="JSON model file")
    model.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="K=V",
        help="parameter override, e.g. c=1.5 or claims.gammas.1.rate=2",
    )
    curve = ArgumentParser(add_help=False)
    curve.add_argument("--u-max", type=float, default=30.0)
    curve.add_argument("--u-steps", type=int, default=300)

    solve = commands.add_parser(
        "solve", parents=[model, curve], help="analytic ruin probability"
    )
    solve.add_argument("--out", required=True, help="output directory")
    solve.add_argument("--tol", type=float, default=1e-10)
    solve.add_argument(
        "--confirm-roots",
        action="store_true",
        help="confirm the root count by the argument principle",
    )

    simulate = commands.add_parser(
        "simulate", parents=[model], help="Monte Carlo ruin probability"
    )
    simulate.add_argument("--out", help="JSON output file")
    simulate.add_argument("--u", type=float, default=0.0)
    simulate.add_argument("--paths", type=int, default=100_000)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--max-claims", type=int, default=10_000)
    simulate.add_argument(
        "--horizon", type=float, help="truncate by time instead of claims"
    )
    simulate.add_argument("--workers", type=int)
    simulate.add_argument(
        "--analytic-level",
        action="store_true",
        help="stop paths where the analytic psi is below 1e-12",
    )

    grid = commands.add_parser(
        "u5-grid", parents=[model], help="ln(u5) over a parameter grid"
    )
    grid.add_argument("--out", required=True, help="CSV output file")
    grid.add_argument(
        "--grid",
        required=True,
        metavar="P:LO:HI:N,P:LO:HI:N",
        help="column axis, then row axis",
    )
    grid.add_argument("--workers", type=int)

    density = commands.add_parser(
        "verify-density",
        parents=[model],
        help="residuals of the density equations",
    )
    density.add_argument("--out", required=True, help="CSV output file")
    density.add_argument("--step", type=float, default=1e-3)
    density.add_argument("--t-max", type=float, default=5.0)
    density.add_argument("--low", type=float, default=0.1)
    density.add_argument("--tol", type=float, default=5e-3)

    renewal = commands.add_parser(
        "verify-renewal",
        parents=[model],
        help="residual of the renewal integral equation",
    )
    renewal.add_argument("--out", help="JSON output file")
    renewal.add_argument("--u", default="0,1,5", help="capitals, e.g. 0,1,5")
    renewal.add_argument("--tol", type=float)

    for name in ("figure1a", "figure2a"):
        figure = commands.add_parser(
            name, parents=[curve], help=f"curves of {name}"
        )
        figure.add_argument("--out", required=True, help="CSV output file")
    return parser
