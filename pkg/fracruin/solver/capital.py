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
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import log
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.linalg import LinAlgError
from scipy.optimize import bisect

from ..errors import FracRuinError, ModelValidationError, NetProfitError
from ..helpers import format_real, validate_natural
from ..models import ModelSpec, apply_overrides, validate
from .solution import RuinSolution, eval_ruin, solve

logger = logging.getLogger(__name__)

RUIN_LEVEL: float = 0.05
CAPITAL_TOLERANCE: float = 1e-12


###############################################################################
## U5
###############################################################################
def u5(solution: RuinSolution, level: float = RUIN_LEVEL) -> float:
    """
    Smallest initial capital with ruin probability at most `level`: 0 if
    psi(0) <= level, else the root of psi(u) = level, found by bisection
    on a bracket doubled from [0, 1].
    """
    if eval_ruin(solution, 0.0) <= level:
        return 0.0
    low, high = 0.0, 1.0
    while eval_ruin(solution, high) > level:
        low, high = high, 2.0 * high
    capital: float = bisect(
        lambda u: eval_ruin(solution, u) - level,
        low,
        high,
        xtol=CAPITAL_TOLERANCE,
    )
    logger.debug("u5 bracket [%g, %g] -> %.15g", low, high, capital)
    return capital


###############################################################################
## GRID AXIS
###############################################################################
@dataclass(frozen=True)
class GridAxis:
    """
    Equally spaced values of one model parameter.

    Attributes
    ----------
    name: str
        Override key (`r`, `lambda1`, `mu`, ... or a dotted path).
    low: float
        First value.
    high: float
        Last value.
    steps: int
        Number of values.
    """

    name: str
    low: float
    high: float
    steps: int

    def __post_init__(self) -> None:
        validate_natural(self.steps)

    @classmethod
    def parse(cls, text: str) -> "GridAxis":
        """
        Reads `param:lo:hi:n`.

        Raises
        ------
        ModelValidationError
            If the text is malformed.
        """
        parts = text.strip().split(":")
        try:
            name, low, high, steps = parts
            return cls(name, float(low), float(high), int(steps))
        except (ValueError, TypeError) as error:
            raise ModelValidationError(
                f"expected param:lo:hi:n, got {text!r}", field="grid"
            ) from error

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.low, self.high, self.steps)


###############################################################################
## U5 GRID
###############################################################################
@dataclass(frozen=True)
class U5Grid:
    """
    ln(u5) over a two parameter grid; rows follow the second axis.

    Attributes
    ----------
    axes: Tuple[GridAxis, GridAxis]
        Column axis and row axis.
    log_u5: numpy.ndarray
        ln(u5), NaN where the net profit condition fails or the cell failed,
        -inf where u5 = 0.
    failures: Dict[Tuple[int, int], str]
        Error class name per failed (row, column).
    """

    axes: Tuple[GridAxis, GridAxis]
    log_u5: np.ndarray
    failures: Dict[Tuple[int, int], str]

    def rows(self) -> List[List[str]]:
        columns, rows = self.axes
        table = [
            [f"{rows.name}\\{columns.name}"]
            + [format_real(x) for x in columns.values]
        ]
        for i, y in enumerate(rows.values):
            line = [format_real(y)]
            for j in range(columns.steps):
                if (i, j) in self.failures:
                    line.append(f"error:{self.failures[(i, j)]}")
                else:
                    line.append(format_real(self.log_u5[i, j]))
            table.append(line)
        return table

    def to_csv(self) -> str:
        return "".join(",".join(row) + "\n" for row in self.rows())


def u5_grid(
    base_spec: ModelSpec,
    axes: Sequence[GridAxis],
    workers: Optional[int] = None,
) -> U5Grid:
    """
    ln(u5) on the grid spanned by two parameter axes. Cells violating the
    net profit condition are missing; other failures are recorded per cell.
    """
    if len(axes) != 2:
        raise ModelValidationError("exactly two axes needed", field="grid")
    columns, rows = axes
    base: Dict[str, Any] = base_spec.to_dict()
    cells = [
        apply_overrides(base, {columns.name: float(x), rows.name: float(y)})
        for y in rows.values
        for x in columns.values
    ]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_grid_cell, cells))
    else:
        results = [_grid_cell(cell) for cell in cells]
    log_u5 = np.empty((rows.steps, columns.steps))
    failures: Dict[Tuple[int, int], str] = {}
    for index, (value, failure) in enumerate(results):
        i, j = divmod(index, columns.steps)
        log_u5[i, j] = value
        if failure is not None:
            failures[(i, j)] = failure
    logger.info(
        "u5 grid %dx%d: %d missing, %d failed",
        rows.steps,
        columns.steps,
        int(np.isnan(log_u5).sum()) - len(failures),
        len(failures),
    )
    return U5Grid((columns, rows), log_u5, failures)


###############################################################################
## PRIVATE API
###############################################################################
def _grid_cell(raw: Dict[str, Any]) -> Tuple[float, Optional[str]]:
    try:
        capital: float = u5(solve(validate(raw)))
    except NetProfitError:
        return float("nan"), None
    except (FracRuinError, ArithmeticError, ValueError, LinAlgError) as error:
        logger.warning("u5 grid cell failed: %s", error)
        return float("nan"), type(error).__name__
    return (log(capital) if capital > 0 else float("-inf")), None
