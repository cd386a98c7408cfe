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
from copy import deepcopy
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from ..errors import ModelValidationError
from .spec import ModelSpec, RawSpec, validate

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

OVERRIDE_ALIASES: Dict[str, Tuple[Any, ...]] = {
    "c": ("premium_rate",),
    "r": ("interarrival", "gammas", 0, "shape"),
    "lambda1": ("interarrival", "gammas", 0, "rate"),
    "mu": ("interarrival", "mittag_lefflers", 0, "mu"),
    "lambda2": ("interarrival", "mittag_lefflers", 0, "rate"),
    "s": ("claims", "gammas", 0, "shape"),
    "alpha": ("claims", "gammas", 0, "rate"),
}


###############################################################################
## LOAD / DUMP
###############################################################################
def load_spec(
    path: PathLike, overrides: Optional[Mapping[str, float]] = None
) -> ModelSpec:
    """
    Reads and validates a JSON model file.

    Parameters
    ----------
    path: str or Path
        Location of the model file.
    overrides: Mapping[str, float], optional
        Parameter overrides applied before validation (see
        `apply_overrides`).

    Raises
    ------
    ModelValidationError
        If the file is not valid JSON or the model is rejected.
    """
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as error:
        raise ModelValidationError(str(error), field="spec") from error
    if not isinstance(raw, dict):
        raise ModelValidationError("expected an object", field="spec")
    logger.debug("Loaded model file %s", path)
    return validate(apply_overrides(raw, overrides or {}))


def dump_spec(spec: ModelSpec, path: PathLike) -> None:
    Path(path).write_text(json.dumps(spec.to_dict(), indent=2) + "\n")


###############################################################################
## OVERRIDES
###############################################################################
def apply_overrides(
    raw: RawSpec, overrides: Mapping[str, float]
) -> Dict[str, Any]:
    """
    Returns a copy of a raw model mapping with parameters replaced.

    Keys are either the aliases `c`, `r`, `lambda1`, `mu`, `lambda2`, `s`,
    `alpha` (first component of the respective list) or dotted paths such
    as `claims.gammas.1.rate`.

    Raises
    ------
    ModelValidationError
        If a key does not address an existing parameter.
    """
    updated: Dict[str, Any] = deepcopy(dict(raw))
    for key, value in overrides.items():
        path = OVERRIDE_ALIASES.get(key) or tuple(
            int(part) if part.isdigit() else part for part in key.split(".")
        )
        node: Any = updated
        try:
            for part in path[:-1]:
                node = node[part]
            if isinstance(node, dict) and path[-1] not in node:
                raise KeyError(path[-1])
            node[path[-1]] = value
        except (KeyError, IndexError, TypeError) as error:
            raise ModelValidationError(
                "override does not address a parameter", field=key
            ) from error
    return updated
