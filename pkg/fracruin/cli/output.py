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
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence, Union

from ..helpers import format_real

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


###############################################################################
## CSV
###############################################################################
def write_csv(
    path: PathLike,
    header: Sequence[str],
    columns: Iterable[Sequence[float]],
) -> None:
    """
    Writes equally long numeric columns with 17 significant digits and LF
    line endings.
    """
    table = list(zip(*columns))
    lines = [",".join(header)]
    lines += [",".join(format_real(x) for x in row) for row in table]
    write_text(path, "\n".join(lines) + "\n")


def write_text(path: PathLike, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", newline="\n") as file:
        file.write(text)
    logger.info("Wrote %s", target)


def write_json(path: PathLike, data: Mapping[str, Any]) -> None:
    write_text(path, json.dumps(data, indent=2) + "\n")
