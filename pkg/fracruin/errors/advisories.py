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

from typing import Optional
from warnings import warn


###############################################################################
## WARNING CLASSES
###############################################################################
class IllConditionedWarning(RuntimeWarning):
    pass


class TruncationWarning(RuntimeWarning):
    pass


class BracketingWarning(RuntimeWarning):
    pass


###############################################################################
## RAISE ILL CONDITIONED WARNING
###############################################################################
def raise_ill_conditioned_warning(
    subject: str, condition: float, threshold: float
) -> None:
    """
    Raises IllConditionedWarning with custom message.

    Parameters
    ----------
    subject: str
        The linear system concerned.
    condition: float
        Its condition number.
    threshold: float
        The condition number above which results are flagged.

    Raises
    ------
    IllConditionedWarning
    """
    MESSAGE = f"{subject} is ill-conditioned: cond = {condition:.3e}"
    MESSAGE += f" > {threshold:.1e}."
    warn(MESSAGE, IllConditionedWarning, stacklevel=3)


###############################################################################
## RAISE TRUNCATION WARNING
###############################################################################
def raise_truncation_warning(
    truncated: int, paths: int, limit: Optional[str] = None
) -> None:
    """
    Raises TruncationWarning with custom message.

    Parameters
    ----------
    truncated: int
        Number of paths stopped by the truncation policy.
    paths: int
        Total number of simulated paths.
    limit: str, optional
        Description of the truncation limit.

    Raises
    ------
    TruncationWarning
    """
    MESSAGE = f"{truncated} of {paths} paths were truncated"
    if limit:
        MESSAGE += f" by {limit}"
    MESSAGE += "; the estimate is a lower bound on the ruin probability."
    warn(MESSAGE, TruncationWarning, stacklevel=3)


###############################################################################
## RAISE BRACKETING WARNING
###############################################################################
def raise_bracketing_warning(violations: str) -> None:
    """
    Raises BracketingWarning with custom message.

    Parameters
    ----------
    violations: str
        Human readable list of violated inequalities.

    Raises
    ------
    BracketingWarning
    """
    MESSAGE = f"Root bracketing does not hold: {violations}."
    warn(MESSAGE, BracketingWarning, stacklevel=3)
