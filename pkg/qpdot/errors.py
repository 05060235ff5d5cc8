#  qpdot: spectra and thermodynamics of quantum pseudodots in external fields.
#  Copyright (C) 2026 The qpdot developers
#
#   This program is free software: you can redistribute it and/or modify
#   it under the terms of the GNU General Public License as published by
#   the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#   This program is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#   GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License
#   along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Exception types raised by qpdot.

Invalid parameter values raise the built-in `ValueError` and wrong argument types `TypeError`. The classes here
cover the failure modes that are not about bad input.
"""


class QPDotError(Exception):
    """Base class for qpdot-specific errors."""


class ConvergenceError(QPDotError, RuntimeError):
    """An iterative computation did not converge within its budget.

    Parameters
    ----------
    message
        Description of the failure.
    bracket
        The last interval known to contain the solution, if the method maintains one.
    """
    def __init__(self, message: str, bracket: tuple[float, float] | None = None) -> None:
        super().__init__(message)
        self.bracket = bracket

    def __str__(self) -> str:
        msg = super().__str__()
        if self.bracket is not None:
            msg += f" (last bracket [{self.bracket[0]:.12g}, {self.bracket[1]:.12g}])"
        return msg


class VerificationError(QPDotError):
    """One or more asserted checks of the verification suite failed."""
    def __init__(self, failed: list[str]) -> None:
        super().__init__(f"{len(failed)} verification check(s) failed: {', '.join(failed)}")
        self.failed = failed
