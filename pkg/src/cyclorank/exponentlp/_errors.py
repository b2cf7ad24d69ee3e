# -*- coding: utf-8 -*-
"""
This file is part of cyclorank.

cyclorank is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

cyclorank is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with cyclorank.  If not, see <http://www.gnu.org/licenses/>.
"""


class ProgramError(ValueError):
    "Base class of all errors of exponent programs."


class ParseError(ProgramError):
    """Malformed program text.

    Parameters
    ----------
    message : str
        The message.
    line : int
        The line number, starting at 1.
    column : int
        The column number, starting at 1.
    """

    def __init__(self, message, line, column):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownVariableError(ParseError):
    "A name which is not declared by the ``variables`` directive."

    def __init__(self, name, line, column):
        self.name = name
        super().__init__(f'Unknown variable "{name}"', line, column)


class NonlinearTermError(ParseError):
    "A product of two variables or a division by a variable."


class InfeasibleError(ProgramError):
    "No point satisfies all constraints."


class UnboundedError(ProgramError):
    "The objective is unbounded on the feasible region."
