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

import re
import warnings
from fractions import Fraction

from ._errors import NonlinearTermError, ParseError, UnknownVariableError
from ._program import ExponentProgram

TOKENS = re.compile(
    r"""
    (?P<space>[ \t\r]+)
    |(?P<comment>\#.*)
    |(?P<number>\d+(?:\.\d*)?|\.\d+)
    |(?P<name>[A-Za-z_][A-Za-z_0-9]*)
    |(?P<op><=|>=|&&|[-+*/()<>,])
    """,
    re.VERBOSE,
)

KEYWORDS = ["maximize", "variables"]


class Token:
    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return f"Token({self.kind!r}, {self.text!r}, {self.line}, {self.column})"


def tokenize(text):
    "Split program text into a list of tokens per line, comments and spaces dropped."
    lines = []

    for number, line in enumerate(text.splitlines(), start=1):
        tokens = []
        position = 0

        while position < len(line):
            match = TOKENS.match(line, position)

            if match is None:
                raise ParseError(
                    f'Unexpected character "{line[position]}"', number, position + 1
                )

            kind = match.lastgroup
            if kind not in ["space", "comment"]:
                tokens.append(Token(kind, match.group(), number, position + 1))

            position = match.end()

        lines.append(tokens)

    return lines


class Linear:
    "A linear expression with exact rational coefficients."

    def __init__(self, coefficients=None, constant=0):
        self.coefficients = dict(coefficients or {})
        self.constant = Fraction(constant)

    @property
    def is_constant(self):
        return all(a == 0 for a in self.coefficients.values())

    def __add__(self, other):
        coefficients = dict(self.coefficients)
        for name, a in other.coefficients.items():
            coefficients[name] = coefficients.get(name, 0) + a
        return Linear(coefficients, self.constant + other.constant)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return Linear(
            {name: factor * a for name, a in self.coefficients.items()},
            factor * self.constant,
        )


class _LineParser:
    def __init__(self, tokens, line, declared):
        self.tokens = tokens
        self.position = 0
        self.line = line
        self.declared = declared
        self.names = []

    def peek(self):
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def next(self):
        token = self.peek()
        if token is None:
            raise ParseError("Unexpected end of line", self.line, self.column())
        self.position += 1
        return token

    def column(self):
        token = self.peek()
        if token is not None:
            return token.column
        if self.tokens:
            last = self.tokens[-1]
            return last.column + len(last.text)
        return 1

    def expect_end(self):
        token = self.peek()
        if token is not None:
            raise ParseError(f'Unexpected "{token.text}"', token.line, token.column)

    def expression(self):
        value = self.term()
        while self.peek() is not None and self.peek().text in ["+", "-"]:
            sign = self.next().text
            other = self.term()
            value = value + other if sign == "+" else value - other
        return value

    def term(self):
        value = self.factor()
        last = self.tokens[self.position - 1]

        while True:
            token = self.peek()

            if token is None:
                return value

            if token.text in ["*", "/"]:
                self.next()
                operand = self.peek() or token
                other = self.factor()

                if token.text == "*":
                    value = self._multiply(value, other, operand)
                else:
                    if not other.is_constant:
                        raise NonlinearTermError(
                            "Division by a variable", operand.line, operand.column
                        )
                    if other.constant == 0:
                        raise ParseError(
                            "Division by zero", operand.line, operand.column
                        )
                    value = value.scale(1 / other.constant)

                last = self.tokens[self.position - 1]

            elif token.kind in ["number", "name"] or token.text == "(":
                # implicit multiplication as in "3b/4"
                if token.kind == "number" and last.kind == "number":
                    raise ParseError(
                        f'Missing operator before "{token.text}"',
                        token.line,
                        token.column,
                    )
                other = self.factor()
                value = self._multiply(value, other, token)
                last = self.tokens[self.position - 1]

            else:
                return value

    def _multiply(self, left, right, token):
        if left.is_constant:
            return right.scale(left.constant)
        if right.is_constant:
            return left.scale(right.constant)
        raise NonlinearTermError("Product of two variables", token.line, token.column)

    def factor(self):
        token = self.next()

        if token.text in ["+", "-"]:
            value = self.factor()
            return -value if token.text == "-" else value

        if token.kind == "number":
            return Linear(constant=Fraction(token.text))

        if token.kind == "name":
            if token.text in KEYWORDS:
                raise ParseError(
                    f'Keyword "{token.text}" in expression', token.line, token.column
                )
            if self.declared is not None and token.text not in self.declared:
                raise UnknownVariableError(token.text, token.line, token.column)
            if token.text not in self.names:
                self.names.append(token.text)
            return Linear({token.text: Fraction(1)})

        if token.text == "(":
            value = self.expression()
            closing = self.next()
            if closing.text != ")":
                raise ParseError('Expected ")"', closing.line, closing.column)
            return value

        raise ParseError(f'Unexpected "{token.text}"', token.line, token.column)

    def chain(self):
        "Parse ``expr <= expr <= ...`` into a list of expressions ``lhs - rhs <= 0``."
        left = self.expression()
        inequalities = []

        while self.peek() is not None and self.peek().text in ["<=", "<", ">=", ">"]:
            relation = self.next()

            if relation.text in [">=", ">"]:
                raise ParseError(
                    f'Relation "{relation.text}" not supported, use "<="',
                    relation.line,
                    relation.column,
                )

            if relation.text == "<":
                warnings.warn(
                    f"Strict inequality in line {relation.line} is relaxed to <=."
                )

            right = self.expression()
            inequalities.append(left - right)
            left = right

        if not inequalities:
            raise ParseError('Expected a relation "<="', self.line, self.column())

        return inequalities

    def names_list(self):
        names = [self.next()]
        while self.peek() is not None and self.peek().text == ",":
            self.next()
            names.append(self.next())
        for token in names:
            if token.kind != "name" or token.text in KEYWORDS:
                raise ParseError(
                    f'Expected a variable name, got "{token.text}"',
                    token.line,
                    token.column,
                )
        return names


def parse_program(text):
    r"""Parse an exponent program from text.

    Parameters
    ----------
    text : str
        The program. Every line holds a chain of linear inequalities
        ``expr <= expr <= ...`` (several chains may be joined by ``&&``), a directive
        ``maximize <name>`` or a directive ``variables <name>, <name>, ...``. Comments
        start with ``#``.

    Returns
    -------
    ExponentProgram
        The program with all constraints normalized to ``coefficients . x <= rhs``.

    Raises
    ------
    ParseError
        If the text is malformed.
    UnknownVariableError
        If a name is used which is not declared by a ``variables`` directive.
    NonlinearTermError
        If a term is not linear.

    Notes
    -----
    Coefficients are exact rationals, written as integers, decimals or quotients like
    ``3/4``. A number directly followed by a name or a parenthesis is multiplied with
    it, i.e. ``3b/4`` is ``(3/4) b``, but two adjacent numbers are an error. A strict
    inequality ``<`` is relaxed to ``<=`` with a warning. Without a ``variables``
    directive, the variables are ordered by their first appearance.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> p = cr.parse_program("maximize gamma\na + 1 <= c <= 2")
    >>> p.variables
    ['gamma', 'a', 'c']
    >>> [[str(x) for x in (*coefficients, rhs)] for coefficients, rhs in p.constraints]
    [['0', '1', '-1', '-1'], ['0', '0', '1', '2']]
    """
    declared = None
    names = []
    objective = None
    inequalities = []
    line = 0

    for line, tokens in enumerate(tokenize(text), start=1):
        if not tokens:
            continue

        parser = _LineParser(tokens, line, declared)
        first = tokens[0]

        if first.kind == "name" and first.text == "variables":
            if declared is not None:
                raise ParseError("Duplicate variables directive", line, first.column)
            parser.next()
            declared = []
            for token in parser.names_list():
                if token.text in declared:
                    raise ParseError(
                        f'Duplicate variable "{token.text}"', line, token.column
                    )
                declared.append(token.text)
            for name in names:
                if name not in declared:
                    raise UnknownVariableError(name, line, first.column)
            parser.expect_end()

        elif first.kind == "name" and first.text == "maximize":
            if objective is not None:
                raise ParseError("Duplicate maximize directive", line, first.column)
            parser.next()
            token = parser.next()
            if token.kind != "name" or token.text in KEYWORDS:
                raise ParseError("Expected a variable name", line, token.column)
            if declared is not None and token.text not in declared:
                raise UnknownVariableError(token.text, line, token.column)
            objective = token.text
            if objective not in names:
                names.append(objective)
            parser.expect_end()

        else:
            while True:
                inequalities.extend(parser.chain())
                if parser.peek() is not None and parser.peek().text == "&&":
                    parser.next()
                    continue
                break
            parser.expect_end()
            names.extend(name for name in parser.names if name not in names)

    if objective is None:
        raise ParseError('Missing "maximize" directive', max(line, 1), 1)

    variables = declared if declared is not None else names

    constraints = [
        ([expr.coefficients.get(name, 0) for name in variables], -expr.constant)
        for expr in inequalities
    ]

    return ExponentProgram(variables, constraints, objective)


def _format_number(value):
    return str(Fraction(value))


def _format_linear(coefficients, variables):
    terms = []
    for a, name in zip(coefficients, variables):
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        magnitude = abs(a)
        term = name if magnitude == 1 else f"{_format_number(magnitude)}*{name}"
        terms.append((sign, term))

    if not terms:
        return "0"

    sign, term = terms[0]
    text = f"-{term}" if sign == "-" else term
    for sign, term in terms[1:]:
        text += f" {sign} {term}"

    return text


def format_program(program):
    r"""Format an exponent program as text which :func:`parse_program` reads back to
    an equal program.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> p = cr.parse_program("maximize gamma\ngamma - b/2 <= 0")
    >>> print(cr.format_program(p))
    variables gamma, b
    maximize gamma
    gamma - 1/2*b <= 0
    """
    lines = [
        "variables " + ", ".join(program.variables),
        f"maximize {program.objective}",
    ]

    for coefficients, rhs in program.constraints:
        lhs = _format_linear(coefficients, program.variables)
        lines.append(f"{lhs} <= {_format_number(rhs)}")

    return "\n".join(lines)
