"""
Recursive-descent parser for polynomial text.

Grammar (whitespace insignificant):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' uint)?
    base   := uint | ident | '(' expr ')'

The right operand of '/' must be a nonzero constant.
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence

from core.exceptions import PolynomialSyntaxError, SpecError, UnknownIdentifierError
from exactlin.polynomial import SparsePolynomial

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None or match.end() == position:
            break
        number, ident, op = match.groups()
        start = match.start(match.lastindex) if match.lastindex else match.end()
        if number is not None:
            tokens.append(Token("int", number, start))
        elif ident is not None:
            tokens.append(Token("ident", ident, start))
        elif op is not None:
            if op not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character '{op}'", start)
            tokens.append(Token("op", op, start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = tokenize(text)
        self.index = 0
        self.nvars = len(variables)
        self.lookup: Dict[str, int] = {name: i for i, name in enumerate(variables)}

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def parse(self) -> SparsePolynomial:
        result = self.expr()
        if self.current.kind != "end":
            raise PolynomialSyntaxError(f"unexpected '{self.current.text}'", self.current.position)
        return result

    def expr(self) -> SparsePolynomial:
        negate = False
        if self._accept("-"):
            negate = True
        else:
            self._accept("+")
        result = self.term()
        if negate:
            result = -result
        while True:
            if self._accept("+"):
                result = result + self.term()
            elif self._accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> SparsePolynomial:
        result = self.factor()
        while True:
            if self._accept("*"):
                result = result * self.factor()
            elif self.current.kind == "op" and self.current.text == "/":
                position = self._advance().position
                divisor = self.factor()
                if not divisor.is_constant():
                    raise PolynomialSyntaxError("division by a non-constant", position)
                if divisor.is_zero():
                    raise PolynomialSyntaxError("division by zero", position)
                result = result.scale(1 / divisor.constant_value())
            else:
                return result

    def factor(self) -> SparsePolynomial:
        base = self.base()
        if self._accept("^"):
            token = self.current
            if token.kind != "int":
                raise PolynomialSyntaxError("expected a nonnegative integer exponent", token.position)
            self._advance()
            return base ** int(token.text)
        return base

    def base(self) -> SparsePolynomial:
        token = self.current
        if token.kind == "int":
            self._advance()
            return SparsePolynomial.constant(self.nvars, int(token.text))
        if token.kind == "ident":
            self._advance()
            if token.text not in self.lookup:
                raise UnknownIdentifierError(token.text, token.position)
            return SparsePolynomial.variable(self.nvars, self.lookup[token.text])
        if self._accept("("):
            inner = self.expr()
            if not self._accept(")"):
                raise PolynomialSyntaxError("expected ')'", self.current.position)
            return inner
        if token.kind == "end":
            raise PolynomialSyntaxError("unexpected end of input", token.position)
        raise PolynomialSyntaxError(f"unexpected '{token.text}'", token.position)


def parse_poly(text: str, variables: Sequence[str]) -> SparsePolynomial:
    """
    Parse polynomial text over the given variable names.

    Args:
        text: Expression such as "(x1-x2)^2"
        variables: Declared variable names; their order fixes the exponent layout

    Returns:
        The parsed SparsePolynomial

    Raises:
        PolynomialSyntaxError: malformed text
        UnknownIdentifierError: undeclared name
    """
    variables = list(variables)
    if len(set(variables)) != len(variables):
        raise SpecError(f"duplicate variable names in {variables}")
    return _Parser(text, variables).parse()
