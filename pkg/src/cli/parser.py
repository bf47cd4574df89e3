import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from src.algebra import X_VARIABLES, GaussianRational, UniPoly, WeylElement
from src.constants import VARIABLE_LETTER


class PolynomialParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER, NAME, OP, END
    value: str
    position: int


_NON_RATIONAL = re.compile(r"\d*\.\d*|\d+[eE][+-]?\d+")
_OPERATORS = ("**", "+", "-", "*", "/", "^", "(", ")")


def tokenize(text: str, names: List[str]) -> List[Token]:
    # Longest names first so that "Dz" wins over "D".
    names = sorted(set(names) | {"i"}, key=len, reverse=True)
    tokens, pos = [], 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        bad = _NON_RATIONAL.match(text, pos)
        if bad:
            raise PolynomialParseError(f"non-rational literal {bad.group()!r}", text, pos)
        if ch.isdigit():
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            tokens.append(Token("NUMBER", text[pos:end], pos))
            pos = end
            continue
        if ch.isalpha():
            for name in names:
                if text.startswith(name, pos):
                    tokens.append(Token("NAME", name, pos))
                    pos += len(name)
                    break
            else:
                raise PolynomialParseError(f"unknown symbol {ch!r}", text, pos)
            continue
        for op in _OPERATORS:
            if text.startswith(op, pos):
                tokens.append(Token("OP", "^" if op == "**" else op, pos))
                pos += len(op)
                break
        else:
            raise PolynomialParseError(f"unexpected character {ch!r}", text, pos)
    tokens.append(Token("END", "", len(text)))
    return tokens


class ExpressionParser:
    """
    Recursive-descent reader for sums of products over one ring:

        expr   := signed (("+" | "-") signed)*
        signed := ("+" | "-")* term
        term   := power (("*" | "/" | <implicit>) power)*
        power  := atom (("^" | "**") NUMBER)?
        atom   := NUMBER | "i" | variable | "(" expr ")"

    Division is only allowed by nonzero constants.
    """

    def __init__(self, text: str, constant: Callable, variables: Dict[str, object], as_constant: Callable):
        self.text = text
        self.constant = constant
        self.variables = variables
        self.as_constant = as_constant
        self.tokens = tokenize(text, list(variables))
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def error(self, message: str, token: Optional[Token] = None):
        token = token or self.current
        raise PolynomialParseError(message, self.text, token.position)

    def parse(self):
        if self.current.kind == "END":
            self.error("empty expression")
        value = self.expr()
        if self.current.kind != "END":
            self.error(f"unexpected {self.current.value!r}")
        return value

    def expr(self):
        value = self.signed()
        while self.current.kind == "OP" and self.current.value in "+-":
            op = self.advance().value
            rhs = self.signed()
            value = value + rhs if op == "+" else value - rhs
        return value

    def signed(self):
        negate = False
        while self.current.kind == "OP" and self.current.value in "+-":
            negate ^= self.advance().value == "-"
        value = self.term()
        return -value if negate else value

    def term(self):
        value = self.power()
        while True:
            token = self.current
            if token.kind == "OP" and token.value == "*":
                self.advance()
                value = value * self.power()
            elif token.kind == "OP" and token.value == "/":
                self.advance()
                divisor_token = self.current
                divisor = self.as_constant(self.power())
                if divisor is None:
                    self.error("division by a non-constant", divisor_token)
                if divisor.is_zero():
                    self.error("division by zero", divisor_token)
                value = value / divisor
            elif token.kind in ("NAME", "NUMBER") or (token.kind == "OP" and token.value == "("):
                value = value * self.power()
            else:
                return value

    def power(self):
        base = self.atom()
        if self.current.kind == "OP" and self.current.value == "^":
            self.advance()
            token = self.current
            if token.kind != "NUMBER":
                self.error("exponent must be a non-negative integer literal")
            self.advance()
            return base ** int(token.value)
        return base

    def atom(self):
        token = self.current
        if token.kind == "NUMBER":
            self.advance()
            return self.constant(GaussianRational(int(token.value)))
        if token.kind == "NAME":
            self.advance()
            if token.value in self.variables:
                return self.variables[token.value]
            return self.constant(GaussianRational.i())
        if token.kind == "OP" and token.value == "(":
            self.advance()
            value = self.expr()
            if not (self.current.kind == "OP" and self.current.value == ")"):
                self.error("expected ')'")
            self.advance()
            return value
        if token.kind == "END":
            self.error("unexpected end of input")
        self.error(f"unexpected {token.value!r}")


def parse_rational(text: str) -> GaussianRational:
    """Gaussian-rational literal such as "1/2", "-3", "1/2+3/4*i"."""
    value = ExpressionParser(text, UniPoly.constant, {}, lambda p: p.as_constant()).parse()
    return value.coefficient(0)


def parse_poly(text: str, var: str = VARIABLE_LETTER) -> UniPoly:
    if var == "i":
        raise ValueError("'i' is reserved for the imaginary unit")
    return ExpressionParser(
        text,
        UniPoly.constant,
        {var: UniPoly.monomial(1)},
        lambda p: p.as_constant(),
    ).parse()


def parse_operator(text: str, variables=X_VARIABLES) -> WeylElement:
    """Operator in the generators (x, D) by default; products are normal-ordered as they are read."""
    x_name, d_name = variables
    return ExpressionParser(
        text,
        WeylElement.scalar,
        {x_name: WeylElement.x(), d_name: WeylElement.d()},
        lambda P: P.as_constant(),
    ).parse()
