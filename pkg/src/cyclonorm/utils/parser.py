"""
Recursive-descent parser for the CLI polynomial language.

    expr := term (('+' | '-') term)*
    term := [sign] ( integer ['*'] 'x' ['^' positive-integer]
                   | 'x' ['^' positive-integer]
                   | integer )

Whitespace is ignored, the only variable is x, and like terms accumulate.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from cyclonorm.core.exceptions import EmptyInputError, PolySyntaxError
from cyclonorm.core.models import PolyExpr
from cyclonorm.core.polyring import IntPoly

INT, VAR, PLUS, MINUS, STAR, CARET, END = "INT", "VAR", "PLUS", "MINUS", "STAR", "CARET", "END"

_SINGLE = {"x": VAR, "+": PLUS, "-": MINUS, "*": STAR, "^": CARET}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    i = 0
    while i < len(source):
        ch = source[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(source) and source[i].isdigit():
                i += 1
            tokens.append(Token(INT, source[start:i], start))
        elif ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, i))
            i += 1
        else:
            raise PolySyntaxError(i, f"unexpected character {ch!r}")
    tokens.append(Token(END, "", len(source)))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            raise PolySyntaxError(token.offset, f"expected {kind}")
        return self.take()

    def expr(self) -> Dict[int, int]:
        terms: Dict[int, int] = {}
        self._accumulate(terms, self.term(1))
        while self.peek().kind in (PLUS, MINUS):
            sign = 1 if self.take().kind == PLUS else -1
            self._accumulate(terms, self.term(sign))
        token = self.peek()
        if token.kind != END:
            raise PolySyntaxError(token.offset)
        return terms

    @staticmethod
    def _accumulate(terms: Dict[int, int], term: Tuple[int, int]) -> None:
        degree, coeff = term
        terms[degree] = terms.get(degree, 0) + coeff

    def term(self, sign: int) -> Tuple[int, int]:
        if self.peek().kind in (PLUS, MINUS):
            if self.take().kind == MINUS:
                sign = -sign

        token = self.peek()
        if token.kind == INT:
            coeff = int(self.take().text)
            if self.peek().kind == STAR:
                self.take()
                if self.peek().kind != VAR:
                    raise PolySyntaxError(self.peek().offset, "expected x after '*'")
            elif self.peek().kind != VAR:
                return 0, sign * coeff
        elif token.kind == VAR:
            coeff = 1
        else:
            raise PolySyntaxError(token.offset)

        self.expect(VAR)
        degree = 1
        if self.peek().kind == CARET:
            self.take()
            exponent = self.expect(INT)
            degree = int(exponent.text)
            if degree < 1:
                raise PolySyntaxError(exponent.offset, "exponent must be positive")
        return degree, sign * coeff


def parse_poly(source: str) -> IntPoly:
    """
    Parse an expression such as "1 - x + x^2" into an IntPoly.

    Example:
        >>> parse_poly("1 - x - x^2 + x").coeffs
        (1, 0, -1)
    """
    if not source or not source.strip():
        raise EmptyInputError()
    terms = _Parser(tokenize(source)).expr()
    size = max(terms) + 1
    coeffs = [0] * size
    for degree, coeff in terms.items():
        coeffs[degree] += coeff
    return IntPoly(tuple(coeffs))


def parse_expr(source: str) -> PolyExpr:
    return PolyExpr(source=source, parsed=parse_poly(source))


def render(poly: IntPoly) -> str:
    """Canonical text; parse_poly(render(p)) == p"""
    return poly.to_text()
