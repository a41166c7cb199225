"""Text grammar for polynomials: variables x0..xN, rationals p/q, operators + - * ^."""

from __future__ import annotations

from fractions import Fraction

from .orders import GrevLex, Monomial, MonomialOrder
from .poly import Polynomial


class ParseError(ValueError):
    """Invalid input text; `position` is the 0-based offset of the offence."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise ParseError(f"expected {ch!r}", self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse e.g. ``x0*x2 - 3/2*x1^2 + 5`` into a polynomial in `nvars` variables."""
    sc = _Scanner(text)
    result = _expr(sc, nvars)
    if not sc.done():
        raise ParseError("unexpected trailing input", sc.pos)
    return result


def parse_generators(text: str, nvars: int) -> list[Polynomial]:
    """Parse a ``;``-separated list of polynomials, skipping empty entries."""
    gens = []
    for chunk in text.split(";"):
        if chunk.strip():
            gens.append(parse_polynomial(chunk, nvars))
    return gens


def _expr(sc: _Scanner, nvars: int) -> Polynomial:
    negate = False
    if sc.take("-"):
        negate = True
    else:
        sc.take("+")
    total = _term(sc, nvars)
    if negate:
        total = -total
    while True:
        if sc.take("+"):
            total = total + _term(sc, nvars)
        elif sc.take("-"):
            total = total - _term(sc, nvars)
        else:
            return total


def _term(sc: _Scanner, nvars: int) -> Polynomial:
    product = _factor(sc, nvars)
    while sc.take("*"):
        product = product * _factor(sc, nvars)
    return product


def _factor(sc: _Scanner, nvars: int) -> Polynomial:
    base = _atom(sc, nvars)
    if sc.take("^"):
        exp = sc.integer()
        if not base:
            return Polynomial.constant(nvars, 1) if exp == 0 else base
        base = base**exp
    return base


def _atom(sc: _Scanner, nvars: int) -> Polynomial:
    ch = sc.peek()
    if ch == "(":
        sc.expect("(")
        inner = _expr(sc, nvars)
        sc.expect(")")
        return inner
    if ch == "x":
        start = sc.pos
        sc.pos += 1
        idx = sc.integer()
        if idx >= nvars:
            raise ParseError(f"variable x{idx} exceeds x{nvars - 1}", start)
        return Polynomial.variable(nvars, idx)
    if ch.isdigit():
        num = sc.integer()
        if sc.take("/"):
            den = sc.integer()
            if den == 0:
                raise ParseError("zero denominator", sc.pos)
            return Polynomial.constant(nvars, Fraction(num, den))
        return Polynomial.constant(nvars, num)
    raise ParseError("expected a variable, number or '('", sc.pos)


def monomial_str(e: Monomial) -> str:
    parts = []
    for i, exp in enumerate(e):
        if exp == 1:
            parts.append(f"x{i}")
        elif exp > 1:
            parts.append(f"x{i}^{exp}")
    return "*".join(parts) if parts else "1"


def term_str(e: Monomial, c: Fraction) -> str:
    mon = monomial_str(e)
    if mon == "1":
        return str(c)
    if c == 1:
        return mon
    if c == -1:
        return f"-{mon}"
    return f"{c}*{mon}"


def polynomial_str(f: Polynomial, order: MonomialOrder | None = None) -> str:
    if not f:
        return "0"
    order = order or GrevLex()
    pieces = []
    for e, c in f.sorted_terms(order):
        text = term_str(e, c)
        if not pieces:
            pieces.append(text)
        elif text.startswith("-"):
            pieces.append("- " + text[1:])
        else:
            pieces.append("+ " + text)
    return " ".join(pieces)
