"""Hilbert functions and polynomials, Gotzmann expansions, segment ideals.

The binomial expansion P(m) = sum_i C(m + a_i - i + 1, a_i) with weakly
decreasing a_i exists exactly for the Hilbert polynomials of graded ideals;
its length is the Gotzmann number, the degree at which lex segments and
Hilbert points become faithful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .groebner import Ideal, initial_ideal
from .monideal import MonomialIdeal, saturate
from .orders import GrevLex, Lex, Monomial, RingContext, mul
from .poly import Polynomial

_F0 = Fraction(0)
_F1 = Fraction(1)


class NotAdmissible(ValueError):
    """The polynomial has no Gotzmann binomial expansion."""


@dataclass(frozen=True)
class HilbertPolynomial:
    """Univariate rational polynomial in m, stored by ascending power coefficients."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def make(cls, coeffs) -> "HilbertPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c) -> "HilbertPolynomial":
        return cls.make([c])

    @classmethod
    def zero(cls) -> "HilbertPolynomial":
        return cls(())

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial")
        return len(self.coeffs) - 1

    def __call__(self, m) -> Fraction:
        x = Fraction(m)
        total = _F0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __add__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return HilbertPolynomial.make(
            [(a[i] if i < len(a) else _F0) + (b[i] if i < len(b) else _F0) for i in range(n)]
        )

    def __sub__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return HilbertPolynomial.make(
            [(a[i] if i < len(a) else _F0) - (b[i] if i < len(b) else _F0) for i in range(n)]
        )

    def __neg__(self) -> "HilbertPolynomial":
        return HilbertPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, HilbertPolynomial):
            if not self.coeffs or not other.coeffs:
                return HilbertPolynomial.zero()
            out = [_F0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return HilbertPolynomial.make(out)
        return HilbertPolynomial.make([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def is_integer_valued_on(self, start: int, count: int) -> bool:
        return all(self(start + k).denominator == 1 for k in range(count))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if not c:
                continue
            if p == 0:
                body = str(abs(c))
            else:
                var = "m" if p == 1 else f"m^{p}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)


_M = HilbertPolynomial.make([0, 1])


def binomial_poly(shift: int, k: int) -> HilbertPolynomial:
    """C(m + shift, k) as a polynomial in m."""
    if k < 0:
        raise ValueError("binomial order must be nonnegative")
    out = HilbertPolynomial.constant(1)
    for i in range(k):
        out = out * (_M + HilbertPolynomial.constant(shift - i))
    return out * Fraction(1, factorial(k))


@dataclass(frozen=True)
class MacaulayRep:
    """Gotzmann expansion exponents a_1 >= ... >= a_s >= 0."""

    a: tuple[int, ...]

    @property
    def gotzmann(self) -> int:
        return len(self.a)

    def to_polynomial(self) -> HilbertPolynomial:
        total = HilbertPolynomial.zero()
        for i, ai in enumerate(self.a, start=1):
            total = total + binomial_poly(ai - i + 1, ai)
        return total

    def __str__(self) -> str:
        if not self.a:
            return "0"
        pieces = []
        for i, ai in enumerate(self.a, start=1):
            shift = ai - i + 1
            if shift > 0:
                pieces.append(f"C(m+{shift},{ai})")
            elif shift == 0:
                pieces.append(f"C(m,{ai})")
            else:
                pieces.append(f"C(m{shift},{ai})")
        return " + ".join(pieces)


_MAX_EXPANSION_TERMS = 500_000


def macaulay_rep(P: HilbertPolynomial) -> MacaulayRep:
    """Greedy symbolic Gotzmann expansion; raises NotAdmissible on failure."""
    a: list[int] = []
    remainder = P
    i = 1
    while not remainder.is_zero():
        d = remainder.degree
        lead = remainder.coeffs[-1]
        if lead < 0:
            raise NotAdmissible(f"{P} is not an admissible Hilbert polynomial")
        block = lead * factorial(d)
        if block.denominator != 1:
            raise NotAdmissible(f"{P} is not an admissible Hilbert polynomial")
        if i + int(block) > _MAX_EXPANSION_TERMS:
            raise ValueError(f"Gotzmann expansion of {P} exceeds {_MAX_EXPANSION_TERMS} terms")
        if d == 0:
            # remainder is a positive integer constant: that many trailing zeros
            a.extend([0] * int(block))
            break
        a.append(d)
        remainder = remainder - binomial_poly(d - i + 1, d)
        i += 1
    return MacaulayRep(tuple(a))


def gotzmann_number(P: HilbertPolynomial) -> int:
    return macaulay_rep(P).gotzmann


def is_admissible(P: HilbertPolynomial) -> bool:
    try:
        macaulay_rep(P)
        return True
    except NotAdmissible:
        return False


def hilbert_function(ctx: RingContext, M: MonomialIdeal, m: int) -> int:
    """dim (S/M)_m: the number of degree-m monomials outside M."""
    if m < 0:
        raise ValueError("negative degree")
    if M.nvars != ctx.nvars:
        raise ValueError("monomial ideal does not match the ring context")
    return sum(1 for u in ctx.monomials(m) if not M.contains(u))


def _interpolate(points: list[tuple[int, int]]) -> HilbertPolynomial:
    total = HilbertPolynomial.zero()
    for k, (xk, yk) in enumerate(points):
        if yk == 0:
            continue
        term = HilbertPolynomial.constant(yk)
        for j, (xj, _) in enumerate(points):
            if j == k:
                continue
            term = term * (_M + HilbertPolynomial.constant(-xj)) * Fraction(1, xk - xj)
        total = total + term
    return total


def hilbert_polynomial_of_monomial_ideal(
    ctx: RingContext, M: MonomialIdeal, start: int = 0
) -> HilbertPolynomial:
    """Interpolate dim (S/M)_m on a large window, validated on two extra points."""
    n = ctx.n
    maxdeg = max((sum(g) for g in M.min_gens), default=0)
    base = max(start, maxdeg + n + 1)
    for _ in range(8):
        points = [(base + k, hilbert_function(ctx, M, base + k)) for k in range(n + 2)]
        P = _interpolate(points)
        ok = all(
            P(base + n + 2 + k) == hilbert_function(ctx, M, base + n + 2 + k)
            for k in range(2)
        )
        if ok:
            return P
        base += n + 3
    raise RuntimeError("Hilbert function failed to stabilise on the sampled window")


def hilbert_polynomial(ctx: RingContext, I: Ideal) -> HilbertPolynomial:
    """Hilbert polynomial of S/I, computed by counting against the initial ideal."""
    if not I.homogeneous:
        raise ValueError("Hilbert polynomials require a homogeneous ideal")
    if I.is_zero():
        return binomial_poly(ctx.n, ctx.n)
    return hilbert_polynomial_of_monomial_ideal(
        ctx, initial_ideal(ctx, I), start=I.max_degree() + ctx.n + 1
    )


def lex_segment_ideal(ctx: RingContext, P: HilbertPolynomial) -> Ideal:
    """Saturated lex-segment ideal with Hilbert polynomial P.

    The segment is cut at the Gotzmann degree, saturated, and the resulting
    Hilbert polynomial is verified by a counting round trip.
    """
    rep = macaulay_rep(P)
    m0 = rep.gotzmann
    if m0 == 0:
        return Ideal([Polynomial.constant(ctx.nvars, 1)])
    value = P(m0)
    if value.denominator != 1:
        raise NotAdmissible(f"{P} is not integer valued at {m0}")
    q = ctx.dim(m0) - int(value)
    if q < 0:
        raise ValueError(f"{P} needs more variables than the ambient ring provides")
    lex_sorted = sorted(ctx.monomials(m0), key=Lex().key, reverse=True)
    segment = lex_sorted[:q]
    M = saturate(MonomialIdeal.make(ctx.nvars, segment))
    check = hilbert_polynomial_of_monomial_ideal(ctx, M)
    if check != P:
        raise ValueError(f"{P} needs more variables than the ambient ring provides")
    return Ideal([Polynomial.monomial(g) for g in M.gens_sorted(ctx.order)])


def revlex_segment(ctx: RingContext, m: int, count: int) -> tuple[Monomial, ...]:
    """The first `count` degree-m monomials in descending grevlex order."""
    chain = sorted(ctx.monomials(m), key=GrevLex().key, reverse=True)
    if not 0 <= count <= len(chain):
        raise ValueError(f"segment size {count} out of range 0..{len(chain)}")
    return tuple(chain[:count])


@dataclass(frozen=True)
class RevlexLemmaReport:
    is_segment_after: bool
    codim_before: int
    codim_after: int
    contains_corner: bool
    lemma_consistent: bool


def revlex_lemma_check(ctx: RingContext, m: int, count: int, l: int) -> RevlexLemmaReport:
    """Multiply a revlex segment by S_l and test the segment and codimension laws.

    The segment criterion says the product is again a revlex segment exactly
    when the segment reaches x_{n-1}^m; the empty segment is vacuously
    consistent.  When the corner power is present, the codimension of the
    segment is preserved by multiplication.
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    segment = revlex_segment(ctx, m, count)
    corner = tuple(m if i == ctx.n - 1 else 0 for i in range(ctx.nvars))
    contains_corner = corner in set(segment)

    products = {mul(u, v) for u in ctx.monomials(l) for v in segment}
    top = set(revlex_segment(ctx, m + l, len(products)))
    is_segment_after = products == top

    codim_before = ctx.dim(m) - count
    codim_after = ctx.dim(m + l) - len(products)

    iff_holds = count == 0 or (is_segment_after == contains_corner)
    codim_holds = (not contains_corner) or codim_before == codim_after
    return RevlexLemmaReport(
        is_segment_after=is_segment_after,
        codim_before=codim_before,
        codim_after=codim_after,
        contains_corner=contains_corner,
        lemma_consistent=iff_holds and codim_holds,
    )


def parse_hilbert_polynomial(text: str) -> HilbertPolynomial:
    """Parse expressions like ``2*m + 1`` or ``C(m+2,2) - C(m,2)``."""
    from .parsing import ParseError, _Scanner

    sc = _Scanner(text)

    def expr() -> HilbertPolynomial:
        negate = sc.take("-")
        if not negate:
            sc.take("+")
        total = term()
        if negate:
            total = -total
        while True:
            if sc.take("+"):
                total = total + term()
            elif sc.take("-"):
                total = total - term()
            else:
                return total

    def term() -> HilbertPolynomial:
        product = factor()
        while sc.take("*"):
            product = product * factor()
        return product

    def factor() -> HilbertPolynomial:
        base = atom()
        if sc.take("^"):
            exp = sc.integer()
            out = HilbertPolynomial.constant(1)
            for _ in range(exp):
                out = out * base
            return out
        return base

    def atom() -> HilbertPolynomial:
        ch = sc.peek()
        if ch == "(":
            sc.expect("(")
            inner = expr()
            sc.expect(")")
            return inner
        if ch == "m":
            sc.pos += 1
            return _M
        if ch == "C":
            start = sc.pos
            sc.pos += 1
            sc.expect("(")
            top = expr()
            sc.expect(",")
            bottom = expr()
            sc.expect(")")
            return _binomial_expression(top, bottom, start)
        if ch.isdigit():
            num = sc.integer()
            if sc.take("/"):
                den = sc.integer()
                if den == 0:
                    raise ParseError("zero denominator", sc.pos)
                return HilbertPolynomial.constant(Fraction(num, den))
            return HilbertPolynomial.constant(num)
        raise ParseError("expected m, a number, C(...) or '('", sc.pos)

    def _binomial_expression(top, bottom, start) -> HilbertPolynomial:
        # C(f, g) with either g a constant or f - g a constant (C(n+m, m) style)
        if bottom.is_zero() or (bottom.degree == 0):
            k = bottom(0)
        else:
            diff = top - bottom
            if not diff.is_zero() and diff.degree > 0:
                raise ParseError("binomial C(f,g) needs g or f-g constant", start)
            k = diff(0) if not diff.is_zero() else Fraction(0)
        if k.denominator != 1 or k < 0:
            raise ParseError("binomial order must be a nonnegative integer", start)
        k = int(k)
        out = HilbertPolynomial.constant(1)
        for i in range(k):
            out = out * (top - HilbertPolynomial.constant(i))
        return out * Fraction(1, factorial(k))

    result = expr()
    if not sc.done():
        raise ParseError("unexpected trailing input", sc.pos)
    return result
