"""Sparse multivariate polynomials over Q and linear changes of variables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .orders import Monomial, MonomialOrder, RingContext, mul, unit

_F0 = Fraction(0)

GENERAL = "general"
UPPER_TRIANGULAR = "upper"
LOWER_TRIANGULAR = "lower"
UNIPOTENT = "unipotent"
DIAGONAL = "diagonal"


class Polynomial:
    """Map from exponent tuples to nonzero rational coefficients.

    Instances are treated as immutable: no method mutates `terms` after
    construction, so sharing across threads is safe.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for e, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # internal fast path: caller guarantees canonical terms
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({unit(nvars): c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, e: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({tuple(e): c} if c else {})

    def nvars(self) -> int | None:
        for e in self.terms:
            return len(e)
        return None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, _F0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return Polynomial._raw(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, _F0) - c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return Polynomial._raw(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict[Monomial, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = mul(e1, e2)
                    v = out.get(e, _F0) + c1 * c2
                    if v:
                        out[e] = v
                    elif e in out:
                        del out[e]
            return Polynomial._raw(out)
        c = Fraction(other)
        if not c:
            return Polynomial.zero()
        return Polynomial._raw({e: c0 * c for e, c0 in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        nv = self.nvars()
        if nv is None:
            if k == 0:
                raise ValueError("0**0 of a polynomial with unknown arity")
            return Polynomial.zero()
        result = Polynomial.constant(nv, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def mul_term(self, e: Monomial, c) -> "Polynomial":
        """Multiply by the single term c * x^e."""
        c = Fraction(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._raw({mul(e0, e): c0 * c for e0, c0 in self.terms.items()})

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def leading(self, order: MonomialOrder) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("leading term of the zero polynomial")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading(order)
        if c == 1:
            return self
        return Polynomial._raw({e: v / c for e, v in self.terms.items()})

    def primitive(self) -> "Polynomial":
        """Clear denominators and divide by integer content."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(int(c * den)))
        factor = Fraction(den, num)
        if factor == 1:
            return self
        return Polynomial._raw({e: c * factor for e, c in self.terms.items()})

    def evaluate(self, point) -> Fraction:
        vals = [Fraction(v) for v in point]
        total = _F0
        for e, c in self.terms.items():
            term = c
            for ei, v in zip(e, vals):
                if ei:
                    term *= v**ei
            total += term
        return total

    def sorted_terms(self, order: MonomialOrder):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __repr__(self) -> str:
        from .parsing import polynomial_str

        return polynomial_str(self)


def leading_term(ctx: RingContext, f: Polynomial) -> tuple[Monomial, Fraction]:
    """Order-maximal monomial of f and its coefficient; f must be nonzero."""
    if not f:
        raise ValueError("leading term of the zero polynomial")
    for e in f.terms:
        ctx.check(e)
        break
    return f.leading(ctx.order)


@dataclass(frozen=True)
class LinearChange:
    """Invertible substitution x_i -> sum_j matrix[i][j] * x_j.

    The `kind` tag records a matrix shape: the standard Borel for the variable
    chain x0 > ... > xn is upper triangular, its opposite lower triangular.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    kind: str = GENERAL

    def __post_init__(self):
        n = len(self.matrix)
        mat = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        if any(len(row) != n for row in mat):
            raise ValueError("change of variables must be square")
        object.__setattr__(self, "matrix", mat)
        if linalg.det(mat) == 0:
            raise ValueError("change of variables must be invertible")
        self._check_kind()

    def _check_kind(self):
        mat = self.matrix
        n = len(mat)
        upper = all(mat[i][j] == 0 for i in range(n) for j in range(i))
        lower = all(mat[i][j] == 0 for i in range(n) for j in range(i + 1, n))
        unit_diag = all(mat[i][i] == 1 for i in range(n))
        ok = {
            GENERAL: True,
            UPPER_TRIANGULAR: upper,
            LOWER_TRIANGULAR: lower,
            UNIPOTENT: upper and unit_diag,
            DIAGONAL: upper and lower,
        }
        if self.kind not in ok:
            raise ValueError(f"unknown change-of-variables kind {self.kind!r}")
        if not ok[self.kind]:
            raise ValueError(f"matrix shape is inconsistent with kind {self.kind!r}")

    @property
    def nvars(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, nvars: int) -> "LinearChange":
        return cls(linalg.identity(nvars), DIAGONAL)

    def image(self, i: int) -> Polynomial:
        """The polynomial this change substitutes for x_i."""
        row = self.matrix[i]
        nv = self.nvars
        return Polynomial({tuple(1 if j == k else 0 for j in range(nv)): c
                           for k, c in enumerate(row) if c})


def compose(g: LinearChange, h: LinearChange) -> LinearChange:
    """Change with apply_change(compose(g, h), f) == apply_change(g, apply_change(h, f))."""
    if g.nvars != h.nvars:
        raise ValueError("dimension mismatch in composition")
    return LinearChange(linalg.mat_mul(h.matrix, g.matrix))


def apply_change(ctx: RingContext, g: LinearChange, f: Polynomial) -> Polynomial:
    """Substitute g into f and expand; degree is preserved on homogeneous input."""
    nv = ctx.nvars
    if g.nvars != nv:
        raise ValueError("change of variables does not match the ring context")
    images = [g.image(i) for i in range(nv)]
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        p = powers.get((i, e))
        if p is None:
            p = images[i] if e == 1 else power(i, e - 1) * images[i]
            powers[(i, e)] = p
        return p

    out = Polynomial.zero()
    for exps, c in f.terms.items():
        ctx.check(exps)
        term = None
        for i, ei in enumerate(exps):
            if ei:
                p = power(i, ei)
                term = p if term is None else term * p
        if term is None:
            term = Polynomial.constant(nv, c)
        else:
            term = term * c
        out = out + term
    return out
