"""Total monomial orders and the ambient ring context.

A monomial is an exponent tuple over the variables x0..xn.  Orders expose a
sort key so that ``max(terms, key=order.key)`` picks the leading monomial and
``sorted(..., reverse=True)`` lists monomials in descending order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

Monomial = tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def div(a: Monomial, b: Monomial) -> Monomial:
    """Exponent vector of x^a / x^b; requires divisibility."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{b} does not divide {a}")
    return q


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def unit(nvars: int) -> Monomial:
    return (0,) * nvars


def variable(nvars: int, i: int) -> Monomial:
    if not 0 <= i < nvars:
        raise ValueError(f"variable index {i} out of range for {nvars} variables")
    return tuple(1 if j == i else 0 for j in range(nvars))


@dataclass(frozen=True)
class Lex:
    """Lexicographic order with x0 > x1 > ... > xn."""

    def key(self, m: Monomial):
        return m

    def __str__(self) -> str:
        return "lex"


@dataclass(frozen=True)
class GrevLex:
    """Degree reverse lexicographic order with x0 > x1 > ... > xn."""

    def key(self, m: Monomial):
        return (sum(m), tuple(-e for e in reversed(m)))

    def __str__(self) -> str:
        return "grevlex"


@dataclass(frozen=True)
class WeightOrder:
    """Compare by nonnegative weight vector first, break ties with `tiebreak`."""

    weights: tuple[int, ...]
    tiebreak: Lex | GrevLex = field(default_factory=GrevLex)

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("weight vector must be nonnegative")

    def key(self, m: Monomial):
        if len(m) != len(self.weights):
            raise ValueError("monomial length does not match weight vector")
        w = sum(wi * ei for wi, ei in zip(self.weights, m))
        return (w, self.tiebreak.key(m))

    def __str__(self) -> str:
        return "weight:" + ",".join(str(w) for w in self.weights)


MonomialOrder = Lex | GrevLex | WeightOrder


@dataclass(frozen=True)
class RingContext:
    """Ambient ring Q[x0..xn] together with a total monomial order."""

    n: int
    order: MonomialOrder = field(default_factory=GrevLex)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient projective dimension n must be at least 1")

    @property
    def nvars(self) -> int:
        return self.n + 1

    def check(self, m: Monomial) -> None:
        if len(m) != self.nvars:
            raise ValueError(f"monomial {m} does not live in {self.nvars} variables")

    def dim(self, m: int) -> int:
        """Number of degree-m monomials in n+1 variables."""
        if m < 0:
            return 0
        return comb(self.n + m, self.n)

    def monomials(self, m: int) -> tuple[Monomial, ...]:
        """All degree-m monomials, descending under this context's order."""
        return _sorted_monomials(self.nvars, m, self.order)

    def variables(self) -> tuple[Monomial, ...]:
        return tuple(variable(self.nvars, i) for i in range(self.nvars))


def cmp_monomials(ctx: RingContext, a: Monomial, b: Monomial) -> int:
    """-1, 0 or +1 as a is below, equal to, or above b; Equal iff a == b."""
    ctx.check(a)
    ctx.check(b)
    if a == b:
        return 0
    ka, kb = ctx.order.key(a), ctx.order.key(b)
    return 1 if ka > kb else -1


@lru_cache(maxsize=None)
def _monomials_of_degree(nvars: int, m: int) -> tuple[Monomial, ...]:
    if m < 0:
        return ()
    # stars and bars: bar positions in a row of m + nvars - 1 slots
    out = []
    for bars in combinations(range(m + nvars - 1), nvars - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(m + nvars - 1 - prev - 1)
        out.append(tuple(exps))
    return tuple(out)


@lru_cache(maxsize=None)
def _sorted_monomials(nvars: int, m: int, order: MonomialOrder) -> tuple[Monomial, ...]:
    return tuple(sorted(_monomials_of_degree(nvars, m), key=order.key, reverse=True))
