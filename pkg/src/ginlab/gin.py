"""Generic initial ideals, Borel fixedness, weight vectors, torus-limit checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import NamedTuple

from . import linalg
from .grassmann import (
    SchubertIndex,
    hilbert_point,
    index_weight,
    schubert_cell_index,
)
from .groebner import Ideal, initial_ideal
from .hilbert import HilbertPolynomial, gotzmann_number, hilbert_polynomial
from .monideal import MonomialIdeal, saturate
from .orders import GrevLex, Lex, RingContext, WeightOrder
from .poly import GENERAL, LinearChange, apply_change


@dataclass(frozen=True)
class GinResult:
    """Certified generic initial ideal with the winning coordinate change."""

    gin: MonomialIdeal
    index: SchubertIndex
    witness: LinearChange
    trials: int
    stable: bool
    certification_degree: int


def random_linear_change(ctx: RingContext, seed: int, bound: int = 100) -> LinearChange:
    """Deterministic random integer matrix in [-bound, bound], resampled until invertible."""
    if bound < 2:
        raise ValueError("coefficient bound must be at least 2")
    rng = random.Random(seed)
    nv = ctx.nvars
    while True:
        rows = [[Fraction(rng.randint(-bound, bound)) for _ in range(nv)] for _ in range(nv)]
        if linalg.det(rows) != 0:
            return LinearChange(tuple(tuple(r) for r in rows), GENERAL)


def certification_degree(ctx: RingContext, I: Ideal) -> tuple[int, HilbertPolynomial]:
    """Degree at which the Schubert index pins down the saturated initial ideal.

    The Gotzmann number suffices for saturated inputs; taking the max with the
    generator degrees guards inputs that are not saturated.
    """
    P = hilbert_polynomial(ctx, I)
    return max(gotzmann_number(P), I.max_degree()), P


def index_at_degree(ctx: RingContext, M: MonomialIdeal, m: int) -> SchubertIndex:
    """Schubert index of the degree-m slice of a monomial ideal."""
    return SchubertIndex(M.graded_monomials(ctx, m))


def generic_initial_ideal(
    ctx: RingContext, I: Ideal, trials: int = 5, seed: int = 0, bound: int = 100
) -> GinResult:
    """Initial ideal after random coordinate changes, certified over several trials.

    Each trial applies an independent seeded change of variables; the reported
    result is the trial whose Schubert index at the certification degree is
    lex-maximal, and `stable` records whether all trials agreed.  A sampled
    index can only fall below the generic one, never above it, so the maximal
    observed index is the generic index up to sampling failure.
    """
    if trials < 2:
        raise ValueError("at least two trials are required")
    if not I.homogeneous:
        raise ValueError("generic initial ideals require a homogeneous ideal")
    if I.is_zero():
        return GinResult(
            gin=MonomialIdeal.zero(ctx.nvars),
            index=SchubertIndex(()),
            witness=LinearChange.identity(ctx.nvars),
            trials=trials,
            stable=True,
            certification_degree=0,
        )
    m, _ = certification_degree(ctx, I)
    key = ctx.order.key
    best: tuple | None = None
    indices = []
    for t in range(trials):
        g = random_linear_change(ctx, seed + t, bound)
        moved = Ideal([apply_change(ctx, g, f) for f in I.generators])
        inM = initial_ideal(ctx, moved)
        idx = index_at_degree(ctx, inM, m)
        indices.append(idx)
        rank = tuple(key(u) for u in idx.monomials)
        if best is None or rank > best[0]:
            best = (rank, idx, g)
    _, idx, witness = best
    stable = all(other == idx for other in indices)
    gin = saturate(MonomialIdeal.make(ctx.nvars, idx.monomials))
    return GinResult(
        gin=gin,
        index=idx,
        witness=witness,
        trials=trials,
        stable=stable,
        certification_degree=m,
    )


def is_borel_fixed(ctx: RingContext, M: MonomialIdeal) -> bool:
    """Strong stability: every move x_j -> x_i with i < j stays in the ideal.

    Over the rationals this coincides with invariance under the Borel group of
    the variable chain x0 > ... > xn.
    """
    if M.nvars != ctx.nvars:
        raise ValueError("monomial ideal does not match the ring context")
    for u in M.min_gens:
        for j in range(M.nvars):
            if u[j] == 0:
                continue
            for i in range(j):
                moved = tuple(
                    e + 1 if k == i else e - 1 if k == j else e for k, e in enumerate(u)
                )
                if not M.contains(moved):
                    return False
    return True


class SecondaryGin(NamedTuple):
    index: SchubertIndex
    initial: MonomialIdeal
    certification_degree: int


def secondary_gin(ctx: RingContext, I: Ideal, g: LinearChange) -> SecondaryGin:
    """Initial ideal after the specific change g, with its Schubert index."""
    if not I.homogeneous:
        raise ValueError("secondary gins require a homogeneous ideal")
    if I.is_zero():
        return SecondaryGin(SchubertIndex(()), MonomialIdeal.zero(ctx.nvars), 0)
    moved = Ideal([apply_change(ctx, g, f) for f in I.generators])
    inM = initial_ideal(ctx, moved)
    # the moved ideal has the same Hilbert function, so certify off its initial ideal
    from .hilbert import hilbert_polynomial_of_monomial_ideal

    P = hilbert_polynomial_of_monomial_ideal(ctx, inM, start=I.max_degree() + ctx.n + 1)
    m = max(gotzmann_number(P), I.max_degree())
    return SecondaryGin(index_at_degree(ctx, inM, m), inM, m)


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative integer weights separating each basis lead from its tail."""

    omega: tuple[int, ...]


def _order_matrix(ctx: RingContext) -> list[tuple[int, ...]]:
    nv = ctx.nvars

    def rows_for(order) -> list[tuple[int, ...]]:
        if isinstance(order, Lex):
            return [tuple(1 if j == i else 0 for j in range(nv)) for i in range(nv)]
        if isinstance(order, GrevLex):
            rows = [tuple([1] * nv)]
            for i in range(nv - 1, 0, -1):
                rows.append(tuple(-1 if j == i else 0 for j in range(nv)))
            return rows
        if isinstance(order, WeightOrder):
            return [tuple(order.weights)] + rows_for(order.tiebreak)
        raise TypeError(f"unsupported order {order!r}")

    return rows_for(ctx.order)


def weight_vector_for_order(ctx: RingContext, basis) -> WeightVector:
    """Nonnegative integer omega with omega . (lead - tail) > 0 for every basis element.

    Built from the defining rows of the order, scaled so the first row that
    separates each difference dominates the remaining rows; the strict
    inequalities are re-checked exactly before returning.
    """
    basis = list(basis)
    if not basis:
        raise ValueError("weight vector needs a nonempty basis")
    diffs: list[tuple[int, ...]] = []
    for f in basis:
        lead, _ = f.leading(ctx.order)
        for e in f.terms:
            if e != lead:
                diffs.append(tuple(a - b for a, b in zip(lead, e)))
    if not diffs:
        return WeightVector((0,) * ctx.nvars)
    rows = _order_matrix(ctx)
    bound = max(abs(sum(r * v for r, v in zip(row, d))) for row in rows for d in diffs)
    t = bound + 2
    omega = [0] * ctx.nvars
    scale = t ** (len(rows) - 1)
    for row in rows:
        for j, r in enumerate(row):
            omega[j] += scale * r
        scale //= t
    g = 0
    for w in omega:
        g = gcd(g, w)
    if g > 1:
        omega = [w // g for w in omega]
    if any(w < 0 for w in omega):
        raise RuntimeError("weight vector construction produced a negative entry")
    for d in diffs:
        if sum(w * v for w, v in zip(omega, d)) <= 0:
            raise RuntimeError("weight vector fails a strict inequality")
    return WeightVector(tuple(omega))


def one_ps_limit_check(
    ctx: RingContext,
    I: Ideal,
    m: int,
    omega: WeightVector,
    swap_radius: int = 1,
    samples: int = 200,
    seed: int = 0,
    exhaustive_limit: int = 100_000,
) -> bool:
    """Witness that the torus limit of the degree-m Hilbert point is its initial subspace.

    True when the cell index has strictly maximal omega-weight among the
    candidate indices with nonvanishing Plücker minor.  Candidates are all
    indices when C(N, d) is small enough, otherwise pivot swap neighbourhoods
    plus a seeded random sample.
    """
    F = hilbert_point(ctx, I, m)
    d = F.d
    if d == 0:
        return True
    pivot = F.pivots
    star = schubert_cell_index(ctx, F)
    w_star = index_weight(star, omega.omega)
    n_cols = len(F.columns)

    def weight_of(positions) -> int:
        return sum(
            sum(w * e for w, e in zip(omega.omega, F.columns[p])) for p in positions
        )

    def minor(positions) -> Fraction:
        sub = [[row[c] for c in positions] for row in F.matrix]
        return linalg.det(sub)

    if comb(n_cols, d) <= exhaustive_limit:
        from itertools import combinations

        candidates = combinations(range(n_cols), d)
    else:
        candidates = _neighbourhood_candidates(pivot, n_cols, d, swap_radius, samples, seed)

    for pos in candidates:
        if pos == pivot:
            continue
        if weight_of(pos) >= w_star and minor(pos) != 0:
            return False
    return True


def _neighbourhood_candidates(pivot, n_cols, d, radius, samples, seed):
    from itertools import combinations

    pivot_set = set(pivot)
    others = [c for c in range(n_cols) if c not in pivot_set]
    seen = set()
    for r in range(1, min(radius, d, len(others)) + 1):
        for removed in combinations(pivot, r):
            base = pivot_set.difference(removed)
            for added in combinations(others, r):
                pos = tuple(sorted(base.union(added)))
                if pos not in seen:
                    seen.add(pos)
                    yield pos
    rng = random.Random(seed)
    for _ in range(samples):
        pos = tuple(sorted(rng.sample(range(n_cols), d)))
        if pos not in seen:
            seen.add(pos)
            yield pos
