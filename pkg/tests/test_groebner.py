import random
from fractions import Fraction

import pytest

from ginlab.families import twisted_cubic_ideal
from ginlab.groebner import (
    Ideal,
    buchberger,
    graded_basis_matrix,
    graded_piece,
    ideal_of,
    initial_ideal,
    reduce,
    reduce_with_quotients,
)
from ginlab.monideal import MonomialIdeal, colon_by_variable, intersect, saturate
from ginlab.orders import GrevLex, Lex, RingContext
from ginlab.parsing import parse_polynomial
from ginlab.poly import Polynomial

CTX2 = RingContext(2, GrevLex())
CTX2_LEX = RingContext(2, Lex())
CTX3 = RingContext(3, GrevLex())


def p(text, nvars=3):
    return parse_polynomial(text, nvars)


def mono_ideal(nvars, *gens):
    return MonomialIdeal.make(nvars, gens)


class TestReduce:
    def test_divisible_monomial_goes_to_zero(self):
        assert not reduce(CTX2, p("x0^2*x1"), [p("x0^2")])

    def test_not_reducible_when_lead_differs(self):
        # the basis lead under grevlex is x1^2, so x0*x2 is already reduced
        f = p("x0*x2")
        assert reduce(CTX2, f, [p("x0*x2 - x1^2")]) == f

    def test_single_division_step(self):
        assert reduce(CTX2, p("x1^2"), [p("x0*x2 - x1^2")]) == p("x0*x2")

    def test_idempotent(self):
        basis = [p("x0*x2 - x1^2"), p("x1*x2 - 3*x2^2")]
        rng = random.Random(17)
        for _ in range(10):
            f = Polynomial(
                {
                    tuple(rng.randint(0, 3) for _ in range(3)): rng.randint(-5, 5)
                    for _ in range(4)
                }
            )
            r = reduce(CTX2, f, basis)
            assert reduce(CTX2, r, basis) == r

    def test_division_witness(self):
        basis = [p("x0*x2 - x1^2"), p("x1^3 + x2^3")]
        rng = random.Random(19)
        for _ in range(10):
            f = Polynomial(
                {
                    tuple(rng.randint(0, 4) for _ in range(3)): rng.randint(-9, 9)
                    for _ in range(5)
                }
            )
            r, quotients = reduce_with_quotients(CTX2, f, basis)
            recombined = r
            for q, g in zip(quotients, basis):
                recombined = recombined + q * g
            assert recombined == f

    def test_zero_basis_element_rejected(self):
        with pytest.raises(ValueError):
            reduce(CTX2, p("x0"), [Polynomial.zero()])


class TestBuchberger:
    def test_principal_ideal_is_its_own_basis(self):
        gb = buchberger(CTX2, Ideal([p("x0*x2 - x1^2")]))
        assert gb == (p("x1^2 - x0*x2"),)  # monic with lead x1^2

    def test_monomial_ideal_fixed(self):
        gens = [p("x0^2"), p("x0*x1"), p("x1^2")]
        gb = buchberger(CTX2, Ideal(gens))
        assert set(gb) == set(gens)

    def test_twisted_cubic_reduced_basis(self):
        tc = twisted_cubic_ideal()
        gb = buchberger(CTX3, tc)
        assert len(gb) == 3
        expected = {
            p("x1^2 - x0*x2", 4),
            p("x1*x2 - x0*x3", 4),
            p("x2^2 - x1*x3", 4),
        }
        assert set(gb) == expected

    def test_oracle_dimensions_match_initial_ideal(self):
        # degreewise elimination on the raw generators is the independent oracle
        tc = twisted_cubic_ideal()
        inM = initial_ideal(CTX3, tc)
        for m in range(6):
            reduced, pivots, cols = graded_basis_matrix(CTX3, tc, m)
            pivot_monomials = {cols[c] for c in pivots}
            assert pivot_monomials == set(inM.graded_monomials(CTX3, m))

    def test_randomized_oracle_sweep_across_orders(self):
        # elimination on raw generator multiples is order-independent; the set
        # of pivot monomials must equal the degree slice of the initial ideal
        # for every order
        from ginlab.orders import Lex, WeightOrder

        rng = random.Random(4242)
        orders = [GrevLex(), Lex(), WeightOrder((2, 1, 1)), WeightOrder((1, 3, 0), Lex())]
        for trial in range(6):
            gens = []
            for _ in range(rng.randint(1, 2)):
                deg = rng.randint(1, 3)
                terms = {}
                for e in RingContext(2, GrevLex()).monomials(deg):
                    c = rng.randint(-4, 4)
                    if c:
                        terms[e] = c
                if terms:
                    gens.append(Polynomial(terms))
            if not gens:
                continue
            I = Ideal(gens)
            for order in orders:
                ctx = RingContext(2, order)
                inM = initial_ideal(ctx, I)
                if inM.is_unit():
                    continue
                for m in range(6):
                    reduced, pivots, cols = graded_basis_matrix(ctx, I, m)
                    assert {cols[c] for c in pivots} == set(
                        inM.graded_monomials(ctx, m)
                    ), (trial, order, m)

    def test_reduced_basis_is_self_reduced(self):
        I = Ideal([p("x0^2 - x1*x2"), p("x0*x1 - x2^2"), p("x1^3 - x0*x2^2")])
        gb = buchberger(CTX2, I)
        leads = [g.leading(CTX2.order) for g in gb]
        for lm, lc in leads:
            assert lc == 1
        for i, g in enumerate(gb):
            for j, (lm, _) in enumerate(leads):
                if i == j:
                    continue
                for e in g.terms:
                    assert not all(a <= b for a, b in zip(lm, e))

    def test_zero_ideal(self):
        assert buchberger(CTX2, Ideal([])) == ()

    def test_unit_ideal(self):
        gb = buchberger(CTX2, Ideal([p("x0 + 1"), p("x0")]))
        assert gb == (Polynomial.constant(3, 1),)


class TestInitialIdeal:
    def test_conic_grevlex(self):
        assert initial_ideal(CTX2, Ideal([p("x0*x2 - x1^2")])) == mono_ideal(3, (0, 2, 0))

    def test_conic_lex(self):
        assert initial_ideal(CTX2_LEX, Ideal([p("x0*x2 - x1^2")])) == mono_ideal(3, (1, 0, 1))

    def test_monomial_ideal_fixed_point(self):
        M = mono_ideal(3, (2, 0, 0), (0, 1, 1))
        assert initial_ideal(CTX2, ideal_of(M)) == M

    def test_invariant_under_rescaling_and_permutation(self):
        gens = [p("x0*x2 - x1^2"), p("x1*x2 - x0^2")]
        base = initial_ideal(CTX2, Ideal(gens))
        scaled = initial_ideal(CTX2, Ideal([g * Fraction(3, 7) for g in gens]))
        permuted = initial_ideal(CTX2, Ideal(list(reversed(gens))))
        assert base == scaled == permuted


class TestGradedPiece:
    def test_principal_monomial_count(self):
        ctx = RingContext(1, GrevLex())
        basis = graded_piece(ctx, Ideal([p("x0", 2)]), 2)
        assert {tuple(f.terms) for f in basis} == {((2, 0),), ((1, 1),)}

    def test_conic_degree_two(self):
        assert len(graded_piece(CTX2, Ideal([p("x0*x2 - x1^2")]), 2)) == 1

    def test_conic_degree_three(self):
        assert len(graded_piece(CTX2, Ideal([p("x0*x2 - x1^2")]), 3)) == 3

    def test_requires_homogeneous(self):
        with pytest.raises(ValueError):
            graded_piece(CTX2, Ideal([p("x0 + 1")]), 2)

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            graded_piece(CTX2, Ideal([p("x0")]), -1)


class TestMonomialIdealOps:
    def test_colon_examples(self):
        assert colon_by_variable(mono_ideal(3, (2, 0, 0)), 0) == mono_ideal(3, (1, 0, 0))
        assert colon_by_variable(mono_ideal(3, (0, 2, 0)), 0) == mono_ideal(3, (0, 2, 0))
        assert colon_by_variable(
            mono_ideal(3, (1, 1, 0), (0, 1, 1)), 1
        ) == mono_ideal(3, (1, 0, 0), (0, 0, 1))

    def test_saturate_one_step(self):
        M = mono_ideal(3, (2, 0, 0), (1, 1, 0), (1, 0, 1))
        assert saturate(M) == mono_ideal(3, (1, 0, 0))

    def test_saturate_fixed_point(self):
        M = mono_ideal(3, (0, 2, 0))
        assert saturate(M) == M

    def test_saturate_irrelevant_power_is_unit(self):
        square = [u for u in CTX2.monomials(2)]
        M = MonomialIdeal.make(3, square)
        assert saturate(M).is_unit()

    def test_saturation_properties(self):
        for gens in [
            [(2, 0, 0), (1, 1, 0), (1, 0, 1)],
            [(0, 2, 0)],
            [(3, 0, 0), (2, 1, 0)],
        ]:
            M = MonomialIdeal.make(3, gens)
            S = saturate(M)
            assert saturate(S) == S
            for u in M.min_gens:
                assert S.contains(u)
            # graded pieces agree in large degrees
            top = max(sum(g) for g in gens) + 4
            for m in range(top - 2, top + 1):
                assert M.graded_monomials(CTX2, m) == S.graded_monomials(CTX2, m)

    def test_intersect_examples(self):
        A = mono_ideal(3, (1, 0, 0), (0, 1, 0))
        B = mono_ideal(3, (1, 0, 0))
        assert intersect(A, B) == B  # contained ideal wins
        C = mono_ideal(3, (0, 2, 0))
        assert intersect(B, C) == mono_ideal(3, (1, 2, 0))
