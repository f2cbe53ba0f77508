import random

import pytest
from hypothesis import given, settings, strategies as st

from mindist import (GrevLex, Ideal, Lex, Monomial, ParseError, Polynomial,
                     buchberger, colon_ideal, divide, eliminate,
                     field_make, footprint_slice, hilbert_function,
                     ideal_equal, intersect_ideals, is_zero_divisor,
                     normal_form, order_compare, parse_polynomial,
                     spolynomial)
from mindist.mpoly import BlockElim


def P(text, field, arity):
    return parse_polynomial(text, field, arity)


# ---------------------------------------------------------------------------
# monomials and orders


def test_monomial_basics():
    a = Monomial((1, 2, 0))
    b = Monomial((0, 1, 1))
    assert a.deg == 3
    assert (a * b).exps == (1, 3, 1)
    assert not a.divides(b)
    assert Monomial((0, 1, 0)).divides(a)
    assert a.lcm(b).exps == (1, 2, 1)
    assert a.gcd(b).exps == (0, 1, 0)
    with pytest.raises(ValueError):
        a / b
    assert str(Monomial((2, 0, 1))) == "t1^2*t3"
    assert str(Monomial((0, 0, 0))) == "1"


def test_lex_top_variable_wins():
    # t1 < t2 < t3: lex ignores degree, the highest-priority variable wins
    ordl = Lex(3)
    assert order_compare(ordl, Monomial((0, 0, 1)), Monomial((0, 2, 0))) == 1


def test_grevlex_tiebreak():
    # equal degree: t2^2 beats t1*t3 when t1 < t2 < t3
    ordg = GrevLex(3)
    assert order_compare(ordg, Monomial((0, 2, 0)), Monomial((1, 0, 1))) == 1


def test_one_is_minimal():
    one = Monomial((0, 0))
    t1 = Monomial((1, 0))
    for order in (Lex(2), GrevLex(2), Lex(2, (1, 0)), GrevLex(2, (1, 0))):
        assert order_compare(order, one, t1) == -1


def test_order_multiplicative_and_total():
    rng = random.Random(7)
    orders = [Lex(3), GrevLex(3), GrevLex(3, (2, 0, 1)), BlockElim(3, 1)]
    monos = [Monomial(tuple(rng.randrange(4) for _ in range(3))) for _ in range(30)]
    c = Monomial((1, 2, 1))
    for order in orders:
        for a in monos:
            for b in monos:
                cmp_ab = order.compare(a, b)
                assert cmp_ab == -order.compare(b, a)
                if a.exps != b.exps:
                    assert cmp_ab != 0
                # multiplicative: a < b implies ac < bc
                assert order.compare(a * c, b * c) == cmp_ab


def test_block_order_eliminates():
    order = BlockElim(3, 1)
    with_front = Monomial((1, 0, 0))
    big_back = Monomial((0, 5, 5))
    assert order.compare(with_front, big_back) == 1


def test_order_arity_mismatch():
    with pytest.raises(ValueError):
        order_compare(Lex(3), Monomial((1, 0)), Monomial((0, 1)))
    with pytest.raises(ValueError):
        Lex(3, (0, 1))
    with pytest.raises(ValueError):
        GrevLex(3, (0, 0, 1))


# ---------------------------------------------------------------------------
# polynomials and parsing


def test_leading_term_examples(f3, f5):
    f = P("t1*t2 - t3*t4", f3, 4)
    m, c = f.leading_term(GrevLex(4, (3, 2, 1, 0)))  # t1 greatest
    assert m.exps == (1, 1, 0, 0) and c.value == 1
    const = P("2", f5, 3)
    m, c = const.leading_term(GrevLex(3))
    assert m.is_one() and c.value == 2
    g = P("t3^4 + t1^2*t2^2 + t2", f3, 3)
    assert g.leading_monomial(Lex(3)).exps == (0, 0, 4)  # top variable dominates
    with pytest.raises(ValueError):
        Polynomial.zero(f3, 2).leading_term(GrevLex(2))


def test_polynomial_arithmetic(f3):
    f = P("t1 + t2", f3, 2)
    g = P("t1 - t2", f3, 2)
    assert (f * g) == P("t1^2 - t2^2", f3, 2)
    assert (f + g) == P("2*t1", f3, 2)
    assert (f - f).is_zero()
    assert (-f) == P("2*t1 + 2*t2", f3, 2)
    assert f.scale(0).is_zero()
    assert (2 * f) == P("2*t1 + 2*t2", f3, 2)
    assert f.total_degree() == 1
    assert f.is_homogeneous()
    assert not P("t1 + 1", f3, 2).is_homogeneous()


def test_polynomial_evaluate(f3):
    f = P("t1^2*t2 + 2*t3", f3, 3)
    assert f((1, 1, 1)).value == 0  # 1 + 2 = 0 mod 3
    assert f((2, 1, 0)).value == 1  # 4 = 1 mod 3


def test_parse_errors(f3):
    for bad in ["", "t5", "t1 +", "* t1", "t1 t2", "2 3", "t0", "^2", "t1^"]:
        with pytest.raises(ParseError):
            parse_polynomial(bad, f3, 4)


def test_parse_coefficient_reduction(f3, f4):
    assert P("4*t1", f3, 1) == P("t1", f3, 1)
    assert P("3*t1", f3, 1).is_zero()
    # extension fields read coefficients as encodings
    g = P("2*t1", f4, 1)
    assert g.terms[Monomial((1,))] == 2
    with pytest.raises(ParseError):
        parse_polynomial("7*t1", f4, 1)


def test_parse_signs(f3):
    assert P("-t1 + t2", f3, 2) == P("2*t1 + t2", f3, 2)
    assert P("- t1 - t2", f3, 2) == P("2*t1 + 2*t2", f3, 2)
    assert P("t1 - - t2", f3, 2) == P("t1 + t2", f3, 2)


@st.composite
def random_poly(draw, field, arity=3, max_deg=3, max_terms=4):
    n = draw(st.integers(1, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in range(arity))
        coeff = draw(st.integers(1, field.q - 1))
        terms[Monomial(exps)] = coeff
    return Polynomial(field, arity, terms)


@given(data=st.data())
@settings(max_examples=120, deadline=None)
def test_to_str_parse_roundtrip(data):
    field = field_make(3)
    f = data.draw(random_poly(field))
    assert parse_polynomial(f.to_str(), field, 3) == f


# ---------------------------------------------------------------------------
# division


def test_division_worked_example(f5):
    ordlex = Lex(2, (1, 0))  # t1 > t2
    f = P("t1^2*t2 + t1*t2^2 + t2^2", f5, 2)
    g1 = P("t1*t2 - 1", f5, 2)
    g2 = P("t2^2 - 1", f5, 2)
    qs, r = divide(f, [g1, g2], ordlex)
    assert r == P("t1 + t2 + 1", f5, 2)
    assert qs[0] * g1 + qs[1] * g2 + r == f


def test_division_member_reduces_to_zero(f3, eight_points_ideal):
    gb = eight_points_ideal.groebner()
    f = P("t1*t2 - t3*t4", f3, 4) * P("t1 + t2 + t3", f3, 4)
    assert gb.normal_form(f).is_zero()


def test_division_standard_input_untouched(f3, eight_points_ideal):
    gb = eight_points_ideal.groebner()
    f = P("t1^2 + t2^2", f3, 4)  # no term divisible by the initial ideal
    qs, r = divide(f, list(gb.basis), gb.order)
    assert r == f
    assert all(q.is_zero() for q in qs)


def test_division_reexpansion_randomized():
    # 1000+ random cases over GF(2) and GF(3): f = sum a_i g_i + h exactly,
    # no remainder term divisible by a divisor's leading monomial, and
    # in(a_i g_i) never exceeds in(f)
    rng = random.Random(20240611)
    for q in (2, 3):
        field = field_make(q)
        order = GrevLex(3)
        for _ in range(550):
            def rand_poly(maxt):
                terms = {}
                for _ in range(rng.randint(1, maxt)):
                    m = Monomial(tuple(rng.randrange(3) for _ in range(3)))
                    c = rng.randrange(1, q)
                    terms[m] = c
                return Polynomial(field, 3, terms)

            f = rand_poly(5)
            divisors = [rand_poly(3) for _ in range(rng.randint(1, 3))]
            qs, r = divide(f, divisors, order)
            recon = r
            for a, g in zip(qs, divisors):
                recon = recon + a * g
            assert recon == f
            lms = [g.leading_monomial(order) for g in divisors]
            for m in r.terms:
                assert not any(lm.divides(m) for lm in lms)
            if f:
                fkey = order.key(f.leading_monomial(order))
                for a, g in zip(qs, divisors):
                    prod = a * g
                    if prod:
                        assert order.key(prod.leading_monomial(order)) <= fkey


def test_divide_rejects_zero_divisor_poly(f3):
    with pytest.raises(ValueError):
        divide(P("t1", f3, 2), [Polynomial.zero(f3, 2)], GrevLex(2))


# ---------------------------------------------------------------------------
# Groebner bases


def test_buchberger_single_generator(f3):
    gb = buchberger(Ideal(f3, 2, [P("t1", f3, 2)]), GrevLex(2))
    assert [g.to_str() for g in gb.basis] == ["t1"]


def test_buchberger_coprime_leading_monomials(f3):
    # leading monomials t1^2, t2^2 are coprime: the generators are already a basis
    order = GrevLex(3, (2, 1, 0))  # t1 > t2 > t3
    I = Ideal(f3, 3, [P("t1^2 - t3^2", f3, 3), P("t2^2 - t3^2", f3, 3)])
    gb = buchberger(I, order)
    assert set(gb.basis) == set(I.generators)


def test_buchberger_binomial_configuration(f3, eight_points_ideal):
    gb = eight_points_ideal.groebner()
    assert [hilbert_function(gb, d) for d in (1, 2, 3)] == [4, 7, 8]


def test_buchberger_spolynomials_reduce_to_zero(f3, eight_points_ideal):
    gb = eight_points_ideal.groebner()
    basis = list(gb.basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = spolynomial(basis[i], basis[j], gb.order)
            assert gb.normal_form(s).is_zero()


def test_buchberger_deterministic_and_input_order_free(f3, eight_points_ideal):
    gens = list(eight_points_ideal.generators)
    gb1 = buchberger(Ideal(f3, 4, gens), GrevLex(4))
    gb2 = buchberger(Ideal(f3, 4, gens[::-1]), GrevLex(4))
    gb3 = buchberger(Ideal(f3, 4, gens), GrevLex(4))
    assert gb1.basis == gb2.basis == gb3.basis


def test_groebner_monic_and_reduced(f3, eight_points_ideal):
    gb = eight_points_ideal.groebner()
    lms = gb.leading_monomials()
    for i, g in enumerate(gb.basis):
        assert g.terms[lms[i]] == 1
        for m in g.terms:
            assert not any(lms[j].divides(m) for j in range(len(lms)) if j != i)


def test_normal_form_idempotent_and_annihilates_members(f3, eight_points_ideal):
    gb = eight_points_ideal.groebner()
    rng = random.Random(5)
    for _ in range(60):
        terms = {Monomial(tuple(rng.randrange(3) for _ in range(4))):
                 rng.randrange(1, 3) for _ in range(rng.randint(1, 4))}
        f = Polynomial(f3, 4, terms)
        r = normal_form(f, gb)
        assert normal_form(r, gb) == r
        assert normal_form(f - r, gb).is_zero()


def test_normal_form_single_step(f3, eight_points_ideal):
    # order with t1 greatest: t1*t2 reduces to t3*t4 in one step
    order = GrevLex(4, (3, 2, 1, 0))
    gb = eight_points_ideal.groebner(order)
    f = P("t1*t2", f3, 4)
    assert normal_form(f, gb) == P("t3*t4", f3, 4)


def test_footprint_containment_discrepancy(f3, eight_points_ideal):
    # excluded degree-3 monomials: 10 from the generators' leading terms,
    # 12 from the full basis; equality of footprints needs a Groebner basis
    order = GrevLex(4)
    gen_lms = [g.leading_monomial(order) for g in eight_points_ideal.generators]
    from mindist import MonomialIdeal
    M_gens = MonomialIdeal.from_monomials(4, gen_lms)
    M_gb = eight_points_ideal.groebner(order).initial_ideal()
    total = len(footprint_slice(MonomialIdeal.from_monomials(4, []), 3))
    excluded_gens = total - len(footprint_slice(M_gens, 3))
    excluded_gb = total - len(footprint_slice(M_gb, 3))
    assert (excluded_gens, excluded_gb) == (10, 12)
    assert set(footprint_slice(M_gb, 3)) <= set(footprint_slice(M_gens, 3))


def test_macaulay_order_invariance(f3, eight_points_ideal, staircase_ideal):
    for ideal, arity in ((eight_points_ideal, 4), (staircase_ideal, 2)):
        for d in range(0, 9):
            hs = {hilbert_function(ideal, d, order)
                  for order in (Lex(arity), GrevLex(arity),
                                GrevLex(arity, tuple(reversed(range(arity)))))}
            assert len(hs) == 1


# ---------------------------------------------------------------------------
# ideal operations


def test_intersect_principal(f3):
    I = Ideal(f3, 2, [P("t1", f3, 2)])
    J = Ideal(f3, 2, [P("t2", f3, 2)])
    K = intersect_ideals(I, J)
    assert ideal_equal(K, Ideal(f3, 2, [P("t1*t2", f3, 2)]))


def test_intersect_idempotent(f3, eight_points_ideal):
    K = intersect_ideals(eight_points_ideal, eight_points_ideal)
    assert ideal_equal(K, eight_points_ideal)


def test_colon_principal(f3):
    I = Ideal(f3, 2, [P("t1*t2", f3, 2)])
    C = colon_ideal(I, P("t1", f3, 2))
    assert ideal_equal(C, Ideal(f3, 2, [P("t2", f3, 2)]))


def test_colon_regular_element(f3):
    I = Ideal(f3, 3, [P("t1*t2", f3, 3)])
    C = colon_ideal(I, P("t3", f3, 3))
    assert ideal_equal(C, I)
    assert not is_zero_divisor(I, P("t3", f3, 3))


def test_colon_zero_divisor_on_torus_ideal(f3):
    I = Ideal(f3, 3, [P("t1^2 - t3^2", f3, 3), P("t2^2 - t3^2", f3, 3)])
    f = P("t1 - t2", f3, 3)
    C = colon_ideal(I, f)
    assert not ideal_equal(C, I)
    assert is_zero_divisor(I, f)
    # the colon contains I strictly
    gbC = C.groebner()
    assert all(gbC.normal_form(g).is_zero() for g in I.generators)


def test_zero_divisor_trivial_cases(f3):
    prime = Ideal(f3, 3, [P("t1", f3, 3)])
    assert not is_zero_divisor(prime, P("t2 + t3", f3, 3))
    assert is_zero_divisor(prime, P("t1", f3, 3))  # f in I, (I:f) = S


def test_eliminate_substitution(f3):
    # y = t1 with y^2 = t2 forces t1^2 = t2; variables ordered (y, t1, t2)
    I = Ideal(f3, 3, [P("t1 - t2", f3, 3), P("t1^2 - t3", f3, 3)])
    E = eliminate(I, 1)
    assert ideal_equal(E, Ideal(f3, 2, [P("t1^2 - t2", f3, 2)]))


def test_eliminate_prefix_free_ideal(f3):
    I = Ideal(f3, 3, [P("t2 + t3", f3, 3)])
    E = eliminate(I, 1)
    assert ideal_equal(E, Ideal(f3, 2, [P("t1 + t2", f3, 2)]))


def test_membership_matches_evaluation(f3, eight_points, eight_points_ideal):
    gb = eight_points_ideal.groebner()
    rng = random.Random(11)
    coords = [pt.coords for pt in eight_points.points]
    for _ in range(120):
        d = rng.randint(1, 3)
        exps = []
        while len(exps) < 2:
            e = [0, 0, 0, 0]
            left = d
            for i in range(4):
                e[i] = rng.randint(0, left)
                left -= e[i]
            e[3] += left
            exps.append(tuple(e))
        f = Polynomial(f3, 4, {Monomial(e): rng.randrange(1, 3) for e in exps})
        if f.is_zero():
            continue
        vanishes = all(f.eval_i(c) == 0 for c in coords)
        assert gb.normal_form(f).is_zero() == vanishes
