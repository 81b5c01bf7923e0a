"""Tests for coefficient fields, monomial orders, arithmetic, and the parser."""

import random
from fractions import Fraction

import pytest

from fullness_lab.polyring import (
    EQ,
    GT,
    LT,
    Monomial,
    MonomialOrder,
    ParseError,
    PolyRing,
    PolyringError,
    PrimeField,
    QQ,
    monomial_compare,
    parse_polynomial,
    poly_multiply,
)

R4 = PolyRing(["x", "y", "z", "t"], PrimeField(32003))
R2 = PolyRing(["x", "y"], PrimeField(32003))
RQ = PolyRing(["x", "y"], QQ)


def test_prime_field_validation():
    with pytest.raises(PolyringError):
        PrimeField(32004)
    f = PrimeField(7)
    assert f.inv(3) == 5
    assert f.from_fraction(1, 2) == 4


def test_parse_relation_two_terms():
    f = parse_polynomial("x*y - t^4", R4)
    assert len(f.terms) == 2
    # degrevlex is degree-first, so the quartic term leads; under lex the
    # quadratic x*y leads instead.
    assert f.lead_monomial == Monomial((0, 0, 0, 4))
    flex = parse_polynomial("x*y - t^4", R4.with_order(MonomialOrder.lex()))
    assert flex.lead_monomial == Monomial((1, 1, 0, 0))


def test_parse_zero():
    assert parse_polynomial("0", R4).is_zero()
    assert parse_polynomial("0", R4).terms == ()


def test_parse_relation_lead_degrevlex():
    R3 = PolyRing(["x", "y", "z"], PrimeField(32003))
    f = parse_polynomial("y^3 - x*z", R3)
    assert f.lead_monomial == Monomial((0, 3, 0))


@pytest.mark.parametrize(
    "src, pos_fragment",
    [
        ("x +", "position 3"),
        ("x*", "position 2"),
        ("(x + y", "position 6"),
        ("x ^ y", "position 4"),
        ("2 @ x", "position 2"),
    ],
)
def test_parse_syntax_errors_carry_position(src, pos_fragment):
    with pytest.raises(ParseError) as e:
        parse_polynomial(src, R4)
    assert pos_fragment in str(e.value)


def test_parse_unknown_variable():
    with pytest.raises(ParseError) as e:
        parse_polynomial("x*q + 1", R4)
    assert "q" in str(e.value)


def test_parse_characteristic_mismatch():
    # A rational literal whose denominator vanishes mod p cannot be coerced.
    with pytest.raises(ParseError) as e:
        parse_polynomial("1/32003*x", R4)
    assert "characteristic" in str(e.value)
    assert parse_polynomial("1/2*x", RQ).lead_coeff == Fraction(1, 2)


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x y", R4)


@pytest.mark.parametrize(
    "a, b, order, expected",
    [
        ((2, 0), (1, 1), MonomialOrder.degrevlex(), GT),
        ((1, 1), (1, 1), MonomialOrder.degrevlex(), EQ),
        ((0, 5), (1, 0), MonomialOrder.lex(), LT),
        ((3, 0), (0, 2), MonomialOrder.degrevlex(), GT),
    ],
)
def test_monomial_compare(a, b, order, expected):
    assert monomial_compare(Monomial(a), Monomial(b), order) == expected


def test_monomial_compare_length_mismatch():
    with pytest.raises(PolyringError):
        monomial_compare(Monomial((1, 0)), Monomial((1, 0, 0)), MonomialOrder.degrevlex())


def test_block_order_eliminates():
    # Any monomial containing the first-block variable beats any without.
    order = MonomialOrder.elimination(1)
    assert monomial_compare(Monomial((1, 0, 0)), Monomial((0, 9, 9)), order) == GT


def test_multiply_difference_of_squares():
    f = parse_polynomial("x + y", RQ)
    g = parse_polynomial("x - y", RQ)
    assert str(poly_multiply(f, g)) == "x^2 - y^2"


def test_multiply_by_zero():
    f = parse_polynomial("x^3 + 2*y", R2)
    assert poly_multiply(f, R2.zero()).is_zero()


def test_square_in_characteristic_two():
    # Schoolbook expansion with reduction mod 2 drops the cross term.
    F2 = PolyRing(["x", "y"], PrimeField(2))
    f = parse_polynomial("x + y", F2)
    expanded = {}
    for m1, c1 in f.terms:
        for m2, c2 in f.terms:
            m = tuple(a + b for a, b in zip(m1, m2))
            expanded[m] = (expanded.get(m, 0) + c1 * c2) % 2
    expected = F2.from_dict(expanded)
    assert poly_multiply(f, f) == expected
    assert str(expected) == "x^2 + y^2"


def _random_poly(rng, ring, max_deg=6, max_terms=5):
    d = {}
    p = ring.characteristic
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(ring.nvars)] += 1
        d[tuple(exps)] = rng.randrange(p) if p else Fraction(rng.randint(-9, 9))
    return ring.from_dict(d)


def test_ring_axioms_randomized():
    # Associativity, commutativity, distributivity on >= 1000 random triples.
    rng = random.Random(991)
    rings = [R2, PolyRing(["x", "y", "z"], PrimeField(32003)), RQ]
    for case in range(1000):
        ring = rings[case % len(rings)]
        f, g, h = (_random_poly(rng, ring) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f + g == g + f


def test_degree_additivity_over_field():
    rng = random.Random(17)
    for _ in range(200):
        f, g = _random_poly(rng, R2), _random_poly(rng, R2)
        if f.is_zero() or g.is_zero():
            continue
        assert (f * g).total_degree == f.total_degree + g.total_degree


def test_order_compatible_with_multiplication():
    rng = random.Random(23)
    orders = [MonomialOrder.degrevlex(), MonomialOrder.lex(), MonomialOrder.elimination(1)]
    for _ in range(1000):
        order = rng.choice(orders)
        a = Monomial(tuple(rng.randrange(5) for _ in range(3)))
        b = Monomial(tuple(rng.randrange(5) for _ in range(3)))
        c = Monomial(tuple(rng.randrange(5) for _ in range(3)))
        cmp_ab = monomial_compare(a, b, order)
        assert monomial_compare(a.mul(c), b.mul(c), order) == cmp_ab
        assert monomial_compare(Monomial((0, 0, 0)), a, order) in (LT, EQ)


def test_normalization_idempotent():
    rng = random.Random(5)
    for _ in range(300):
        f = _random_poly(rng, R4)
        assert R4.from_dict(f.as_dict()) == f
        assert all(c != 0 for _, c in f.terms)
        keys = [R4.order.key(m) for m, _ in f.terms]
        assert keys == sorted(keys, reverse=True)


def test_print_parse_round_trip():
    rng = random.Random(31)
    for ring in (R4, RQ):
        for _ in range(250):
            f = _random_poly(rng, ring)
            text = str(f)
            assert str(parse_polynomial(text, ring)) == text


def test_monic_and_power():
    f = parse_polynomial("2*x^2 + 4*y", RQ)
    assert f.monic() == parse_polynomial("x^2 + 2*y", RQ)
    g = parse_polynomial("x + 1", RQ)
    assert g ** 3 == parse_polynomial("x^3 + 3*x^2 + 3*x + 1", RQ)
    assert g ** 0 == RQ.one()


def test_ring_validation():
    with pytest.raises(PolyringError):
        PolyRing([])
    with pytest.raises(PolyringError):
        PolyRing(["x", "x"])
    with pytest.raises(PolyringError):
        PolyRing(["3x"])
