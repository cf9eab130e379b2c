"""Exact scalar layer: number fields, parameter polynomials, ranks."""
import random
from fractions import Fraction

import pytest

from brauerlab.exact import (
    NFElem,
    ParamPoly,
    VariableMismatch,
    cyclotomic_field,
    cyclotomic_polynomial,
    nf_arith,
    poly_arith,
    poly_divmod_univariate,
    poly_eval,
    sqrt_field,
)
from brauerlab.exact import linalg

TAU = ("tau",)


def t():
    return ParamPoly.variable("tau", TAU)


def test_nf_defining_relations():
    F = sqrt_field(5)
    x = F.gen()
    assert nf_arith(x, x, "mul") == 5
    assert nf_arith(x, None, "inv") == x / 5
    C4 = cyclotomic_field(4)
    i = C4.gen()
    assert nf_arith(i, i, "mul") == -1


def test_nf_errors():
    F = sqrt_field(5)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()
    with pytest.raises(ValueError):
        nf_arith(F.gen(), cyclotomic_field(4).gen(), "add")


def test_cyclotomic_polys():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)


@pytest.mark.parametrize("field", [sqrt_field(5), cyclotomic_field(5), cyclotomic_field(8)])
def test_field_axioms_random(field):
    rng = random.Random(5)
    d = field.degree

    def rand_elem():
        return field.element([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(d)])

    for _ in range(1000):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == 1


def test_poly_arith_examples():
    p = (t() - 1) * (t() + 4)
    assert p == t() ** 2 + 3 * t() - 4
    assert poly_arith(t(), ParamPoly.constant(0, TAU), "mul") == 0
    q = (t() - 1) ** 4 * (t() + 4)
    for v in (0, 1, 2, 3, -4):
        assert q.eval({"tau": v}) == (Fraction(v) - 1) ** 4 * (Fraction(v) + 4)


def test_poly_eval_examples():
    q = (t() - 1) ** 4 * (t() + 4)
    assert poly_eval(q, {"tau": 1}) == 0
    assert poly_eval(q, {"tau": -4}) == 0
    assert poly_eval(t() ** 2, {"tau": 3}) == 9
    with pytest.raises(KeyError):
        poly_eval(t(), {})


def test_poly_variable_mismatch():
    other = ParamPoly.variable("mu", ("mu",))
    with pytest.raises(VariableMismatch):
        poly_arith(t(), other, "add")


def test_poly_eval_is_ring_morphism():
    rng = random.Random(7)

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(1, 5)):
            terms[(rng.randint(0, 4),)] = Fraction(rng.randint(-5, 5))
        return ParamPoly(TAU, terms)

    for _ in range(300):
        p, q = rand_poly(), rand_poly()
        x = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        assert (p * q).eval({"tau": x}) == p.eval({"tau": x}) * q.eval({"tau": x})
        assert (p + q).eval({"tau": x}) == p.eval({"tau": x}) + q.eval({"tau": x})


def test_poly_divmod():
    q = (t() - 1) ** 4 * (t() + 4)
    quo, rem = poly_divmod_univariate(q, (t() - 1) ** 4, "tau")
    assert quo == t() + 4 and not rem


def test_matrix_rank_basics():
    eye5 = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    assert linalg.matrix_rank(eye5) == 5
    ones = [[Fraction(1)] * 4 for _ in range(4)]
    assert linalg.matrix_rank(ones) == 1
    assert linalg.matrix_rank(ones, ("mod_p", 10007)) == 1


def test_mod_p_denominator_error():
    M = [[Fraction(1, 10007)]]
    with pytest.raises(linalg.DenominatorDivisibleError):
        linalg.rank_mod_p(M, 10007)


def test_mod_p_agrees_with_exact_two_primes():
    rng = random.Random(11)
    primes = linalg.primes_above(10 ** 6, 2)
    for _ in range(25):
        M = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)] for _ in range(8)]
        exact = linalg.rank(M)
        ranks = [linalg.rank_mod_p(M, p) for p in primes]
        assert ranks[0] == ranks[1] == exact


def test_rank_two_primes_protocol():
    calls = []

    def rank_at(p):
        calls.append(p)
        return 3

    assert linalg.rank_two_primes(rank_at, linalg.primes_above(10 ** 6, 3)) == 3
    assert len(calls) == 2


def test_nullspace_and_inverse():
    M = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    ns = linalg.nullspace(M)
    assert len(ns) == 1 and ns[0][0] + 2 * ns[0][1] == 0
    inv = linalg.invert([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]
