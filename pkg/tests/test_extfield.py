"""Extension fields GF(p^n): field axioms, Frobenius vs direct powering,
minimal polynomials, orders and discrete logarithms."""

import random

import pytest

from fflattice import fppoly, extfield
from fflattice.extfield import ExtField


def test_is_irreducible_examples():
    assert extfield.is_irreducible([1, 1, 1], 2)        # x^2+x+1
    assert not extfield.is_irreducible([1, 0, 1], 2)    # x^2+1 = (x+1)^2
    assert extfield.is_irreducible([1, 0, 1], 3)        # x^2+1 over GF(3)
    assert extfield.is_irreducible([1, 1, 0, 1], 2)     # x^3+x+1
    assert not extfield.is_irreducible([0, 1, 1], 5)    # divisible by x


def test_field_axioms_random():
    F = ExtField(3, [1, 0, 1])  # GF(9)
    rng = random.Random(9)
    for _ in range(200):
        a = F.random_element(rng)
        b = F.random_element(rng)
        c = F.random_element(rng)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        if b != F.zero():
            assert (a / b) * b == a
        assert a - a == F.zero()


def test_frobenius_matches_powering():
    rng = random.Random(11)
    for p, mod in [(2, [1, 1, 0, 0, 1]), (5, [1, 1, 0, 1]), (7, [3, 1])]:
        F = ExtField(p, mod)
        for _ in range(40):
            x = F.random_element(rng)
            for k in range(F.n + 1):
                assert extfield.frobenius(x, k) == x ** (p ** k)


def test_minimal_polynomial():
    F = ExtField(2, [1, 1, 0, 0, 1])  # GF(16), x^4+x+1
    g = F.gen()
    assert extfield.minimal_polynomial(g) == [1, 1, 0, 0, 1]
    assert extfield.minimal_polynomial(F.one()) == [1, 1]  # x+1
    # element of the GF(4) subfield has degree-2 minimal polynomial
    y = g ** 5
    h = extfield.minimal_polynomial(y)
    assert fppoly.degree(h) == 2
    acc = F.zero()
    for c in reversed(h):
        acc = acc * y + F.one() * c
    assert acc == F.zero()


def test_multiplicative_order():
    F = ExtField(2, [1, 1, 0, 1])  # GF(8)
    g = F.gen()
    assert extfield.multiplicative_order(g) == 7
    assert extfield.is_primitive(g)
    assert extfield.multiplicative_order(F.one()) == 1


def test_discrete_log_round_trip():
    from fflattice.conway import parse_table
    from fflattice.conway_data import CONWAY_TABLE_TEXT
    # the degree-3 Conway polynomial over GF(3) is primitive by definition
    F = ExtField(3, parse_table(CONWAY_TABLE_TEXT, p=3, validate=False).get(3))
    g = F.gen()
    assert extfield.is_primitive(g)
    rng = random.Random(26)
    for _ in range(30):
        k = rng.randrange(26)
        assert extfield.discrete_log(g ** k, g) == k


def test_nth_root_round_trip():
    F = ExtField(2, [1, 1, 0, 0, 1])  # GF(16)
    g = F.gen()
    for ell in (1, 3, 5):
        for k in range(0, 15, ell):
            c = g ** k
            r = extfield.nth_root(c, ell)
            assert r ** ell == c


def test_nth_root_deterministic():
    F = ExtField(2, [1, 1, 0, 0, 1])
    g = F.gen()
    c = g ** 6
    assert extfield.nth_root(c, 3) == extfield.nth_root(c, 3)


def test_random_irreducible_deterministic():
    f1 = extfield.random_irreducible(2, 10, seed=4)
    f2 = extfield.random_irreducible(2, 10, seed=4)
    f3 = extfield.random_irreducible(2, 10, seed=5)
    assert f1 == f2
    assert extfield.is_irreducible(f1, 2)
    assert extfield.is_irreducible(f3, 2)


def test_factorize():
    assert extfield.factorize(1) == {}
    assert extfield.factorize(12) == {2: 2, 3: 1}
    assert extfield.factorize(2 ** 9 - 1) == {7: 1, 73: 1}
    assert extfield.factorize(3 ** 6 - 1) == {2: 3, 7: 1, 13: 1}


def test_degree_one_field():
    F = ExtField(7, [3, 1])  # GF(7) presented as GF(7)[x]/(x+3)
    g = F.gen()
    assert g == F.element([4])  # the root of x+3 is -3 = 4
    assert extfield.minimal_polynomial(g) == [3, 1]
