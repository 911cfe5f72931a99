"""Polynomial arithmetic over GF(p): ring axioms against seeded random data
and an independent schoolbook multiplication oracle."""

import random

import pytest

from fflattice import fppoly

PRIMES = [2, 3, 5, 7]


def rand_poly(rng, p, max_deg):
    return fppoly.trim([rng.randrange(p) for _ in range(rng.randrange(max_deg + 2))])


def schoolbook_mul(f, g, p):
    # independent oracle: plain double loop, no numpy
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return fppoly.trim(out)


@pytest.mark.parametrize("p", PRIMES)
def test_ring_axioms(p):
    rng = random.Random(1000 + p)
    for _ in range(300):
        f = rand_poly(rng, p, 12)
        g = rand_poly(rng, p, 12)
        h = rand_poly(rng, p, 12)
        assert fppoly.add(f, g, p) == fppoly.add(g, f, p)
        assert fppoly.mul(f, g, p) == fppoly.mul(g, f, p)
        lhs = fppoly.mul(f, fppoly.add(g, h, p), p)
        rhs = fppoly.add(fppoly.mul(f, g, p), fppoly.mul(f, h, p), p)
        assert lhs == rhs
        assert fppoly.mul(fppoly.mul(f, g, p), h, p) == fppoly.mul(f, fppoly.mul(g, h, p), p)
        assert fppoly.add(f, fppoly.neg(f, p), p) == []
        assert fppoly.sub(f, g, p) == fppoly.add(f, fppoly.neg(g, p), p)


@pytest.mark.parametrize("p", PRIMES)
def test_mul_matches_schoolbook(p):
    rng = random.Random(2000 + p)
    for _ in range(200):
        f = rand_poly(rng, p, 20)
        g = rand_poly(rng, p, 20)
        assert fppoly.mul(f, g, p) == schoolbook_mul(f, g, p)


@pytest.mark.parametrize("p", PRIMES)
def test_divrem_round_trip(p):
    rng = random.Random(3000 + p)
    for _ in range(200):
        f = rand_poly(rng, p, 15)
        g = rand_poly(rng, p, 8)
        if not g:
            continue
        q, r = fppoly.divrem(f, g, p)
        assert fppoly.degree(r) < fppoly.degree(g) or r == []
        assert fppoly.add(fppoly.mul(q, g, p), r, p) == f


def test_xgcd_bezout():
    rng = random.Random(4000)
    for p in PRIMES:
        for _ in range(100):
            f = rand_poly(rng, p, 10)
            g = rand_poly(rng, p, 10)
            if not f and not g:
                continue
            d, u, v = fppoly.xgcd(f, g, p)
            got = fppoly.add(fppoly.mul(u, f, p), fppoly.mul(v, g, p), p)
            assert got == d
            if f:
                assert fppoly.mod(f, d, p) == []
            if g:
                assert fppoly.mod(g, d, p) == []


def test_invmod_and_powmod():
    rng = random.Random(5000)
    m = [1, 1, 0, 1]  # x^3 + x + 1, irreducible over GF(2)
    p = 2
    for _ in range(50):
        f = rand_poly(rng, p, 2)
        if not f:
            continue
        inv = fppoly.invmod(f, m, p)
        assert fppoly.mod(fppoly.mul(f, inv, p), m, p) == [1]
    # powmod vs repeated multiplication
    x = [0, 1]
    acc = [1]
    for k in range(10):
        assert fppoly.powmod(x, k, m, p) == acc
        acc = fppoly.mod(fppoly.mul(acc, x, p), m, p)


def test_series_division_and_reverse():
    p = 5
    num = [1, 2]
    den = [1, 3, 4]
    n = 8
    w = fppoly.series_div(num, den, n, p)
    prod = fppoly.mul(w, den, p)[:n]
    prod += [0] * (n - len(prod))
    want = (num + [0] * n)[:n]
    assert [c % p for c in prod] == want
    assert fppoly.reverse([1, 0, 3], 4) == fppoly.trim([0, 0, 3, 0, 1])


def test_exact_div():
    assert fppoly.exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        fppoly.exact_div(13, 4)


def test_to_string_golden():
    assert fppoly.to_string([1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]) == "x^15+x+1"
    assert fppoly.to_string([1, 1]) == "x+1"
    assert fppoly.to_string([2, 0, 1]) == "x^2+2"
    assert fppoly.to_string([]) == "0"


def test_evaluate_and_derivative():
    p = 7
    f = [3, 0, 2, 1]  # x^3 + 2x^2 + 3
    assert fppoly.evaluate(f, 2, p) == (8 + 8 + 3) % 7
    assert fppoly.derivative(f, p) == [0, 4, 3]
