"""Explicit extension fields GF(p^n) = GF(p)[X]/(f) and their elements.

Fields cache the matrix of the Frobenius x -> x^p in the power basis; it is
the workhorse for minimal polynomials and for the tensor-algebra operators.
Also provides irreducibility testing, primitivity, baby-step giant-step
discrete logarithms and deterministic l-th root extraction.
"""

from __future__ import annotations

import random

import numpy as np

from . import fppoly, linalg


class FieldMismatch(ValueError):
    pass


class ExtField:
    """GF(p^n) as GF(p)[X]/(modulus), modulus monic irreducible of degree n.

    Immutable after construction; safe for shared concurrent reads.
    """

    def __init__(self, p: int, modulus: list[int], check: bool = True):
        self.p = fppoly.check_prime(p)
        modulus = fppoly.monic([c % p for c in modulus], p)
        self.n = fppoly.degree(modulus)
        if self.n < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if check and not is_irreducible(modulus, p):
            raise ValueError(f"defining polynomial {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self.frobenius_matrix = self._build_frobenius()
        self._frob_powers = {0: linalg.identity(self.n), 1: self.frobenius_matrix}
        self._order_factors = None

    def _build_frobenius(self) -> np.ndarray:
        n, p = self.n, self.p
        xp = fppoly.powmod([0, 1], p, self.modulus, p)
        cols = [[1] + [0] * (n - 1)]
        cur = [1]
        for _ in range(1, n):
            cur = fppoly.mod(fppoly.mul(cur, xp, p), self.modulus, p)
            cols.append(cur + [0] * (n - len(cur)))
        return np.array(cols, dtype=np.int64).T % p

    def frob_power(self, k: int) -> np.ndarray:
        """Matrix of x -> x^(p^k), k reduced mod n; cached."""
        k %= self.n
        if k not in self._frob_powers:
            self._frob_powers[k] = linalg.matpow_mod(self.frobenius_matrix, k, self.p)
        return self._frob_powers[k]

    # -- element constructors ------------------------------------------------

    def element(self, coeffs) -> "FFElem":
        if isinstance(coeffs, FFElem):
            if coeffs.field is not self:
                raise FieldMismatch("element belongs to a different field")
            return coeffs
        if isinstance(coeffs, (int, np.integer)):
            coeffs = [int(coeffs)]
        c = [int(v) % self.p for v in coeffs]
        if len(c) > self.n:
            c = fppoly.mod(c, self.modulus, self.p)
        c += [0] * (self.n - len(c))
        return FFElem(self, tuple(c))

    def zero(self) -> "FFElem":
        return self.element(0)

    def one(self) -> "FFElem":
        return self.element(1)

    def gen(self) -> "FFElem":
        """The class of X."""
        return self.element([0, 1]) if self.n > 1 else self.element([(-self.modulus[0]) % self.p])

    def random_element(self, rng: random.Random) -> "FFElem":
        return self.element([rng.randrange(self.p) for _ in range(self.n)])

    def order(self) -> int:
        return self.p ** self.n

    def mul_matrix(self, x: "FFElem") -> np.ndarray:
        """n x n matrix of multiplication by x in the power basis."""
        cols = []
        cur = list(x.vec)
        base = list(x.vec)
        cols.append(base)
        for _ in range(1, self.n):
            cur = fppoly.mod(fppoly.mul(cur, [0, 1], self.p), self.modulus, self.p)
            cols.append(cur + [0] * (self.n - len(cur)))
        return np.array(cols, dtype=np.int64).T % self.p

    def __eq__(self, other):
        return isinstance(other, ExtField) and self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, tuple(self.modulus)))

    def __repr__(self):
        return f"GF({self.p}^{self.n}) mod {fppoly.to_string(self.modulus)}"


class FFElem:
    """Element of an ExtField; vec is a full-length tuple of residues."""

    __slots__ = ("field", "vec")

    def __init__(self, field: ExtField, vec: tuple):
        self.field = field
        self.vec = vec

    def poly(self) -> list[int]:
        return fppoly.trim(list(self.vec))

    def is_zero(self) -> bool:
        return not any(self.vec)

    def _check(self, other) -> "FFElem":
        if isinstance(other, (int, np.integer)):
            return self.field.element(int(other))
        if not isinstance(other, FFElem):
            raise TypeError(f"cannot combine field element with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElem(self.field, tuple((a + b) % p for a, b in zip(self.vec, other.vec)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElem(self.field, tuple((a - b) % p for a, b in zip(self.vec, other.vec)))

    def __neg__(self):
        p = self.field.p
        return FFElem(self.field, tuple((-a) % p for a in self.vec))

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        prod = fppoly.mod(fppoly.mul(self.poly(), other.poly(), f.p), f.modulus, f.p)
        return f.element(prod)

    __rmul__ = __mul__

    def inverse(self) -> "FFElem":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        f = self.field
        return f.element(fppoly.invmod(self.poly(), f.modulus, f.p))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        f = self.field
        if e < 0:
            return self.inverse() ** (-e)
        return f.element(fppoly.powmod(self.poly(), e, f.modulus, f.p))

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.field.element(int(other))
        return isinstance(other, FFElem) and self.field == other.field and self.vec == other.vec

    def __hash__(self):
        return hash(self.vec)

    def __repr__(self):
        return f"({fppoly.to_string(self.poly())})"


# -- polynomial-level predicates ----------------------------------------------


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test via Frobenius-matrix powers.

    f is irreducible iff X^(p^n) = X mod f and, for every maximal proper
    divisor n/q of n, gcd(X^(p^(n/q)) - X, f) is constant.
    """
    n = fppoly.degree(f)
    if n < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if n == 1:
        return True
    if f[0] == 0:
        return False  # divisible by X
    f = fppoly.monic(f, p)
    xp = fppoly.powmod([0, 1], p, f, p)
    cols = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = fppoly.mod(fppoly.mul(cur, xp, p), f, p)
        cols.append(cur + [0] * (n - len(cur)))
    F = np.array(cols, dtype=np.int64).T % p
    x_vec = np.zeros(n, dtype=np.int64)
    x_vec[1] = 1
    if list(linalg.matmul_mod(linalg.matpow_mod(F, n, p), x_vec, p)) != list(x_vec):
        return False
    for q in sorted({q for q in _prime_factors(n)}):
        k = n // q
        img = linalg.matmul_mod(linalg.matpow_mod(F, k, p), x_vec, p)
        g = fppoly.trim([int((a - b) % p) for a, b in zip(img, x_vec)])
        if not g:
            return False
        if fppoly.degree(fppoly.gcd(g, f, p)) > 0:
            return False
    return True


def random_irreducible(p: int, n: int, seed: int = 0) -> list[int]:
    """Deterministic (given seed) monic irreducible of degree n over GF(p)."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    rng = random.Random(f"{p}:{n}:{seed}")
    if n == 1:
        return [rng.randrange(p), 1]
    while True:
        f = [rng.randrange(p) for _ in range(n)] + [1]
        if f[0] == 0:
            continue
        if is_irreducible(f, p):
            return f


# -- integer factorization helpers ---------------------------------------------


def _prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def factorize(n: int) -> dict[int, int]:
    """Factorization by trial division with a Pollard-rho fallback."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for q in (2, 3, 5):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < 100000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    if n > 1:
        _factor_rho(n, out)
    return out


def _factor_rho(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if fppoly.is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_rho(d, out)
    _factor_rho(n // d, out)


def _pollard_rho(n: int) -> int:
    import math

    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"pollard rho failed on {n}")


# -- field-level operations -----------------------------------------------------


def frobenius(x: FFElem, k: int = 1) -> FFElem:
    """x^(p^k) via the cached Frobenius matrix; k taken mod n."""
    f = x.field
    M = f.frob_power(k % f.n)
    vec = linalg.matmul_mod(M, np.array(x.vec, dtype=np.int64), f.p)
    return FFElem(f, tuple(int(v) for v in vec))


def minimal_polynomial(x: FFElem) -> list[int]:
    """Monic minimal polynomial of x over GF(p): first linear dependency of powers."""
    f = x.field
    p = f.p
    powers = [f.one().vec]
    cur = f.one()
    for k in range(1, f.n + 1):
        cur = cur * x
        M = np.array(powers, dtype=np.int64).T  # n x k, columns x^0..x^(k-1)
        try:
            c = linalg.solve(M, np.array(cur.vec, dtype=np.int64), p)
        except linalg.InconsistentSystem:
            powers.append(cur.vec)
            continue
        # x^k = sum c_i x^i  =>  minpoly = X^k - sum c_i X^i
        coeffs = [(-int(v)) % p for v in c] + [1]
        return fppoly.trim(coeffs)
    raise AssertionError("unreachable: powers of x must become dependent by degree n")


def multiplicative_order(x: FFElem) -> int:
    """Exact order in the multiplicative group, via factoring p^n - 1."""
    if x.is_zero():
        raise ZeroDivisionError("zero has no multiplicative order")
    f = x.field
    if f._order_factors is None:
        f._order_factors = factorize(f.order() - 1)
    order = f.order() - 1
    for q in f._order_factors:
        while order % q == 0 and (x ** (order // q)) == f.one():
            order //= q
    return order


def is_primitive(x: FFElem) -> bool:
    return not x.is_zero() and multiplicative_order(x) == x.field.order() - 1


def discrete_log(x: FFElem, base: FFElem) -> int:
    """k with base^k = x, 0 <= k < p^n - 1, baby-step giant-step.

    base must be primitive (order p^n - 1).
    """
    if x.is_zero():
        raise ZeroDivisionError("discrete log of zero")
    f = x.field
    N = f.order() - 1
    if N <= 1:
        return 0
    if not is_primitive(base):
        raise ValueError("discrete_log base must be primitive")
    import math

    m = math.isqrt(N - 1) + 1
    table = {}
    cur = f.one()
    for j in range(m):
        table.setdefault(cur.vec, j)
        cur = cur * base
    giant = base.inverse() ** m
    gamma = x
    for i in range(m + 1):
        j = table.get(gamma.vec)
        if j is not None:
            return (i * m + j) % N
        gamma = gamma * giant
    raise ValueError("discrete log not found; base is not a generator")


def nth_root(c: FFElem, ell: int, base: FFElem | None = None) -> FFElem:
    """Deterministic l-th root: among all x with x^ell = c, the one of smallest
    discrete log to the primitive base (class of X by default).

    Raises ValueError when no root exists, which signals a broken Kummer
    constant upstream in this library's main use.
    """
    if ell < 1:
        raise ValueError("root order must be >= 1")
    if c.is_zero():
        raise ZeroDivisionError("l-th root of zero")
    f = c.field
    if base is None:
        base = f.gen()
    N = f.order() - 1
    if N <= 1:
        return c
    import math

    k = discrete_log(c, base)
    g = math.gcd(ell, N)
    if k % g:
        raise ValueError(f"element has no {ell}-th root (solvability condition fails)")
    j = (k // g) * pow(ell // g, -1, N // g) % (N // g)
    return base ** j
