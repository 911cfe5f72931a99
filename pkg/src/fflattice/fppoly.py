"""Dense univariate polynomial arithmetic over a prime field GF(p).

Polynomials are plain Python lists of integers in [0, p), ascending degree,
with no trailing zeros; [] is the zero polynomial and its degree is -1.
The modulus p travels as an explicit argument.  All arithmetic is exact.
"""

from __future__ import annotations

import numpy as np

# p must fit a machine word with room for 64-bit accumulation
MAX_PRIME = 1 << 31


class ModulusMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Validate a field characteristic; returns p."""
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"characteristic must be an integer >= 2, got {p!r}")
    if p >= MAX_PRIME:
        raise ValueError(f"characteristic {p} exceeds the machine-word bound {MAX_PRIME}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(a: list[int]) -> int:
    return len(a) - 1


def constant(c: int, p: int) -> list[int]:
    c %= p
    return [c] if c else []


def monomial(n: int, p: int, c: int = 1) -> list[int]:
    c %= p
    if c == 0:
        return []
    out = [0] * n + [c]
    return out


def add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return trim(out)


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return trim(out)


def neg(a: list[int], p: int) -> list[int]:
    return [(-x) % p for x in a]


def scale(a: list[int], c: int, p: int) -> list[int]:
    c %= p
    if c == 0:
        return []
    return trim([x * c % p for x in a])


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    """Product of two polynomials; schoolbook convolution."""
    if not a or not b:
        return []
    n = min(len(a), len(b))
    if n * (p - 1) * (p - 1) < (1 << 62):
        # int64 accumulation cannot overflow
        out = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return list((out % p).astype(int))
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([v % p for v in out])


def divrem(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder with deg r < deg b.  b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    db = degree(b)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if r[i]:
            c = r[i] * inv_lead % p
            q[i - db] = c
            for j, y in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * y) % p
    return trim(q), trim(r)


def mod(a: list[int], b: list[int], p: int) -> list[int]:
    return divrem(a, b, p)[1]


def monic(a: list[int], p: int) -> list[int]:
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic greatest common divisor."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def xgcd(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Extended gcd: returns (g, u, v) monic with u*a + v*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divrem(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        raise ValueError("xgcd(0, 0) is undefined")
    c = pow(r0[-1], -1, p)
    return scale(r0, c, p), scale(s0, c, p), scale(t0, c, p)


def invmod(a: list[int], m: list[int], p: int) -> list[int]:
    """Inverse of a modulo m; a must be coprime to m."""
    g, u, _ = xgcd(a, m, p)
    if degree(g) != 0:
        raise ZeroDivisionError("element is not invertible modulo the given polynomial")
    return mod(u, m, p)


def powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    """a^e mod m by square-and-multiply; e is an arbitrary-precision integer >= 0."""
    if e < 0:
        raise ValueError("negative exponent")
    if degree(m) < 1:
        raise ValueError("modulus must have degree >= 1")
    result = [1 % p]
    base = mod(a, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = mod(mul(base, base, p), m, p)
    return result


def evaluate(a: list[int], x: int, p: int) -> int:
    """Horner evaluation at a scalar."""
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def derivative(a: list[int], p: int) -> list[int]:
    return trim([i * c % p for i, c in enumerate(a)][1:])


def reverse(a: list[int], n: int) -> list[int]:
    """Coefficient reversal at degree n: X^n * a(1/X)."""
    out = [0] * (n + 1)
    for i, c in enumerate(a):
        out[n - i] = c
    return trim(out)


def series_div(num: list[int], den: list[int], n: int, p: int) -> list[int]:
    """First n coefficients of the power series num/den; den[0] must be a unit."""
    if not den or den[0] == 0:
        raise ZeroDivisionError("power-series division by a non-unit")
    inv0 = pow(den[0], -1, p)
    out = [0] * n
    for i in range(n):
        acc = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out[i] = acc * inv0 % p
    return out


def exact_div(a: int, b: int) -> int:
    """Integer division that must be exact; a remainder signals an upstream bug."""
    if b == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def to_string(a: list[int], var: str = "x") -> str:
    """Human-readable sparse form, descending monomials, e.g. 'x^15+x+1'."""
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            coef = "" if c == 1 else str(c)
            if i == 1:
                parts.append(f"{coef}{var}")
            else:
                parts.append(f"{coef}{var}^{i}")
    return "+".join(parts)
