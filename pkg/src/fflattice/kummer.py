"""Kummer algebras A_l = GF(p^l) (x) GF(p)(zeta_l) and their Hilbert-90 theory.

Elements are l-by-a coefficient matrices over GF(p): entry (i, j) is the
coefficient of X^i (x) zeta^j, where X generates the left field GF(p^l) and
zeta the scalar field.  The two one-sided Frobenius operators, the Hilbert-90
solver, Kummer constants, scalar norms and first-coefficient projections all
live here.
"""

from __future__ import annotations

import numpy as np

from . import fppoly, linalg, extfield
from .cyclotomic import CycloLattice
from .extfield import ExtField, FFElem


class AlgebraMismatch(ValueError):
    pass


class NotScalar(ValueError):
    """The element is not of the form 1 (x) s when it should be."""


class KummerAlg:
    """The tensor algebra GF(p^l) (x) GF(p)(zeta_l).

    The left factor is GF(p)[X]/(f) for a caller-supplied or generated
    irreducible f of degree l; the scalar factor is GF(p)[Y]/(h) where h is
    the minimal polynomial of zeta_l from the cyclotomic lattice.  Immutable
    after construction.
    """

    def __init__(self, lattice: CycloLattice, ell: int, defining_poly: list[int] | None = None,
                 seed: int = 0):
        p = lattice.p
        if ell < 1:
            raise ValueError("degree must be >= 1")
        if ell % p == 0:
            raise ValueError(f"degree {ell} is divisible by the characteristic {p}")
        self.p = p
        self.ell = ell
        self.lattice = lattice
        self.entry = lattice.entry(ell)
        self.a = self.entry.level
        self.scalar = self.entry.scalar_field           # GF(p)[Y]/(h), Y = zeta
        if defining_poly is None:
            defining_poly = extfield.random_irreducible(p, ell, seed)
        self.left = ExtField(p, defining_poly)
        if self.left.n != ell:
            raise ValueError("defining polynomial degree does not match l")
        # reduction vector for X^l in the left field
        self._f_low = np.array([(-c) % p for c in self.left.modulus[:ell]], dtype=np.int64)
        self._h_low = np.array([(-c) % p for c in self.entry.h[:self.a]], dtype=np.int64)
        self._zeta_mul = self.scalar.mul_matrix(self.scalar.gen())

    # -- scalar-side conversions -------------------------------------------------

    def scalar_to_K(self, svec) -> FFElem:
        """Interpret a scalar coordinate vector (in powers of zeta) in K_l."""
        return self.lattice.from_power_basis(self.ell, svec)

    def scalar_from_K(self, x: FFElem) -> np.ndarray:
        """Coordinates of x in K_l on the zeta power basis."""
        return self.lattice.to_power_basis(self.ell, x)

    # -- element constructors ------------------------------------------------------

    def element(self, coeffs) -> "KummerElem":
        C = np.asarray(coeffs, dtype=np.int64) % self.p
        if C.shape != (self.ell, self.a):
            raise ValueError(f"coefficient matrix must be {self.ell} x {self.a}")
        return KummerElem(self, C)

    def zero(self) -> "KummerElem":
        return KummerElem(self, np.zeros((self.ell, self.a), dtype=np.int64))

    def one(self) -> "KummerElem":
        C = np.zeros((self.ell, self.a), dtype=np.int64)
        C[0, 0] = 1
        return KummerElem(self, C)

    def from_left(self, x: FFElem) -> "KummerElem":
        """x (x) 1."""
        if x.field != self.left:
            raise AlgebraMismatch("element does not live in the left field")
        C = np.zeros((self.ell, self.a), dtype=np.int64)
        C[:, 0] = x.vec
        return KummerElem(self, C)

    def from_scalar(self, s) -> "KummerElem":
        """1 (x) s, where s is a scalar-field element or coordinate vector."""
        if isinstance(s, FFElem):
            if s.field == self.scalar:
                svec = np.array(s.vec, dtype=np.int64)
            elif s.field == self.entry.K:
                svec = self.scalar_from_K(s)
            else:
                raise AlgebraMismatch("scalar lives in neither the scalar field nor K_l")
        else:
            svec = np.asarray(s, dtype=np.int64) % self.p
        C = np.zeros((self.ell, self.a), dtype=np.int64)
        C[0, :] = svec
        return KummerElem(self, C)

    def __repr__(self):
        return f"KummerAlg(p={self.p}, l={self.ell}, level={self.a})"


class KummerElem:
    """Element of a KummerAlg; immutable by convention (coeffs never mutated)."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: KummerAlg, coeffs: np.ndarray):
        self.algebra = algebra
        self.coeffs = coeffs

    def _check(self, other: "KummerElem") -> None:
        if not isinstance(other, KummerElem) or other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different Kummer algebras")

    def __add__(self, other):
        self._check(other)
        return KummerElem(self.algebra, (self.coeffs + other.coeffs) % self.algebra.p)

    def __sub__(self, other):
        self._check(other)
        return KummerElem(self.algebra, (self.coeffs - other.coeffs) % self.algebra.p)

    def __neg__(self):
        return KummerElem(self.algebra, (-self.coeffs) % self.algebra.p)

    def __mul__(self, other):
        self._check(other)
        return kalg_mul(self, other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers not supported on algebra elements")
        result = self.algebra.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        return (isinstance(other, KummerElem) and other.algebra is self.algebra
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def scalar_mul(self, s) -> "KummerElem":
        """Multiplication by 1 (x) s."""
        alg = self.algebra
        if isinstance(s, FFElem) or not np.isscalar(s):
            svec = alg.from_scalar(s).coeffs[0]
        else:
            svec = np.zeros(alg.a, dtype=np.int64)
            svec[0] = int(s) % alg.p
        e = alg.scalar.element(list(svec))
        M = alg.scalar.mul_matrix(e)
        return KummerElem(alg, linalg.matmul_mod(self.coeffs, M.T, alg.p))

    def left_mul(self, x: FFElem) -> "KummerElem":
        """Multiplication by x (x) 1."""
        alg = self.algebra
        M = alg.left.mul_matrix(x)
        return KummerElem(alg, linalg.matmul_mod(M, self.coeffs, alg.p))

    def column(self, j: int) -> FFElem:
        """The left-field coefficient of zeta^j."""
        return self.algebra.left.element(list(self.coeffs[:, j]))

    def scalar_value(self) -> FFElem:
        """For elements 1 (x) s, the scalar s as an element of K_l."""
        if self.coeffs[1:].any():
            raise NotScalar("element has nonzero coefficients of positive X-degree")
        return self.algebra.scalar_to_K(self.coeffs[0])

    def __repr__(self):
        return f"KummerElem({self.coeffs.tolist()})"


def kalg_mul(u: KummerElem, v: KummerElem) -> KummerElem:
    """Bivariate product, reduced mod f in X and mod h in zeta."""
    alg = u.algebra
    p, ell, a = alg.p, alg.ell, alg.a
    A, B = u.coeffs, v.coeffs
    R = np.zeros((2 * ell - 1, 2 * a - 1), dtype=np.int64)
    for j in range(a):
        col_a = A[:, j]
        if not col_a.any():
            continue
        for k in range(a):
            col_b = B[:, k]
            if not col_b.any():
                continue
            R[:, j + k] = (R[:, j + k] + np.convolve(col_a, col_b)) % p
    # reduce in X: X^t = X^(t-l) * (X^l mod f)
    for t in range(2 * ell - 2, ell - 1, -1):
        row = R[t]
        if row.any():
            R[t - ell:t] = (R[t - ell:t] + np.outer(alg._f_low, row)) % p
            R[t] = 0
    # reduce in zeta: zeta^t = zeta^(t-a) * (zeta^a mod h)
    for t in range(2 * a - 2, a - 1, -1):
        col = R[:ell, t]
        if col.any():
            R[:ell, t - a:t] = (R[:ell, t - a:t] + np.outer(col, alg._h_low)) % p
            R[:ell, t] = 0
    return KummerElem(alg, R[:ell, :a].copy())


def frob_left(u: KummerElem, k: int = 1) -> KummerElem:
    """(sigma^k (x) 1): Frobenius on the left field, columnwise."""
    alg = u.algebra
    M = alg.left.frob_power(k % alg.ell)
    return KummerElem(alg, linalg.matmul_mod(M, u.coeffs, alg.p))


def frob_right(u: KummerElem, k: int = 1) -> KummerElem:
    """(1 (x) sigma^k): Frobenius on the scalar field, rowwise."""
    alg = u.algebra
    M = alg.scalar.frob_power(k % alg.a)
    return KummerElem(alg, linalg.matmul_mod(u.coeffs, M.T, alg.p))


def solve_h90(alg: KummerAlg, eta_power: int = 1) -> KummerElem:
    """A canonical nonzero solution of (sigma (x) 1)(x) = (1 (x) zeta^eta_power) x.

    The solution space is a line over the scalar field (dimension a over
    GF(p)); the returned representative is normalized so that its first
    nonzero left-coordinate scalar equals 1, making the output deterministic.
    """
    p, ell, a = alg.p, alg.ell, alg.a
    F = alg.left.frobenius_matrix
    Z = linalg.matpow_mod(alg._zeta_mul, eta_power % alg.ell, p) if eta_power != 1 else alg._zeta_mul
    # row-major vec of the l x a coefficient matrix
    M = (np.kron(F, linalg.identity(a)) - np.kron(linalg.identity(ell), Z)) % p
    basis = linalg.kernel(M, p)
    if len(basis) != a:
        raise ArithmeticError(
            f"Hilbert-90 kernel has dimension {len(basis)}, expected {a}; "
            "inputs are corrupted or gcd(l, p) != 1")
    C = basis[0].reshape(ell, a)
    for i in range(ell):
        if C[i].any():
            s = alg.scalar.element(list(C[i]))
            return KummerElem(alg, C).scalar_mul(s.inverse())
    raise AssertionError("kernel basis vector cannot be zero")


def kummer_constant(alpha: KummerElem) -> FFElem:
    """The scalar a_l with alpha^l = 1 (x) a_l, as an element of K_l.

    Raises NotScalar when alpha^l is not a pure scalar, i.e. alpha is not a
    Hilbert-90 solution.
    """
    power = alpha ** alpha.algebra.ell
    c = power.scalar_value()
    if c.is_zero():
        raise NotScalar("Kummer constant is zero; alpha is not invertible")
    return c


def scalar_norm(gamma: KummerElem, b: int, a: int) -> KummerElem:
    """Product of the (1 (x) sigma^(ja)) conjugates for 0 <= j < b/a.

    Requires a | b | level and gamma invariant under 1 (x) sigma^b; the
    result is invariant under 1 (x) sigma^a (asserted).
    """
    alg = gamma.algebra
    if b % a or alg.a % b:
        raise ValueError(f"need a | b | level, got a={a}, b={b}, level={alg.a}")
    if frob_right(gamma, b) != gamma:
        raise ValueError("element is not invariant under 1 (x) sigma^b")
    out = alg.one()
    for j in range(b // a):
        out = out * frob_right(gamma, j * a)
    if frob_right(out, a) != out:
        raise AssertionError("scalar norm image is not invariant under 1 (x) sigma^a")
    return out


def project_first(beta: KummerElem, ell_sub: int, method: str = "auto") -> FFElem:
    """First coefficient y_0 of beta = sum y_i (x) eta^i, eta = zeta^(l/l_sub).

    method: 'solve' decomposes each row against the eta power basis (and
    detects elements outside the subalgebra); 'trace' evaluates the
    precomputed trace linear form (faster, no membership check); 'auto'
    picks 'solve' below a size threshold.
    """
    alg = beta.algebra
    p, ell, b = alg.p, alg.ell, alg.a
    if ell % ell_sub:
        raise ValueError(f"{ell_sub} does not divide the algebra root order {ell}")
    if method == "auto":
        method = "solve" if ell * b <= 512 else "trace"
    d = alg.lattice.level(ell_sub)
    S = alg.scalar
    eta = S.gen() ** (ell // ell_sub)
    if method == "solve":
        cols = []
        cur = S.one()
        for _ in range(d):
            cols.append(cur.vec)
            cur = cur * eta
        W = np.array(cols, dtype=np.int64).T % p
        try:
            X = linalg.solve(W, beta.coeffs.T, p)
        except linalg.InconsistentSystem:
            raise ValueError("element lies outside the requested subalgebra") from None
        return alg.left.element(list(X[0]))
    if method == "trace":
        v = _trace_form(alg, ell_sub)
        return alg.left.element(list(linalg.matmul_mod(beta.coeffs, v, p)))
    raise ValueError(f"unknown projection method {method!r}")


def _trace_form(alg: KummerAlg, ell_sub: int) -> np.ndarray:
    """Vector v with v . row = first eta-coordinate, for rows inside GF(p)(eta).

    Built from the power-series identity for the coefficients of the trace
    linear form on the zeta power basis, then composed with multiplication by
    a trace-one normalizer.
    """
    cache = getattr(alg, "_trace_forms", None)
    if cache is None:
        cache = {}
        setattr(alg, "_trace_forms", cache)
    if ell_sub in cache:
        return cache[ell_sub]
    p, b = alg.p, alg.a
    S = alg.scalar
    eta = S.gen() ** (alg.ell // ell_sub)
    h_sub = extfield.minimal_polynomial(eta)
    d = fppoly.degree(h_sub)
    h_m = S.modulus
    # tau = -(h_sub(0)/eta) * h_m'(zeta) / h_sub'(eta)
    hm_prime = S.element(fppoly.derivative(h_m, p))
    hsub_prime_eta = _eval_at(fppoly.derivative(h_sub, p), eta)
    tau = (-S.element(h_sub[0])) * eta.inverse() * hm_prime * hsub_prime_eta.inverse()
    # series: sum_i [Tr(zeta^i)]_eta Z^i = rev(tau) / rev(h_m) mod Z^b
    num = fppoly.reverse(list(tau.vec), b - 1)
    den = fppoly.reverse(h_m, b)
    w = np.array(fppoly.series_div(num, den, b, p), dtype=np.int64)
    # normalizer with Tr(eta_hat) = 1, Tr the trace onto GF(p)(eta)
    steps = b // d
    eta_hat = None
    cur = S.one()
    for _ in range(b):
        tr = S.zero()
        for k in range(steps):
            tr = tr + extfield.frobenius(cur, k * d)
        if not tr.is_zero():
            eta_hat = cur * tr.inverse()
            break
        cur = cur * S.gen()
    assert eta_hat is not None, "trace form is degenerate"
    Mh = S.mul_matrix(eta_hat)
    v = linalg.matmul_mod(w, Mh, p)
    cache[ell_sub] = v
    return v


def _eval_at(f: list[int], x: FFElem) -> FFElem:
    acc = x.field.zero()
    for c in reversed(f):
        acc = acc * x + x.field.element(c)
    return acc


def recover_alpha(alg: KummerAlg, x0: FFElem) -> KummerElem:
    """Rebuild a Hilbert-90 solution from its first tensor coordinate.

    Uses the recursion x_{a-1} = sigma(x_0)/b_0,
    x_i = sigma(x_{i+1}) - b_{i+1} x_{a-1}, where zeta^a = sum b_i zeta^i.
    The result is verified against the Hilbert-90 equation; failure means x_0
    was not the first coordinate of a valid solution.
    """
    p, a = alg.p, alg.a
    if x0.field != alg.left:
        raise AlgebraMismatch("first coordinate must live in the left field")
    b = alg.entry.b_coeffs + [0] * (a - len(alg.entry.b_coeffs))
    if b[0] == 0:
        raise ArithmeticError("minimal polynomial of zeta has zero constant term")
    cols = [None] * a
    cols[0] = x0
    if a > 1:
        inv_b0 = pow(b[0], -1, p)
        x_top = extfield.frobenius(x0, 1) * inv_b0
        cols[a - 1] = x_top
        for i in range(a - 2, 0, -1):
            cols[i] = extfield.frobenius(cols[i + 1], 1) - x_top * b[i + 1]
    C = np.array([c.vec for c in cols], dtype=np.int64).T % p
    alpha = KummerElem(alg, C)
    if frob_left(alpha, 1) != alpha.scalar_mul(alg.scalar.gen()):
        raise ArithmeticError("recovered element fails the Hilbert-90 equation; "
                              "the given coordinate is not standard")
    return alpha
