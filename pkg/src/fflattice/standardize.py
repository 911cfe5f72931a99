"""Decoration of finite fields and standard compatible embeddings.

decorate() normalizes an arbitrary Hilbert-90 solution to the standard one
(whose Kummer constant is the canonical cyclotomic pullback), yielding the
standard generator s_l and the standard defining polynomial P_l.
standard_embed() then computes the image of s_l in a larger decorated field
through the closed-form constant kappa_{l,m}; the resulting embeddings
compose compatibly across the whole divisibility lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fppoly, extfield, kummer
from .cyclotomic import CycloLattice
from .extfield import ExtField, FFElem
from .fppoly import exact_div
from .kummer import KummerAlg, KummerElem


@dataclass
class DecoratedField:
    """A finite field GF(p^l) with its standard generator and polynomial.

    alpha is stored only when cache_alpha was requested; otherwise it is
    recovered from s on demand (storage stays linear in l).
    """

    ell: int
    field: ExtField
    s: FFElem
    P: list
    level: int
    algebra: KummerAlg
    _alpha: KummerElem | None = field(default=None, repr=False)

    def alpha(self) -> KummerElem:
        if self._alpha is not None:
            return self._alpha
        return kummer.recover_alpha(self.algebra, self.s)


@dataclass(frozen=True)
class EmbeddingDesc:
    """Description of a standard embedding: s_l maps to s_image in GF(p^m)."""

    source_degree: int
    target_degree: int
    s_image: FFElem
    kappa: FFElem


def decorate(ell: int, lattice: CycloLattice, defining_poly: list[int] | None = None,
             seed: int = 0, cache_alpha: bool = False) -> DecoratedField:
    """Compute the standard generator and defining polynomial of GF(p^l).

    Steps: solve Hilbert 90 for zeta_l, rescale by an l-th root kappa of
    abar_l / a'_l so the Kummer constant becomes the standard one, project
    to the first tensor coordinate, and take its minimal polynomial.
    """
    alg = KummerAlg(lattice, ell, defining_poly, seed=seed)
    abar = lattice.standard_constant(ell)
    alpha_prime = kummer.solve_h90(alg)
    a_prime = kummer.kummer_constant(alpha_prime)
    ratio = abar * a_prime.inverse()
    kappa = extfield.nth_root(ratio, ell)  # exists by construction; failure is a bug
    alpha = alpha_prime.scalar_mul(kappa)
    if kummer.kummer_constant(alpha) != abar:
        raise AssertionError("standardized solution does not carry the standard constant")
    s = alpha.column(0)
    P = extfield.minimal_polynomial(s)
    if fppoly.degree(P) != ell:
        raise AssertionError("standard generator does not generate the field")
    return DecoratedField(ell, alg.left, s, P, alg.a, alg,
                          alpha if cache_alpha else None)


def standard_polynomial(ell: int, lattice: CycloLattice, seed: int = 0) -> list[int]:
    """The standard defining polynomial P_l (independent of the seed)."""
    return decorate(ell, lattice, seed=seed).P


def kappa_constant(ell: int, m: int, lattice: CycloLattice) -> FFElem:
    """The closed-form embedding constant kappa_{l,m}, an element of K_m.

    kappa is the cyclotomic pullback of zeta_(p^b-1) raised to
    -((b-a) p^(b+a) - b p^b + a p^a) / ((p^a - 1) l), where a, b are the
    levels of l, m.  The division is exact in arbitrary-precision integers
    and must happen before reduction mod p^b - 1.
    """
    if m % ell:
        raise ValueError(f"{ell} does not divide {m}")
    p = lattice.p
    a = lattice.level(ell)
    b = lattice.level(m)
    E = (b - a) * p ** (b + a) - b * p ** b + a * p ** a
    q = exact_div(E, (p ** a - 1) * ell)
    N = p ** b - 1
    complete = lattice.entry(N)
    val = complete.zeta ** ((-q) % N)
    return lattice.embed_inverse(m, N, val)


def standard_embed(src: DecoratedField, dst: DecoratedField,
                   lattice: CycloLattice) -> EmbeddingDesc:
    """Image of the standard generator s_l inside the decorated GF(p^m).

    Returns t = [ (1 (x) kappa_{l,m}) alpha_m^(m/l) ]_(zeta_m^(m/l)); the
    minimal polynomial of t is asserted to equal P_l.
    """
    ell, m = src.ell, dst.ell
    if m % ell:
        raise ValueError(f"{ell} does not divide {m}")
    if src.algebra.lattice is not lattice or dst.algebra.lattice is not lattice:
        raise ValueError("decorations come from a different cyclotomic lattice")
    alpha_m = dst.alpha()
    kappa = kappa_constant(ell, m, lattice)
    beta = (alpha_m ** (m // ell)).scalar_mul(kappa)
    t = kummer.project_first(beta, ell)
    if extfield.minimal_polynomial(t) != src.P:
        raise AssertionError("embedding image has the wrong minimal polynomial; "
                             "decorations are inconsistent")
    return EmbeddingDesc(ell, m, t, kappa)


def baseline_embed(field_l: ExtField, field_m: ExtField,
                    lattice: CycloLattice) -> tuple[FFElem, FFElem]:
    """Baseline (non-standard) embedding from arbitrary Hilbert-90 solutions.

    Returns (s, t) such that s |-> t defines an embedding of field_l into
    field_m.  No decoration: the l-th root is extracted from the ratio of the
    two Kummer constants directly.
    """
    ell, m = field_l.n, field_m.n
    if m % ell:
        raise ValueError(f"{ell} does not divide {m}")
    alg_l = KummerAlg(lattice, ell, field_l.modulus)
    alg_m = KummerAlg(lattice, m, field_m.modulus)
    alpha_l = kummer.solve_h90(alg_l)
    alpha_m = kummer.solve_h90(alg_m)
    a_l = kummer.kummer_constant(alpha_l)
    a_m = kummer.kummer_constant(alpha_m)
    ratio = lattice.embed(ell, m, a_l) * a_m.inverse()
    kappa = extfield.nth_root(ratio, ell)
    beta = (alpha_m ** (m // ell)).scalar_mul(kappa)
    s = alpha_l.column(0)
    t = kummer.project_first(beta, ell)
    if extfield.minimal_polynomial(t) != extfield.minimal_polynomial(s):
        raise AssertionError("embedding image has the wrong minimal polynomial")
    return s, t


def verify_key_identity(a: int, b: int, lattice: CycloLattice,
                        dimension_bound: int = 4096, seed: int = 0) -> bool:
    """Self-test of the norm identity in the complete algebra of level b:

    alpha^((p^b-1)/(p^a-1)) = (1 (x) zeta)^e  N_{b/a}(alpha)
    with e = ((b-a) p^(b+a) - b p^b + a p^a) / (p^a - 1)^2.

    Complete algebras grow exponentially with the level, hence the bound on
    (p^b - 1) * b.
    """
    if b % a:
        raise ValueError(f"{a} does not divide {b}")
    p = lattice.p
    ell = p ** b - 1
    if ell * b > dimension_bound:
        raise ValueError(f"complete algebra dimension {ell * b} exceeds bound {dimension_bound}")
    alg = KummerAlg(lattice, ell, seed=seed)
    alpha = kummer.solve_h90(alg)  # every nonzero solution is standard here
    e = exact_div((b - a) * p ** (b + a) - b * p ** b + a * p ** a, (p ** a - 1) ** 2)
    lhs = alpha ** ((p ** b - 1) // (p ** a - 1))
    zeta_e = alg.scalar.gen() ** e
    rhs = kummer.scalar_norm(alpha, b, a).scalar_mul(zeta_e)
    return lhs == rhs
