"""Conway polynomials: lookup tables, brute-force search, and file I/O.

The degree-a Conway polynomial over GF(p) is the lexicographically smallest
monic irreducible polynomial of degree a that is primitive and norm
compatible with the Conway polynomials of all proper divisor degrees:
C_a(X^((p^b-1)/(p^a-1))) = 0 mod C_b whenever a | b.

Lexicographic comparison follows the published table convention: the
polynomial x^n + c_{n-1} x^{n-1} + ... + c_0 is ranked by the word
(a_{n-1}, ..., a_0) where a_j = (-1)^(n-j) c_j mod p, compared left to right.

Table file format: one entry per line, `p a c_0 c_1 ... c_a` with ascending
decimal coefficients; lines starting with `#` are ignored.
"""

from __future__ import annotations

import threading

from . import fppoly, extfield


class ConwayUnavailable(LookupError):
    """Raised when a Conway polynomial is neither tabulated nor searchable
    within the configured work bound."""


def _word_to_poly(word: list[int], n: int, p: int) -> list[int]:
    # word = (a_{n-1}, ..., a_0); c_j = (-1)^(n-j) a_j mod p
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for idx, a in enumerate(word):
        j = n - 1 - idx
        coeffs[j] = (a if (n - j) % 2 == 0 else (-a) % p) if a else 0
    return coeffs


def _norm_compatible(cand: list[int], a: int, divisors: dict[int, list[int]], p: int) -> bool:
    # C_a(X^((p^b-1)/(p^a-1))) = 0 mod C_b for every stored b with a | b,
    # and C_d(X^((p^a-1)/(p^d-1))) = 0 mod cand for every stored d | a.
    for d, cd in divisors.items():
        if d == a:
            continue
        if a % d == 0:
            e = (p ** a - 1) // (p ** d - 1)
            xe = fppoly.powmod([0, 1], e, cand, p)
            if fppoly.trim(_eval_poly_at(cd, xe, cand, p)):
                return False
        elif d % a == 0:
            e = (p ** d - 1) // (p ** a - 1)
            xe = fppoly.powmod([0, 1], e, cd, p)
            if fppoly.trim(_eval_poly_at(cand, xe, cd, p)):
                return False
    return True


def _eval_poly_at(f: list[int], g: list[int], m: list[int], p: int) -> list[int]:
    """f(g) mod m by Horner."""
    acc: list[int] = []
    for c in reversed(f):
        acc = fppoly.mod(fppoly.add(fppoly.mul(acc, g, p), fppoly.constant(c, p), p), m, p)
    return acc


def _is_primitive_poly(f: list[int], p: int) -> bool:
    field = extfield.ExtField(p, f, check=False)
    return extfield.is_primitive(field.gen())


def conway_search(p: int, a: int, known: dict[int, list[int]], work_bound: int = 2_000_000,
                  pseudo: bool = False) -> list[int]:
    """Brute-force the Conway polynomial of degree a.

    `known` must contain the Conway polynomials of all proper divisors of a
    (callers recurse as needed).  The work bound is spent at a*a units per
    candidate tested; exceeding it raises ConwayUnavailable.

    With pseudo=True, candidates are enumerated in plain ascending
    coefficient order instead and the first primitive norm-compatible
    polynomial wins; the result is then generally not the Conway polynomial.
    """
    fppoly.check_prime(p)
    if a < 1:
        raise ValueError("degree must be >= 1")
    for d in range(1, a):
        if a % d == 0 and d not in known:
            raise ValueError(f"search for degree {a} requires the degree-{d} entry first")
    budget = work_bound // (a * a) if a > 1 else work_bound
    divisors = {d: f for d, f in known.items() if d < a and a % d == 0}
    tested = 0
    for index in range(p ** a):
        word = []
        v = index
        for _ in range(a):
            word.append(v % p)
            v //= p
        word.reverse()
        if pseudo:
            # plain ascending coefficient order, no sign twist
            cand = [0] * (a + 1)
            cand[a] = 1
            for idx, w in enumerate(word):
                cand[a - 1 - idx] = w
        else:
            cand = _word_to_poly(word, a, p)
        if cand[0] == 0:
            continue  # divisible by X, never primitive
        tested += 1
        if tested > budget:
            raise ConwayUnavailable(
                f"Conway search for p={p}, a={a} exceeded the work bound; supply a table")
        if not extfield.is_irreducible(cand, p):
            continue
        if not _is_primitive_poly(cand, p):
            continue
        if not _norm_compatible(cand, a, divisors, p):
            continue
        return cand
    raise ConwayUnavailable(f"no Conway polynomial found for p={p}, a={a}")


class ConwayTable:
    """Per-prime table of Conway polynomials with on-demand brute-force search.

    Append-only and lock-protected: concurrent readers are safe and an entry
    becomes visible only once complete.  `canonical` is False when any entry
    was produced by the relaxed (pseudo-Conway) search.
    """

    def __init__(self, p: int, polys: dict[int, list[int]] | None = None,
                 work_bound: int = 2_000_000, pseudo: bool = False, validate: bool = True):
        self.p = fppoly.check_prime(p)
        self.work_bound = work_bound
        self.pseudo = pseudo
        self.canonical = not pseudo
        self._polys: dict[int, list[int]] = {}
        self._lock = threading.Lock()
        if polys:
            for a, f in sorted(polys.items()):
                f = [c % p for c in f]
                if fppoly.degree(f) != a or f[-1] != 1:
                    raise ValueError(f"table entry for degree {a} is not monic of degree {a}")
                if validate:
                    if not extfield.is_irreducible(f, p):
                        raise ValueError(f"table entry p={p} a={a} is reducible")
                    if not _is_primitive_poly(f, p):
                        raise ValueError(f"table entry p={p} a={a} is not primitive")
                    if not _norm_compatible(f, a, self._polys, p):
                        raise ValueError(f"table entry p={p} a={a} is not norm compatible")
                self._polys[a] = f

    def degrees(self) -> list[int]:
        return sorted(self._polys)

    def has(self, a: int) -> bool:
        return a in self._polys

    def get(self, a: int) -> list[int]:
        """Tabulated entry, or recursive brute-force search within the work bound."""
        with self._lock:
            return self._get_locked(a)

    def _get_locked(self, a: int) -> list[int]:
        if a in self._polys:
            return self._polys[a]
        for d in range(1, a):
            if a % d == 0:
                self._get_locked(d)
        f = conway_search(self.p, a, self._polys, self.work_bound, self.pseudo)
        if self.pseudo:
            self.canonical = False
        self._polys[a] = f
        return f


def load_table(path: str, p: int | None = None, validate: bool = True,
               work_bound: int = 2_000_000) -> ConwayTable:
    """Load a Conway table file (format in the module docstring).

    When p is given, entries for other primes are skipped.  Validation of
    irreducibility, primitivity and norm compatibility can be switched off
    for speed with validate=False.
    """
    with open(path) as fh:
        return parse_table(fh.read(), p=p, validate=validate, work_bound=work_bound)


def parse_table(text: str, p: int | None = None, validate: bool = True,
                work_bound: int = 2_000_000) -> ConwayTable:
    polys: dict[int, list[int]] = {}
    seen_p = p
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [int(t) for t in line.split()]
        if len(parts) < 3:
            raise ValueError(f"malformed Conway table line: {line!r}")
        lp, a, coeffs = parts[0], parts[1], parts[2:]
        if p is not None and lp != p:
            continue
        if seen_p is None:
            seen_p = lp
        if lp != seen_p:
            raise ValueError("table mixes primes; pass p= to select one")
        if len(coeffs) != a + 1:
            raise ValueError(f"degree-{a} entry carries {len(coeffs)} coefficients")
        polys[a] = coeffs
    if seen_p is None:
        raise ValueError("no usable entries in Conway table")
    return ConwayTable(seen_p, polys, validate=validate, work_bound=work_bound)


def dump_table(table: ConwayTable) -> str:
    lines = [f"# Conway polynomials for p={table.p}"]
    for a in table.degrees():
        coeffs = " ".join(str(c) for c in table._polys[a])
        lines.append(f"{table.p} {a} {coeffs}")
    return "\n".join(lines) + "\n"
