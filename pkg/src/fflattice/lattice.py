"""Incremental registry of compatibly embedded finite fields.

StdLattice decorates fields on demand, caches standard embeddings with their
evaluation matrices, evaluates embeddings and their sections, and can verify
the triangle (composition) identity over every registered divisibility chain.
Adding a field never touches existing entries; per-field persistent storage
is linear in the degree when the alpha cache is off.

Serialization is a portable text format: a header line `p`, then one line
per field `l f_coeffs s_coeffs P_coeffs`, then one line per cached embedding
`l m t_coeffs`, all ascending decimal coefficients.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from . import fppoly, linalg, extfield, kummer, standardize
from .conway import ConwayTable, parse_table
from .cyclotomic import CycloLattice
from .extfield import ExtField, FFElem
from .standardize import DecoratedField, EmbeddingDesc


def default_lattice(p: int, work_bound: int = 2_000_000) -> CycloLattice:
    """Cyclotomic lattice backed by the embedded Conway table for p."""
    from .conway_data import CONWAY_TABLE_TEXT

    try:
        table = parse_table(CONWAY_TABLE_TEXT, p=p, validate=False, work_bound=work_bound)
    except ValueError:
        table = ConwayTable(p, work_bound=work_bound)
    return CycloLattice(table)


@dataclass
class _EmbeddingEntry:
    desc: EmbeddingDesc
    matrix: np.ndarray       # m x l matrix of the embedding on GF(p)-coordinates


@dataclass
class TriangleReport:
    """Outcome of verify(): one record per triple l | m | n."""

    triples: list
    failures: list

    @property
    def all_passed(self) -> bool:
        return not self.failures


class StdLattice:
    """Append-only collection of decorated fields with cached standard embeddings."""

    def __init__(self, p: int, lattice: CycloLattice | None = None, cache_alpha: bool = False):
        self.lattice = lattice if lattice is not None else default_lattice(p)
        if self.lattice.p != p:
            raise ValueError("cyclotomic lattice belongs to a different prime")
        self.p = p
        self.cache_alpha = cache_alpha
        self.fields: dict[int, DecoratedField] = {}
        self.embeddings: dict[tuple[int, int], _EmbeddingEntry] = {}
        self._lock = threading.Lock()
        self.embedding_computations = 0  # instrumentation for cache tests

    # -- registration -----------------------------------------------------------

    def add_field(self, ell: int, defining_poly: list[int] | None = None,
                  seed: int = 0) -> DecoratedField:
        """Decorate and register GF(p^l); idempotent per degree.

        A second call with a different defining polynomial is an error: one
        representation per degree per lattice.
        """
        if ell % self.p == 0:
            raise ValueError(f"degree {ell} is divisible by the characteristic {self.p}")
        with self._lock:
            existing = self.fields.get(ell)
        if existing is not None:
            if defining_poly is not None and fppoly.monic(
                    [c % self.p for c in defining_poly], self.p) != existing.field.modulus:
                raise ValueError(f"degree {ell} already registered with a different polynomial")
            return existing
        dec = standardize.decorate(ell, self.lattice, defining_poly, seed=seed,
                                   cache_alpha=self.cache_alpha)
        with self._lock:
            return self.fields.setdefault(ell, dec)

    def degrees(self) -> list[int]:
        return sorted(self.fields)

    def field(self, ell: int) -> DecoratedField:
        if ell not in self.fields:
            raise KeyError(f"degree {ell} is not registered")
        return self.fields[ell]

    # -- embeddings ---------------------------------------------------------------

    def get_embedding(self, ell: int, m: int) -> EmbeddingDesc:
        return self._embedding_entry(ell, m).desc

    def _embedding_entry(self, ell: int, m: int) -> _EmbeddingEntry:
        if m % ell:
            raise ValueError(f"{ell} does not divide {m}")
        with self._lock:
            cached = self.embeddings.get((ell, m))
        if cached is not None:
            return cached
        src = self.field(ell)
        dst = self.field(m)
        desc = standardize.standard_embed(src, dst, self.lattice)
        entry = _EmbeddingEntry(desc, self._embedding_matrix(src, dst, desc.s_image))
        with self._lock:
            self.embedding_computations += 1
            return self.embeddings.setdefault((ell, m), entry)

    def _embedding_matrix(self, src: DecoratedField, dst: DecoratedField,
                          t: FFElem) -> np.ndarray:
        p = self.p
        ell, m = src.ell, dst.ell
        src_powers = []
        cur = src.field.one()
        for _ in range(ell):
            src_powers.append(cur.vec)
            cur = cur * src.s
        B_src = np.array(src_powers, dtype=np.int64).T % p    # l x l, invertible
        dst_powers = []
        cur = dst.field.one()
        for _ in range(ell):
            dst_powers.append(cur.vec)
            cur = cur * t
        B_dst = np.array(dst_powers, dtype=np.int64).T % p    # m x l
        inv = linalg.solve(B_src, linalg.identity(ell), p)
        return linalg.matmul_mod(B_dst, inv, p)

    def embed_eval(self, ell: int, m: int, x: FFElem) -> FFElem:
        """phi(x) for the standard embedding GF(p^l) -> GF(p^m)."""
        entry = self._embedding_entry(ell, m)
        src = self.field(ell)
        if x.field != src.field:
            raise extfield.FieldMismatch("element does not live in the source field")
        vec = linalg.matmul_mod(entry.matrix, np.array(x.vec, dtype=np.int64), self.p)
        return self.field(m).field.element(list(vec))

    def section_eval(self, ell: int, m: int, y: FFElem) -> FFElem | None:
        """The unique preimage of y, or None when y is not in the subfield."""
        entry = self._embedding_entry(ell, m)
        dst = self.field(m)
        if y.field != dst.field:
            raise extfield.FieldMismatch("element does not live in the target field")
        try:
            x = linalg.solve(entry.matrix, np.array(y.vec, dtype=np.int64), self.p)
        except linalg.InconsistentSystem:
            return None
        return self.field(ell).field.element(list(x))

    # -- verification ----------------------------------------------------------------

    def verify(self) -> TriangleReport:
        """Check the triangle identity on every registered triple l | m | n."""
        degs = self.degrees()
        triples = []
        failures = []
        for i, ell in enumerate(degs):
            for m in degs[i + 1:]:
                if m % ell:
                    continue
                for n in degs:
                    if n <= m or n % m:
                        continue
                    s = self.field(ell).s
                    direct = self.embed_eval(ell, n, s)
                    composed = self.embed_eval(m, n, self.embed_eval(ell, m, s))
                    ok = direct == composed
                    triples.append((ell, m, n, ok))
                    if not ok:
                        failures.append((ell, m, n))
        return TriangleReport(triples, failures)

    # -- serialization ----------------------------------------------------------------

    def dumps(self) -> str:
        lines = [str(self.p)]
        for ell in self.degrees():
            d = self.fields[ell]
            f = " ".join(map(str, d.field.modulus))
            s = " ".join(map(str, list(d.s.vec)))
            P = " ".join(map(str, d.P))
            lines.append(f"{ell} {f} {s} {P}")
        for (ell, m) in sorted(self.embeddings):
            t = " ".join(map(str, list(self.embeddings[(ell, m)].desc.s_image.vec)))
            lines.append(f"{ell} {m} {t}")
        return "\n".join(lines) + "\n"

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            fh.write(self.dumps())

    @classmethod
    def loads(cls, text: str, lattice: CycloLattice | None = None) -> "StdLattice":
        """Parse and re-validate a serialized lattice.

        Field lines are re-decorated through the standard machinery, which
        re-checks every invariant (standardness of s, P equality); embedding
        lines are validated against the minimal-polynomial criterion.
        """
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty lattice serialization")
        p = int(lines[0])
        L = cls(p, lattice)
        i = 1
        # field lines: `l  f(l+1)  s(l)  P(l+1)` -> 3l + 3 tokens
        while i < len(lines):
            toks = [int(t) for t in lines[i].split()]
            ell = toks[0]
            if len(toks) != 3 * ell + 3:
                break
            f = toks[1:ell + 2]
            s_vec = toks[ell + 2:2 * ell + 2]
            P = toks[2 * ell + 2:]
            dec = L.add_field(ell, f)
            if list(dec.s.vec) != s_vec or dec.P != P:
                raise ValueError(f"stored decoration for degree {ell} fails re-validation")
            i += 1
        while i < len(lines):
            toks = [int(t) for t in lines[i].split()]
            ell, m, t_vec = toks[0], toks[1], toks[2:]
            if m % ell or len(t_vec) != m:
                raise ValueError(f"malformed embedding line: {lines[i]!r}")
            entry = L._embedding_entry(ell, m)
            if list(entry.desc.s_image.vec) != t_vec:
                raise ValueError(f"stored embedding {ell}->{m} fails re-validation")
            i += 1
        return L

    @classmethod
    def load(cls, path: str, lattice: CycloLattice | None = None) -> "StdLattice":
        with open(path) as fh:
            return cls.loads(fh.read(), lattice)

    def stored_coefficients(self) -> int:
        """Number of persistently stored GF(p) coefficients (storage-linearity check)."""
        total = 0
        for d in self.fields.values():
            total += len(d.field.modulus) + len(d.s.vec) + len(d.P)
            if d._alpha is not None:
                total += d._alpha.coeffs.size
        return total
