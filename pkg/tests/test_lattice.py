"""StdLattice registry: incrementality, embedding caching, section behavior,
triangle verification, serialization round-trip, and storage linearity."""

import random

import pytest

from fflattice import extfield
from fflattice.lattice import StdLattice
from fflattice.linalg import InconsistentSystem


def build(p, degrees):
    L = StdLattice(p)
    for ell in degrees:
        L.add_field(ell)
    return L


def test_add_field_idempotent():
    L = build(2, [3])
    d1 = L.field(3)
    d2 = L.add_field(3)
    assert d1 is d2
    # registering the same degree with a different irreducible is an error
    other = [1, 1, 0, 1] if d1.field.modulus != [1, 1, 0, 1] else [1, 0, 1, 1]
    with pytest.raises(ValueError):
        L.add_field(3, other)
    with pytest.raises(ValueError):
        L.add_field(4)  # divisible by the characteristic
    with pytest.raises(KeyError):
        L.field(5)


def test_incrementality():
    # adding a new degree never changes existing decorations
    L = build(2, [1, 3, 5])
    snap = {ell: (L.field(ell).s, tuple(L.field(ell).P)) for ell in (1, 3, 5)}
    L.add_field(15)
    L.add_field(9)
    for ell, (s, P) in snap.items():
        assert L.field(ell).s == s
        assert tuple(L.field(ell).P) == P


def test_embedding_cache():
    L = build(2, [3, 15])
    L.get_embedding(3, 15)
    n = L.embedding_computations
    L.get_embedding(3, 15)
    L.embed_eval(3, 15, L.field(3).s)
    assert L.embedding_computations == n


def test_embedding_is_ring_homomorphism():
    L = build(3, [2, 8])
    F = L.field(2).field
    rng = random.Random(28)
    for _ in range(50):
        x, y = F.random_element(rng), F.random_element(rng)
        assert L.embed_eval(2, 8, x * y) == L.embed_eval(2, 8, x) * L.embed_eval(2, 8, y)
        assert L.embed_eval(2, 8, x + y) == L.embed_eval(2, 8, x) + L.embed_eval(2, 8, y)
    assert L.embed_eval(2, 8, F.one()) == L.field(8).field.one()


def test_section_round_trip_and_rejection():
    L = build(2, [5, 15])
    F5 = L.field(5).field
    rng = random.Random(515)
    for _ in range(30):
        x = F5.random_element(rng)
        y = L.embed_eval(5, 15, x)
        assert L.section_eval(5, 15, y) == x
    # elements outside the subfield are flagged with None
    rejected = 0
    for _ in range(30):
        z = L.field(15).field.random_element(rng)
        if L.section_eval(5, 15, z) is None:
            rejected += 1
    assert rejected > 0


def test_identity_embedding():
    L = build(2, [7])
    assert L.embed_eval(7, 7, L.field(7).s) == L.field(7).s


def test_non_divisible_pair_rejected():
    L = build(2, [3, 5])
    with pytest.raises(ValueError):
        L.get_embedding(3, 5)


def test_verify_triangles():
    L = build(2, [1, 3, 5, 9, 15, 45])
    report = L.verify()
    assert report.all_passed
    # 1|3|9, 1|3|15, 1|5|15, 1|3|45, 1|5|45, 1|9|45, 1|15|45,
    # 3|9|45, 3|15|45, 5|15|45, 9|45 chains etc.
    assert len(report.triples) >= 10


def test_serialization_round_trip():
    L = build(3, [1, 2, 4, 8])
    L.get_embedding(2, 8)
    L.get_embedding(4, 8)
    text = L.dumps()
    again = StdLattice.loads(text)
    assert again.dumps() == text
    assert again.degrees() == L.degrees()
    for ell in L.degrees():
        assert again.field(ell).P == L.field(ell).P
        assert again.field(ell).s == L.field(ell).s


def test_loader_rejects_tampered_data():
    L = build(2, [3])
    text = L.dumps()
    lines = text.splitlines()
    toks = lines[1].split()
    # flip one bit of the stored generator s
    toks[5] = str(1 - int(toks[5]))
    bad = lines[0] + "\n" + " ".join(toks) + "\n"
    with pytest.raises(ValueError):
        StdLattice.loads(bad)


def test_storage_linear_in_degree():
    L1 = build(2, [9])
    L2 = build(2, [19])
    # 3l + 2 coefficients per field (f, s, P with two leading-1 terms)
    assert L1.stored_coefficients() == 3 * 9 + 2
    assert L2.stored_coefficients() == 3 * 19 + 2


def test_field_mismatch_rejected():
    L = build(2, [3, 15])
    other = extfield.ExtField(2, [1, 1, 0, 1])
    with pytest.raises(extfield.FieldMismatch):
        L.embed_eval(3, 15, other.gen())
