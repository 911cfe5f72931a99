"""Exact linear algebra mod p, cross-checked against an independent
pure-Python Gaussian elimination oracle."""

import random

import numpy as np
import pytest

from fflattice import linalg

PRIMES = [2, 3, 5, 97]


def rand_matrix(rng, rows, cols, p):
    return np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)],
                    dtype=np.int64)


def oracle_rank(M, p):
    # independent plain-list elimination, no numpy
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = None
        for r in range(rank, rows):
            if A[r][c] % p:
                piv = r
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], p - 2, p)
        A[rank] = [(v * inv) % p for v in A[rank]]
        for r in range(rows):
            if r != rank and A[r][c] % p:
                f = A[r][c]
                A[r] = [(A[r][j] - f * A[rank][j]) % p for j in range(cols)]
        rank += 1
    return rank


@pytest.mark.parametrize("p", PRIMES)
def test_rank_matches_oracle(p):
    rng = random.Random(p)
    for _ in range(60):
        M = rand_matrix(rng, rng.randrange(1, 8), rng.randrange(1, 8), p)
        assert linalg.rank(M, p) == oracle_rank(M, p)


@pytest.mark.parametrize("p", PRIMES)
def test_kernel_annihilation_and_nullity(p):
    rng = random.Random(100 + p)
    for _ in range(60):
        rows, cols = rng.randrange(1, 8), rng.randrange(1, 8)
        M = rand_matrix(rng, rows, cols, p)
        K = linalg.kernel(M, p)
        assert len(K) == cols - linalg.rank(M, p)
        for v in K:
            assert not (linalg.matmul_mod(M, v, p) % p).any()
        if K:
            assert linalg.rank(np.array(K), p) == len(K)  # independent


@pytest.mark.parametrize("p", PRIMES)
def test_solve_round_trip(p):
    rng = random.Random(200 + p)
    for _ in range(60):
        n = rng.randrange(1, 8)
        M = rand_matrix(rng, n, n, p)
        x = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
        b = linalg.matmul_mod(M, x, p)
        y = linalg.solve(M, b, p)
        assert (linalg.matmul_mod(M, y, p) == b % p).all()


def test_solve_inconsistent():
    M = np.array([[1, 0], [0, 0]], dtype=np.int64)
    b = np.array([0, 1], dtype=np.int64)
    with pytest.raises(linalg.InconsistentSystem):
        linalg.solve(M, b, 5)


def test_determinism():
    rng = random.Random(7)
    M = rand_matrix(rng, 6, 9, 3)
    K1 = linalg.kernel(M, 3)
    K2 = linalg.kernel(M.copy(), 3)
    assert all((a == b).all() for a, b in zip(K1, K2)) and len(K1) == len(K2)
    R1, piv1 = linalg.rref(M, 3)
    R2, piv2 = linalg.rref(M.copy(), 3)
    assert (R1 == R2).all() and piv1 == piv2


def test_matpow_identity():
    M = np.array([[1, 1], [0, 1]], dtype=np.int64)
    P = linalg.matpow_mod(M, 5, 7)
    assert (P == np.array([[1, 5], [0, 1]])).all()
    assert (linalg.matpow_mod(M, 0, 7) == linalg.identity(2)).all()
