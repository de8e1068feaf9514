"""Exact integer linear algebra.

Rank uses fraction-free (Bareiss) elimination over Python integers.
Determinants and characteristic polynomials are computed modulo a set of
word-sized primes and lifted with the Chinese remainder theorem once the
product of the primes exceeds twice an a-priori coefficient bound, so the
result is exact.  :func:`charpoly_berkowitz` is a division-free reference
for small matrices.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

# p < 2**26 keeps products below 2**52, and sums of up to 2**11 such
# products inside int64
_PRIME_CEILING = 1 << 26
MODULAR_MAX_N = 2000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    f = 3
    while f <= r:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _prime(i: int) -> int:
    """The ``i``-th prime below ``2**26``, counting down."""
    start = _PRIME_CEILING - 1 if i == 0 else _prime(i - 1) - 2
    p = start if start % 2 else start - 1
    while not _is_prime(p):
        p -= 2
    return p


def _as_int_matrix(M) -> np.ndarray:
    A = np.asarray(M)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if A.dtype == object:
        return A
    if not np.issubdtype(A.dtype, np.integer):
        if not np.all(A == np.round(A)):
            raise ValueError("exact routines need integer entries")
        A = A.astype(np.int64)
    return A


def rank_exact(M) -> int:
    """Rank over the rationals by fraction-free Gaussian elimination."""
    A = np.array(_as_int_matrix(M), dtype=object)
    m, n = A.shape
    if m == 0 or n == 0:
        return 0
    r = 0
    prev = 1
    for c in range(n):
        nz = np.flatnonzero(A[r:, c] != 0)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = A[r, c]
        if r + 1 < m:
            A[r + 1:, c + 1:] = (piv * A[r + 1:, c + 1:]
                                 - np.outer(A[r + 1:, c], A[r, c + 1:])) // prev
            A[r + 1:, c] = 0
        prev = piv
        r += 1
        if r == m:
            break
    return r


def det_bareiss(M) -> int:
    """Determinant by fraction-free elimination; exact, O(n^3) big-int ops."""
    A = np.array(_as_int_matrix(M), dtype=object)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        nz = np.flatnonzero(A[c:, c] != 0)
        if nz.size == 0:
            return 0
        p = c + int(nz[0])
        if p != c:
            A[[c, p]] = A[[p, c]]
            sign = -sign
        A[c + 1:, c + 1:] = (A[c, c] * A[c + 1:, c + 1:]
                             - np.outer(A[c + 1:, c], A[c, c + 1:])) // prev
        prev = A[c, c]
    return sign * int(A[n - 1, n - 1])


def _det_mod(A: np.ndarray, p: int) -> int:
    A = A % p
    n = A.shape[0]
    det = 1
    for c in range(n):
        nz = np.flatnonzero(A[c:, c])
        if nz.size == 0:
            return 0
        r = c + int(nz[0])
        if r != c:
            A[[c, r]] = A[[r, c]]
            det = -det
        piv = int(A[c, c])
        det = det * piv % p
        if c + 1 < n:
            f = A[c + 1:, c] * pow(piv, -1, p) % p
            A[c + 1:, c:] = (A[c + 1:, c:] - np.outer(f, A[c, c:]) % p) % p
    return det % p


def _hessenberg_charpoly_mod(A: np.ndarray, p: int) -> list[int]:
    """Coefficients (low order first) of det(xI - A) mod p."""
    H = A % p
    n = H.shape[0]
    for c in range(n - 2):
        nz = np.flatnonzero(H[c + 1:, c])
        if nz.size == 0:
            continue
        r = c + 1 + int(nz[0])
        if r != c + 1:
            H[[c + 1, r]] = H[[r, c + 1]]
            H[:, [c + 1, r]] = H[:, [r, c + 1]]
        inv = pow(int(H[c + 1, c]), -1, p)
        f = H[c + 2:, c] * inv % p
        if not f.any():
            continue
        # row_i -= f_i row_{c+1}, then col_{c+1} += sum_i f_i col_i
        H[c + 2:, :] = (H[c + 2:, :] - np.outer(f, H[c + 1, :]) % p) % p
        H[:, c + 1] = (H[:, c + 1] + (H[:, c + 2:] * f) .sum(axis=1) % p) % p
    # Hessenberg recurrence: P[m] is the charpoly of the leading m x m block
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    for m in range(1, n + 1):
        prev = P[m - 1]
        row = np.zeros(n + 1, dtype=np.int64)
        row[1:] = prev[:-1]
        row = (row - int(H[m - 1, m - 1]) * prev % p) % p
        t = 1
        coef = np.zeros(m - 1, dtype=np.int64)
        for i in range(m - 1, 0, -1):
            t = t * int(H[i, i - 1]) % p
            if t == 0:
                break
            coef[i - 1] = int(H[i - 1, m - 1]) * t % p
        if m > 1 and coef.any():
            row = (row - (coef @ P[: m - 1]) % p) % p
        P[m] = row
    return [int(v) for v in P[n]]


def _crt_lift(residues: list[list[int]] | list[int], primes: list[int]):
    """Combine residues into symmetric representatives modulo prod(primes)."""
    scalar = not isinstance(residues[0], list)
    rows = [[r] for r in residues] if scalar else residues
    width = len(rows[0])
    value = [0] * width
    modulus = 1
    for res, p in zip(rows, primes):
        inv = pow(modulus % p, -1, p)
        for j in range(width):
            t = (res[j] - value[j]) * inv % p
            value[j] += modulus * t
        modulus *= p
    half = modulus // 2
    value = [v - modulus if v > half else v for v in value]
    return value[0] if scalar else value


def _primes_for(bits: float) -> list[int]:
    primes = []
    acc = 0.0
    while acc <= bits + 2:
        p = _prime(len(primes))
        primes.append(p)
        acc += math.log2(p)
    return primes


def _to_int64(A: np.ndarray) -> np.ndarray:
    if A.dtype == object:
        return A
    return A.astype(np.int64)


def det_exact(M) -> int:
    """Exact integer determinant (modular with CRT, Hadamard-bounded)."""
    A = _as_int_matrix(M)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    if A.dtype == object or n > MODULAR_MAX_N:
        return det_bareiss(A)
    A = A.astype(np.int64)
    norms = np.sqrt((A.astype(float) ** 2).sum(axis=1))
    if np.any(norms == 0):
        return 0
    bits = float(np.log2(norms).sum())
    primes = _primes_for(bits)
    return _crt_lift([_det_mod(A.copy(), p) for p in primes], primes)


def charpoly(M) -> list[int]:
    """Exact coefficients of ``det(xI - M)``, lowest order first."""
    A = _as_int_matrix(M)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("characteristic polynomial needs a square matrix")
    if n == 0:
        return [1]
    if A.dtype == object or n > MODULAR_MAX_N:
        return charpoly_berkowitz(A)
    A = A.astype(np.int64)
    rho = float(np.abs(A).sum(axis=1).max())
    # |e_k(spectrum)| <= C(n,k) rho^k <= (1 + rho)^n
    bits = n * math.log2(1.0 + rho)
    primes = _primes_for(bits)
    return _crt_lift([_hessenberg_charpoly_mod(A.copy(), p) for p in primes], primes)


def charpoly_berkowitz(M) -> list[int]:
    """Division-free characteristic polynomial, lowest order first."""
    A = [[int(v) for v in row] for row in np.asarray(M, dtype=object)]
    n = len(A)
    if n == 0:
        return [1]
    # V holds coefficients highest order first
    V = [1, -A[0][0]]
    for r in range(1, n):
        R = A[r][:r]
        S = [A[i][r] for i in range(r)]
        C = [1, -A[r][r]]
        vec = S
        for _ in range(r):
            C.append(-sum(a * b for a, b in zip(R, vec)))
            vec = [sum(A[i][j] * vec[j] for j in range(r)) for i in range(r)]
        V = [sum(C[i - j] * V[j] for j in range(len(V)) if 0 <= i - j < len(C))
             for i in range(r + 2)]
    return V[::-1]
