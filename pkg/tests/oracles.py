"""Reference computations written independently of the library routines."""

from fractions import Fraction
from itertools import combinations

import numpy as np


def rational_rank(M) -> int:
    """Plain Gaussian elimination over Fractions with full row scans."""
    rows = [[Fraction(int(v)) for v in row] for row in np.asarray(M)]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rational_det(M) -> Fraction:
    rows = [[Fraction(int(v)) for v in row] for row in np.asarray(M)]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return det


def faddeev_leverrier(M) -> list[int]:
    """Coefficients of det(xI - M), lowest order first, via Newton traces."""
    A = [[Fraction(int(v)) for v in row] for row in np.asarray(M)]
    n = len(A)
    if n == 0:
        return [1]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk = A (M_{k-1} + c_{n-k+1} I)
        prev = [[Mk[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(A[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(Mk[i][i] for i in range(n)) / k
    return [int(c) for c in coeffs]


def brute_force_cliques(vertices, edges):
    adj = {frozenset(e) for e in edges}
    vs = sorted(vertices)
    out = []
    for r in range(1, len(vs) + 1):
        for c in combinations(vs, r):
            if all(frozenset(p) in adj for p in combinations(c, 2)):
                out.append(c)
    return out


def spanning_tree_count(vertices, edges) -> int:
    """Count spanning trees by testing every (|V|-1)-edge subset."""
    vs = list(vertices)
    count = 0
    for sub in combinations(edges, len(vs) - 1):
        parent = {v: v for v in vs}

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        ok = True
        for u, v in sub:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        count += ok
    return count


def hodge_blocks_by_hand(elements):
    """L_k from a boundary matrix built with explicit sign bookkeeping."""
    elements = [tuple(x) for x in elements]
    top = max((len(x) for x in elements), default=0)
    by_dim = [[x for x in elements if len(x) == k + 1] for k in range(top)]
    ds = []
    for k in range(top):
        rows = by_dim[k + 1] if k + 1 < top else []
        d = np.zeros((len(rows), len(by_dim[k])), dtype=np.int64)
        for i, x in enumerate(rows):
            for j, y in enumerate(by_dim[k]):
                if set(y) <= set(x):
                    (v,) = set(x) - set(y)
                    perm = [v] + list(y)
                    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
                    d[i, j] = (-1) ** inversions
        ds.append(d)
    blocks = []
    for k in range(top):
        L = ds[k].T @ ds[k]
        if k > 0:
            L = L + ds[k - 1] @ ds[k - 1].T
        blocks.append(L)
    return blocks
