"""Exterior derivative, Dirac, Hodge, parity, connection and Witten operators.

Every operator is built from the elements of a :class:`Complex` in its
canonical order, so whole complexes, open sets and closed sets are treated
alike.  Integer operators are exact ``int64`` arrays; only the Witten
deformation is floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from scipy.linalg import block_diag

from .complex_core import Complex, as_simplex


@dataclass(frozen=True, eq=False)
class BlockMatrix:
    """A dense matrix together with its form-degree block boundaries.

    ``offsets[k]:offsets[k+1]`` indexes the ``k``-forms, so block ``k`` has
    size ``f_k`` (possibly zero).
    """

    matrix: np.ndarray
    offsets: tuple[int, ...]

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    @property
    def nblocks(self) -> int:
        return len(self.offsets) - 1

    def block(self, k: int, l: int | None = None) -> np.ndarray:
        """The ``(k, l)`` block; ``block(k)`` is the diagonal block ``(k, k)``."""
        l = k if l is None else l
        o = self.offsets
        if not (0 <= k < self.nblocks and 0 <= l < self.nblocks):
            return np.zeros((0, 0), dtype=self.matrix.dtype)
        return self.matrix[o[k]:o[k + 1], o[l]:o[l + 1]]

    @property
    def blocks(self) -> list[np.ndarray]:
        return [self.block(k) for k in range(self.nblocks)]


def incidence_sign(x: Sequence[int], y: Sequence[int]) -> int:
    """Orientation sign of the face ``y`` in ``x``, or 0 if not a facet.

    With ``v = x \\ y`` the sign is the signature of the permutation sorting
    ``(v, *y)``, which for ascending ``x`` is ``(-1)^position(v in x)``.
    """
    x, y = as_simplex(x), as_simplex(y)
    if len(x) != len(y) + 1 or not set(y).issubset(x):
        return 0
    (v,) = set(x) - set(y)
    return -1 if x.index(v) % 2 else 1


def exterior_derivative(S: Complex) -> BlockMatrix:
    """``d[i, j] = incidence_sign(S[i], S[j])``, strictly block lower triangular."""
    n = len(S)
    d = np.zeros((n, n), dtype=np.int64)
    index = {x: i for i, x in enumerate(S)}
    for i, x in enumerate(S):
        if len(x) == 1:
            continue
        for pos in range(len(x)):
            j = index.get(x[:pos] + x[pos + 1:])
            if j is not None:
                d[i, j] = -1 if pos % 2 else 1
    return BlockMatrix(d, S.offsets)


def derivative_blocks(S: Complex) -> list[np.ndarray]:
    """``d_k``, the map from ``k``-forms to ``(k+1)``-forms, for every degree."""
    d = exterior_derivative(S)
    return [d.block(k + 1, k) if k + 1 < d.nblocks
            else np.zeros((0, S.f_vector[k]), dtype=np.int64)
            for k in range(d.nblocks)]


def dirac(S: Complex) -> BlockMatrix:
    d = exterior_derivative(S).matrix
    return BlockMatrix(d + d.T, S.offsets)


def hodge(S: Complex) -> BlockMatrix:
    """Hodge Laplacian ``L = D^2``, block diagonal with blocks ``L_k``."""
    D = dirac(S).matrix
    return BlockMatrix(D @ D, S.offsets)


def hodge_blocks(S: Complex) -> list[np.ndarray]:
    """``L_k = d_k^T d_k + d_{k-1} d_{k-1}^T`` assembled from derivative blocks."""
    ds = derivative_blocks(S)
    out = []
    for k, dk in enumerate(ds):
        Lk = dk.T @ dk
        if k > 0:
            Lk = Lk + ds[k - 1] @ ds[k - 1].T
        out.append(Lk)
    return out


def beltrami(S: Complex) -> np.ndarray:
    return hodge(S).matrix


def direct_sum(*parts: Complex) -> BlockMatrix:
    """Hodge Laplacian of a disjoint union ``L_U ⊕ L_K``, ordered by part."""
    mats = [hodge(P).matrix for P in parts]
    M = block_diag(*mats).astype(np.int64) if mats else np.zeros((0, 0), dtype=np.int64)
    return BlockMatrix(M, (0, M.shape[0]))


def parity_operator(S: Complex) -> np.ndarray:
    return np.diag(np.where(S.dims() % 2 == 0, 1, -1)).astype(np.int64)


def connection_laplacian(S: Complex) -> np.ndarray:
    """``H[x, y] = 1`` if ``x`` and ``y`` intersect, else ``0``."""
    n = len(S)
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    labels = sorted({v for x in S for v in x})
    col = {v: i for i, v in enumerate(labels)}
    incidence = np.zeros((n, len(labels)), dtype=np.int64)
    for i, x in enumerate(S):
        incidence[i, [col[v] for v in x]] = 1
    return (incidence @ incidence.T > 0).astype(np.int64)


def unsigned_hodge(S: Complex) -> np.ndarray:
    """``|D|^2`` with ``|D|`` the entrywise absolute Dirac matrix."""
    D = np.abs(dirac(S).matrix)
    return D @ D


def witten_deform(d, g, s: float) -> np.ndarray:
    """``d_s = e^{-s g} d e^{s g}`` for a weight ``g`` on the elements.

    ``g`` is a sequence or a mapping ``index -> value`` (missing indices
    weigh 0).
    """
    d = np.asarray(d, dtype=float)
    n = d.shape[0]
    if isinstance(g, Mapping):
        w = np.zeros(n)
        for i, v in g.items():
            w[int(i)] = v
    else:
        w = np.asarray(g, dtype=float)
    if w.shape != (n,):
        raise ValueError(f"weight has shape {w.shape}, expected ({n},)")
    if not (np.all(np.isfinite(w)) and np.isfinite(s)):
        raise ValueError("weights and s must be finite")
    e = np.exp(s * w)
    return d * e[None, :] / e[:, None]


def witten_hodge(S: Complex, g, s: float) -> BlockMatrix:
    """Deformed Laplacian ``(d_s + d_s^T)^2``, same block layout as ``hodge``."""
    ds = witten_deform(exterior_derivative(S).matrix, g, s)
    D = ds + ds.T
    return BlockMatrix(D @ D, S.offsets)


def element_weight(S: Complex, chosen) -> np.ndarray:
    """0/1 weight vector: 1 on the simplices in ``chosen``."""
    marks = {as_simplex(x) for x in chosen}
    return np.array([1.0 if x in marks else 0.0 for x in S])


def restrict(M: np.ndarray, G: Complex, S) -> np.ndarray:
    """Principal submatrix of an operator on ``G`` indexed by ``S``."""
    idx = [G.index(x) for x in S]
    return np.asarray(M)[np.ix_(idx, idx)]
