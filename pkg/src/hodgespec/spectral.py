"""Spectra, Betti vectors, pseudo determinants and torsion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import exact
from .complex_core import Complex
from .operators import derivative_blocks, dirac, hodge, hodge_blocks

# charpoly-based pseudo determinants stay exact up to this size; larger
# matrices fall back to a float product of eigenvalues
EXACT_MAX_N = 400
JACOBI_MAX_SWEEPS = 64


def zero_tolerance(n: int, lam_max: float) -> float:
    """Cutoff below which an eigenvalue of an integer PSD matrix counts as 0."""
    return max(n, 1) * 2.0 ** -45 * max(1.0, abs(lam_max))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues with the zero cutoff used to classify them."""

    values: np.ndarray
    zero_tol: float
    pad_len: int | None = None

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    @property
    def max(self) -> float:
        return float(self.values[-1]) if len(self.values) else 0.0

    @property
    def nullity(self) -> int:
        return int(np.sum(np.abs(self.values) <= self.zero_tol))

    def nonzero(self) -> np.ndarray:
        return self.values[np.abs(self.values) > self.zero_tol]

    def padded(self, n: int) -> Spectrum:
        return pad_left(self, n)


def _check_symmetric(M: np.ndarray) -> None:
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(M).max())) if M.size else 1.0
    if M.size and float(np.abs(M - M.T).max()) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")


def jacobi_eigenvalues(M, tol: float = 1e-12, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Cyclic Jacobi rotations; stops once off(A) <= tol * ||A||_F."""
    A = np.array(M, dtype=float)
    n = A.shape[0]
    if n < 2:
        return np.diag(A).copy()
    target = tol * np.linalg.norm(A)
    for _ in range(max_sweeps):
        off = math.sqrt(max(float(np.sum(A * A) - np.sum(np.diag(A) ** 2)), 0.0))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < 1e-150 * abs(diff):  # theta would overflow; t ~ 1/(2 theta)
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * ap - s * aq
                A[:, q] = s * ap + c * aq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
    return np.sort(np.diag(A))


def eigenvalues_sym(M, zero_tol: float | None = None, method: str = "lapack") -> Spectrum:
    """All eigenvalues of a symmetric matrix in ascending order.

    ``method="jacobi"`` runs the in-house cyclic Jacobi solver instead of
    LAPACK's ``syevd``; both meet the same accuracy contract.
    """
    A = np.asarray(M, dtype=float)
    _check_symmetric(A)
    n = A.shape[0]
    if n == 0:
        vals = np.zeros(0)
    elif method == "lapack":
        vals = np.linalg.eigvalsh(A)
    elif method == "jacobi":
        vals = jacobi_eigenvalues(A)
    else:
        raise ValueError(f"unknown method {method!r}")
    if zero_tol is None:
        zero_tol = zero_tolerance(n, float(np.abs(vals).max()) if n else 0.0)
    return Spectrum(np.asarray(vals, dtype=float), zero_tol)


def pad_left(spec: Spectrum, n: int) -> Spectrum:
    """Prepend ``n - len(spec)`` zeros to a PSD spectrum."""
    m = len(spec)
    if n < m:
        raise ValueError(f"cannot pad a spectrum of length {m} to {n}")
    if m and spec.values[0] < -spec.zero_tol:
        raise ValueError(f"negative eigenvalue {spec.values[0]!r}; padding would break the order")
    vals = np.concatenate([np.zeros(n - m), np.clip(spec.values, 0.0, None)])
    return Spectrum(vals, spec.zero_tol, pad_len=n)


def merge(spectra, zero_tol: float | None = None) -> Spectrum:
    """Union of several spectra as one ascending spectrum."""
    spectra = list(spectra)
    vals = np.sort(np.concatenate([s.values for s in spectra])) if spectra else np.zeros(0)
    if zero_tol is None:
        zero_tol = max((s.zero_tol for s in spectra), default=zero_tolerance(0, 0.0))
    return Spectrum(vals, zero_tol)


def spectra_of_blocks(blocks) -> list[Spectrum]:
    """Spectrum of each diagonal block, sharing the cutoff of the whole matrix."""
    raw = [eigenvalues_sym(B, zero_tol=0.0).values for B in blocks]
    lam = max((float(np.abs(v).max()) for v in raw if v.size), default=0.0)
    tol = zero_tolerance(sum(len(v) for v in raw), lam)
    return [Spectrum(v, tol) for v in raw]


def block_spectra(S: Complex) -> list[Spectrum]:
    return spectra_of_blocks(hodge_blocks(S))


def hodge_spectrum(S: Complex) -> Spectrum:
    return merge(block_spectra(S))


def dirac_spectrum(S: Complex) -> Spectrum:
    return eigenvalues_sym(dirac(S).matrix)


def betti_exact(S: Complex) -> tuple[int, ...]:
    """``b_k = f_k - rank(L_k)`` with exact integer rank."""
    return tuple(B.shape[0] - exact.rank_exact(B) for B in hodge_blocks(S))


def betti_numeric(S: Complex) -> tuple[int, ...]:
    return tuple(s.nullity for s in block_spectra(S))


def _lowest_nonzero(coeffs: list[int]) -> tuple[int, int]:
    for j, c in enumerate(coeffs):
        if c != 0:
            return j, c
    raise ValueError("characteristic polynomial cannot vanish")


def pseudo_det(M, exact_max_n: int = EXACT_MAX_N):
    """Product of the non-zero eigenvalues of a symmetric integer matrix.

    Read off the lowest non-zero coefficient ``c_j`` of ``det(xI - M)`` as
    ``(-1)^(n-j) c_j``; a 0x0 or all-zero matrix gives 1.  Returns an ``int``
    when computed exactly and a ``float`` for matrices above
    ``exact_max_n``.
    """
    A = np.asarray(M)
    n = A.shape[0]
    if n == 0:
        return 1
    if n > exact_max_n:
        spec = eigenvalues_sym(A)
        nz = spec.nonzero()
        return float(np.prod(nz)) if nz.size else 1.0
    j, c = _lowest_nonzero(exact.charpoly(A))
    return (-1) ** (n - j) * c


def pseudo_det_float(M) -> float:
    nz = eigenvalues_sym(M).nonzero()
    return float(np.prod(nz)) if nz.size else 1.0


def _product(values):
    exact_all = all(isinstance(v, (int, Fraction)) for v in values)
    out = 1 if exact_all else 1.0
    for v in values:
        out = out * v
    return out


def hodge_pseudo_det(S: Complex, exact_max_n: int = EXACT_MAX_N):
    """``Det(L)`` as the product of block pseudo determinants."""
    return _product([pseudo_det(B, exact_max_n) for B in hodge_blocks(S)])


def trace(M) -> int:
    return int(np.trace(np.asarray(M, dtype=np.int64))) if np.asarray(M).size else 0


def forest_det(M) -> int:
    """``det(M + I)``, exact."""
    A = np.asarray(M, dtype=np.int64)
    return exact.det_exact(A + np.eye(A.shape[0], dtype=np.int64))


def hodge_forest_det(S: Complex) -> int:
    return _product([forest_det(B) for B in hodge_blocks(S)])


class Torsion(NamedTuple):
    value: Fraction
    super_pdet: Fraction

    @property
    def agree(self) -> bool:
        return self.value == self.super_pdet


def _power(x, e: int) -> Fraction:
    return Fraction(x) ** e


def analytic_torsion(G: Complex) -> Torsion:
    """``prod_k Det(L_k)^(k (-1)^(k+1))`` and the super pseudo determinant.

    The second value is ``prod_k Det(d_k^T d_k)^((-1)^k)``; both are
    returned so a disagreement is visible rather than resolved silently.
    """
    value = Fraction(1)
    for k, B in enumerate(hodge_blocks(G)):
        value *= _power(pseudo_det(B), k * (-1) ** (k + 1))
    sup = Fraction(1)
    for k, dk in enumerate(derivative_blocks(G)):
        sup *= _power(pseudo_det(dk.T @ dk), (-1) ** k)
    return Torsion(value, sup)


def supertrace_heat(S: Complex, t: float) -> float:
    """``str(exp(-t L)) = sum_k (-1)^k tr exp(-t L_k)``."""
    return float(sum((-1) ** k * np.exp(-t * s.values).sum() for k, s in enumerate(block_spectra(S))))


def hodge_full_spectrum(S: Complex) -> Spectrum:
    """Eigenvalues of the assembled ``L`` (not via blocks)."""
    return eigenvalues_sym(hodge(S).matrix)
