"""Gaussian elimination over GF(q) on int64 matrices of canonical elements."""

from __future__ import annotations

import numpy as np

from .galois import FieldSpec


def row_reduce(F: FieldSpec, M, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; pivots are searched only in the first ``ncols`` columns."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = R.shape
    ncols = cols if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = F.vmul(F.inv(int(R[r, c])), R[r])
        factors = R[:, c].copy()
        factors[r] = 0
        if factors.any():
            R = F.vsub(R, F.vmul(factors[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: FieldSpec, M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    # eliminate along the shorter side
    if M.shape[0] > M.shape[1]:
        M = M.T
    return len(row_reduce(F, M)[1])


def left_kernel(F: FieldSpec, M) -> np.ndarray:
    """Basis (rows, in reduced echelon form) of {c : c @ M = 0}."""
    M = np.asarray(M, dtype=np.int64)
    rows, cols = M.shape
    aug = np.concatenate([M, np.eye(rows, dtype=np.int64)], axis=1)
    R, pivots = row_reduce(F, aug, ncols=cols)
    K = R[len(pivots):, cols:]
    if len(K) == 0:
        return np.zeros((0, rows), dtype=np.int64)
    return row_reduce(F, K)[0]


def solve_left(F: FieldSpec, M, b) -> np.ndarray | None:
    """Some c with c @ M = b, or None when the system is inconsistent."""
    M = np.asarray(M, dtype=np.int64)
    rows, cols = M.shape
    aug = np.concatenate([M.T, np.asarray(b, dtype=np.int64)[:, None]], axis=1)
    R, pivots = row_reduce(F, aug, ncols=rows)
    if R[len(pivots):, rows].any():
        return None
    c = np.zeros(rows, dtype=np.int64)
    for r, p in enumerate(pivots):
        c[p] = R[r, rows]
    return c


def combine(F: FieldSpec, coeffs, M) -> np.ndarray:
    """coeffs @ M over the field; coeffs may be a vector or a batch of vectors."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    M = np.asarray(M, dtype=np.int64)
    if coeffs.ndim == 1:
        return F.vdot(coeffs.tolist(), M)
    out = np.zeros((coeffs.shape[0], M.shape[1]), dtype=np.int64)
    for t in range(M.shape[0]):
        out = F.vadd(out, F.vmul(coeffs[:, t:t + 1], M[t][None, :]))
    return out
