"""Exhaustive oracles for minimum distance and the weight hierarchy.

The hierarchy uses n - d_t = max{|R| : rank of the columns in R <= k - t}.
Column subsets are explored column by column with a partially reduced copy
of the generator carried along, so each include/exclude step costs one
elimination sweep instead of a fresh rank computation.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import WorkCapExceeded
from .galois import FieldSpec
from .linalg import combine

DEFAULT_SUBSET_CAP = 1 << 24
DEFAULT_CODEWORD_CAP = 1 << 26
_CHUNK = 4096


def max_subset_by_rank(F: FieldSpec, G: np.ndarray, cap: int = DEFAULT_SUBSET_CAP) -> list[int]:
    """best[rho] = largest column subset of G whose rank is exactly rho (-1 if none).

    G must have full row rank.
    """
    k, n = G.shape
    if (1 << n) > cap:
        raise WorkCapExceeded(1 << n, cap, "column subsets")
    best = np.full(k + 1, -1, dtype=np.int64)
    _expand(F, G[None].astype(np.int64), np.zeros(1, np.int64), np.zeros(1, np.int64), best)
    return best.tolist()


def _expand(F, M, rk, size, best):
    k = M.shape[1]
    while True:
        rem = M.shape[2]
        full = rk == k
        if full.any():
            # every further column is dependent
            np.maximum.at(best, rk[full], size[full] + rem)
            M, rk, size = M[~full], rk[~full], size[~full]
        if len(M) == 0:
            return
        if rem == 0:
            np.maximum.at(best, rk, size)
            return
        if len(M) > _CHUNK:
            for s in range(0, len(M), _CHUNK):
                _expand(F, M[s:s + _CHUNK], rk[s:s + _CHUNK], size[s:s + _CHUNK], best)
            return
        rows = np.arange(k)
        lead = M[:, :, 0]
        cand = (lead != 0) & (rows[None, :] >= rk[:, None])
        has = cand.any(axis=1)

        Mi = M[has]
        ri = rk[has]
        pi = cand[has].argmax(axis=1)
        idx = np.arange(len(Mi))
        top, other = Mi[idx, ri].copy(), Mi[idx, pi].copy()
        Mi[idx, ri], Mi[idx, pi] = other, top
        pivot_row = Mi[idx, ri]
        inv = F.vinv(pivot_row[:, 0])
        factors = F.vmul(Mi[:, :, 0], inv[:, None])
        factors[rows[None, :] <= ri[:, None]] = 0
        Mi = F.vsub(Mi, F.vmul(factors[:, :, None], pivot_row[:, None, :]))

        rest = M[:, :, 1:]
        M = np.concatenate([rest, Mi[:, :, 1:], rest[~has]])
        rk = np.concatenate([rk, ri + 1, rk[~has]])
        size = np.concatenate([size, size[has] + 1, size[~has] + 1])


def _full_rank_generator(code) -> np.ndarray:
    return code.generator_basis()


def brute_weight_hierarchy(code, t_max: int | None = None,
                           cap: int = DEFAULT_SUBSET_CAP) -> list[int]:
    """Exact d_1..d_t_max by scanning every column subset."""
    G = _full_rank_generator(code)
    k, n = G.shape
    t_max = k if t_max is None else min(t_max, k)
    best = max_subset_by_rank(code.field, G, cap)
    upto, running = [], -1
    for b in best:
        running = max(running, b)
        upto.append(running)
    return [n - upto[k - t] for t in range(1, t_max + 1)]


def _weight_blocks(F: FieldSpec, G: np.ndarray, cap: int):
    """Yield (weights, table, offset) covering every codeword, zero included.

    The span of the last rows is tabulated once.  Each block is that table
    shifted by one combination of the leading rows; a coordinate of
    table + offset vanishes exactly where the table equals -offset, so the
    weights come from a comparison and no field addition is needed.
    """
    k, n = G.shape
    total = F.q ** k
    if total > cap:
        raise WorkCapExceeded(total, cap, "codewords")
    low = 1
    while low < k and F.q ** (low + 1) * n <= (1 << 22):
        low += 1
    table = np.zeros((1, n), dtype=np.int64)
    for row in G[k - low:]:
        scaled = np.array([F.vmul(np.full(n, c, dtype=np.int64), row) for c in range(F.q)])
        table = F.vadd(table[:, None, :], scaled[None, :, :]).reshape(-1, n)
    dtype = np.uint8 if F.q <= 256 else np.int32
    table = table.astype(dtype)
    head = G[:k - low]
    for coeffs in itertools.product(range(F.q), repeat=k - low):
        offset = combine(F, list(coeffs), head) if len(head) else np.zeros(n, dtype=np.int64)
        target = F.vneg(offset).astype(dtype)
        yield (table != target[None, :]).sum(axis=1, dtype=np.int32), table, offset


def min_weight_by_enumeration(F: FieldSpec, G: np.ndarray,
                              cap: int = DEFAULT_CODEWORD_CAP) -> int:
    """Minimum weight over all q^k - 1 nonzero combinations of the rows of G."""
    best = G.shape[1] + 1
    for wts, _, _ in _weight_blocks(F, G, cap):
        wts = wts[wts > 0]
        if wts.size:
            best = min(best, int(wts.min()))
    return best


def min_weight_codeword(F: FieldSpec, G: np.ndarray, cap: int = DEFAULT_CODEWORD_CAP) -> np.ndarray:
    """A nonzero codeword of minimum weight, by enumeration."""
    best_w, best = G.shape[1] + 1, None
    for wts, table, offset in _weight_blocks(F, G, cap):
        wts[wts == 0] = best_w + 1
        j = int(wts.argmin())
        if wts[j] < best_w:
            best_w, best = int(wts[j]), F.vadd(table[j].astype(np.int64), offset)
    return best


def brute_min_distance(code, subset_cap: int = DEFAULT_SUBSET_CAP,
                       codeword_cap: int = DEFAULT_CODEWORD_CAP) -> int:
    """Exact minimum distance; both oracles run when both fit their caps and must agree."""
    F = code.field
    G = _full_rank_generator(code)
    k, n = G.shape
    results = []
    if (1 << n) <= subset_cap:
        results.append(brute_weight_hierarchy(code, 1, subset_cap)[0])
    if F.q ** k <= codeword_cap:
        results.append(min_weight_by_enumeration(F, G, codeword_cap))
    if not results:
        raise WorkCapExceeded(min(1 << n, F.q ** k), max(subset_cap, codeword_cap), "distance oracle")
    if len(set(results)) != 1:
        raise AssertionError(f"distance oracles disagree: {results}")
    return results[0]
