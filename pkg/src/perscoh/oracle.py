"""Independent brute-force barcode computation via dense ranks over Z/p.

This module deliberately shares no code with the reduction path: it
stores boundary matrices densely (numpy integer arrays) and computes
persistent Betti numbers from ranks of boundary submatrices and a
stacked cycle-basis matrix, then recovers interval multiplicities by
inclusion-exclusion.  Intended for small complexes in tests and the
CLI ``--oracle`` cross-check.
"""

from __future__ import annotations

from bisect import bisect_right

import numpy as np

from .complexes import FilteredComplex
from .persistence import Diagram, Interval, INF


def dense_rank(M, p: int) -> int:
    """Rank over Z/p by Gaussian elimination on a dense copy."""
    A = np.asarray(M, dtype=np.int64) % p
    if A.size == 0:
        return 0
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        below = np.nonzero(A[rank + 1:, c])[0]
        if below.size:
            block = A[rank + 1:]
            block[below] = (block[below] - np.outer(block[below, c], A[rank])) % p
        rank += 1
        if rank == rows:
            break
    return rank


def nullspace_basis(M, p: int) -> np.ndarray:
    """Columns spanning the kernel of M over Z/p (reduced row echelon form)."""
    A = np.asarray(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        if rank < rows:
            nz = np.nonzero(A[rank:, c])[0]
        else:
            nz = np.empty(0, dtype=np.int64)
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != rank]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[rank])) % p
        pivots.append(c)
        rank += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, c in enumerate(free):
        basis[c, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-A[r, c]) % p
    return basis


class _RankTables:
    """Cached per-dimension boundary blocks and rank quantities."""

    def __init__(self, K: FilteredComplex):
        self.p = K.field.p
        self.n = K.n
        dims = K.dims()
        self.max_dim = max(dims) if dims else 0
        # cells[k] = ascending indices of k-cells; pos[j] = position within its dim
        self.cells: dict[int, list[int]] = {}
        for j, d in enumerate(dims, start=1):
            self.cells.setdefault(d, []).append(j)
        # block[k]: boundary columns of k-cells over (k-1)-cell rows
        self.block: dict[int, np.ndarray] = {}
        for k, cols in self.cells.items():
            rows = self.cells.get(k - 1, [])
            row_pos = {j: i for i, j in enumerate(rows)}
            A = np.zeros((len(rows), len(cols)), dtype=np.int64)
            for cpos, j in enumerate(cols):
                for i, coef in K.boundary(j):
                    A[row_pos[i], cpos] = coef
            self.block[k] = A
        self._zbasis: dict[tuple[int, int], np.ndarray] = {}
        self._bdim: dict[tuple[int, int], int] = {}
        self._zb: dict[tuple[int, int, int], int] = {}

    def kcells(self, k: int) -> list[int]:
        return self.cells.get(k, [])

    def zbasis(self, k: int, mz: int) -> np.ndarray:
        key = (k, mz)
        if key not in self._zbasis:
            block = self.block.get(k)
            if block is None:
                block = np.zeros((0, 0), dtype=np.int64)
            self._zbasis[key] = nullspace_basis(block[:, :mz], self.p)
        return self._zbasis[key]

    def bdim(self, k: int, mb: int) -> int:
        key = (k, mb)
        if key not in self._bdim:
            block = self.block.get(k + 1)
            if block is None or mb == 0:
                self._bdim[key] = 0
            else:
                self._bdim[key] = dense_rank(block[:, :mb], self.p)
        return self._bdim[key]

    def rank_image(self, k: int, mz: int, mb: int) -> int:
        """rank of H_k(X_p) -> H_k(X_q) with mz k-cells and mb (k+1)-cells present."""
        key = (k, mz, mb)
        if key in self._zb:
            return self._zb[key]
        nk = len(self.kcells(k))
        zb = self.zbasis(k, mz)
        padded = np.zeros((nk, zb.shape[1]), dtype=np.int64)
        padded[:mz, :] = zb
        parts = [padded]
        block_b = self.block.get(k + 1)
        if block_b is not None and mb:
            parts.append(block_b[:, :mb])
        stacked = np.hstack(parts)
        r = dense_rank(stacked, self.p) - self.bdim(k, mb)
        self._zb[key] = r
        return r

    def r(self, k: int, p_idx: int, q_idx: int) -> int:
        if p_idx <= 0:
            return 0
        mz = bisect_right(self.kcells(k), p_idx)
        mb = bisect_right(self.kcells(k + 1), q_idx)
        return self.rank_image(k, mz, mb)


def persistent_betti(K: FilteredComplex, k: int, p_idx: int, q_idx: int) -> int:
    """Rank of the map H_k(X_p) -> H_k(X_q) induced by inclusion."""
    if not 1 <= p_idx <= q_idx <= K.n:
        raise ValueError(f"need 1 <= p <= q <= n, got p={p_idx}, q={q_idx}, n={K.n}")
    return _RankTables(K).r(k, p_idx, q_idx)


def oracle_barcode(K: FilteredComplex) -> Diagram:
    """Absolute-homology barcode by inclusion-exclusion on persistent Betti ranks.

    The multiplicity of the index interval <p, q> in dimension k is
    r(p,q) - r(p,q+1) - r(p-1,q) + r(p-1,q+1), with q = n standing for
    intervals still alive at the end.  Zero-length intervals are kept
    (index-level output).
    """
    tables = _RankTables(K)
    n = K.n
    intervals: list[Interval] = []
    for k in sorted(tables.cells):
        births = tables.kcells(k)
        deaths = [q_next - 1 for q_next in tables.kcells(k + 1)]
        for b in births:
            for q in deaths:
                if q < b:
                    continue
                mult = (tables.r(k, b, q) - tables.r(k, b, q + 1)
                        - tables.r(k, b - 1, q) + tables.r(k, b - 1, q + 1))
                if mult < 0:
                    raise ArithmeticError(
                        f"negative multiplicity at k={k}, <{b},{q}>")
                for _ in range(mult):
                    intervals.append(_index_interval(K, k, b, q))
            mult = tables.r(k, b, n) - tables.r(k, b - 1, n)
            if mult < 0:
                raise ArithmeticError(f"negative multiplicity at k={k}, <{b},inf>")
            for _ in range(mult):
                intervals.append(_index_interval(K, k, b, n))
    return Diagram("abs_hom", intervals)


def _index_interval(K: FilteredComplex, k: int, p: int, q: int) -> Interval:
    birth = K.value(p)
    death = INF if q == K.n else K.value(q + 1)
    return Interval(k, p, q, birth, death)
