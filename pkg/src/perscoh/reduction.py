"""R = DV reductions: the column, row, and live-cocycle algorithms.

All three consume a strictly upper-triangular matrix over Z/p.  The
column and row algorithms return a full :class:`Decomposition` and are
entry-identical on every input.  The live-cocycle algorithm
(:func:`pcoh`) expects the anti-transpose of a boundary matrix; it
sweeps the original cell order, keeps only the basis of live cocycles,
and reports pairs, essential indices, and cocycle chains in the
anti-transposed indexing, where they coincide with the row algorithm's
output on the same input.

Every coefficient multiply-add feeds the global counter in
:mod:`perscoh.core`; each reduction also tracks its own peak stored
term count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SparseMatrix, anti_transpose
from .core import Chain, Field, add_ops, chain_axpy, field_inv, op_count


@dataclass
class Decomposition:
    R: SparseMatrix
    V: SparseMatrix | None
    low_of: dict[int, int]
    ops: int = 0
    peak_elements: int = 0


@dataclass
class VerifyReport:
    ok: bool
    message: str
    location: tuple[int, int] | None = None


@dataclass
class PcohResult:
    """Output of :func:`pcoh`, in the input matrix's own indexing.

    ``pair_cocycles[k]`` is the cocycle that died at ``pairs[k]``;
    ``essential_cocycles[k]`` is the final live cocycle born at
    ``essential[k]``.
    """

    pairs: list[tuple[int, int]]
    essential: list[int]
    pair_cocycles: list[Chain]
    essential_cocycles: list[Chain]
    ops: int = 0
    peak_elements: int = 0

    @property
    def cocycles(self) -> list[Chain]:
        return self.pair_cocycles + self.essential_cocycles


def phcol(D: SparseMatrix, field: Field, keep_V: bool = True,
          dim_filter: int | None = None,
          dims: list[int] | None = None,
          engine: str = "auto") -> Decomposition:
    """Column algorithm: reduce columns left to right.

    With ``dim_filter`` set, only columns of cells of that dimension
    are reduced (``dims`` gives the cell dimensions, 1-based order);
    the other columns are treated as zero.

    ``engine`` selects the column representation: ``auto`` uses the
    bitmask path when it applies (Z/2, no V, no filter), ``generic``
    forces term lists, ``bits`` forces bitmasks.  Both engines produce
    identical output and counters; the knob exists for tests.
    """
    if dim_filter is not None and dims is None:
        raise ValueError("dim_filter requires the cell dimensions")
    if engine not in ("auto", "generic", "bits"):
        raise ValueError(f"unknown engine {engine!r}")
    p = field.p
    bits_ok = field.p == 2 and not keep_V and dim_filter is None
    if engine == "bits" and not bits_ok:
        raise ValueError("bits engine needs p = 2, keep_V off, no dim_filter")
    if bits_ok and engine != "generic":
        return _phcol_gf2(D)
    n = D.n
    ops_before = op_count()
    R: list[Chain] = [[]]
    for j in range(1, n + 1):
        if dim_filter is not None and dims[j - 1] != dim_filter:
            R.append([])
        else:
            R.append(list(D.cols[j]))
    V: list[Chain] | None = None
    if keep_V:
        V = [[]] + [[(j, 1)] for j in range(1, n + 1)]

    total = sum(len(c) for c in R) + (n if keep_V else 0)
    peak = total
    low_to_col: dict[int, int] = {}
    for i in range(1, n + 1):
        col = R[i]
        while col:
            low = col[-1][0]
            j = low_to_col.get(low)
            if j is None:
                break
            c = (col[-1][1] * field_inv(R[j][-1][1], p)) % p
            new = chain_axpy(p - c, R[j], col, p)
            total += len(new) - len(col)
            col = new
            if keep_V:
                newv = chain_axpy(p - c, V[j], V[i], p)
                total += len(newv) - len(V[i])
                V[i] = newv
            if total > peak:
                peak = total
        R[i] = col
        if col:
            low_to_col[col[-1][0]] = i

    low_of = {j: R[j][-1][0] for j in range(1, n + 1) if R[j]}
    return Decomposition(SparseMatrix(n, R),
                         SparseMatrix(n, V) if keep_V else None,
                         low_of, op_count() - ops_before, peak)


def _phcol_gf2(D: SparseMatrix) -> Decomposition:
    """Column algorithm over Z/2 on bitmask columns (barcode-only path).

    Row ``i`` is bit ``i - 1``, so ``int.bit_length`` is the low map
    and ``int.bit_count`` the stored term count.  Pivot sequence, op
    count, and peak count are identical to the generic path.
    """
    n = D.n
    cols = [0] * (n + 1)
    for j in range(1, n + 1):
        acc = 0
        for i, _ in D.cols[j]:
            acc |= 1 << (i - 1)
        cols[j] = acc

    ops = 0
    total = sum(c.bit_count() for c in cols)
    peak = total
    low_to_col: dict[int, int] = {}
    for i in range(1, n + 1):
        col = cols[i]
        while col:
            low = col.bit_length()
            j = low_to_col.get(low)
            if j is None:
                break
            other = cols[j]
            ops += other.bit_count()
            before = col.bit_count()
            col ^= other
            total += col.bit_count() - before
            if total > peak:
                peak = total
        cols[i] = col
        if col:
            low_to_col[col.bit_length()] = i

    add_ops(ops)
    R = SparseMatrix(n)
    low_of: dict[int, int] = {}
    for j in range(1, n + 1):
        col = cols[j]
        if col:
            R.cols[j] = [(i + 1, 1) for i in _bit_indices(col)]
            low_of[j] = col.bit_length()
    return Decomposition(R, None, low_of, ops, peak)


def _bit_indices(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def phrow(D: SparseMatrix, field: Field, keep_V: bool = True,
          snapshot=None) -> Decomposition:
    """Row algorithm: sweep rows bottom-up, reducing each row's low
    columns against the smallest-index one.

    ``snapshot(k, R, V)`` is called after the k-th row iteration
    (k = 1 processes row n) with live matrix views; copy anything kept.
    """
    p = field.p
    n = D.n
    ops_before = op_count()
    R: list[Chain] = [[]] + [list(D.cols[j]) for j in range(1, n + 1)]
    V: list[Chain] | None = None
    if keep_V:
        V = [[]] + [[(j, 1)] for j in range(1, n + 1)]

    total = sum(len(c) for c in R) + (n if keep_V else 0)
    peak = total
    bucket: dict[int, list[int]] = {}
    for j in range(1, n + 1):
        if R[j]:
            bucket.setdefault(R[j][-1][0], []).append(j)

    R_view = SparseMatrix(n, R)
    V_view = SparseMatrix(n, V) if keep_V else None
    low_of: dict[int, int] = {}
    for k, i in enumerate(range(n, 0, -1), start=1):
        cols = sorted(bucket.pop(i, []))
        if cols:
            piv = cols[0]
            low_of[piv] = i
            for j in cols[1:]:
                c = (R[j][-1][1] * field_inv(R[piv][-1][1], p)) % p
                new = chain_axpy(p - c, R[piv], R[j], p)
                total += len(new) - len(R[j])
                R[j] = new
                if keep_V:
                    newv = chain_axpy(p - c, V[piv], V[j], p)
                    total += len(newv) - len(V[j])
                    V[j] = newv
                if total > peak:
                    peak = total
                if new:
                    bucket.setdefault(new[-1][0], []).append(j)
        if snapshot is not None:
            snapshot(k, R_view, V_view)

    return Decomposition(R_view, V_view, low_of,
                         op_count() - ops_before, peak)


def pcoh(Dperp: SparseMatrix, field: Field, snapshot=None) -> PcohResult:
    """Live-cocycle algorithm on the anti-transpose of a boundary matrix.

    Sweeps the underlying cells in original filtration order; at each
    step the entering cell either starts a new live cocycle or kills
    the youngest cocycle whose coboundary contains it (found by dotting
    live cocycles with the cell's boundary column).  Dead cocycles are
    dropped immediately.  Pairs, essential indices, and cocycle chains
    are reported in ``Dperp``'s own (reversed dual) indexing, matching
    ``phrow(Dperp)``.

    ``snapshot(i, Z)`` is called after each sweep step with the live
    cocycle store, a dict mapping birth index to coefficient dict, both
    in original-order indexing; copy anything kept.
    """
    p = field.p
    n = Dperp.n
    ops_before = op_count()
    boundary = anti_transpose(Dperp)

    Z: dict[int, dict[int, int]] = {}
    support: dict[int, set[int]] = {}
    sigma_pairs: list[tuple[int, int]] = []
    dying_chains: list[dict[int, int]] = []
    total = 0
    peak = 0

    for i in range(1, n + 1):
        acc: dict[int, int] = {}
        hits = 0
        for t, coef in boundary.cols[i]:
            holders = support.get(t)
            if holders:
                for j in holders:
                    acc[j] = (acc.get(j, 0) + coef * Z[j][t]) % p
                hits += len(holders)
        add_ops(hits)
        candidates = [j for j, v in acc.items() if v]

        if not candidates:
            Z[i] = {i: 1}
            support.setdefault(i, set()).add(i)
            total += 1
            if total > peak:
                peak = total
        else:
            total += 1  # the entering cell's own cocycle, dead on arrival
            if total > peak:
                peak = total
            piv = max(candidates)
            zp = Z[piv]
            inv_piv = field_inv(acc[piv], p)
            for j in sorted(candidates):
                if j == piv:
                    continue
                c = (acc[j] * inv_piv) % p
                zj = Z[j]
                add_ops(len(zp))
                for t, a in zp.items():
                    new = (zj.get(t, 0) - c * a) % p
                    if new:
                        if t not in zj:
                            support.setdefault(t, set()).add(j)
                            total += 1
                        zj[t] = new
                    elif t in zj:
                        del zj[t]
                        support[t].discard(j)
                        total -= 1
                if total > peak:
                    peak = total
            sigma_pairs.append((piv, i))
            dying_chains.append(dict(zp))
            for t in zp:
                support[t].discard(piv)
            total -= len(zp) + 1
            del Z[piv]
        if snapshot is not None:
            snapshot(i, Z)

    flip = n + 1

    def to_tau(z: dict[int, int]) -> Chain:
        return sorted((flip - t, a) for t, a in z.items())

    pairs = [(flip - d, flip - b) for b, d in sigma_pairs]
    pair_cocycles = [to_tau(z) for z in dying_chains]
    births = sorted(Z, reverse=True)  # ascending in flipped indexing
    essential = [flip - b for b in births]
    essential_cocycles = [to_tau(Z[b]) for b in births]
    return PcohResult(pairs, essential, pair_cocycles, essential_cocycles,
                      op_count() - ops_before, peak)


def verify_decomposition(D: SparseMatrix, dec: Decomposition,
                         field: Field) -> VerifyReport:
    """Check R = DV, V invertible upper-triangular, and low injectivity."""
    if dec.V is None:
        raise ValueError("decomposition has no V matrix (keep_V was off)")
    p = field.p
    n = D.n
    for j in range(1, n + 1):
        col = dec.V.cols[j]
        for i, _ in col:
            if i > j:
                return VerifyReport(
                    False, f"V has entry below the diagonal at ({i}, {j})", (i, j))
        if not col or col[-1][0] != j or col[-1][1] % p == 0:
            return VerifyReport(
                False, f"V diagonal entry ({j}, {j}) is zero", (j, j))

    for j in range(1, n + 1):
        acc: dict[int, int] = {}
        for t, vc in dec.V.cols[j]:
            for i, dc in D.cols[t]:
                acc[i] = (acc.get(i, 0) + vc * dc) % p
        product = sorted((i, c) for i, c in acc.items() if c)
        if product != dec.R.cols[j]:
            seen = dict(dec.R.cols[j])
            for i, c in product:
                if seen.get(i, 0) != c:
                    return VerifyReport(
                        False, f"R differs from D*V at entry ({i}, {j})", (i, j))
            for i, c in dec.R.cols[j]:
                if dict(product).get(i, 0) != c:
                    return VerifyReport(
                        False, f"R differs from D*V at entry ({i}, {j})", (i, j))

    seen_lows: dict[int, int] = {}
    for j in range(1, n + 1):
        col = dec.R.cols[j]
        if not col:
            continue
        low = col[-1][0]
        if low in seen_lows:
            return VerifyReport(
                False, f"low {low} repeats in columns {seen_lows[low]} and {j}",
                (low, j))
        seen_lows[low] = j
        if dec.low_of.get(j) != low:
            return VerifyReport(
                False, f"low_of disagrees with R at column {j}", (low, j))
    for j in dec.low_of:
        if not dec.R.cols[j]:
            return VerifyReport(
                False, f"low_of maps zero column {j}", (0, j))
    return VerifyReport(True, "decomposition valid")
