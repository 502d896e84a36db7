"""Instrumented comparison of the column and live-cocycle algorithms.

Builds one Rips filtration, runs the barcode-only column reduction on
the boundary matrix and the live-cocycle reduction on its
anti-transpose, checks that both produce the same barcode, and only
then reports primitive-operation counts, peak stored term counts, and
wall time.  Point clouds are generated with a fixed 64-bit linear
congruential generator so operation counts are reproducible across
platforms.  Wall time is informational only; the counters carry the
comparison.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .complexes import anti_transpose, boundary_matrix
from .core import Field, GF2, reset_op_count
from .persistence import (Diagram, barcode_abs_hom, barcode_from_antitranspose,
                          pairs_to_partition)
from .reduction import pcoh, phcol
from .rips import rips_filtration

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator, fixed across platforms.

    state <- state * LCG_MULTIPLIER + LCG_INCREMENT  (mod 2^64);
    doubles take the top 53 bits of the new state.
    """

    def __init__(self, seed: int = 0):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & _MASK64
        return self.state

    def next_double(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)


def cube_points(count: int, dim: int, seed: int = 0) -> list[tuple[float, ...]]:
    """``count`` points drawn uniformly from the unit cube in R^dim."""
    rng = Lcg(seed)
    return [tuple(rng.next_double() for _ in range(dim)) for _ in range(count)]


def torus_points(count: int, seed: int = 0) -> list[tuple[float, float, float]]:
    """``count`` points on the torus in R^3 with radii 2 (tube center) and 1.

    Angles are uniform in [0, 2*pi); the sampling is not area-uniform,
    which is irrelevant here (the cloud only feeds the benchmark).
    """
    rng = Lcg(seed)
    out = []
    for _ in range(count):
        u = 2.0 * math.pi * rng.next_double()
        v = 2.0 * math.pi * rng.next_double()
        w = 2.0 + math.cos(v)
        out.append((w * math.cos(u), w * math.sin(u), math.sin(v)))
    return out


@dataclass
class RunStats:
    algorithm: str
    primitive_ops: int
    peak_elements: int
    wall_time: float


@dataclass
class BenchResult:
    n_points: int
    n_cells: int
    field_p: int
    stats: list[RunStats]
    diagram: Diagram

    def ops(self, algorithm: str) -> int:
        for s in self.stats:
            if s.algorithm == algorithm:
                return s.primitive_ops
        raise KeyError(algorithm)

    def peak(self, algorithm: str) -> int:
        for s in self.stats:
            if s.algorithm == algorithm:
                return s.peak_elements
        raise KeyError(algorithm)

    @property
    def op_ratio(self) -> float:
        """phcol ops per pcoh op (> 1 means the live-cocycle run was cheaper)."""
        col, coh = self.ops("phcol"), self.ops("pcoh")
        if coh == 0:
            return math.inf if col else 1.0
        return col / coh


def run_bench(points: list[tuple[float, ...]], r_max: float, dim_max: int,
              field: Field = GF2, repeat: int = 1,
              max_cells: int = 500_000) -> BenchResult:
    """Benchmark both algorithms on the Rips filtration of ``points``.

    Raises ``ValueError`` when the filtration exceeds ``max_cells``
    cells, and ``AssertionError`` if the two barcodes ever disagree
    (no stats are reported in that case).
    """
    if repeat < 1:
        raise ValueError("repeat must be at least 1")
    K = rips_filtration(points, r_max, dim_max, field)
    if K.n > max_cells:
        raise ValueError(
            f"Rips filtration has {K.n} cells, above the ceiling {max_cells}")
    D = boundary_matrix(K)
    Dperp = anti_transpose(D)

    stats: list[RunStats] = []
    diagram: Diagram | None = None
    for _ in range(repeat):
        reset_op_count()
        t0 = time.perf_counter()
        dec = phcol(D, field, keep_V=False)
        col_time = time.perf_counter() - t0
        dia_col = barcode_abs_hom(pairs_to_partition(dec), K)

        reset_op_count()
        t0 = time.perf_counter()
        res = pcoh(Dperp, field)
        coh_time = time.perf_counter() - t0
        dia_coh = barcode_from_antitranspose(res.pairs, res.essential, K, "abs_coh")

        if dia_col.index_multiset() != dia_coh.index_multiset():
            raise AssertionError(
                "the two algorithms produced different barcodes; no stats reported")
        diagram = dia_col
        stats.append(RunStats("phcol", dec.ops, dec.peak_elements, col_time))
        stats.append(RunStats("pcoh", res.ops, res.peak_elements, coh_time))

    return BenchResult(len(points), K.n, field.p, stats, diagram)


def render_stats_text(result: BenchResult) -> str:
    lines = [
        f"points {result.n_points}  cells {result.n_cells}  field Z/{result.field_p}",
        f"{'algorithm':<10} {'ops':>14} {'peak_elements':>14} {'seconds':>10}",
    ]
    for s in result.stats:
        lines.append(f"{s.algorithm:<10} {s.primitive_ops:>14} "
                     f"{s.peak_elements:>14} {s.wall_time:>10.3f}")
    lines.append(f"op ratio phcol/pcoh: {result.op_ratio:.2f}")
    return "\n".join(lines)


def render_stats_csv(result: BenchResult) -> str:
    lines = ["algorithm,ops,peak_elements,seconds"]
    for s in result.stats:
        lines.append(f"{s.algorithm},{s.primitive_ops},{s.peak_elements},"
                     f"{s.wall_time:.6f}")
    return "\n".join(lines)
