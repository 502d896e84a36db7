"""Command-line interface.

Subcommands: ``barcode`` (diagram of one persistence module),
``generators`` (interval generator listing), ``bench`` (column vs
live-cocycle instrumented comparison), ``oracle-check`` (cross-check
the reduction pipeline against the dense rank oracle).

Exit codes: 0 on success, 1 when a verification cross-check fails,
2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys

from .bench import (cube_points, render_stats_csv, render_stats_text,
                    run_bench, torus_points)
from .complexes import (FilteredComplex, anti_transpose, boundary_matrix,
                        load_cell_file, load_points, load_simplicial_file)
from .core import Field
from .oracle import oracle_barcode
from .persistence import (INF, MODULE_TAGS, barcode_abs_hom,
                          barcode_from_antitranspose, barcode_rel_hom,
                          format_diagram, generators, pairs_to_partition)
from .reduction import pcoh, phcol, phrow, verify_decomposition
from .rips import rips_filtration

ALGORITHMS = ("phcol", "phrow", "pcoh")


def _resolve_points(spec: str, seed: int) -> list[tuple[float, ...]]:
    """A points argument is a file path or a generator spec.

    ``cube:<count>:<dim>`` draws from the unit cube, ``torus:<count>``
    from the torus in R^3; both use the seeded generator.
    """
    if spec.startswith("cube:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError("cube spec is cube:<count>:<dim>")
        return cube_points(int(parts[1]), int(parts[2]), seed)
    if spec.startswith("torus:"):
        parts = spec.split(":")
        if len(parts) != 2:
            raise ValueError("torus spec is torus:<count>")
        return torus_points(int(parts[1]), seed)
    return load_points(spec)


def _load_complex(args) -> FilteredComplex:
    field = Field(args.field)
    if args.format == "cells":
        return load_cell_file(args.input, field)
    if args.format == "simplicial":
        return load_simplicial_file(args.input, field)
    points = _resolve_points(args.input, args.seed)
    return rips_filtration(points, args.rmax, args.maxdim, field)


def _sigma_pairs(pairs, essential, n):
    """Translate reversed-dual pairs/essentials to original cell indices."""
    F = sorted(n + 1 - r for r in essential)
    spairs = sorted((n + 1 - t, n + 1 - s) for s, t in pairs)
    return F, spairs


def cmd_barcode(args) -> int:
    K = _load_complex(args)
    field = K.field
    n = K.n
    D = boundary_matrix(K)
    drop_zero = not args.keep_zero_length
    module = args.module

    if args.algorithm == "pcoh":
        res = pcoh(anti_transpose(D), field)
        F, spairs = _sigma_pairs(res.pairs, res.essential, n)
        abs_partition = (F, [], [], spairs)
        if module in ("rel_coh", "abs_coh"):
            diagram = barcode_from_antitranspose(
                res.pairs, res.essential, K, module, drop_zero)
        else:
            make = barcode_abs_hom if module == "abs_hom" else barcode_rel_hom
            diagram = make(abs_partition, K, drop_zero)
    else:
        reduce_fn = phcol if args.algorithm == "phcol" else phrow
        if module in ("abs_hom", "rel_hom"):
            partition = pairs_to_partition(reduce_fn(D, field, keep_V=False))
            make = barcode_abs_hom if module == "abs_hom" else barcode_rel_hom
            diagram = make(partition, K, drop_zero)
            abs_partition = partition
        else:
            dec = reduce_fn(anti_transpose(D), field, keep_V=False)
            Ft, _, _, tpairs = pairs_to_partition(dec)
            diagram = barcode_from_antitranspose(tpairs, Ft, K, module, drop_zero)
            F, spairs = _sigma_pairs(tpairs, Ft, n)
            abs_partition = (F, [], [], spairs)

    if args.oracle:
        computed = barcode_abs_hom(abs_partition, K, drop_zero=False)
        expected = oracle_barcode(K)
        if computed.index_multiset() != expected.index_multiset():
            print("oracle cross-check failed: reduction and rank oracle disagree",
                  file=sys.stderr)
            return 1

    print(format_diagram(diagram, indices=args.indices))
    return 0


def _fmt(x: float) -> str:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return format(x, "g")


def render_generators(table, indices: bool = False) -> str:
    blocks = []
    for e in table.entries:
        iv = e.interval
        if indices:
            head = f"{iv.dim} {iv.p} {iv.q}"
        else:
            head = f"{iv.dim} {_fmt(iv.birth)} {_fmt(iv.death)}"
        lines = [head, f"  generator: {table.chain_text(e.chain)}"]
        if e.killer is not None:
            lines.append(f"  killer: {table.chain_text(e.killer)}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def cmd_generators(args) -> int:
    K = _load_complex(args)
    field = K.field
    D = boundary_matrix(K)
    drop_zero = not args.keep_zero_length
    module = args.module

    if args.algorithm == "pcoh":
        if module != "abs_coh":
            raise ValueError(
                f"{module} generators are unavailable from pcoh "
                "(it drops the columns they come from); use phcol or phrow")
        table = generators(pcoh(anti_transpose(D), field), K, module, drop_zero)
    else:
        reduce_fn = phcol if args.algorithm == "phcol" else phrow
        mat = D if module in ("abs_hom", "rel_hom") else anti_transpose(D)
        table = generators(reduce_fn(mat, field, keep_V=True), K, module, drop_zero)

    print(render_generators(table, indices=args.indices))
    return 0


def cmd_bench(args) -> int:
    field = Field(args.field)
    points = _resolve_points(args.input, args.seed)
    result = run_bench(points, args.rmax, args.maxdim, field,
                       repeat=args.repeat, max_cells=args.max_cells)
    print(render_stats_csv(result) if args.csv else render_stats_text(result))
    return 0


def cmd_oracle_check(args) -> int:
    K = _load_complex(args)
    field = K.field
    D = boundary_matrix(K)

    if args.algorithm == "pcoh":
        res = pcoh(anti_transpose(D), field)
        F, spairs = _sigma_pairs(res.pairs, res.essential, K.n)
        partition = (F, [], [], spairs)
    else:
        reduce_fn = phcol if args.algorithm == "phcol" else phrow
        dec = reduce_fn(D, field, keep_V=True)
        report = verify_decomposition(D, dec, field)
        if not report.ok:
            print(f"decomposition check failed: {report.message}", file=sys.stderr)
            return 1
        partition = pairs_to_partition(dec)

    computed = barcode_abs_hom(partition, K, drop_zero=False)
    expected = oracle_barcode(K)
    if computed.index_multiset() != expected.index_multiset():
        print("mismatch: reduction and rank oracle disagree", file=sys.stderr)
        print(f"  reduction: {sorted(computed.index_multiset().items())}",
              file=sys.stderr)
        print(f"  oracle:    {sorted(expected.index_multiset().items())}",
              file=sys.stderr)
        return 1
    print(f"ok: {K.n} cells, {len(expected.intervals)} intervals, "
          "barcode matches the rank oracle")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perscoh",
        description="Persistent (co)homology of filtered complexes over Z/p.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input",
                        help="input file; with --format points also "
                             "cube:<count>:<dim> or torus:<count>")
    common.add_argument("--format", choices=("cells", "simplicial", "points"),
                        default="cells", help="input format (default cells)")
    common.add_argument("--field", type=int, default=2, metavar="P",
                        help="prime field modulus (default 2)")
    common.add_argument("--rmax", type=float, default=math.inf,
                        help="Rips diameter cutoff (points format; default none)")
    common.add_argument("--maxdim", type=int, default=2,
                        help="Rips maximum simplex dimension (default 2)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for generated point clouds (default 0)")

    p = sub.add_parser("barcode", parents=[common],
                       help="compute one persistence diagram")
    p.add_argument("--module", choices=MODULE_TAGS, default="abs_hom")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="phcol")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the dense rank oracle (small inputs)")
    p.add_argument("--indices", action="store_true",
                   help="print index pairs instead of filtration values")
    p.add_argument("--keep-zero-length", action="store_true",
                   help="keep intervals with equal birth and death values")
    p.set_defaults(func=cmd_barcode)

    p = sub.add_parser("generators", parents=[common],
                       help="list interval generators")
    p.add_argument("--module", choices=MODULE_TAGS, default="abs_hom")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="phcol")
    p.add_argument("--indices", action="store_true")
    p.add_argument("--keep-zero-length", action="store_true")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("bench",
                       help="compare phcol and pcoh on one Rips filtration")
    p.add_argument("input",
                   help="points file, cube:<count>:<dim>, or torus:<count>")
    p.add_argument("--rmax", type=float, default=math.inf)
    p.add_argument("--maxdim", type=int, default=2)
    p.add_argument("--field", type=int, default=2, metavar="P")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1,
                   help="run each algorithm this many times (default 1)")
    p.add_argument("--max-cells", type=int, default=500_000, dest="max_cells",
                   help="abort if the Rips filtration exceeds this cell count")
    p.add_argument("--csv", action="store_true",
                   help="emit CSV (algorithm,ops,peak_elements,seconds)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle-check", parents=[common],
                       help="verify the reduction barcode against the rank oracle")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="phcol")
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
