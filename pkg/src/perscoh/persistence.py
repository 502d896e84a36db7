"""Barcodes and generators for the four persistence modules.

Intervals are stored both as index pairs ``<p, q>`` (real interval
``[a_p, a_{q+1})`` with the conventions ``a_0 = -inf``,
``a_{n+1} = +inf``) and with resolved real endpoints.  Absolute
homology/cohomology use ``1 <= p <= q <= n`` where ``q = n`` marks an
infinite interval; relative modules use ``0 <= p <= q <= n-1`` where
``p = 0`` marks an interval infinite to the left.

The anti-transpose route reports pairs in reversed dual indexing;
:func:`barcode_from_antitranspose` transcribes a reversed pair (s, t)
to the original-index interval ``[a_{n+1-t}, a_{n+1-s})`` and an
essential r to the endpoint ``a_{n+1-r}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import Counter

from .complexes import FilteredComplex
from .core import Chain
from .reduction import Decomposition, PcohResult

MODULE_TAGS = ("abs_hom", "abs_coh", "rel_hom", "rel_coh")

INF = float("inf")


@dataclass(frozen=True)
class Interval:
    dim: int
    p: int
    q: int
    birth: float
    death: float

    @property
    def finite(self) -> bool:
        return self.birth != -INF and self.death != INF

    def sort_key(self):
        return (self.dim, self.birth, self.death, self.p, self.q)


@dataclass
class Diagram:
    module_tag: str
    intervals: list[Interval]

    def sorted(self) -> list[Interval]:
        return sorted(self.intervals, key=Interval.sort_key)

    def finite_part(self) -> list[Interval]:
        return [iv for iv in self.intervals if iv.finite]

    def infinite_part(self) -> list[Interval]:
        return [iv for iv in self.intervals if not iv.finite]

    def index_multiset(self) -> Counter:
        return Counter((iv.dim, iv.p, iv.q) for iv in self.intervals)

    def value_multiset(self) -> Counter:
        return Counter((iv.dim, iv.birth, iv.death) for iv in self.intervals)


def pairs_to_partition(dec: Decomposition):
    """Split 1..n into essential births F, paired births G, deaths H."""
    n = dec.R.n
    H = sorted(dec.low_of)
    G = sorted(dec.low_of.values())
    rest = set(range(1, n + 1)) - set(H) - set(G)
    F = sorted(rest)
    pairs = sorted((low, h) for h, low in dec.low_of.items())
    return F, G, H, pairs


def _interval(K: FilteredComplex, dim: int, p: int, q: int) -> Interval:
    n = K.n
    birth = -INF if p == 0 else K.value(p)
    death = INF if q == n else K.value(q + 1)
    return Interval(dim, p, q, birth, death)


def _emit(intervals: list[Interval], drop_zero: bool) -> list[Interval]:
    if not drop_zero:
        return intervals
    return [iv for iv in intervals if iv.birth != iv.death]


def barcode_abs_hom(partition, K: FilteredComplex,
                    drop_zero: bool = True) -> Diagram:
    F, _, _, pairs = partition
    n = K.n
    out = [_interval(K, K.dim(f), f, n) for f in F]
    out += [_interval(K, K.dim(g), g, h - 1) for g, h in pairs]
    return Diagram("abs_hom", _emit(out, drop_zero))


def barcode_rel_hom(partition, K: FilteredComplex,
                    drop_zero: bool = True) -> Diagram:
    F, _, _, pairs = partition
    out = [_interval(K, K.dim(f), 0, f - 1) for f in F]
    out += [_interval(K, K.dim(h), g, h - 1) for g, h in pairs]
    return Diagram("rel_hom", _emit(out, drop_zero))


def barcode_from_antitranspose(pairs, essential, K: FilteredComplex,
                               module_tag: str,
                               drop_zero: bool = True) -> Diagram:
    """Build the rel_coh or abs_coh diagram from reversed-index pairs.

    ``pairs`` and ``essential`` come from a reduction of the
    anti-transposed boundary matrix (``phrow(Dperp).low_of`` pairs or
    ``pcoh(Dperp)`` output).
    """
    if module_tag not in ("rel_coh", "abs_coh"):
        raise ValueError(f"module_tag must be rel_coh or abs_coh, got {module_tag!r}")
    n = K.n
    out = []
    if module_tag == "rel_coh":
        for r in essential:
            f = n + 1 - r
            out.append(_interval(K, K.dim(f), 0, f - 1))
        for s, t in pairs:
            g, h = n + 1 - t, n + 1 - s
            out.append(_interval(K, K.dim(h), g, h - 1))
    else:
        for r in essential:
            f = n + 1 - r
            out.append(_interval(K, K.dim(f), f, n))
        for s, t in pairs:
            g, h = n + 1 - t, n + 1 - s
            out.append(_interval(K, K.dim(g), g, h - 1))
    return Diagram(module_tag, _emit(out, drop_zero))


def concatenated_barcode(abs_diagram: Diagram, K: FilteredComplex) -> Diagram:
    """Bookkeeping for the doubled (absolute then relative-to-total) sequence.

    Indices above n are barred copies (n + i stands for the second pass
    over cell i, with the same filtration value).  Each finite interval
    keeps its original copy and adds a barred copy one dimension up;
    each infinite interval [a_f, inf) becomes [a_f, barred a_f).
    """
    if abs_diagram.module_tag != "abs_hom":
        raise ValueError("concatenated_barcode expects an absolute homology diagram")
    n = K.n

    def doubled_value(idx: int) -> float:
        return K.value(idx if idx <= n else idx - n)

    out = []
    for iv in abs_diagram.intervals:
        if iv.q == n:  # [a_f, inf) -> [a_f, barred a_f)
            f = iv.p
            out.append(Interval(iv.dim, f, n + f - 1,
                                K.value(f), doubled_value(n + f)))
        else:
            out.append(iv)
            out.append(Interval(iv.dim + 1, n + iv.p, n + iv.q,
                                doubled_value(n + iv.p),
                                doubled_value(n + iv.q + 1)))
    return Diagram("abs_concat", out)


@dataclass
class GeneratorEntry:
    interval: Interval
    chain: Chain
    source: str
    killer: Chain | None = None
    killer_source: str | None = None


@dataclass
class GeneratorTable:
    module_tag: str
    n: int
    starred: bool
    entries: list[GeneratorEntry]

    def by_index_pair(self) -> dict[tuple[int, int], GeneratorEntry]:
        return {(e.interval.p, e.interval.q): e for e in self.entries}

    def term_label(self, index: int) -> str:
        """Cell label of a chain term (starred original label for cochains)."""
        if self.starred:
            return f"{self.n + 1 - index}*"
        return str(index)

    def chain_text(self, chain: Chain) -> str:
        if not chain:
            return "0"
        terms = [(self.term_label(i), c) for i, c in chain]
        if self.starred:
            terms.reverse()  # ascending original labels
        return " ".join(f"{lbl}:{c}" for lbl, c in terms)


def generators(dec, K: FilteredComplex, module_tag: str,
               drop_zero: bool = True) -> GeneratorTable:
    """Extract the generator table of one persistence module.

    For ``abs_hom``/``rel_hom`` pass a decomposition of the boundary
    matrix; for ``rel_coh``/``abs_coh`` pass a decomposition of its
    anti-transpose, or the pcoh output for ``abs_coh``.  Reductions run
    without V, and pcoh output for modules other than ``abs_coh``,
    raise ``ValueError`` since the needed columns were not kept.
    """
    if module_tag not in MODULE_TAGS:
        raise ValueError(f"unknown module_tag {module_tag!r}")
    n = K.n
    entries: list[GeneratorEntry] = []

    if isinstance(dec, PcohResult):
        if module_tag != "abs_coh":
            raise ValueError(
                f"{module_tag} generators are unavailable from pcoh output: "
                "the algorithm drops the columns they come from")
        for r, chain in zip(dec.essential, dec.essential_cocycles):
            f = n + 1 - r
            entries.append(GeneratorEntry(
                _interval(K, K.dim(f), f, n), list(chain), f"Vt[{f}*]"))
        for (s, t), chain in zip(dec.pairs, dec.pair_cocycles):
            g, h = n + 1 - t, n + 1 - s
            entries.append(GeneratorEntry(
                _interval(K, K.dim(g), g, h - 1), list(chain), f"Vt[{g}*]"))
        return _finish_table(module_tag, n, True, entries, drop_zero)

    if dec.V is None:
        raise ValueError("generators need the V matrix; rerun with keep_V on")
    F, _, _, pairs = pairs_to_partition(dec)

    if module_tag == "abs_hom":
        for f in F:
            entries.append(GeneratorEntry(
                _interval(K, K.dim(f), f, n), list(dec.V.cols[f]), f"V[{f}]"))
        for g, h in pairs:
            entries.append(GeneratorEntry(
                _interval(K, K.dim(g), g, h - 1), list(dec.R.cols[h]), f"R[{h}]",
                list(dec.V.cols[h]), f"V[{h}]"))
        return _finish_table(module_tag, n, False, entries, drop_zero)

    if module_tag == "rel_hom":
        for f in F:
            entries.append(GeneratorEntry(
                _interval(K, K.dim(f), 0, f - 1), list(dec.V.cols[f]), f"V[{f}]"))
        for g, h in pairs:
            entries.append(GeneratorEntry(
                _interval(K, K.dim(h), g, h - 1), list(dec.V.cols[h]), f"V[{h}]"))
        return _finish_table(module_tag, n, False, entries, drop_zero)

    # coh modules: dec reduces the anti-transpose; F/pairs are reversed indices
    if module_tag == "rel_coh":
        for r in F:
            f = n + 1 - r
            entries.append(GeneratorEntry(
                _interval(K, K.dim(f), 0, f - 1), list(dec.V.cols[r]), f"Vt[{f}*]"))
        for s, t in pairs:
            g, h = n + 1 - t, n + 1 - s
            entries.append(GeneratorEntry(
                _interval(K, K.dim(h), g, h - 1), list(dec.R.cols[t]), f"Rt[{g}*]",
                list(dec.V.cols[t]), f"Vt[{g}*]"))
        return _finish_table(module_tag, n, True, entries, drop_zero)

    for r in F:
        f = n + 1 - r
        entries.append(GeneratorEntry(
            _interval(K, K.dim(f), f, n), list(dec.V.cols[r]), f"Vt[{f}*]"))
    for s, t in pairs:
        g, h = n + 1 - t, n + 1 - s
        entries.append(GeneratorEntry(
            _interval(K, K.dim(g), g, h - 1), list(dec.V.cols[t]), f"Vt[{g}*]"))
    return _finish_table(module_tag, n, True, entries, drop_zero)


def _finish_table(module_tag: str, n: int, starred: bool,
                  entries: list[GeneratorEntry], drop_zero: bool) -> GeneratorTable:
    if drop_zero:
        entries = [e for e in entries if e.interval.birth != e.interval.death]
    entries.sort(key=lambda e: e.interval.sort_key())
    return GeneratorTable(module_tag, n, starred, entries)


def _fmt_value(x: float) -> str:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return format(x, "g")


def format_diagram(diagram: Diagram, indices: bool = False) -> str:
    """One interval per line: ``<dim> <birth> <death>``, sorted.

    With ``indices``, integer index pairs ``<dim> <p> <q>`` are emitted
    instead of real endpoints.
    """
    lines = []
    for iv in diagram.sorted():
        if indices:
            lines.append(f"{iv.dim} {iv.p} {iv.q}")
        else:
            lines.append(f"{iv.dim} {_fmt_value(iv.birth)} {_fmt_value(iv.death)}")
    return "\n".join(lines)


def parse_diagram(text: str, module_tag: str = "abs_hom") -> Diagram:
    """Parse the text format back into a value-level diagram (indices -1)."""
    intervals = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected '<dim> <birth> <death>'")
        dim = int(parts[0])
        birth, death = float(parts[1]), float(parts[2])
        intervals.append(Interval(dim, -1, -1, birth, death))
    return Diagram(module_tag, intervals)
