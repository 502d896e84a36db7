"""Exact arithmetic over Z/p and sparse column (chain) operations.

A chain is a list of ``(index, coefficient)`` pairs with strictly
increasing 1-based indices and no zero coefficients; coefficients are
residues in ``[0, p)``.  The empty list is the zero chain.  All column
arithmetic in the reduction algorithms goes through :func:`chain_axpy`,
which also feeds the global primitive-operation counter.
"""

from __future__ import annotations

Term = tuple[int, int]
Chain = list[Term]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in _SMALL_PRIMES:
        if p == q:
            return True
        if p % q == 0:
            return False
    d = 37
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The prime field Z/p; holds the modulus and element helpers."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"field modulus must be prime, got {p}")
        if p >= 2**31:
            raise ValueError(f"field modulus too large: {p}")
        self.p = p

    def normalize(self, a: int) -> int:
        return a % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        return field_inv(a, self.p)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.p == self.p

    def __repr__(self) -> str:
        return f"Field({self.p})"


GF2 = Field(2)


def field_inv(a: int, p: int) -> int:
    """Multiplicative inverse of the residue ``a`` in Z/p."""
    a %= p
    if a == 0:
        raise ValueError("zero has no multiplicative inverse")
    return pow(a, p - 2, p)


# Primitive-operation counter: one unit per coefficient multiply-add
# performed during chain arithmetic.  Owned by a single reduction run
# (reset at run start, read at run end).
_op_count = 0


def reset_op_count() -> None:
    global _op_count
    _op_count = 0


def op_count() -> int:
    return _op_count


def add_ops(k: int) -> None:
    global _op_count
    _op_count += k


def chain_axpy(c: int, x: Chain, y: Chain, p: int) -> Chain:
    """Return ``y + c*x`` as a new chain, merging sorted term lists.

    Counts one primitive operation per term of ``x`` (each contributes
    one coefficient multiply-add to the merge).
    """
    global _op_count
    _op_count += len(x)
    c %= p
    if c == 0 or not x:
        return list(y)
    out: Chain = []
    i = j = 0
    nx, ny = len(x), len(y)
    while i < nx and j < ny:
        xi, xc = x[i]
        yj, yc = y[j]
        if xi < yj:
            v = (c * xc) % p
            if v:
                out.append((xi, v))
            i += 1
        elif xi > yj:
            out.append((yj, yc))
            j += 1
        else:
            v = (yc + c * xc) % p
            if v:
                out.append((xi, v))
            i += 1
            j += 1
    while i < nx:
        xi, xc = x[i]
        v = (c * xc) % p
        if v:
            out.append((xi, v))
        i += 1
    out.extend(y[j:])
    return out


def chain_low(x: Chain) -> int | None:
    """Index of the lowest nonzero entry (the largest stored index)."""
    return x[-1][0] if x else None


def chain_scale(c: int, x: Chain, p: int) -> Chain:
    c %= p
    if c == 0:
        return []
    if c == 1:
        return list(x)
    return [(i, (c * a) % p) for i, a in x]


def chain_from_dict(d: dict[int, int], p: int) -> Chain:
    return [(i, a % p) for i, a in sorted(d.items()) if a % p]


def chain_eq_up_to_scalar(x: Chain, y: Chain, p: int) -> bool:
    """True when ``x = c*y`` for some nonzero scalar c."""
    if len(x) != len(y):
        return False
    if not x:
        return True
    if x[0][0] != y[0][0]:
        return False
    c = (x[0][1] * field_inv(y[0][1], p)) % p
    return all(xi == yi and xa == (c * ya) % p for (xi, xa), (yi, ya) in zip(x, y))
