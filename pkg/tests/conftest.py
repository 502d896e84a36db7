"""Shared fixtures and helpers for the test suite.

Provides the 6-cell running example, exhaustive enumeration of small
strictly-upper-triangular matrices (and the subset that are valid
filtered complexes), seeded random Rips instances, and the boundary
sanity checks reused by the property suites.
"""

import os

import pytest
from hypothesis import HealthCheck, settings

from perscoh import (GF2, Field, Lcg, SparseMatrix, anti_transpose,
                     boundary_matrix, build_complex, generators,
                     load_cell_file, phcol, rips_filtration)
from perscoh.complexes import ComplexError

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
SPHERE_PATH = os.path.join(DATA_DIR, "sphere6.cells")


@pytest.fixture
def sphere11():
    """The 6-cell filtered 2-sphere over Z/11 (signed coefficients visible)."""
    return load_cell_file(SPHERE_PATH, Field(11))


def upper_matrices(n):
    """All strictly upper-triangular 0/1 matrices of size n."""
    positions = [(i, j) for j in range(1, n + 1) for i in range(1, j)]
    for bits in range(1 << len(positions)):
        cols = [[] for _ in range(n + 1)]
        for k, (i, j) in enumerate(positions):
            if bits >> k & 1:
                cols[j].append((i, 1))
        yield SparseMatrix(n, cols)


def all_upper_matrices(n_max=5):
    for n in range(1, n_max + 1):
        yield from upper_matrices(n)


def matrix_complex(D):
    """Interpret a 0/1 matrix as a filtered complex over Z/2, or None.

    Cell dimensions are recovered by propagating dim(face) = dim(cell) - 1
    over the support graph (inconsistency means no valid grading exists);
    the composite boundary must vanish.  Filtration values are a_i = i.
    """
    n = D.n
    adj = [[] for _ in range(n + 1)]
    for j in range(1, n + 1):
        for i, _ in D.cols[j]:
            adj[i].append((j, 1))
            adj[j].append((i, -1))
    dim = [None] * (n + 1)
    for start in range(1, n + 1):
        if dim[start] is not None:
            continue
        dim[start] = 0
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v, step in adj[u]:
                if dim[v] is None:
                    dim[v] = dim[u] + step
                    comp.append(v)
                    stack.append(v)
                elif dim[v] != dim[u] + step:
                    return None
        base = min(dim[v] for v in comp)
        for v in comp:
            dim[v] -= base
    rows = [(dim[j], float(j), list(D.cols[j])) for j in range(1, n + 1)]
    try:
        return build_complex(rows, GF2)
    except ComplexError:
        return None


def random_rips(seed, max_points=10, p=2, dim_max=3):
    """Deterministic random Rips instance: seeded cloud in R^2 or R^3."""
    rng = Lcg(seed)
    count = 3 + rng.next_u64() % (max_points - 2)
    ambient = 2 + rng.next_u64() % 2
    pts = [tuple(rng.next_double() for _ in range(ambient))
           for _ in range(count)]
    r_max = 0.4 + rng.next_double()
    return rips_filtration(pts, r_max, dim_max, Field(p))


def matvec(A, chain, p):
    """A @ chain over Z/p as a sorted term list."""
    acc = {}
    for j, c in chain:
        for i, d in A.cols[j]:
            acc[i] = (acc.get(i, 0) + c * d) % p
    return sorted((i, v) for i, v in acc.items() if v)


def assert_boundary_squared_zero(D, p):
    for j in range(1, D.n + 1):
        assert matvec(D, D.cols[j], p) == [], f"composite boundary nonzero at {j}"


def assert_generator_sanity(K):
    """Generators are cycles, killers map to generators, cocycles die on time."""
    p = K.field.p
    D = boundary_matrix(K)
    assert_boundary_squared_zero(D, p)
    dec = phcol(D, K.field)
    table = generators(dec, K, "abs_hom", drop_zero=False)
    for e in table.entries:
        assert matvec(D, e.chain, p) == [], "homology generator is not a cycle"
        if e.killer is not None:
            assert matvec(D, e.killer, p) == e.chain, "killer does not bound generator"

    Dp = anti_transpose(D)
    decp = phcol(Dp, K.field)
    tablep = generators(decp, K, "rel_coh", drop_zero=False)
    for e in tablep.entries:
        if e.killer is not None:
            assert matvec(Dp, e.killer, p) == e.chain

    # the coboundary of an abs_coh cocycle is supported strictly past its death
    n = K.n
    tablec = generators(decp, K, "abs_coh", drop_zero=False)
    for e in tablec.entries:
        for t, _ in matvec(Dp, e.chain, p):
            assert n + 1 - t > e.interval.q, "cocycle dies before its death index"
