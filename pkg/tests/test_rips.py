"""Vietoris-Rips filtration construction."""

import math

import pytest

from perscoh import Field, rips_filtration
from conftest import random_rips

F11 = Field(11)


def test_two_points():
    K = rips_filtration([(0.0,), (1.0,)], 2.0, 1, F11)
    assert K.n == 3
    assert K.dims() == [0, 0, 1]
    assert [K.value(j) for j in (1, 2, 3)] == [0.0, 0.0, 1.0]
    assert K.boundary(3) == [(1, 10), (2, 1)]


def test_equilateral_triangle():
    pts = [(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)]
    K = rips_filtration(pts, 1.0, 2, F11)
    assert K.n == 7
    assert K.dims() == [0, 0, 0, 1, 1, 1, 2]
    assert K.value(7) == pytest.approx(1.0)
    assert all(K.value(j) == pytest.approx(1.0) for j in (4, 5, 6))


def test_r_max_zero_keeps_vertices_only():
    pts = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
    K = rips_filtration(pts, 0.0, 3, F11)
    assert K.n == 4
    assert K.dims() == [0, 0, 0, 0]


def test_complete_complex_counts():
    pts = [(0.0, 0.0), (0.1, 0.0), (0.0, 0.1), (0.1, 0.1)]
    K = rips_filtration(pts, 10.0, 3, F11)
    assert K.n == 4 + 6 + 4 + 1
    counts = {k: K.dims().count(k) for k in range(4)}
    assert counts == {0: 4, 1: 6, 2: 4, 3: 1}


def test_dim_max_respected():
    pts = [(0.0, 0.0), (0.1, 0.0), (0.0, 0.1), (0.1, 0.1)]
    K = rips_filtration(pts, 10.0, 1, F11)
    assert max(K.dims()) == 1
    assert K.n == 10


def test_faces_precede_cofaces():
    K = random_rips(42, max_points=9, p=11)
    for j in range(1, K.n + 1):
        verts = K.simplex_vertices[j - 1]
        assert verts == tuple(sorted(verts))
        assert K.dim(j) == len(verts) - 1
        for i, _ in K.boundary(j):
            assert i < j
            assert K.value(i) <= K.value(j)
            assert set(K.simplex_vertices[i - 1]) < set(verts)


def test_diameter_values_match_geometry():
    pts = [(0.0, 0.0), (2.0, 0.0), (0.0, 3.0)]
    K = rips_filtration(pts, 5.0, 2, F11)
    values = {K.simplex_vertices[j - 1]: K.value(j) for j in range(1, K.n + 1)}
    assert values[(0, 1)] == pytest.approx(2.0)
    assert values[(0, 2)] == pytest.approx(3.0)
    assert values[(1, 2)] == pytest.approx(math.hypot(2.0, 3.0))
    assert values[(0, 1, 2)] == pytest.approx(math.hypot(2.0, 3.0))


def test_r_max_cuts_long_edges():
    pts = [(0.0, 0.0), (1.0, 0.0), (5.0, 0.0)]
    K = rips_filtration(pts, 2.0, 2, F11)
    assert K.n == 4  # three vertices plus the single short edge
    assert max(K.dims()) == 1


def test_determinism():
    K1 = random_rips(5, p=2)
    K2 = random_rips(5, p=2)
    assert K1.n == K2.n
    assert K1.simplex_vertices == K2.simplex_vertices
    assert all(K1.boundary(j) == K2.boundary(j) for j in range(1, K1.n + 1))


def test_input_validation():
    with pytest.raises(ValueError, match="empty"):
        rips_filtration([], 1.0, 1, F11)
    with pytest.raises(ValueError, match="non-negative"):
        rips_filtration([(0.0,)], -1.0, 1, F11)
    with pytest.raises(ValueError, match="non-negative"):
        rips_filtration([(0.0,)], 1.0, -1, F11)
    with pytest.raises(ValueError, match="coordinates"):
        rips_filtration([(0.0, 0.0), (1.0,)], 1.0, 1, F11)
    with pytest.raises(ValueError, match="non-finite"):
        rips_filtration([(0.0, math.nan)], 1.0, 1, F11)
