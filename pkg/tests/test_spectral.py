import itertools
import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from conftest import graphs
from oracles import numpy_mu
from kalliance.graph_core import Graph, all_graphs, complete, cycle, hypercube, is_connected, petersen
from kalliance.spectral import (
    ConvergenceError,
    algebraic_connectivity,
    cut_size,
    fiedler_quotient,
    jacobi_eigenvalues,
    laplacian,
)


def test_laplacian_small():
    assert laplacian(complete(2)).tolist() == [[1, -1], [-1, 1]]
    L = laplacian(cycle(3))
    assert L.tolist() == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert not laplacian(Graph(3)).any()


@given(graphs(max_n=9))
def test_laplacian_rows_sum_to_zero(g):
    L = laplacian(g)
    assert (L.sum(axis=1) == 0).all()
    assert (L == L.T).all()


@pytest.mark.parametrize("n", range(2, 11))
def test_mu_complete(n):
    assert abs(algebraic_connectivity(complete(n)).mu - n) < 1e-9


def test_mu_disconnected_is_zero():
    assert abs(algebraic_connectivity(Graph(4, [(0, 1), (2, 3)])).mu) < 1e-9


def test_mu_q3_against_exact_characteristic_polynomial():
    L = sympy.Matrix(laplacian(hypercube(3)).astype(int).tolist())
    lam = sympy.symbols("lam")
    roots = sorted(r for r, mult in sympy.roots(L.charpoly(lam).as_expr(), lam).items() for _ in range(mult))
    assert roots == [0, 2, 2, 2, 4, 4, 4, 6]
    assert abs(algebraic_connectivity(hypercube(3)).mu - 2) < 1e-9


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_hypercube_full_spectrum(d):
    eig, _ = jacobi_eigenvalues(laplacian(hypercube(d)))
    expected = sorted(2 * bin(v).count("1") for v in range(1 << d))
    assert np.allclose(eig, expected, atol=1e-9)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 9])
def test_cycle_spectrum(n):
    eig, _ = jacobi_eigenvalues(laplacian(cycle(n)))
    expected = sorted(2 - 2 * math.cos(2 * math.pi * j / n) for j in range(n))
    assert np.allclose(eig, expected, atol=1e-9)


@settings(max_examples=150)
@given(graphs(min_n=2, max_n=12))
def test_jacobi_matches_numpy(g):
    L = laplacian(g)
    eig, sweeps = jacobi_eigenvalues(L)
    assert np.allclose(eig, np.linalg.eigvalsh(L), atol=1e-9)
    assert abs(eig.sum() - sum(g.degrees)) < g.n * 1e-9
    assert abs(eig[0]) < 1e-9
    assert sweeps <= 100
    assert (algebraic_connectivity(g).mu > 1e-8) == is_connected(g)


def test_jacobi_non_convergence_reported():
    A = laplacian(petersen())
    with pytest.raises(ConvergenceError):
        jacobi_eigenvalues(A, tol=1e-30, max_sweeps=1)


def test_jacobi_deterministic():
    g = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 7), (7, 8), (5, 6), (6, 8)])
    a = algebraic_connectivity.__wrapped__(g)
    b = algebraic_connectivity.__wrapped__(g)
    assert a == b
    assert abs(a.mu - numpy_mu(g.n, g.edges)) < 1e-9


def test_mu_needs_two_vertices():
    with pytest.raises(ValueError):
        algebraic_connectivity(Graph(1))


def test_fiedler_quotient_examples():
    for n in (3, 5, 7):
        kn = complete(n)
        for s in range(1, n):
            assert fiedler_quotient(kn, range(s)) == pytest.approx(n)
    c4 = cycle(4)
    assert fiedler_quotient(c4, {0, 1}) == 2.0
    assert algebraic_connectivity(c4).mu <= 2.0 + 1e-9
    p = petersen()
    assert fiedler_quotient(p, {0}) == pytest.approx(10 * 3 / 9)


def test_fiedler_quotient_rejects_trivial_sets():
    with pytest.raises(ValueError):
        fiedler_quotient(cycle(4), set())
    with pytest.raises(ValueError):
        fiedler_quotient(cycle(4), range(4))


def test_cut_size():
    assert cut_size(petersen(), range(5)) == 5
    assert cut_size(complete(5), {0, 1}) == 6


def test_quotient_bounds_mu_exhaustively_n5():
    for g in itertools.chain.from_iterable(all_graphs(n) for n in range(2, 6)):
        mu = algebraic_connectivity(g).mu
        for size in range(1, g.n):
            for S in itertools.combinations(range(g.n), size):
                assert mu <= fiedler_quotient(g, S) + 1e-10
