"""Laplacian, algebraic connectivity, and the cut quotient bounding it."""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph_core import Graph

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class LaplacianSpectrumInfo:
    mu: float
    tolerance: float
    iterations: int

    def to_dict(self) -> dict:
        return {"mu": self.mu, "iterations": self.iterations, "tolerance": self.tolerance}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def laplacian(g: Graph) -> np.ndarray:
    L = np.zeros((g.n, g.n))
    for u, v in g.edges:
        L[u, v] = L[v, u] = -1.0
    L[np.diag_indices(g.n)] = g.degrees
    return L


def jacobi_eigenvalues(A: np.ndarray, tol: float = DEFAULT_TOL,
                       max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, int]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps visit pairs (p, q), p < q, in row order and stop once every
    off-diagonal entry is below ``tol * ||A||_F``. Returns the ascending
    eigenvalues and the number of sweeps performed.
    """
    a = [list(map(float, row)) for row in np.asarray(A, dtype=float)]
    n = len(a)
    scale = math.sqrt(sum(x * x for row in a for x in row))
    eps = tol * scale
    sweeps = 0
    while True:
        off = max((abs(a[p][q]) for p in range(n) for q in range(p + 1, n)), default=0.0)
        if off <= eps:
            break
        if sweeps == max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")
        sweeps += 1
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if abs(apq) <= eps:
                    continue
                aq = a[q]
                theta = (aq[q] - ap[p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = ap[p], aq[q]
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp, arq = ap[r], aq[r]
                    nrp = c * arp - s * arq
                    nrq = s * arp + c * arq
                    ap[r] = a[r][p] = nrp
                    aq[r] = a[r][q] = nrq
                ap[p] = app - t * apq
                aq[q] = aqq + t * apq
                ap[q] = aq[p] = 0.0
    return np.sort(np.array([a[i][i] for i in range(n)])), sweeps


@functools.lru_cache(maxsize=4096)
def algebraic_connectivity(g: Graph, tolerance: float = DEFAULT_TOL) -> LaplacianSpectrumInfo:
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    eig, sweeps = jacobi_eigenvalues(laplacian(g), tolerance)
    mu = float(eig[1])
    # Jacobi leaves ~eps-sized negatives on exact zeros
    if abs(mu) < 1e-12:
        mu = 0.0
    return LaplacianSpectrumInfo(mu, tolerance, sweeps)


def cut_size(g: Graph, S: Iterable[int]) -> int:
    mask = 0
    for v in S:
        mask |= 1 << v
    total = 0
    m = mask
    while m:
        low = m & -m
        total += (g.masks[low.bit_length() - 1] & ~mask).bit_count()
        m ^= low
    return total


def fiedler_quotient(g: Graph, S: Iterable[int]) -> float:
    """``n * cut(S) / (|S| (n - |S|))``, an upper bound on the algebraic
    connectivity for any proper nonempty S (indicator-vector Rayleigh quotient)."""
    members = frozenset(S)
    s = len(members)
    if s == 0 or s >= g.n or not members <= frozenset(range(g.n)):
        raise ValueError("S must be a proper nonempty subset of the vertices")
    return g.n * cut_size(g, members) / (s * (g.n - s))
