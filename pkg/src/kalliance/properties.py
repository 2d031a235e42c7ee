"""Corpus-wide consistency checks between exact values and the bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import bounds
from .alliance import is_alliance_mask, shrink_alliance
from .graph_core import Graph, all_graphs, is_connected
from .solver import DEFAULT_LIMIT, profile
from .spectral import DEFAULT_TOL, algebraic_connectivity, cut_size

EQ8_SLACK = 1e-8


@dataclass
class Instance:
    """One corpus graph with its exact k-profile (k -> value or None)."""

    index: int
    graph: Graph
    values: dict[int, int | None]
    witnesses: dict[int, frozenset[int] | None]
    mu: float | None


def prepare(index: int, g: Graph, limit: int = DEFAULT_LIMIT, tol: float = DEFAULT_TOL) -> Instance:
    results = profile(g, limit)
    mu = algebraic_connectivity(g, tol).mu if g.n >= 2 and is_connected(g) else None
    return Instance(index, g,
                    {r.k: r.value for r in results},
                    {r.k: r.witness for r in results}, mu)


def check_sandwich(inst: Instance) -> list[str]:
    g = inst.graph
    out = []
    for k, exact in inst.values.items():
        if exact is None:
            continue
        lows, ups = [], []
        lo, up = bounds._degree_bounds(g, k)
        lows.append(lo)
        ups.append(up)
        if k <= 0:
            ups.append(bounds.upper_half(g, k))
        if inst.mu is not None:
            lows.append(bounds.spectral_lower_fiedler(g, k, inst.mu))
            lows.append(bounds.spectral_lower_maxdeg(g, k, inst.mu))
        if not max(lows) <= exact <= min(ups):
            out.append(f"k={k}: lowers {lows} exact {exact} uppers {ups}")
    return out


def check_shift(inst: Instance) -> list[str]:
    g = inst.graph
    dn = g.min_degree
    out = []
    for k, exact in inst.values.items():
        if exact is None:
            continue
        for r in range(0, (k + dn) // 2 + 1):
            lower = inst.values.get(k - 2 * r, 1)
            if bounds.shift_lower(g, k, r, lower) > exact:
                out.append(f"k={k} r={r}: a_(k-2r)+r={lower + r} > a_k={exact}")
            if r < exact:
                y = shrink_alliance(g, inst.witnesses[k], k, r)
                mask = sum(1 << v for v in y)
                if not is_alliance_mask(g, mask, k - 2 * r):
                    out.append(f"k={k} r={r}: shrunk set {sorted(y)} fails")
    return out


def check_parity(inst: Instance) -> list[str]:
    g = inst.graph
    parities = {d % 2 for d in g.degrees}
    if len(parities) != 1:
        return []
    # all even: odd k collapses onto k+1; all odd: even k onto k+1
    start = 1 if parities == {0} else 0
    out = []
    for k, val in inst.values.items():
        if k % 2 == start and k + 1 in inst.values and val != inst.values[k + 1]:
            out.append(f"a_{k}={val} != a_{k + 1}={inst.values[k + 1]}")
    return out


def check_corollaries(inst: Instance) -> list[str]:
    return [str(ineq) for k in inst.values
            for ineq in bounds.corollary_chain(inst.graph, k, inst.values) if not ineq.holds]


def check_fiedler_quotient(inst: Instance) -> list[str]:
    if inst.mu is None:
        return []
    g = inst.graph
    n = g.n
    out = []
    for size in range(1, n):
        for S in itertools.combinations(range(n), size):
            q = n * cut_size(g, S) / (size * (n - size))
            if q < inst.mu - EQ8_SLACK:
                out.append(f"S={list(S)}: quotient {q} < mu {inst.mu}")
    return out


def check_existence(inst: Instance) -> list[str]:
    g = inst.graph
    dn = g.min_degree
    out = []
    if not is_alliance_mask(g, (1 << g.n) - 1, dn):
        out.append(f"V is not a {dn}-alliance")
    v = g.degrees.index(dn)
    if not is_alliance_mask(g, 1 << v, -dn):
        out.append(f"{{{v}}} is not a {-dn}-alliance")
    return out


PROPERTIES: dict[str, Callable[[Instance], list[str]]] = {
    "sandwich": check_sandwich,
    "shift": check_shift,
    "parity": check_parity,
    "corollaries": check_corollaries,
    "fiedler_quotient": check_fiedler_quotient,
    "existence": check_existence,
}


@dataclass
class PropertyOutcome:
    name: str
    instances: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def run_checks(graphs: Iterable[Graph], limit: int = DEFAULT_LIMIT,
               tol: float = DEFAULT_TOL) -> list[PropertyOutcome]:
    outcomes = {name: PropertyOutcome(name) for name in PROPERTIES}
    for i, g in enumerate(graphs):
        inst = prepare(i, g, limit, tol)
        for name, fn in PROPERTIES.items():
            res = outcomes[name]
            res.instances += 1
            res.violations.extend(f"graph #{i} {g.edges}: {msg}" for msg in fn(inst))
    return list(outcomes.values())


def builtin_corpus(max_n: int = 6) -> Iterable[Graph]:
    """Every labeled connected graph on 1..max_n vertices."""
    for n in range(1, max_n + 1):
        yield from all_graphs(n, connected=True)
