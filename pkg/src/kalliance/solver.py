"""Exact minimum defensive k-alliances.

The search tries target sizes ``c`` upward from a proven lower bound and, for
each ``c``, walks vertex combinations in lexicographic order, so the first
alliance found is a minimum one and the lexicographically least among them.
A partial set is abandoned once some member can no longer collect enough
inside neighbours from the picks still to come.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import bounds
from .alliance import is_defensive_k_alliance
from .graph_core import Graph, classify, is_connected
from .spectral import algebraic_connectivity

DEFAULT_LIMIT = 20

EXACT = "exact"
NONE_EXISTS = "none_exists"


class SearchLimitError(RuntimeError):
    """The graph is larger than the configured search limit."""


@dataclass(frozen=True)
class SolveResult:
    k: int
    value: int | None
    witness: frozenset[int] | None
    status: str
    nodes_explored: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "value": self.value,
            "witness": None if self.witness is None else sorted(self.witness),
            "status": self.status,
            "nodes_explored": self.nodes_explored,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def start_size(g: Graph, k: int) -> int:
    """Largest lower bound on a_k available without search (at least 1)."""
    if k < -g.min_degree:
        return 1
    best = bounds._degree_bounds(g, k)[0]
    if g.n >= 2 and is_connected(g):
        mu = algebraic_connectivity(g).mu
        best = max(best, bounds.spectral_lower_fiedler(g, k, mu), bounds.spectral_lower_maxdeg(g, k, mu))
    return max(1, best)


def _search(g: Graph, k: int, c: int, counter: list[int]) -> int | None:
    """Lexicographically least k-alliance of size exactly ``c`` as a bitmask."""
    masks, deg = g.masks, g.degrees
    need = [(d + k + 1) // 2 for d in deg]  # ceil((deg + k)/2) inside neighbours
    cand = [v for v in range(g.n) if deg[v] >= k and need[v] <= c - 1]
    if len(cand) < c:
        return None
    # suffix[i]: candidates at positions >= i
    suffix = [0] * (len(cand) + 1)
    for i in range(len(cand) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << cand[i])

    def extend(start: int, size: int, mask: int, members: list[int]) -> int | None:
        counter[0] += 1
        if size == c:
            for v in members:
                if (masks[v] & mask).bit_count() < need[v]:
                    return None
            return mask
        left = c - size - 1
        for i in range(start, len(cand) - left):
            v = cand[i]
            new = mask | (1 << v)
            rest = suffix[i + 1]
            ok = True
            for u in members:
                if (masks[u] & new).bit_count() + min(left, (masks[u] & rest).bit_count()) < need[u]:
                    ok = False
                    break
            if ok and (masks[v] & new).bit_count() + min(left, (masks[v] & rest).bit_count()) < need[v]:
                ok = False
            if not ok:
                continue
            members.append(v)
            found = extend(i + 1, size + 1, new, members)
            members.pop()
            if found is not None:
                return found
        return None

    return extend(0, 0, 0, [])


def min_alliance(g: Graph, k: int, limit: int = DEFAULT_LIMIT) -> SolveResult:
    """Minimum-cardinality defensive k-alliance, with lexicographically least
    witness. Refuses graphs with more than ``limit`` vertices."""
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if g.n > limit:
        raise SearchLimitError(f"n={g.n} exceeds the search limit {limit}")
    if not -g.max_degree <= k <= g.max_degree:
        raise ValueError(f"k={k} outside -max_degree..max_degree = {-g.max_degree}..{g.max_degree}")
    counter = [0]
    for c in range(start_size(g, k), g.n + 1):
        found = _search(g, k, c, counter)
        if found is not None:
            witness = frozenset(v for v in range(g.n) if found >> v & 1)
            if __debug__:
                assert is_defensive_k_alliance(g, witness, k).satisfied
            return SolveResult(k, c, witness, EXACT, counter[0])
    if k <= g.min_degree:
        raise AssertionError(f"no {k}-alliance found although V qualifies")
    return SolveResult(k, None, None, NONE_EXISTS, counter[0])


def profile(g: Graph, limit: int = DEFAULT_LIMIT) -> list[SolveResult]:
    """Solve every k from -min_degree to max_degree."""
    results = [min_alliance(g, k, limit) for k in range(-g.min_degree, g.max_degree + 1)]
    inf = g.n + 1
    vals = [inf if r.value is None else r.value for r in results]
    if any(a > b for a, b in zip(vals, vals[1:])):
        raise AssertionError(f"alliance numbers not monotone in k: {vals}")
    return results


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def closed_form(g: Graph, k: int) -> int | None:
    """``ceil((n + k + 1)/2)`` when ``g`` is complete and ``1-n <= k <= n-1``."""
    n = g.n
    if n >= 1 and g.m == n * (n - 1) // 2 and 1 - n <= k <= n - 1:
        return _ceil_half(n + k + 1)
    return None


def line_alliance_number(base: Graph, k: int) -> int | None:
    """Closed-form ``a_k(L(base))`` for regular or semiregular bipartite bases."""
    if base.m == 0:
        return None
    cls = classify(base)
    if cls.kind == "regular":
        d = cls.high
        if 2 * (1 - d) <= k <= 0:
            return d + _ceil_half(k)
    elif cls.kind == "semiregular_bipartite":
        d1, d2 = cls.high, cls.low
        if 2 - d1 - d2 <= k <= d1 - d2:
            return _ceil_half(d1 + d2 + k)
    return None
